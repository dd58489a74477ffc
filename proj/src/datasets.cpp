#include "egosim/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "egosim/error.hpp"

#ifndef EGOSIM_DATA_DIR_DEFAULT
#define EGOSIM_DATA_DIR_DEFAULT "data"
#endif

namespace egosim {

namespace {

using nlohmann::json;

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

DatasetDescriptor parse_descriptor(const json& j) {
  DatasetDescriptor d;
  d.name = j.at("name").get<std::string>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "graph")
    d.kind = DatasetKind::graph;
  else if (kind == "signatures")
    d.kind = DatasetKind::signatures;
  else
    throw DatasetError(fmt::format("dataset '{}': unknown kind '{}'", d.name, kind));
  d.file = optional_field<std::string>(j, "file");
  d.bundled = j.value("bundled", false);
  d.node_count = j.at("node_count").get<std::size_t>();
  d.edge_count = optional_field<std::size_t>(j, "edge_count");
  d.expected_top = optional_field<std::string>(j, "expected_top");
  d.expected_bottom = optional_field<std::string>(j, "expected_bottom");
  d.source_note = j.value("source_note", "");
  d.indexing = j.value("indexing", 1);
  return d;
}

// DFS over descending candidates; the first hit is the lexicographically
// largest vector for this total.
bool fill_degrees(std::span<const double> targets, std::uint32_t total, double tolerance,
                  std::uint32_t remaining, std::uint32_t ceiling, std::vector<std::uint32_t>& out) {
  const std::size_t k = out.size();
  if (k == targets.size()) return remaining == 0;
  const std::size_t left_after = targets.size() - k - 1;
  constexpr double eps = 1e-9;
  const double v = targets[k];
  const auto hi_raw = static_cast<long long>(std::floor((v + tolerance) * total + eps));
  const auto lo_raw = static_cast<long long>(std::ceil((v - tolerance) * total - eps));
  long long hi = std::min<long long>({hi_raw, ceiling, static_cast<long long>(remaining) - static_cast<long long>(left_after)});
  long long lo = std::max<long long>(lo_raw, 1);
  for (long long d = hi; d >= lo; --d) {
    out.push_back(static_cast<std::uint32_t>(d));
    if (fill_degrees(targets, total, tolerance, remaining - static_cast<std::uint32_t>(d),
                     static_cast<std::uint32_t>(d), out))
      return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::filesystem::path DatasetOptions::default_data_dir() {
  if (const char* env = std::getenv("EGOSIM_DATA_DIR"); env && *env) return env;
  return EGOSIM_DATA_DIR_DEFAULT;
}

std::vector<DatasetDescriptor> list_datasets(const DatasetOptions& options) {
  const auto manifest = options.data_dir / "manifest.json";
  std::ifstream in(manifest);
  if (!in) throw DatasetError("cannot open dataset manifest '" + manifest.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
    std::vector<DatasetDescriptor> out;
    for (const auto& entry : doc.at("datasets")) out.push_back(parse_descriptor(entry));
    return out;
  } catch (const json::exception& e) {
    throw DatasetError(fmt::format("malformed manifest '{}': {}", manifest.string(), e.what()));
  }
}

std::optional<DatasetDescriptor> find_dataset(std::string_view name, const DatasetOptions& options) {
  for (auto& d : list_datasets(options))
    if (d.name == name) return std::move(d);
  return std::nullopt;
}

DatasetContent load_dataset(std::string_view name, const DatasetOptions& options) {
  auto descriptor = find_dataset(name, options);
  if (!descriptor) throw DatasetError(fmt::format("unknown dataset '{}'", name));

  std::filesystem::path path;
  if (auto it = options.external_files.find(name); it != options.external_files.end())
    path = it->second;
  else if (descriptor->bundled && descriptor->file)
    path = options.data_dir / *descriptor->file;
  else
    throw DatasetError(fmt::format(
        "dataset '{}' is not bundled; supply a local copy of the edge list", name));

  if (descriptor->kind == DatasetKind::signatures) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open '" + path.string() + "'");
    return load_signature_table(in);
  }
  if (!std::filesystem::exists(path))
    throw DatasetError(fmt::format("dataset '{}': file '{}' not found", name, path.string()));
  return load_edge_list_file(path);
}

std::optional<std::vector<std::uint32_t>> reconstruct_degrees(std::span<const double> printed,
                                                              const ReconstructionOptions& options) {
  std::size_t support = 0;
  while (support < printed.size() && printed[support] > 0.0) ++support;
  if (support == 0) return std::nullopt;
  for (std::size_t k = support; k < printed.size(); ++k)
    if (printed[k] != 0.0) return std::nullopt;

  const auto targets = printed.first(support);
  std::vector<std::uint32_t> degrees;
  degrees.reserve(support);
  for (std::uint32_t total = static_cast<std::uint32_t>(support); total <= options.max_total; ++total) {
    degrees.clear();
    if (fill_degrees(targets, total, options.tolerance, total, total, degrees)) return degrees;
  }
  return std::nullopt;
}

SignatureSet load_signature_table(std::istream& in, const ReconstructionOptions& options) {
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> rows;
  std::size_t width = 0;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(raw);
    std::string label;
    if (!(fields >> label) || label.front() == '#' || label.front() == '%') continue;

    std::vector<double> printed;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        printed.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(line_no, "not a probability: '" + token + "'");
      }
    }
    if (printed.empty()) throw ParseError(line_no, "row has no components");
    if (width == 0)
      width = printed.size();
    else if (printed.size() != width)
      throw ParseError(line_no, fmt::format("row has {} components, expected {}", printed.size(), width));

    auto degrees = reconstruct_degrees(printed, options);
    if (!degrees) throw ParseError(line_no, "no exact signature matches row '" + label + "'");
    rows.emplace_back(std::move(label), std::move(*degrees));
  }
  if (rows.empty()) throw EmptyGraphError();

  SignatureSet set;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::find(set.labels.begin(), set.labels.end(), rows[i].first) != set.labels.end())
      throw ParseError(0, "duplicate signature label '" + rows[i].first + "'");
    set.labels.push_back(rows[i].first);
    set.signatures.emplace_back(static_cast<NodeId>(i), std::move(rows[i].second), width);
  }
  return set;
}

}  // namespace egosim
