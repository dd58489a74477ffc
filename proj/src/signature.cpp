#include "egosim/signature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "egosim/error.hpp"

namespace egosim {

DegreeSignature::DegreeSignature(NodeId node, std::vector<std::uint32_t> degrees, std::size_t width)
    : node_(node), degrees_(std::move(degrees)), width_(width) {
  if (degrees_.empty()) throw DomainError("signature needs at least one component");
  if (degrees_.size() > width_)
    throw DomainError(fmt::format("signature support {} exceeds width {}", degrees_.size(), width_));
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  if (degrees_.back() == 0) throw DomainError("signature degrees must be positive");
  total_ = std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
}

double DegreeSignature::component(std::size_t k) const {
  if (k >= width_) throw DomainError(fmt::format("component {} out of width {}", k, width_));
  if (k >= degrees_.size()) return 0.0;
  return static_cast<double>(degrees_[k]) / static_cast<double>(total_);
}

std::vector<double> DegreeSignature::components() const {
  std::vector<double> out(width_, 0.0);
  for (std::size_t k = 0; k < degrees_.size(); ++k) out[k] = component(k);
  return out;
}

bool same_distribution(const DegreeSignature& a, const DegreeSignature& b) {
  if (a.support() != b.support()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  for (std::size_t k = 0; k < da.size(); ++k)
    if (std::uint64_t{da[k]} * b.total() != std::uint64_t{db[k]} * a.total()) return false;
  return true;
}

DegreeSignature signature(const Graph& g, NodeId i, std::size_t width) {
  auto adj = g.neighbors(i);
  if (adj.empty()) throw UndefinedSignatureError(g.label(i));
  std::vector<std::uint32_t> degrees;
  degrees.reserve(adj.size() + 1);
  degrees.push_back(static_cast<std::uint32_t>(adj.size()));
  for (NodeId j : adj) degrees.push_back(static_cast<std::uint32_t>(degree(g, j)));
  return DegreeSignature(i, std::move(degrees), width);
}

DegreeSignature signature(const Graph& g, NodeId i) {
  return signature(g, i, max_degree(g) + 1);
}

std::vector<DegreeSignature> all_signatures(const Graph& g) {
  const std::size_t width = max_degree(g) + 1;
  std::vector<DegreeSignature> out;
  out.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out.push_back(signature(g, i, width));
  return out;
}

NodeId SignatureSet::index_of(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DomainError(fmt::format("unknown node '{}'", label));
  return static_cast<NodeId>(it - labels.begin());
}

SignatureSet signature_set(const Graph& g) {
  SignatureSet set;
  set.signatures = all_signatures(g);
  set.labels.assign(g.labels().begin(), g.labels().end());
  return set;
}

std::string format_signature(const DegreeSignature& s, int precision) {
  std::string out;
  for (std::size_t k = 0; k < s.width(); ++k) {
    if (k) out += ' ';
    out += fmt::format("{:.{}f}", s.component(k), precision);
  }
  return out;
}

}  // namespace egosim
