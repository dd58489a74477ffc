#include "egosim/report.hpp"

#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

namespace egosim {

using nlohmann::json;

std::string format_fixed(double value, int precision) {
  return fmt::format("{:.{}f}", value, precision);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out, int precision) {
  for (const auto& label : m.labels()) out << ',' << csv_field(label);
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << csv_field(m.labels()[i]);
    for (double v : m.row(i)) out << ',' << format_fixed(v, precision);
    out << '\n';
  }
}

void write_matrix_json(const SimilarityMatrix& m, std::ostream& out) {
  json doc;
  doc["labels"] = std::vector<std::string>(m.labels().begin(), m.labels().end());
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = m.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["matrix"] = std::move(rows);
  out << doc.dump() << '\n';
}

void write_ranking_csv(std::span<const RankEntry> entries, std::ostream& out, int precision) {
  out << "rank,label,score\n";
  std::size_t rank = 1;
  for (const auto& e : entries)
    out << rank++ << ',' << csv_field(e.label) << ',' << format_fixed(e.score, precision) << '\n';
}

namespace {

json ranking_json(std::span<const RankEntry> entries) {
  json arr = json::array();
  std::size_t rank = 1;
  for (const auto& e : entries) arr.push_back({{"rank", rank++}, {"label", e.label}, {"score", e.score}});
  return arr;
}

}  // namespace

void write_ranking_json(std::span<const RankEntry> entries, std::ostream& out) {
  out << ranking_json(entries).dump() << '\n';
}

void write_ranking_report_json(const NodeRanking& ranking, std::ostream& out) {
  json doc{{"ranking", ranking_json(ranking.entries)},
           {"top", ranking.top().label},
           {"bottom", ranking.bottom().label}};
  out << doc.dump() << '\n';
}

void write_signatures_text(std::span<const SignatureRow> rows, std::ostream& out, int precision) {
  for (const auto& row : rows) {
    out << row.label << ": ";
    if (row.signature)
      out << format_signature(*row.signature, precision);
    else
      out << "undefined";
    out << '\n';
  }
}

void write_signatures_csv(std::span<const SignatureRow> rows, std::size_t width, std::ostream& out,
                          int precision) {
  out << "node";
  for (std::size_t k = 1; k <= width; ++k) out << ",p" << k;
  out << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.label);
    for (std::size_t k = 0; k < width; ++k) {
      out << ',';
      if (row.signature) out << format_fixed(row.signature->component(k), precision);
    }
    out << '\n';
  }
}

void write_signatures_json(std::span<const SignatureRow> rows, std::ostream& out) {
  json arr = json::array();
  for (const auto& row : rows) {
    json entry = {{"node", row.label}};
    if (row.signature) {
      const auto& s = *row.signature;
      entry["degrees"] = std::vector<std::uint32_t>(s.degrees().begin(), s.degrees().end());
      entry["total"] = s.total();
      entry["width"] = s.width();
      entry["probabilities"] = s.components();
    } else {
      entry["error"] = "undefined (degree 0)";
    }
    arr.push_back(std::move(entry));
  }
  out << json{{"signatures", std::move(arr)}}.dump() << '\n';
}

void write_datasets_csv(std::span<const DatasetDescriptor> datasets, std::ostream& out) {
  out << "name,kind,bundled,nodes,edges,expected_top,expected_bottom,source\n";
  for (const auto& d : datasets) {
    out << csv_field(d.name) << ',' << (d.kind == DatasetKind::graph ? "graph" : "signatures") << ','
        << (d.bundled ? "yes" : "no") << ',' << d.node_count << ','
        << (d.edge_count ? std::to_string(*d.edge_count) : "") << ','
        << csv_field(d.expected_top.value_or("")) << ','
        << csv_field(d.expected_bottom.value_or("")) << ',' << csv_field(d.source_note) << '\n';
  }
}

void write_datasets_json(std::span<const DatasetDescriptor> datasets, std::ostream& out) {
  json arr = json::array();
  for (const auto& d : datasets) {
    arr.push_back({{"name", d.name},
                   {"kind", d.kind == DatasetKind::graph ? "graph" : "signatures"},
                   {"bundled", d.bundled},
                   {"node_count", d.node_count},
                   {"edge_count", d.edge_count ? json(*d.edge_count) : json(nullptr)},
                   {"expected_top", d.expected_top ? json(*d.expected_top) : json(nullptr)},
                   {"expected_bottom", d.expected_bottom ? json(*d.expected_bottom) : json(nullptr)},
                   {"indexing", d.indexing},
                   {"source_note", d.source_note}});
  }
  out << json{{"datasets", std::move(arr)}}.dump(2) << '\n';
}

}  // namespace egosim
