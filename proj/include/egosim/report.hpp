#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egosim/datasets.hpp"
#include "egosim/signature.hpp"
#include "egosim/similarity.hpp"

namespace egosim {

std::string format_fixed(double value, int precision);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view s);

// Matrix CSV: first row is an empty cell followed by the labels, then one row
// per node, label first.
void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out, int precision = 2);
// {"labels": [...], "matrix": [[...]]} at full double precision.
void write_matrix_json(const SimilarityMatrix& m, std::ostream& out);

// rank,label,score
void write_ranking_csv(std::span<const RankEntry> entries, std::ostream& out, int precision = 2);
void write_ranking_json(std::span<const RankEntry> entries, std::ostream& out);
// {"ranking": [...], "top": label, "bottom": label}
void write_ranking_report_json(const NodeRanking& ranking, std::ostream& out);

struct SignatureRow {
  std::string label;
  const DegreeSignature* signature = nullptr;  // null when undefined (isolated node)
};

void write_signatures_text(std::span<const SignatureRow> rows, std::ostream& out, int precision = 2);
void write_signatures_csv(std::span<const SignatureRow> rows, std::size_t width, std::ostream& out,
                          int precision = 2);
void write_signatures_json(std::span<const SignatureRow> rows, std::ostream& out);

void write_datasets_csv(std::span<const DatasetDescriptor> datasets, std::ostream& out);
void write_datasets_json(std::span<const DatasetDescriptor> datasets, std::ostream& out);

}  // namespace egosim
