#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "egosim/graph.hpp"
#include "egosim/signature.hpp"

namespace egosim {

enum class DatasetKind { graph, signatures };

struct DatasetDescriptor {
  std::string name;
  DatasetKind kind = DatasetKind::graph;
  std::optional<std::string> file;  // relative to the data directory; absent when not bundled
  bool bundled = false;
  std::size_t node_count = 0;
  std::optional<std::size_t> edge_count;  // absent for signature-only datasets
  std::optional<std::string> expected_top;
  std::optional<std::string> expected_bottom;
  std::string source_note;
  int indexing = 1;
};

struct DatasetOptions {
  std::filesystem::path data_dir = default_data_dir();
  /// Local copies of datasets that are described but not bundled, by name.
  std::map<std::string, std::filesystem::path, std::less<>> external_files;

  /// $EGOSIM_DATA_DIR if set, otherwise the directory baked in at build time.
  static std::filesystem::path default_data_dir();
};

std::vector<DatasetDescriptor> list_datasets(const DatasetOptions& options = {});
std::optional<DatasetDescriptor> find_dataset(std::string_view name,
                                              const DatasetOptions& options = {});

using DatasetContent = std::variant<LoadedGraph, SignatureSet>;

/// Throws DatasetError for unknown names and for non-bundled datasets without
/// a local file.
DatasetContent load_dataset(std::string_view name, const DatasetOptions& options = {});

struct ReconstructionOptions {
  std::uint32_t max_total = 40;
  double tolerance = 0.005;
};

/// Recovers exact integer degrees from rounded probabilities: the descending
/// positive integers d with sum T <= max_total and |d_k / T - printed_k| <=
/// tolerance for each nonzero printed component. The smallest T wins; ties
/// within one T go to the lexicographically largest d. Trailing zeros in
/// `printed` are padding.
std::optional<std::vector<std::uint32_t>> reconstruct_degrees(
    std::span<const double> printed, const ReconstructionOptions& options = {});

/// Parses rows of "label p_1 ... p_w" (rounded probabilities, common width w)
/// and reconstructs each row's exact signature. Throws ParseError on ragged
/// rows or rows that admit no reconstruction.
SignatureSet load_signature_table(std::istream& in, const ReconstructionOptions& options = {});

}  // namespace egosim
