#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "egosim/graph.hpp"
#include "egosim/signature.hpp"

namespace egosim::cli {

enum class OutputFormat { text, csv, json };

struct RunConfig {
  std::string input;  // dataset name or edge-list path; names resolve first
  EdgeListFormat format = EdgeListFormat::edge_list;
  int precision = 2;
  std::optional<std::filesystem::path> output;
  /// Unset means the subcommand default (text for signature, csv otherwise).
  std::optional<OutputFormat> output_format;
  unsigned threads = 0;
  std::optional<std::filesystem::path> dataset_file;
  std::optional<std::filesystem::path> data_dir;
};

/// Throws DomainError when precision is outside [0, 17] or input is empty.
void validate(const RunConfig& config);

/// Loaded input: a graph for edge lists and graph datasets, otherwise a
/// signature set. Exactly one is engaged.
struct Input {
  std::optional<LoadedGraph> graph;
  std::optional<SignatureSet> signatures;
};

/// Self-loop warnings go to `err`.
Input load_input(const RunConfig& config, std::ostream& err);

// Each command writes to `config.output` when set, otherwise to `out`, and
// returns the process exit code. Errors propagate as exceptions.
int cmd_signature(const RunConfig& config, std::string_view node, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_similar(const RunConfig& config, std::string_view node, std::size_t k, std::ostream& out,
                std::ostream& err);
int cmd_datasets(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point. Diagnostics are single lines on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace egosim::cli
