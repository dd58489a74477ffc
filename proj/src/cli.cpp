#include "egosim/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "egosim/datasets.hpp"
#include "egosim/error.hpp"
#include "egosim/report.hpp"
#include "egosim/similarity.hpp"

namespace egosim::cli {

namespace {

DatasetOptions dataset_options(const RunConfig& config) {
  DatasetOptions options;
  if (config.data_dir) options.data_dir = *config.data_dir;
  if (config.dataset_file) options.external_files.emplace(config.input, *config.dataset_file);
  return options;
}

// Runs `write` against the configured output file or `out`.
void emit(const RunConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (!config.output) {
    write(out);
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!file) throw Error("cannot open '" + config.output->string() + "' for writing");
  write(file);
  file.flush();
  if (!file) throw Error("write to '" + config.output->string() + "' failed");
}

OutputFormat table_format(const RunConfig& config) {
  auto f = config.output_format.value_or(OutputFormat::csv);
  if (f == OutputFormat::text) throw DomainError("output format 'text' applies to signature only");
  return f;
}

SignatureSet require_signatures(Input input) {
  if (input.signatures) return std::move(*input.signatures);
  return signature_set(input.graph->graph);
}

SimilarityMatrix build_matrix(const RunConfig& config, std::ostream& err) {
  return similarity_matrix(require_signatures(load_input(config, err)), {config.threads});
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.precision < 0 || config.precision > 17)
    throw DomainError(fmt::format("precision must be in [0, 17], got {}", config.precision));
  if (config.input.empty()) throw DomainError("no input given (--input)");
}

Input load_input(const RunConfig& config, std::ostream& err) {
  validate(config);
  const auto options = dataset_options(config);
  Input input;

  const bool have_manifest = std::filesystem::exists(options.data_dir / "manifest.json");
  if (have_manifest && find_dataset(config.input, options)) {
    auto content = load_dataset(config.input, options);
    if (auto* g = std::get_if<LoadedGraph>(&content))
      input.graph = std::move(*g);
    else
      input.signatures = std::move(std::get<SignatureSet>(content));
  } else {
    if (!std::filesystem::exists(config.input))
      throw Error(fmt::format("no dataset or file named '{}'", config.input));
    input.graph = load_edge_list_file(config.input, {config.format});
  }

  if (input.graph && input.graph->self_loops)
    err << "warning: dropped " << input.graph->self_loops << " self-loop line(s)\n";
  return input;
}

int cmd_signature(const RunConfig& config, std::string_view node, std::ostream& out, std::ostream& err) {
  auto input = load_input(config, err);
  const auto format = config.output_format.value_or(OutputFormat::text);

  std::vector<std::optional<DegreeSignature>> computed;
  std::vector<SignatureRow> rows;
  std::size_t width = 0;
  int status = 0;

  if (input.graph) {
    const Graph& g = input.graph->graph;
    width = max_degree(g) + 1;
    std::vector<NodeId> nodes;
    if (node == "all") {
      for (NodeId i = 0; i < g.node_count(); ++i) nodes.push_back(i);
    } else {
      nodes.push_back(g.index_of(node));
    }
    computed.reserve(nodes.size());
    for (NodeId i : nodes) {
      try {
        computed.emplace_back(signature(g, i, width));
      } catch (const UndefinedSignatureError& e) {
        if (node != "all") throw;
        err << "error: " << e.what() << '\n';
        computed.emplace_back();
        status = 1;
      }
    }
    for (std::size_t r = 0; r < nodes.size(); ++r)
      rows.push_back({g.label(nodes[r]), computed[r] ? &*computed[r] : nullptr});
  } else {
    const SignatureSet& set = *input.signatures;
    width = set.signatures.empty() ? 0 : set.signatures.front().width();
    if (node == "all") {
      for (std::size_t i = 0; i < set.size(); ++i) rows.push_back({set.labels[i], &set.signatures[i]});
    } else {
      const NodeId i = set.index_of(node);
      rows.push_back({set.labels[i], &set.signatures[i]});
    }
  }

  emit(config, out, [&](std::ostream& o) {
    switch (format) {
      case OutputFormat::text: write_signatures_text(rows, o, config.precision); break;
      case OutputFormat::csv: write_signatures_csv(rows, width, o, config.precision); break;
      case OutputFormat::json: write_signatures_json(rows, o); break;
    }
  });
  return status;
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto format = table_format(config);
  const auto m = build_matrix(config, err);
  emit(config, out, [&](std::ostream& o) {
    if (format == OutputFormat::json)
      write_matrix_json(m, o);
    else
      write_matrix_csv(m, o, config.precision);
  });
  return 0;
}

int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto format = table_format(config);
  const auto ranking = similarity_sums(build_matrix(config, err));
  const auto& top = ranking.top().label;
  const auto& bottom = ranking.bottom().label;
  const std::string summary = fmt::format("top={} bottom={}", top, bottom);

  emit(config, out, [&](std::ostream& o) {
    if (format == OutputFormat::json) {
      write_ranking_report_json(ranking, o);
    } else {
      write_ranking_csv(ranking.entries, o, config.precision);
      if (!config.output) o << "# " << summary << '\n';
    }
  });
  if (config.output) out << summary << '\n';
  return 0;
}

int cmd_similar(const RunConfig& config, std::string_view node, std::size_t k, std::ostream& out,
                std::ostream& err) {
  if (k < 1) throw DomainError("--top must be at least 1");
  const auto format = table_format(config);
  auto set = require_signatures(load_input(config, err));
  const NodeId i = set.index_of(node);
  const auto m = similarity_matrix(set, {config.threads});
  const auto similar = top_k_similar(m, i, k);
  emit(config, out, [&](std::ostream& o) {
    if (format == OutputFormat::json)
      write_ranking_json(similar, o);
    else
      write_ranking_csv(similar, o, config.precision);
  });
  return 0;
}

int cmd_datasets(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto format = table_format(config);
  const auto datasets = list_datasets(dataset_options(config));
  emit(config, out, [&](std::ostream& o) {
    if (format == OutputFormat::json)
      write_datasets_json(datasets, o);
    else
      write_datasets_csv(datasets, o);
  });
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Node similarity from ego-network degree signatures"};
  app.require_subcommand(1);

  RunConfig config;
  std::string node = "all";
  std::size_t top_k = 1;

  const std::map<std::string, EdgeListFormat> input_formats{{"edgelist", EdgeListFormat::edge_list},
                                                            {"csv", EdgeListFormat::csv}};
  const std::map<std::string, OutputFormat> output_formats{
      {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", config.input, "Dataset name or edge-list file");
    if (needs_input) in->required();
    sub->add_option("--format", config.format, "Input format")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    sub->add_option("-o,--output", config.output, "Write to this file instead of standard output");
    sub->add_option("--output-format", config.output_format, "text (signature only), csv or json")
        ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
    sub->add_option("-p,--precision", config.precision, "Decimal places in CSV/text output")
        ->capture_default_str();
    sub->add_option("-t,--threads", config.threads, "Worker threads, 0 = auto")->capture_default_str();
    sub->add_option("--dataset-file", config.dataset_file, "Local file for a non-bundled dataset");
    sub->add_option("--data-dir", config.data_dir, "Directory holding manifest.json and bundled data");
  };

  auto* sig = app.add_subcommand("signature", "Degree signature of one node or all nodes");
  add_common(sig, true);
  sig->add_option("-n,--node", node, "Node label or 'all'")->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "Pairwise similarity matrix");
  add_common(matrix, true);

  auto* rank = app.add_subcommand("rank", "Nodes ranked by total similarity to all others");
  add_common(rank, true);

  auto* similar = app.add_subcommand("similar", "Most similar nodes to one node");
  add_common(similar, true);
  similar->add_option("-n,--node", node, "Node label")->required();
  similar->add_option("-k,--top", top_k, "Number of nodes to list")->capture_default_str();

  auto* datasets = app.add_subcommand("datasets", "List known datasets");
  add_common(datasets, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*sig) return cmd_signature(config, node, out, err);
    if (*matrix) return cmd_matrix(config, out, err);
    if (*rank) return cmd_rank(config, out, err);
    if (*similar) return cmd_similar(config, node, top_k, out, err);
    if (*datasets) return cmd_datasets(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace egosim::cli
