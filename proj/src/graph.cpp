#include "egosim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "egosim/error.hpp"

namespace egosim {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_any(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (is_blank(line[pos]) || line[pos] == ',')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end]) && line[end] != ',') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    fields.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

}  // namespace

void Graph::check(NodeId i) const {
  if (i >= labels_.size())
    throw DomainError("node index " + std::to_string(i) + " out of range (graph has " +
                      std::to_string(labels_.size()) + " nodes)");
}

const std::string& Graph::label(NodeId i) const {
  check(i);
  return labels_[i];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("unknown node '" + std::string(label) + "'");
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check(i);
  return adjacency_[i];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  auto adj = neighbors(a);
  check(b);
  return std::binary_search(adj.begin(), adj.end(), b);
}

NodeId GraphBuilder::add_node(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) {
    labels_.emplace_back(label);
    adjacency_.emplace_back();
  }
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  NodeId u = add_node(a);
  NodeId v = add_node(b);
  add_edge(u, v);
}

void GraphBuilder::add_edge(NodeId a, NodeId b) {
  if (a >= labels_.size() || b >= labels_.size())
    throw DomainError("edge endpoint out of range");
  if (a == b) {
    ++self_loops_;
    return;
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

Graph GraphBuilder::build() {
  if (labels_.empty()) throw EmptyGraphError();

  Graph g;
  std::size_t half_edges = 0;
  std::size_t removed = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    auto last = std::unique(adj.begin(), adj.end());
    removed += static_cast<std::size_t>(adj.end() - last);
    adj.erase(last, adj.end());
    half_edges += adj.size();
  }
  duplicates_ += removed / 2;

  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  g.adjacency_ = std::move(adjacency_);
  g.edge_count_ = half_edges / 2;

  labels_.clear();
  index_.clear();
  adjacency_.clear();
  return g;
}

std::size_t degree(const Graph& g, NodeId i) { return g.neighbors(i).size(); }

std::size_t max_degree(const Graph& g) {
  if (g.empty()) throw EmptyGraphError();
  std::size_t best = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) best = std::max(best, degree(g, i));
  return best;
}

LocalNetwork local_network(const Graph& g, NodeId i) {
  auto adj = g.neighbors(i);
  LocalNetwork ln;
  ln.center = i;
  ln.members.reserve(adj.size() + 1);
  auto split = std::lower_bound(adj.begin(), adj.end(), i);
  ln.members.insert(ln.members.end(), adj.begin(), split);
  ln.members.push_back(i);
  ln.members.insert(ln.members.end(), split, adj.end());
  return ln;
}

LoadedGraph load_edge_list(std::istream& in, const ParseOptions& options) {
  GraphBuilder builder;
  bool need_header = options.format == EdgeListFormat::csv;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty() || line.front() == '#' || line.front() == '%') continue;

    auto tokens = options.format == EdgeListFormat::csv ? split_csv(line) : split_any(line);
    if (need_header) {
      if (tokens.size() != 2 || tokens[0] != "source" || tokens[1] != "target")
        throw ParseError(line_no, "expected CSV header 'source,target'");
      need_header = false;
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(tokens.size()));
    if (tokens[0].empty() || tokens[1].empty()) throw ParseError(line_no, "empty node label");
    builder.add_edge(tokens[0], tokens[1]);
  }
  if (in.bad()) throw Error("read error on edge list stream");

  LoadedGraph out;
  out.graph = builder.build();
  out.self_loops = builder.self_loops_dropped();
  out.duplicate_edges = builder.duplicate_edges();
  return out;
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return load_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace egosim
