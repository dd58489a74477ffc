#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace egosim {

using NodeId = std::uint32_t;

/// Undirected simple graph over string labels.
///
/// Nodes are addressed by dense indices assigned in insertion order; labels
/// are kept verbatim for output. Neighbor lists are sorted and free of
/// self-loops and duplicates. Immutable once built, so concurrent readers
/// need no synchronization.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(NodeId i) const;

  std::optional<NodeId> find(std::string_view label) const;
  /// Throws DomainError for labels not in the graph.
  NodeId index_of(std::string_view label) const;

  std::span<const NodeId> neighbors(NodeId i) const;
  bool has_edge(NodeId a, NodeId b) const;

 private:
  friend class GraphBuilder;

  void check(NodeId i) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Accumulates labelled edges and produces a Graph.
///
/// Self-loops are dropped and parallel edges collapsed; both are tallied so
/// callers can report them.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(NodeId a, NodeId b);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t self_loops_dropped() const noexcept { return self_loops_; }
  std::size_t duplicate_edges() const noexcept { return duplicates_; }

  /// Throws EmptyGraphError if no node was added.
  Graph build();

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

std::size_t degree(const Graph& g, NodeId i);
/// Throws EmptyGraphError on an empty graph.
std::size_t max_degree(const Graph& g);

/// A node together with its direct neighbors.
struct LocalNetwork {
  NodeId center = 0;
  std::vector<NodeId> members;  // sorted, includes center
};

LocalNetwork local_network(const Graph& g, NodeId i);

enum class EdgeListFormat {
  edge_list,  // two labels per line, whitespace or comma separated
  csv,        // `source,target` header, comma separated
};

struct ParseOptions {
  EdgeListFormat format = EdgeListFormat::edge_list;
};

struct LoadedGraph {
  Graph graph;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Reads an edge list. Lines whose first non-blank character is '#' or '%'
/// are comments; blank lines are skipped. Node indices follow first
/// appearance.
LoadedGraph load_edge_list(std::istream& in, const ParseOptions& options = {});
LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                const ParseOptions& options = {});

/// Writes each edge once as "a b", lower index first, in index order.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace egosim
