#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egosim/graph.hpp"

namespace egosim {

/// Degree-based probability signature of one node.
///
/// Holds the whole-graph degrees of the node's ego-network members sorted in
/// descending order, together with their sum. Component k of the probability
/// vector is degrees[k] / total for k < support() and 0 up to width(). The
/// representation is exact; floating point appears only when components are
/// materialized.
class DegreeSignature {
 public:
  /// Sorts `degrees` descending. Throws DomainError if it is empty, holds a
  /// zero, or is longer than `width`.
  DegreeSignature(NodeId node, std::vector<std::uint32_t> degrees, std::size_t width);

  NodeId node() const noexcept { return node_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t width() const noexcept { return width_; }
  /// Number of strictly positive components.
  std::size_t support() const noexcept { return degrees_.size(); }

  double component(std::size_t k) const;
  /// All `width()` components, zero padded.
  std::vector<double> components() const;

 private:
  NodeId node_;
  std::vector<std::uint32_t> degrees_;
  std::uint64_t total_ = 0;
  std::size_t width_;
};

/// True when both signatures describe the same probability vector (trailing
/// zeros, and therefore width, do not matter).
bool same_distribution(const DegreeSignature& a, const DegreeSignature& b);

/// Signature of node i: global degrees of {i} ∪ N(i), width max_degree(g) + 1.
/// Throws UndefinedSignatureError for isolated nodes.
DegreeSignature signature(const Graph& g, NodeId i);
/// Same, with the width supplied by the caller (at least degree(g, i) + 1).
DegreeSignature signature(const Graph& g, NodeId i, std::size_t width);

/// One signature per node in index order, all of width max_degree(g) + 1.
/// Throws UndefinedSignatureError naming the first isolated node.
std::vector<DegreeSignature> all_signatures(const Graph& g);

/// Labelled signatures, the input of the similarity pipeline. Signatures are
/// in label order and signatures[i].node() == i.
struct SignatureSet {
  std::vector<std::string> labels;
  std::vector<DegreeSignature> signatures;

  std::size_t size() const noexcept { return signatures.size(); }
  /// Throws DomainError for unknown labels.
  NodeId index_of(std::string_view label) const;
};

SignatureSet signature_set(const Graph& g);

/// Space separated components at `precision` decimals, e.g. "0.75 0.25 0.00".
std::string format_signature(const DegreeSignature& s, int precision = 2);

}  // namespace egosim
