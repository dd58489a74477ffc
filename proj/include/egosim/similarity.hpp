#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "egosim/graph.hpp"
#include "egosim/signature.hpp"

namespace egosim {

/// Relative entropy sum_k p_k ln(p_k / q_k), restricted to the components
/// where both signatures are strictly positive. Because signatures are sorted
/// descending this is the first min(p.support(), q.support()) components.
/// Unlike the full-support divergence the result can be negative.
double kl_divergence(const DegreeSignature& p, const DegreeSignature& q);

/// 1 - (D(p||q) + D(q||p)). Symmetric, at most 1, and exactly 1 when both
/// signatures are the same distribution.
double similarity(const DegreeSignature& p, const DegreeSignature& q);

/// Symmetric n x n matrix of pairwise similarities with node labels.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  double at(std::size_t i, std::size_t j) const;
  std::span<const double> row(std::size_t i) const;

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

struct MatrixOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Each unordered pair is evaluated once by exactly one worker, so the result
/// is bit-identical for any thread count.
SimilarityMatrix similarity_matrix(const SignatureSet& set, const MatrixOptions& options = {});
SimilarityMatrix similarity_matrix(const Graph& g, const MatrixOptions& options = {});

struct RankEntry {
  NodeId node = 0;
  std::string label;
  double score = 0.0;
};

/// Nodes by descending score, ties by ascending index.
struct NodeRanking {
  std::vector<RankEntry> entries;

  const RankEntry& top() const;
  const RankEntry& bottom() const;
};

enum class Diagonal { exclude, include };

/// Ranks nodes by the sum of their similarity to every other node.
NodeRanking similarity_sums(const SimilarityMatrix& m, Diagonal diagonal = Diagonal::exclude);

/// The k nodes most similar to i (i itself excluded), descending, ties by
/// ascending index. Returns every other node when k >= n - 1.
std::vector<RankEntry> top_k_similar(const SimilarityMatrix& m, NodeId i, std::size_t k);

}  // namespace egosim
