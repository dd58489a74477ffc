#include "egosim/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "egosim/error.hpp"

namespace egosim {

namespace {

// Both the public divergence and the matrix go through this, so a matrix entry
// is bit-identical to similarity() on the same pair.
double truncated_divergence(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::min(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += p[k] * std::log(p[k] / q[k]);
  return sum;
}

std::vector<double> support_components(const DegreeSignature& s) {
  std::vector<double> out(s.support());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s.component(k);
  return out;
}

double similarity_of(std::span<const double> p, std::span<const double> q) {
  return 1.0 - (truncated_divergence(p, q) + truncated_divergence(q, p));
}

}  // namespace

double kl_divergence(const DegreeSignature& p, const DegreeSignature& q) {
  return truncated_divergence(support_components(p), support_components(q));
}

double similarity(const DegreeSignature& p, const DegreeSignature& q) {
  return similarity_of(support_components(p), support_components(q));
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), values_(labels_.size() * labels_.size(), 0.0) {
  for (std::size_t i = 0; i < labels_.size(); ++i) values_[i * labels_.size() + i] = 1.0;
}

double SimilarityMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size())
    throw DomainError(fmt::format("matrix index ({}, {}) out of range {}", i, j, size()));
  return values_[i * size() + j];
}

std::span<const double> SimilarityMatrix::row(std::size_t i) const {
  if (i >= size()) throw DomainError(fmt::format("matrix row {} out of range {}", i, size()));
  return std::span<const double>(values_).subspan(i * size(), size());
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= size() || j >= size())
    throw DomainError(fmt::format("matrix index ({}, {}) out of range {}", i, j, size()));
  values_[i * size() + j] = value;
  values_[j * size() + i] = value;
}

SimilarityMatrix similarity_matrix(const SignatureSet& set, const MatrixOptions& options) {
  const std::size_t n = set.size();
  SimilarityMatrix m(set.labels);

  std::vector<std::vector<double>> probs;
  probs.reserve(n);
  for (const auto& s : set.signatures) probs.push_back(support_components(s));

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(n, 1)));

  // Rows are handed out dynamically; row i owns the pairs (i, j > i).
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, similarity_of(probs[i], probs[j]));
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return m;
}

SimilarityMatrix similarity_matrix(const Graph& g, const MatrixOptions& options) {
  return similarity_matrix(signature_set(g), options);
}

const RankEntry& NodeRanking::top() const {
  if (entries.empty()) throw EmptyGraphError();
  return entries.front();
}

const RankEntry& NodeRanking::bottom() const {
  if (entries.empty()) throw EmptyGraphError();
  return entries.back();
}

namespace {

void order_by_score(std::vector<RankEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.node < b.node;
  });
}

}  // namespace

NodeRanking similarity_sums(const SimilarityMatrix& m, Diagonal diagonal) {
  NodeRanking ranking;
  ranking.entries.reserve(m.size());
  std::vector<double> values;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = m.row(i);
    values.clear();
    for (std::size_t j = 0; j < row.size(); ++j)
      if (j != i || diagonal == Diagonal::include) values.push_back(row[j]);
    // Summing in sorted order makes the score a function of the multiset of
    // similarities, so structurally equivalent nodes tie exactly.
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    ranking.entries.push_back({static_cast<NodeId>(i), m.labels()[i], sum});
  }
  order_by_score(ranking.entries);
  return ranking;
}

std::vector<RankEntry> top_k_similar(const SimilarityMatrix& m, NodeId i, std::size_t k) {
  if (i >= m.size()) throw DomainError(fmt::format("node index {} out of range {}", i, m.size()));
  if (k < 1) throw DomainError("k must be at least 1");
  auto row = m.row(i);
  std::vector<RankEntry> out;
  out.reserve(m.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (j != i) out.push_back({static_cast<NodeId>(j), m.labels()[j], row[j]});
  order_by_score(out);
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace egosim
