#pragma once

// Seeded random instances and the three graph reductions used to
// cross-check the reasoners.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hornstab/core.hpp"

namespace hornstab {

/// Reproducible Horn theory: m clauses of length 1..max_len over n variables,
/// half of them with a head unless neg_only.
HornTheory random_horn(std::size_t n, std::size_t m, std::size_t max_len, bool neg_only,
                       std::uint64_t seed);

/// random_horn plus a contradiction chain x_a, ~x_a | x_b, ~x_b.
HornTheory random_inconsistent_horn(std::size_t n, std::size_t m, std::size_t max_len,
                                    std::uint64_t seed);

enum class ClauseShape { kAny, kEmpty, kPositive, kNegative, kHorn };

/// Random query clause over n variables with at most max_len literals. kAny
/// picks a mixed-sign clause or one of the four restricted shapes.
Clause random_clause(std::size_t n, std::size_t max_len, ClauseShape shape, std::uint64_t seed);

/// Simple undirected graph on vertices 0..nv-1.
class Graph {
 public:
  explicit Graph(std::size_t nv, std::vector<std::pair<std::size_t, std::size_t>> edges = {});

  /// "k3", "p3", "edge", "kN", "pN", "emptyN", or an explicit "nv:1-2,2-3"
  /// with 1-based vertices.
  static Graph named(const std::string& spec);
  /// The graph whose edge set is encoded by the bits of `code` over the
  /// nv(nv-1)/2 vertex pairs in lexicographic order.
  static Graph from_code(std::size_t nv, std::uint64_t code);

  std::size_t vertices() const { return nv_; }
  /// Edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::string to_string() const;

 private:
  std::size_t nv_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Brute force over all vertex subsets (nv <= 20).
std::size_t max_independent_set(const Graph& g);
std::size_t min_vertex_cover(const Graph& g);

struct TheoryInstance {
  HornTheory theory;
  Clause clause;
  std::size_t alpha;
};

struct CharsetInstance {
  ModelSet charset;
  Clause clause;
  std::size_t alpha;
};

/// Edge clauses ~x_i | ~x_j, c = OR ~x_i, alpha = nv - k. The exterior
/// entails c iff g has no independent set of size >= k. Needs 1 <= k <= nv.
TheoryInstance independent_set_instance(const Graph& g, std::size_t k);

/// Members with OFF = {i,j} and OFF = {i,j,l} per edge, empty query clause,
/// alpha = nv - k. The interior is consistent (the query answers NO) iff g
/// has no independent set of size >= k. Needs nv >= 3, an edge, 1 <= k <= nv.
CharsetInstance interior_consistency_instance(const Graph& g, std::size_t k);

/// One member per vertex over V followed by one block W_e of nv variables per
/// edge; c = OR_{V} ~x_i | OR_{W} x_i, alpha = k. The exterior fails to
/// entail c iff g has a vertex cover of size <= k. Needs 1 <= k < nv and
/// nv + nv |E| <= 64.
CharsetInstance vertex_cover_instance(const Graph& g, std::size_t k);

}  // namespace hornstab
