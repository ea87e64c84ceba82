#pragma once

// Deduction against the alpha-interior of a Horn theory, which keeps exactly
// the models whose whole Hamming ball of radius alpha lies inside mod(theory).

#include <cstdint>
#include <variant>
#include <vector>

#include "hornstab/core.hpp"
#include "hornstab/kernels.hpp"

namespace hornstab {

inline constexpr std::uint64_t kDefaultExpansionCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultNeighborhoodCap = std::uint64_t{1} << 22;

/// Interior of a single clause in both normal forms.
struct ClauseInterior {
  /// Every subclause with |c| - alpha literals (the single empty clause when
  /// alpha >= |c|).
  std::vector<Clause> cnf;
  /// Every conjunction of alpha + 1 literals of c (empty when alpha >= |c|).
  std::vector<Term> dnf;
};

/// Throws ResourceError when either form would exceed `cap` members.
ClauseInterior clause_interior(const Clause& c, std::size_t alpha,
                               std::uint64_t cap = kDefaultExpansionCap);

/// Horn CNF of the alpha-interior: the conjunction of the clause interiors.
/// `cap` bounds the total number of generated clauses.
HornTheory interior_cnf(const HornTheory& t, std::size_t alpha,
                        std::uint64_t cap = kDefaultExpansionCap);

/// interior(t, alpha) |= c in O(|t| + |c| + n).
///
/// Keeps, for each clause d, the count |N(d) \ N| of its negative literals
/// outside the growing index set N (initially N(c)). A clause whose count
/// drops below alpha, or reaches alpha with no head outside P(c), proves the
/// query. A clause reaching alpha with head j outside N and P(c) is queued;
/// popping it adds j to N, which decrements the counters in j's occurrence
/// list. An empty queue answers NO with the model whose ON-set is N.
Decision deduce_interior_formula(const HornTheory& t, const Clause& c, std::size_t alpha);

/// Reference implementation of the same procedure that rescans the theory
/// after every extension of N, picking the first qualifying clause in input
/// order. O(n (|t| + |c|)); kept for cross-checking.
Decision deduce_interior_formula_reference(const HornTheory& t, const Clause& c, std::size_t alpha);

struct InteriorOptions {
  Execution exec = Execution::kParallel;
  /// Models probed per restart, i.e. |N_alpha(v)|.
  std::uint64_t neighborhood_cap = kDefaultNeighborhoodCap;
};

/// interior(Sigma, alpha) |= c where Sigma is given by its characteristic set
/// (any AND-generating set of mod(Sigma) works). The trace lists the probed
/// vectors that were found outside mod(Sigma), one per restart.
Decision deduce_interior_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                                 const InteriorOptions& opts = {});

/// A query against either representation.
struct InteriorQuery {
  std::variant<HornTheory, ModelSet> kb;
  Clause clause;
  std::size_t alpha = 0;
};

Decision deduce_interior(const InteriorQuery& q, const InteriorOptions& opts = {});

}  // namespace hornstab
