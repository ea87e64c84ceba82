#pragma once

// Deduction against the alpha-exterior of a Horn theory: the models within
// Hamming distance alpha of some model of the theory. The exterior is not
// Horn in general, so every procedure reduces the query to entailment of the
// subclauses of c with |c| - alpha literals.

#include <cstdint>

#include "hornstab/core.hpp"
#include "hornstab/kernels.hpp"

namespace hornstab {

inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

enum class ExteriorMethod {
  kNegSide,  ///< enumerate S subset of N(c), count implied heads in P(c)
  kPosSide,  ///< enumerate S subset of P(c), check maximal models per S
  kAuto,     ///< whichever side predicts fewer enumeration steps
};

struct ExteriorOptions {
  Execution exec = Execution::kParallel;
  /// Bound on enumerated subsets (and on search nodes for the P side).
  std::uint64_t subset_cap = kDefaultSubsetCap;
  ExteriorMethod method = ExteriorMethod::kAuto;
};

/// exterior(t, alpha) |= c from the formula.
///
/// For every S subset of N(c) with |N(c) \ S| <= alpha: the query holds at S
/// when t forces some ~x_i (i in S), i.e. t with S set true is unsatisfiable,
/// or when at least alpha - |N(c) \ S| + 1 indices j in P(c) are implied true
/// by S. One propagation per S yields both facts. A failing S gives the
/// witness: its minimal model with N(c) switched on and P(c) switched off.
Decision deduce_exterior_formula(const HornTheory& t, const Clause& c, std::size_t alpha,
                                 const ExteriorOptions& opts = {});

/// exterior(Sigma, alpha) |= c from a characteristic (or any AND-generating)
/// set of mod(Sigma).
Decision deduce_exterior_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                                 const ExteriorOptions& opts = {});

/// Predicted enumeration counts used by ExteriorMethod::kAuto.
std::uint64_t predicted_neg_side_work(const Clause& c, std::size_t alpha);
std::uint64_t predicted_pos_side_work(const Clause& c, std::size_t alpha, std::size_t charset_size);

/// The method kAuto resolves to.
ExteriorMethod resolve_method(const ModelSet& charset, const Clause& c, std::size_t alpha,
                              ExteriorMethod requested);

}  // namespace hornstab
