#pragma once

// Ground truth by exhaustive enumeration. Every reasoner is fuzzed against
// these functions, so they are written for obviousness rather than speed:
// cube-wide operators walk all 2^n assignments and test membership through a
// dense bitmap.

#include <cstddef>

#include "hornstab/core.hpp"
#include "hornstab/kernels.hpp"

namespace hornstab {

/// Largest n accepted by the cube-wide functions below.
inline constexpr std::size_t kOracleMaxVars = 24;

/// mod(t) by evaluating every assignment. Throws DimensionError when
/// t.vars() > kOracleMaxVars.
ModelSet all_models(const HornTheory& t, Execution exec = Execution::kParallel);

/// { v : N_alpha(v) is inside m }.
ModelSet interior_models(const ModelSet& m, std::size_t alpha,
                         Execution exec = Execution::kParallel);

/// { v : N_alpha(v) meets m }.
ModelSet exterior_models(const ModelSet& m, std::size_t alpha,
                         Execution exec = Execution::kParallel);

/// Every member of m satisfies c (true for empty m).
bool oracle_deduce(const ModelSet& m, const Clause& c);

/// Cl(m) under bitwise AND.
ModelSet envelope_models(const ModelSet& m);

// Query-shaped oracles that never materialise the whole cube. They let the
// reduction checks run on model sets wider than kOracleMaxVars.

/// interior(m, alpha) |= c: no falsifier v of c has N_alpha(v) inside m.
/// Enumerates the 2^(n - |c|) falsifiers; throws ResourceError when that
/// exponent exceeds kOracleMaxVars.
bool oracle_deduce_interior(const ModelSet& m, const Clause& c, std::size_t alpha);

/// exterior(m, alpha) |= c: every member lies farther than alpha from the
/// falsifiers of c, i.e. |ON(u) & P(c)| + |OFF(u) & N(c)| > alpha for all u.
bool oracle_deduce_exterior(const ModelSet& m, const Clause& c, std::size_t alpha);

}  // namespace hornstab
