#pragma once

// Deduction against the Horn envelope (least Horn upper bound) of the
// alpha-exterior. Its models are the AND-closure of the radius-alpha balls
// around the characteristic models, which makes the query answerable from a
// characteristic set in a single pass.

#include <cstdint>

#include "hornstab/core.hpp"
#include "hornstab/exterior.hpp"
#include "hornstab/kernels.hpp"

namespace hornstab {

/// O(n |charset|). NO when some member has fewer than alpha zeros inside N(c),
/// or when the members with exactly alpha such zeros jointly have every index
/// of P(c) off. Otherwise YES.
Decision deduce_envelope_charset(const ModelSet& charset, const Clause& c, std::size_t alpha);

struct EnvelopeOptions {
  Execution exec = Execution::kParallel;
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

/// Formula-based procedure.
///
/// Step 1: for every N subset of N(c) with |N| = max(|N(c)| - alpha + 1, 0),
/// a satisfiable t with N forced true means some model has fewer than alpha
/// zeros in N(c): NO.
/// Step 2: for every N with |N| = |N(c)| - alpha (none when alpha > |N(c)|),
/// collect P(c) & OFF(v) over the minimal models v of satisfiable branches.
/// NO iff some branch was satisfiable and the collected set covers P(c).
Decision deduce_envelope_formula(const HornTheory& t, const Clause& c, std::size_t alpha,
                                 const EnvelopeOptions& opts = {});

}  // namespace hornstab
