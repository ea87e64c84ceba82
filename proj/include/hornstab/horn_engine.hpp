#pragma once

// Baseline Horn machinery: minimal models by unit propagation, plain
// entailment, and the characteristic-set primitives.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hornstab/core.hpp"

namespace hornstab {

/// Linear-time forward chaining over a fixed Horn theory.
///
/// Each clause keeps a counter of negative literals whose variable is not yet
/// true; a variable becoming true decrements the counters of the clauses in
/// its occurrence list, and a counter reaching zero fires the clause head (or
/// reports a conflict for a purely negative clause). One call to solve() is
/// O(|theory| + n + forced literals). The object is immutable after
/// construction, so concurrent solve() calls are safe.
class HornPropagator {
 public:
  explicit HornPropagator(const HornTheory& t);

  std::size_t vars() const { return n_; }

  /// Minimal model of the theory with the given variables forced to 1 and 0,
  /// as a 0/1 vector of length n; nullopt when unsatisfiable.
  std::optional<std::vector<std::uint8_t>> solve(std::span<const Var> forced_true,
                                                 std::span<const Var> forced_false = {}) const;

  /// Same as solve() but only reports satisfiability.
  bool satisfiable(std::span<const Var> forced_true, std::span<const Var> forced_false = {}) const {
    return solve(forced_true, forced_false).has_value();
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> head_;          // -1 for purely negative clauses
  std::vector<std::uint32_t> neg_count_;
  std::vector<std::size_t> occ_offset_;     // CSR: variable -> clauses with it negated
  std::vector<std::uint32_t> occ_;
};

/// Unique minimal model of t with the forced assignments, if satisfiable.
/// Requires t.vars() <= 64.
std::optional<Model> minimal_model(const HornTheory& t, std::span<const Var> forced_true = {},
                                   std::span<const Var> forced_false = {});

/// t |= c. A NO answer carries the minimal model of t falsifying c when the
/// width fits a Model.
Decision entails(const HornTheory& t, const Clause& c);
Decision entails(const HornPropagator& p, const Clause& c);

/// Bitwise AND of every member w >= v; nullopt when there is none.
std::optional<Model> min_model_above(const ModelSet& charset, const Model& v);
/// Mask form used by the inner loops: returns false when no member is above.
bool min_model_above(std::span<const Mask> charset, Mask v, Mask& out);

/// Deduction from a characteristic set in O(n |charset|).
Decision charset_entails(const ModelSet& charset, const Clause& c);

/// Smallest superset of m closed under bitwise AND.
ModelSet intersection_closure(const ModelSet& m, std::uint64_t cap = std::uint64_t{1} << 24);

bool is_intersection_closed(const ModelSet& m);

/// Members of an AND-closed set that are not the AND of other members.
/// Throws ValidationError if m is not AND-closed.
ModelSet characteristic_set(const ModelSet& m);

}  // namespace hornstab
