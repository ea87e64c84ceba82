#include "hornstab/exterior.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "hornstab/horn_engine.hpp"

namespace hornstab {

namespace {

// Models within distance alpha of w that falsify c: w with N(c) on and P(c) off.
Mask pull_to_falsifier(Mask w, const Clause& c) { return (w | c.neg_mask()) & ~c.pos_mask(); }

std::optional<Model> witness_from_values(const std::vector<std::uint8_t>& value, const Clause& c) {
  if (value.size() > kMaxModelVars) return std::nullopt;
  Mask bits = 0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i]) bits |= Mask{1} << i;
  }
  return Model(value.size(), pull_to_falsifier(bits, c));
}

// S = N(c) minus the complement indices in [first, last).
std::vector<Var> subset_without(const std::vector<Var>& all, const std::uint32_t* first,
                                const std::uint32_t* last) {
  std::vector<Var> s;
  s.reserve(all.size() - static_cast<std::size_t>(last - first));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (first != last && *first == i) {
      ++first;
      continue;
    }
    s.push_back(all[i]);
  }
  return s;
}

std::string level_note(std::size_t s_size, std::size_t threshold) {
  return "|S|=" + std::to_string(s_size) + " needs " + std::to_string(threshold) + " implied heads";
}

// P-side search for one S: a model w with OFF(w) & P(c) == S and
// |OFF(w) & N(c)| <= bound. Branches on the lowest index of S still on in w,
// ANDing a member that has it off; partial ANDs only gain OFF bits, which
// makes both the bound prune and the visited set sound.
struct PosSideSearch {
  const std::vector<Mask>& members;
  Mask full, p_mask, n_mask;
  std::uint64_t node_cap;

  std::optional<Mask> violating(Mask s_mask, int bound) const {
    std::vector<Mask> allowed;
    for (Mask u : members) {
      if ((~u & full & p_mask & ~s_mask) == 0) allowed.push_back(u);
    }
    auto off_n = [&](Mask w) { return popcount(~w & full & n_mask); };
    if (s_mask == 0) {
      for (Mask u : allowed) {
        if (off_n(u) <= bound) return u;
      }
      return std::nullopt;
    }
    std::unordered_set<Mask> visited;
    std::vector<Mask> stack{full};
    std::uint64_t nodes = 0;
    while (!stack.empty()) {
      const Mask w = stack.back();
      stack.pop_back();
      const Mask pending = w & s_mask;
      if (pending == 0) {
        if (off_n(w) <= bound) return w;
        continue;
      }
      const Mask bit = pending & (~pending + 1);
      for (Mask u : allowed) {
        if (u & bit) continue;
        const Mask next = w & u;
        if (off_n(next) > bound || !visited.insert(next).second) continue;
        if (++nodes > node_cap) {
          throw ResourceError("P-side search exceeds " + std::to_string(node_cap) + " nodes");
        }
        stack.push_back(next);
      }
    }
    return std::nullopt;
  }
};

Decision neg_side_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                          const ExteriorOptions& opts) {
  const std::vector<Mask> members = charset.masks();
  const auto& neg = c.neg();
  const Mask p_mask = c.pos_mask();
  const auto levels = combinations(neg.size(), 0, alpha, opts.subset_cap);

  auto s_mask_of = [&](std::size_t k) {
    Mask s = c.neg_mask();
    for (auto it = levels.begin(k); it != levels.end(k); ++it) s &= ~(Mask{1} << neg[*it]);
    return s;
  };
  auto fails = [&](std::size_t k) {
    Mask w = 0;
    if (!min_model_above(members, s_mask_of(k), w)) return false;  // theory |= OR_S ~x_i
    const std::size_t threshold = alpha - levels.length(k) + 1;
    return static_cast<std::size_t>(popcount(w & p_mask)) < threshold;
  };
  const std::size_t k = find_first(levels.size(), fails, opts.exec);
  if (k == levels.size()) return Decision::Yes();
  Mask w = 0;
  min_model_above(members, s_mask_of(k), w);
  Decision d = Decision::No(Model(charset.vars(), pull_to_falsifier(w, c)));
  d.trace.push_back("S = " + mask_to_string(s_mask_of(k), charset.vars()) + ": " +
                    level_note(neg.size() - levels.length(k), alpha - levels.length(k) + 1));
  return d;
}

Decision pos_side_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                          const ExteriorOptions& opts) {
  const std::size_t n = charset.vars();
  const std::vector<Mask> members = charset.masks();
  const auto& pos = c.pos();
  const std::size_t p = pos.size();
  const std::size_t min_level = p > alpha ? p - alpha : 0;
  const auto levels = combinations(p, min_level, p, opts.subset_cap);
  const PosSideSearch search{members, low_bits(n), c.pos_mask(), c.neg_mask(), opts.subset_cap};

  auto s_mask_of = [&](std::size_t k) {
    Mask s = 0;
    for (auto it = levels.begin(k); it != levels.end(k); ++it) s |= Mask{1} << pos[*it];
    return s;
  };
  // Violation iff |OFF(w) & N(c)| <= alpha - |P(c)| + |S|.
  auto bound_of = [&](std::size_t k) {
    return static_cast<int>(alpha) - static_cast<int>(p) + static_cast<int>(levels.length(k));
  };
  auto fails = [&](std::size_t k) { return search.violating(s_mask_of(k), bound_of(k)).has_value(); };
  const std::size_t k = find_first(levels.size(), fails, opts.exec);
  if (k == levels.size()) return Decision::Yes();
  const Mask w = *search.violating(s_mask_of(k), bound_of(k));
  Decision d = Decision::No(Model(n, pull_to_falsifier(w, c)));
  d.trace.push_back("maximal model " + mask_to_string(w, n) + " for S = " +
                    mask_to_string(s_mask_of(k), n));
  return d;
}

}  // namespace

Decision deduce_exterior_formula(const HornTheory& t, const Clause& c, std::size_t alpha,
                                 const ExteriorOptions& opts) {
  check_clause_fits(c, t.vars());
  const HornPropagator prop(t);
  if (alpha >= c.size()) {
    // The interior of c is inconsistent: only an unsatisfiable t entails it.
    auto any = prop.solve({});
    if (!any) return Decision::Yes();
    return Decision::No(witness_from_values(*any, c));
  }
  const auto& neg = c.neg();
  const auto levels = combinations(neg.size(), 0, alpha, opts.subset_cap);

  auto fails = [&](std::size_t k) {
    const auto s = subset_without(neg, levels.begin(k), levels.end(k));
    auto value = prop.solve(s);
    if (!value) return false;
    std::size_t implied = 0;
    for (Var j : c.pos()) implied += (*value)[j];
    return implied < alpha - levels.length(k) + 1;
  };
  const std::size_t k = find_first(levels.size(), fails, opts.exec);
  if (k == levels.size()) return Decision::Yes();
  const auto s = subset_without(neg, levels.begin(k), levels.end(k));
  Decision d = Decision::No(witness_from_values(*prop.solve(s), c));
  d.trace.push_back(level_note(s.size(), alpha - levels.length(k) + 1));
  return d;
}

std::uint64_t predicted_neg_side_work(const Clause& c, std::size_t alpha) {
  return neighborhood_size(c.neg().size(), alpha);
}

std::uint64_t predicted_pos_side_work(const Clause& c, std::size_t alpha, std::size_t charset_size) {
  const std::size_t p = c.pos().size();
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t s = 0; s <= p; ++s) {
    if (s + alpha >= p) total = sat_add(total, sat_mul(binomial(p, s), power));
    power = sat_mul(power, charset_size);
  }
  return total;
}

ExteriorMethod resolve_method(const ModelSet& charset, const Clause& c, std::size_t alpha,
                              ExteriorMethod requested) {
  if (requested != ExteriorMethod::kAuto) return requested;
  return predicted_neg_side_work(c, alpha) <= predicted_pos_side_work(c, alpha, charset.size())
             ? ExteriorMethod::kNegSide
             : ExteriorMethod::kPosSide;
}

Decision deduce_exterior_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                                 const ExteriorOptions& opts) {
  check_clause_fits(c, charset.vars());
  if (charset.empty()) return Decision::Yes();
  if (resolve_method(charset, c, alpha, opts.method) == ExteriorMethod::kNegSide) {
    return neg_side_charset(charset, c, alpha, opts);
  }
  return pos_side_charset(charset, c, alpha, opts);
}

}  // namespace hornstab
