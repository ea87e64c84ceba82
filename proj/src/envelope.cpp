#include "hornstab/envelope.hpp"

#include <string>
#include <vector>

#include "hornstab/horn_engine.hpp"

namespace hornstab {

namespace {

std::vector<Var> pick_vars(const std::vector<Var>& all, const std::uint32_t* first,
                           const std::uint32_t* last) {
  std::vector<Var> out;
  out.reserve(static_cast<std::size_t>(last - first));
  for (auto it = first; it != last; ++it) out.push_back(all[*it]);
  return out;
}

Mask values_to_mask(const std::vector<std::uint8_t>& value) {
  Mask bits = 0;
  for (std::size_t i = 0; i < value.size() && i < kMaxModelVars; ++i) {
    if (value[i]) bits |= Mask{1} << i;
  }
  return bits;
}

}  // namespace

Decision deduce_envelope_charset(const ModelSet& charset, const Clause& c, std::size_t alpha) {
  const std::size_t n = charset.vars();
  check_clause_fits(c, n);
  const Mask full = low_bits(n);
  const Mask n_mask = c.neg_mask();
  const Mask p_mask = c.pos_mask();

  Mask covered = 0;
  Mask meet = full;  // AND of the tight members pulled onto N(c)
  bool tight_seen = false;
  for (const auto& v : charset) {
    const auto zeros = static_cast<std::size_t>(popcount(v.off() & n_mask));
    if (zeros < alpha) {
      Decision d = Decision::No(Model(n, (v.bits() | n_mask) & ~p_mask));
      d.trace.push_back("member " + v.to_string() + " has " + std::to_string(zeros) +
                        " zeros in N(c), fewer than " + std::to_string(alpha));
      return d;
    }
    if (zeros == alpha) {
      tight_seen = true;
      covered |= v.off() & p_mask;
      meet &= v.bits() | n_mask;
    }
  }
  if (tight_seen && covered == p_mask) {
    Decision d = Decision::No(Model(n, meet));
    d.trace.push_back("tight members cover P(c)");
    return d;
  }
  return Decision::Yes();
}

Decision deduce_envelope_formula(const HornTheory& t, const Clause& c, std::size_t alpha,
                                 const EnvelopeOptions& opts) {
  check_clause_fits(c, t.vars());
  const HornPropagator prop(t);
  const auto& neg = c.neg();
  const std::size_t nc = neg.size();
  const bool small = t.vars() <= kMaxModelVars;
  const Mask n_mask = small ? c.neg_mask() : 0;
  const Mask p_mask = small ? c.pos_mask() : 0;

  // Step 1.
  if (alpha >= 1) {
    const std::size_t size1 = alpha > nc ? 0 : nc - alpha + 1;
    const auto branches = combinations(nc, size1, size1, opts.subset_cap);
    auto sat = [&](std::size_t k) {
      return prop.satisfiable(pick_vars(neg, branches.begin(k), branches.end(k)));
    };
    const std::size_t k = find_first(branches.size(), sat, opts.exec);
    if (k != branches.size()) {
      Decision d = Decision::No();
      const auto v = prop.solve(pick_vars(neg, branches.begin(k), branches.end(k)));
      if (small) d.witness = Model(t.vars(), (values_to_mask(*v) | n_mask) & ~p_mask);
      d.trace.push_back("a model has fewer than " + std::to_string(alpha) + " zeros in N(c)");
      return d;
    }
  }

  // Step 2.
  if (alpha > nc) return Decision::Yes();
  const std::size_t size2 = nc - alpha;
  const auto branches = combinations(nc, size2, size2, opts.subset_cap);
  const auto& pos = c.pos();
  std::vector<std::uint8_t> covered(pos.size(), 0);
  bool any_sat = false;
  Mask meet = low_bits(small ? t.vars() : 0);

  auto visit = [&](std::size_t k, std::vector<std::uint8_t>& cov, bool& sat_seen, Mask& acc) {
    auto v = prop.solve(pick_vars(neg, branches.begin(k), branches.end(k)));
    if (!v) return;
    sat_seen = true;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (!(*v)[pos[i]]) cov[i] = 1;
    }
    if (small) acc &= values_to_mask(*v) | n_mask;
  };

  if (opts.exec == Execution::kSerial || branches.size() < 64) {
    for (std::size_t k = 0; k < branches.size(); ++k) visit(k, covered, any_sat, meet);
  } else {
#pragma omp parallel
    {
      std::vector<std::uint8_t> local(pos.size(), 0);
      bool local_sat = false;
      Mask local_meet = meet;
#pragma omp for schedule(static) nowait
      for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(branches.size()); ++k) {
        visit(static_cast<std::size_t>(k), local, local_sat, local_meet);
      }
#pragma omp critical(hornstab_envelope_merge)
      {
        for (std::size_t i = 0; i < pos.size(); ++i) covered[i] |= local[i];
        any_sat = any_sat || local_sat;
        meet &= local_meet;
      }
    }
  }

  bool all_covered = true;
  for (auto b : covered) all_covered = all_covered && b;
  if (any_sat && all_covered) {
    Decision d = Decision::No();
    if (small) d.witness = Model(t.vars(), meet);
    d.trace.push_back("models with exactly " + std::to_string(alpha) + " zeros in N(c) cover P(c)");
    return d;
  }
  return Decision::Yes();
}

}  // namespace hornstab
