#include "hornstab/horn_engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace hornstab {

HornPropagator::HornPropagator(const HornTheory& t) : n_(t.vars()) {
  const auto& cs = t.clauses();
  head_.reserve(cs.size());
  neg_count_.reserve(cs.size());
  occ_offset_.assign(n_ + 1, 0);
  for (const auto& c : cs) {
    head_.push_back(c.pos().empty() ? -1 : static_cast<std::int64_t>(c.pos().front()));
    neg_count_.push_back(static_cast<std::uint32_t>(c.neg().size()));
    for (Var v : c.neg()) ++occ_offset_[v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) occ_offset_[v + 1] += occ_offset_[v];
  occ_.resize(occ_offset_[n_]);
  std::vector<std::size_t> fill(occ_offset_.begin(), occ_offset_.end() - 1);
  for (std::size_t d = 0; d < cs.size(); ++d) {
    for (Var v : cs[d].neg()) occ_[fill[v]++] = static_cast<std::uint32_t>(d);
  }
}

std::optional<std::vector<std::uint8_t>> HornPropagator::solve(
    std::span<const Var> forced_true, std::span<const Var> forced_false) const {
  std::vector<std::uint8_t> value(n_, 0);
  std::vector<std::uint8_t> banned(n_, 0);
  for (Var v : forced_false) {
    if (v >= n_) throw DimensionError("forced variable out of range");
    banned[v] = 1;
  }
  std::vector<std::uint32_t> remaining(neg_count_);
  std::vector<Var> queue;
  queue.reserve(n_);

  auto make_true = [&](Var v) -> bool {
    if (value[v]) return true;
    if (banned[v]) return false;
    value[v] = 1;
    queue.push_back(v);
    return true;
  };
  auto fire = [&](std::size_t d) -> bool {
    return head_[d] >= 0 && make_true(static_cast<Var>(head_[d]));
  };

  for (Var v : forced_true) {
    if (v >= n_) throw DimensionError("forced variable out of range");
    if (!make_true(v)) return std::nullopt;
  }
  for (std::size_t d = 0; d < remaining.size(); ++d) {
    if (remaining[d] == 0 && !fire(d)) return std::nullopt;
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Var v = queue[qi];
    for (std::size_t k = occ_offset_[v]; k < occ_offset_[v + 1]; ++k) {
      std::uint32_t d = occ_[k];
      if (--remaining[d] == 0 && !fire(d)) return std::nullopt;
    }
  }
  return value;
}

namespace {

Model to_model(const std::vector<std::uint8_t>& value) {
  Mask bits = 0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i]) bits |= Mask{1} << i;
  }
  return Model(value.size(), bits);
}

}  // namespace

std::optional<Model> minimal_model(const HornTheory& t, std::span<const Var> forced_true,
                                   std::span<const Var> forced_false) {
  check_model_width(t.vars());
  auto r = HornPropagator(t).solve(forced_true, forced_false);
  if (!r) return std::nullopt;
  return to_model(*r);
}

Decision entails(const HornPropagator& p, const Clause& c) {
  check_clause_fits(c, p.vars());
  auto r = p.solve(c.neg(), c.pos());
  if (!r) return Decision::Yes();
  Decision d = Decision::No();
  if (p.vars() <= kMaxModelVars) d.witness = to_model(*r);
  return d;
}

Decision entails(const HornTheory& t, const Clause& c) { return entails(HornPropagator(t), c); }

bool min_model_above(std::span<const Mask> charset, Mask v, Mask& out) {
  Mask acc = ~Mask{0};
  bool any = false;
  for (Mask w : charset) {
    if ((w & v) == v) {
      acc &= w;
      any = true;
    }
  }
  out = acc;
  return any;
}

std::optional<Model> min_model_above(const ModelSet& charset, const Model& v) {
  if (v.size() != charset.vars()) throw DimensionError("model width differs from charset width");
  auto masks = charset.masks();
  Mask out = 0;
  if (!min_model_above(masks, v.bits(), out)) return std::nullopt;
  return Model(v.size(), out);
}

Decision charset_entails(const ModelSet& charset, const Clause& c) {
  const std::size_t n = charset.vars();
  check_clause_fits(c, n);
  auto above = min_model_above(charset, minimal_falsifier(c, n));
  if (!above || eval_clause(c, *above)) return Decision::Yes();
  return Decision::No(*above);
}

ModelSet intersection_closure(const ModelSet& m, std::uint64_t cap) {
  // Every AND of members is reachable by ANDing one generator at a time, so
  // the worklist only combines new elements with the original generators.
  std::vector<Mask> gens = m.masks();
  std::unordered_set<Mask> seen(gens.begin(), gens.end());
  std::vector<Mask> work(gens.begin(), gens.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Mask x = work[i];
    for (Mask g : gens) {
      Mask z = x & g;
      if (seen.insert(z).second) {
        if (seen.size() > cap) {
          throw ResourceError("intersection closure exceeds " + std::to_string(cap) + " models");
        }
        work.push_back(z);
      }
    }
  }
  return ModelSet::from_masks(m.vars(), work);
}

bool is_intersection_closed(const ModelSet& m) {
  std::vector<Mask> masks = m.masks();
  std::unordered_set<Mask> set(masks.begin(), masks.end());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (!set.contains(masks[i] & masks[j])) return false;
    }
  }
  return true;
}

ModelSet characteristic_set(const ModelSet& m) {
  if (!is_intersection_closed(m)) {
    throw ValidationError("characteristic set requires an intersection-closed model set");
  }
  // v is the AND of other members iff it equals the AND of the members
  // strictly above it.
  std::vector<Mask> masks = m.masks();
  std::vector<Mask> out;
  for (Mask v : masks) {
    Mask acc = ~Mask{0};
    bool any = false;
    for (Mask w : masks) {
      if (w != v && (w & v) == v) {
        acc &= w;
        any = true;
      }
    }
    if (!any || acc != v) out.push_back(v);
  }
  return ModelSet::from_masks(m.vars(), out);
}

}  // namespace hornstab
