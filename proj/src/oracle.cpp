#include "hornstab/oracle.hpp"

#include <string>
#include <vector>

#include "hornstab/horn_engine.hpp"

namespace hornstab {

namespace {

void check_cube(std::size_t n) {
  if (n > kOracleMaxVars) {
    throw DimensionError("oracle enumeration limited to " + std::to_string(kOracleMaxVars) +
                         " variables, got " + std::to_string(n));
  }
}

// Runs keep(v) over the whole cube and returns the kept masks in ascending
// mask order. The flag array is written by index, so the serial and the
// OpenMP loop produce the same output.
template <class Keep>
std::vector<Mask> filter_cube(std::size_t n, Keep&& keep, Execution exec) {
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> flag(total, 0);
  if (exec == Execution::kSerial) {
    for (std::size_t v = 0; v < total; ++v) flag[v] = keep(static_cast<Mask>(v));
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(total); ++v) {
      flag[static_cast<std::size_t>(v)] = keep(static_cast<Mask>(v));
    }
  }
  std::vector<Mask> out;
  for (std::size_t v = 0; v < total; ++v) {
    if (flag[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::uint8_t> dense(const ModelSet& m) {
  std::vector<std::uint8_t> bitmap(std::size_t{1} << m.vars(), 0);
  for (const auto& v : m) bitmap[v.bits()] = 1;
  return bitmap;
}

}  // namespace

ModelSet all_models(const HornTheory& t, Execution exec) {
  const std::size_t n = t.vars();
  check_cube(n);
  std::vector<Mask> pos, neg;
  for (const auto& d : t.clauses()) {
    pos.push_back(d.pos_mask());
    neg.push_back(d.neg_mask());
  }
  const Mask full = low_bits(n);
  auto satisfies = [&](Mask v) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (!(v & pos[i]) && !(~v & full & neg[i])) return false;
    }
    return true;
  };
  return ModelSet::from_masks(n, filter_cube(n, satisfies, exec));
}

ModelSet interior_models(const ModelSet& m, std::size_t alpha, Execution exec) {
  const std::size_t n = m.vars();
  check_cube(n);
  const auto in_m = dense(m);
  const auto flips = flip_masks(n, alpha, std::uint64_t{1} << n);
  auto keep = [&](Mask v) {
    for (Mask f : flips) {
      if (!in_m[v ^ f]) return false;
    }
    return true;
  };
  return ModelSet::from_masks(n, filter_cube(n, keep, exec));
}

ModelSet exterior_models(const ModelSet& m, std::size_t alpha, Execution exec) {
  const std::size_t n = m.vars();
  check_cube(n);
  const auto in_m = dense(m);
  const auto flips = flip_masks(n, alpha, std::uint64_t{1} << n);
  auto keep = [&](Mask v) {
    for (Mask f : flips) {
      if (in_m[v ^ f]) return true;
    }
    return false;
  };
  return ModelSet::from_masks(n, filter_cube(n, keep, exec));
}

bool oracle_deduce(const ModelSet& m, const Clause& c) {
  for (const auto& v : m) {
    if (!eval_clause(c, v)) return false;
  }
  return true;
}

ModelSet envelope_models(const ModelSet& m) { return intersection_closure(m); }

bool oracle_deduce_interior(const ModelSet& m, const Clause& c, std::size_t alpha) {
  const std::size_t n = m.vars();
  check_clause_fits(c, n);
  const Mask fixed = c.pos_mask() | c.neg_mask();
  const std::vector<Var> free = mask_to_vars(low_bits(n) & ~fixed);
  if (free.size() > kOracleMaxVars) {
    throw ResourceError("too many falsifiers to enumerate");
  }
  const auto flips = flip_masks(n, alpha, std::uint64_t{1} << 26);
  for (std::size_t pick = 0; pick < (std::size_t{1} << free.size()); ++pick) {
    Mask v = c.neg_mask();
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((pick >> i) & 1U) v |= Mask{1} << free[i];
    }
    bool inside = true;
    for (Mask f : flips) {
      if (!m.contains(Model(n, v ^ f))) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

bool oracle_deduce_exterior(const ModelSet& m, const Clause& c, std::size_t alpha) {
  check_clause_fits(c, m.vars());
  for (const auto& u : m) {
    const auto dist = static_cast<std::size_t>(popcount(u.on() & c.pos_mask()) +
                                               popcount(u.off() & c.neg_mask()));
    if (dist <= alpha) return false;
  }
  return true;
}

}  // namespace hornstab
