#include "hornstab/interior.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "hornstab/horn_engine.hpp"

namespace hornstab {

namespace {

struct Lit {
  Var var;
  bool positive;
};

std::vector<Lit> literal_list(const Literals& c) {
  std::vector<Lit> lits;
  for (Var v : c.pos()) lits.push_back({v, true});
  for (Var v : c.neg()) lits.push_back({v, false});
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.var < b.var; });
  return lits;
}

Literals pick(const std::vector<Lit>& lits, const std::uint32_t* first, const std::uint32_t* last) {
  std::vector<Var> pos, neg;
  for (auto it = first; it != last; ++it) {
    (lits[*it].positive ? pos : neg).push_back(lits[*it].var);
  }
  return Literals(std::move(pos), std::move(neg));
}

std::optional<Model> model_from_marks(const std::vector<std::uint8_t>& marks) {
  if (marks.size() > kMaxModelVars) return std::nullopt;
  Mask bits = 0;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i]) bits |= Mask{1} << i;
  }
  return Model(marks.size(), bits);
}

std::string added(Var j) { return "N += x" + std::to_string(j + 1); }

}  // namespace

ClauseInterior clause_interior(const Clause& c, std::size_t alpha, std::uint64_t cap) {
  const auto lits = literal_list(c);
  const std::size_t k = lits.size();
  ClauseInterior out;
  if (alpha >= k) {
    out.cnf.emplace_back();
    return out;
  }
  const std::size_t cnf_size = k - alpha;
  auto cnf = combinations(k, cnf_size, cnf_size, cap);
  auto dnf = combinations(k, alpha + 1, alpha + 1, cap);
  out.cnf.reserve(cnf.size());
  for (std::size_t i = 0; i < cnf.size(); ++i) out.cnf.emplace_back(pick(lits, cnf.begin(i), cnf.end(i)));
  out.dnf.reserve(dnf.size());
  for (std::size_t i = 0; i < dnf.size(); ++i) out.dnf.emplace_back(pick(lits, dnf.begin(i), dnf.end(i)));
  return out;
}

HornTheory interior_cnf(const HornTheory& t, std::size_t alpha, std::uint64_t cap) {
  std::vector<Clause> all;
  std::uint64_t total = 0;
  for (const auto& d : t.clauses()) {
    total = sat_add(total, alpha >= d.size() ? 1 : binomial(d.size(), alpha));
    if (total > cap) {
      throw ResourceError("interior expansion exceeds " + std::to_string(cap) + " clauses");
    }
  }
  all.reserve(total);
  for (const auto& d : t.clauses()) {
    // Subclauses of a Horn clause are Horn, so the result validates.
    auto part = clause_interior(d, alpha, cap);
    std::move(part.cnf.begin(), part.cnf.end(), std::back_inserter(all));
  }
  return HornTheory(t.vars(), std::move(all));
}

// The queue adds j to N, i.e. it moves on to the query c | ~x_j. This is the
// right step even though the justifying argument shows interior |= c | x_j:
// c is equivalent to (c | x_j) & (c | ~x_j) and the first conjunct is already
// discharged.
Decision deduce_interior_formula(const HornTheory& t, const Clause& c, std::size_t alpha) {
  check_clause_fits(c, t.vars());
  const std::size_t n = t.vars();
  const auto& cs = t.clauses();

  std::vector<std::uint8_t> in_n(n, 0), in_p(n, 0);
  for (Var v : c.neg()) in_n[v] = 1;
  for (Var v : c.pos()) in_p[v] = 1;

  // Occurrence lists of negative literals, and |N(d) \ N| per clause.
  std::vector<std::size_t> occ_offset(n + 1, 0);
  for (const auto& d : cs)
    for (Var v : d.neg()) ++occ_offset[v + 1];
  for (std::size_t v = 0; v < n; ++v) occ_offset[v + 1] += occ_offset[v];
  std::vector<std::uint32_t> occ(occ_offset[n]);
  std::vector<std::size_t> fill(occ_offset.begin(), occ_offset.end() - 1);
  std::vector<std::size_t> outside(cs.size(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (Var v : cs[i].neg()) {
      occ[fill[v]++] = static_cast<std::uint32_t>(i);
      if (!in_n[v]) ++outside[i];
    }
  }

  std::deque<std::uint32_t> queue;
  // Returns true when clause i proves the current query.
  auto settle = [&](std::size_t i) -> bool {
    if (outside[i] < alpha) return true;
    if (outside[i] != alpha) return false;
    const auto& pos = cs[i].pos();
    if (pos.empty() || in_p[pos.front()]) return true;
    if (!in_n[pos.front()]) queue.push_back(static_cast<std::uint32_t>(i));
    return false;
  };

  Decision out = Decision::No();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (settle(i)) {
      out.answer = Answer::kYes;
      return out;
    }
  }
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    const Var j = cs[i].pos().front();
    if (in_n[j]) continue;
    in_n[j] = 1;
    ++out.rounds;
    out.trace.push_back(added(j));
    for (std::size_t k = occ_offset[j]; k < occ_offset[j + 1]; ++k) {
      const auto d = occ[k];
      --outside[d];
      if (settle(d)) {
        out.answer = Answer::kYes;
        return out;
      }
    }
  }
  out.witness = model_from_marks(in_n);
  return out;
}

Decision deduce_interior_formula_reference(const HornTheory& t, const Clause& c, std::size_t alpha) {
  check_clause_fits(c, t.vars());
  const std::size_t n = t.vars();
  std::vector<std::uint8_t> in_n(n, 0), in_p(n, 0);
  for (Var v : c.neg()) in_n[v] = 1;
  for (Var v : c.pos()) in_p[v] = 1;

  Decision out = Decision::No();
  for (;;) {
    std::vector<std::size_t> outside;
    outside.reserve(t.size());
    for (const auto& d : t.clauses()) {
      std::size_t k = 0;
      for (Var v : d.neg()) k += !in_n[v];
      outside.push_back(k);
      const bool headless = d.pos().empty() || in_p[d.pos().front()];
      if (k < alpha || (k == alpha && headless)) {
        out.answer = Answer::kYes;
        return out;
      }
    }
    std::optional<Var> next;
    for (std::size_t i = 0; i < t.size() && !next; ++i) {
      const auto& d = t.clauses()[i];
      if (outside[i] == alpha && !in_n[d.pos().front()]) next = d.pos().front();
    }
    if (!next) {
      out.witness = model_from_marks(in_n);
      return out;
    }
    in_n[*next] = 1;
    ++out.rounds;
    out.trace.push_back(added(*next));
  }
}

Decision deduce_interior_charset(const ModelSet& charset, const Clause& c, std::size_t alpha,
                                 const InteriorOptions& opts) {
  const std::size_t n = charset.vars();
  check_clause_fits(c, n);
  if (charset.empty()) return Decision::Yes();

  const std::vector<Mask> members = charset.masks();
  const std::vector<Mask> flips = flip_masks(n, alpha, opts.neighborhood_cap);
  const Mask p_mask = c.pos_mask();
  Mask n_mask = c.neg_mask();

  Decision out = Decision::No();
  for (;;) {
    const Mask v_star = n_mask;  // minimal falsifier of  OR_{i in N} ~x_i | OR_{P(c)} x_i
    auto outside_mod = [&](std::size_t k) {
      Mask above = 0;
      const Mask v = v_star ^ flips[k];
      return !min_model_above(members, v, above) || above != v;
    };
    const std::size_t k = find_first(flips.size(), outside_mod, opts.exec);
    if (k == flips.size()) {
      out.witness = Model(n, v_star);
      return out;
    }
    const Mask v = v_star ^ flips[k];
    ++out.rounds;
    out.trace.push_back("v(" + std::to_string(out.rounds) + ") = " + mask_to_string(v, n));
    Mask above = 0;
    if (!min_model_above(members, v, above)) {
      // No model above v: theory |= OR_{ON(v)} ~x_i, whose interior already
      // implies the current clause.
      out.answer = Answer::kYes;
      return out;
    }
    const Mask j_set = above & ~v;
    if (j_set & (n_mask | p_mask)) {
      out.answer = Answer::kYes;
      return out;
    }
    n_mask |= j_set;
  }
}

Decision deduce_interior(const InteriorQuery& q, const InteriorOptions& opts) {
  if (const auto* t = std::get_if<HornTheory>(&q.kb)) {
    return deduce_interior_formula(*t, q.clause, q.alpha);
  }
  return deduce_interior_charset(std::get<ModelSet>(q.kb), q.clause, q.alpha, opts);
}

}  // namespace hornstab
