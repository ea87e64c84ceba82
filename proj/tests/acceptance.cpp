// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hornstab/envelope.hpp"
#include "hornstab/exterior.hpp"
#include "hornstab/formats.hpp"
#include "hornstab/fuzz.hpp"
#include "hornstab/horn_engine.hpp"
#include "hornstab/instance_gen.hpp"
#include "hornstab/interior.hpp"
#include "hornstab/oracle.hpp"

using namespace hornstab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

int failed = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(start);
  std::printf("%s [%d] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), t,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failed;
}

ModelSet cube(std::size_t n) {
  std::vector<Mask> all;
  for (Mask b = 0; b < (Mask{1} << n); ++b) all.push_back(b);
  return ModelSet::from_masks(n, all);
}

ModelSet random_set(std::size_t n, std::mt19937_64& rng) {
  std::vector<Mask> out;
  const unsigned density = 1 + rng() % 7;
  for (Mask b = 0; b < (Mask{1} << n); ++b) {
    if (rng() % 8 < density) out.push_back(b);
  }
  return ModelSet::from_masks(n, out);
}

Outcome example_two() {
  Outcome o;
  const auto start = Clock::now();
  const HornTheory t = parse_horn_cnf(read_text_file(std::string(HORNSTAB_TEST_DATA) + "/ex2.hcnf"));
  const ModelSet mod = all_models(t);
  o.expect(mod == ModelSet::of({"1111", "1011", "1010", "0111", "0011", "0010", "0001", "0000"}),
           "mod(theory) differs from the 8-model list");
  o.expect(interior_models(mod, 1) == ModelSet::of({"0011"}), "interior at 1 is not {0011}");
  std::vector<Model> no1100;
  for (const auto& v : cube(4)) {
    if (v != Model::from_string("1100")) no1100.push_back(v);
  }
  o.expect(exterior_models(mod, 1) == ModelSet(4, no1100), "exterior at 1 is not cube minus 1100");
  o.expect(interior_models(mod, 2).empty(), "interior at 2 is not empty");
  o.expect(exterior_models(mod, 2) == cube(4), "exterior at 2 is not the full cube");
  o.expect(deduce_interior_formula(t, Clause::from_signed({-1}), 1).yes(), "interior |= ~x1 failed");
  o.expect(!deduce_interior_formula(t, Clause::from_signed({-3}), 1).yes(), "interior |= ~x3 should be NO");
  o.expect(deduce_exterior_formula(t, Clause::from_signed({-1, -2, 3, 4}), 1).yes(),
           "exterior |= ~x1 | ~x2 | x3 | x4 failed");
  const double t_run = seconds_since(start);
  o.expect(t_run < 1.0, "took longer than 1 s");
  return o;
}

Outcome example_one() {
  Outcome o;
  const ModelSet m1 = ModelSet::of({"0101", "1001", "1000"});
  const ModelSet m2 = ModelSet::of({"0101", "1001", "1000", "0001", "0000"});
  o.expect(intersection_closure(m1) == m2, "closure(M1) != M2");
  o.expect(characteristic_set(m2) == m1, "char(M2) != M1");
  return o;
}

Outcome lemma_one() {
  Outcome o;
  const auto ci = clause_interior(Clause::from_signed({1, 2, -3, -4}), 2);
  const std::set<Term> dnf(ci.dnf.begin(), ci.dnf.end());
  const std::set<Term> want_dnf = {Term::from_signed({1, 2, -3}), Term::from_signed({1, 2, -4}),
                                   Term::from_signed({1, -3, -4}), Term::from_signed({2, -3, -4})};
  const std::set<Clause> cnf(ci.cnf.begin(), ci.cnf.end());
  const std::set<Clause> want_cnf = {
      Clause::from_signed({1, 2}),  Clause::from_signed({1, -3}), Clause::from_signed({1, -4}),
      Clause::from_signed({2, -3}), Clause::from_signed({2, -4}), Clause::from_signed({-3, -4})};
  o.expect(ci.dnf.size() == 4 && dnf == want_dnf, "DNF terms differ");
  o.expect(ci.cnf.size() == 6 && cnf == want_cnf, "CNF clauses differ");
  return o;
}

Outcome oracle_fuzz() {
  Outcome o;
  const auto start = Clock::now();
  FuzzConfig consistent;
  FuzzReport r = run_fuzz(1000, 1, consistent);
  FuzzConfig bad;
  bad.inconsistent = true;
  const FuzzReport ri = run_fuzz(100, 100001, bad);

  // Shape coverage of the query clauses actually drawn.
  std::size_t empty = 0, positive = 0, negative = 0;
  for (std::uint64_t s = 1; s <= 1000; ++s) {
    const Clause c = make_fuzz_instance(s, consistent).clause;
    empty += c.empty();
    positive += !c.empty() && c.neg().empty();
    negative += !c.empty() && c.pos().empty();
  }
  std::size_t unsat = 0;
  for (std::uint64_t s = 100001; s <= 100100; ++s) unsat += make_fuzz_instance(s, bad).models.empty();

  const double t = seconds_since(start);
  const std::size_t mismatches = r.mismatches.size() + ri.mismatches.size();
  for (const auto& m : r.mismatches) o.expect(false, m);
  for (const auto& m : ri.mismatches) o.expect(false, m);
  o.expect(unsat == 100, "an inconsistent-theory instance has models");
  o.expect(empty > 0 && positive > 0 && negative > 0, "a clause shape is missing from the batch");
  o.expect(t < 60.0, "batch took longer than 60 s");
  std::ostringstream d;
  d << r.instances << " + " << ri.instances << " inconsistent instances, " << r.checks + ri.checks
    << " path checks (" << empty << " empty, " << positive << " positive, " << negative
    << " negative clauses), " << mismatches << " mismatches";
  o.detail = d.str();
  return o;
}

Outcome identities() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t checks = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const ModelSet m = random_set(n, rng), m2 = random_set(n, rng);
    const std::size_t a = rng() % (n + 1), b = rng() % (n + 1);
    const std::string tag = "trial " + std::to_string(trial);

    o.expect(interior_models(interior_models(m, a), b) == interior_models(m, a + b), tag + " interior composition");
    o.expect(exterior_models(exterior_models(m, a), b) == exterior_models(m, a + b), tag + " exterior composition");

    const ModelSet low = exterior_models(interior_models(m, b), a);
    const ModelSet mid = a >= b ? exterior_models(m, a - b) : interior_models(m, b - a);
    const ModelSet high = interior_models(exterior_models(m, a), b);
    o.expect(low.subset_of(mid) && mid.subset_of(high), tag + " sandwich");

    o.expect(interior_models(m.set_intersection(m2), a) ==
                 interior_models(m, a).set_intersection(interior_models(m2, a)),
             tag + " interior of intersection");
    o.expect(exterior_models(m.set_union(m2), a) == exterior_models(m, a).set_union(exterior_models(m2, a)),
             tag + " exterior of union");

    const ModelSet sub = m.set_intersection(m2);
    o.expect(interior_models(m, a).subset_of(m) && m.subset_of(exterior_models(m, a)), tag + " interior <= m <= exterior");
    o.expect(interior_models(m, a + 1).subset_of(interior_models(m, a)), tag + " interior antitone in alpha");
    o.expect(exterior_models(m, a).subset_of(exterior_models(m, a + 1)), tag + " exterior monotone in alpha");
    o.expect(interior_models(sub, a).subset_of(interior_models(m, a)) &&
                 exterior_models(sub, a).subset_of(exterior_models(m, a)),
             tag + " monotone in the model set");

    const ModelSet env = envelope_models(m);
    o.expect(m.subset_of(env) && envelope_models(env) == env && envelope_models(sub).subset_of(env),
             tag + " closure extensive, idempotent, monotone");
    const ModelSet horn = all_models(random_horn(n, rng() % 10, 3, false, rng()));
    o.expect(envelope_models(horn) == horn, tag + " closure of a Horn model set");
    checks += 11;
  }
  o.detail = std::to_string(checks) + " identity checks, " + std::to_string(o.failures.size()) +
             " violations";
  return o;
}

Outcome reductions() {
  Outcome o;
  std::size_t instances = 0;
  for (std::size_t nv = 1; nv <= 5; ++nv) {
    const std::size_t pairs = nv * (nv - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = Graph::from_code(nv, code);
      const std::size_t mis = max_independent_set(g), mvc = min_vertex_cover(g);
      for (std::size_t k = 1; k <= nv; ++k) {
        const std::string tag = g.to_string() + " k=" + std::to_string(k);

        const auto is = independent_set_instance(g, k);
        const bool is_yes = deduce_exterior_formula(is.theory, is.clause, is.alpha).yes();
        o.expect(is_yes == (mis < k), tag + " independent set vs graph search");
        o.expect(is_yes == oracle_deduce(exterior_models(all_models(is.theory), is.alpha), is.clause),
                 tag + " independent set vs oracle");
        ++instances;

        if (nv >= 3 && !g.edges().empty()) {
          const auto ic = interior_consistency_instance(g, k);
          const bool inconsistent = deduce_interior_charset(ic.charset, ic.clause, ic.alpha).yes();
          o.expect(inconsistent == (mis >= k), tag + " interior consistency vs graph search");
          o.expect(inconsistent == interior_models(intersection_closure(ic.charset), ic.alpha).empty(),
                   tag + " interior consistency vs oracle");
          ++instances;
        }
        if (k < nv) {
          const auto vc = vertex_cover_instance(g, k);
          const bool vc_yes = deduce_exterior_charset(vc.charset, vc.clause, vc.alpha).yes();
          o.expect(vc_yes == (mvc > k), tag + " vertex cover vs graph search");
          o.expect(vc_yes == oracle_deduce_exterior(intersection_closure(vc.charset), vc.clause, vc.alpha),
                   tag + " vertex cover vs oracle");
          ++instances;
        }
      }
    }
  }
  o.detail = std::to_string(instances) + " reduction instances over all graphs with nv <= 5";
  return o;
}

Outcome linear_time() {
  Outcome o;
  const std::size_t n = 10000;
  auto timed = [&](std::size_t m, std::uint64_t seed, std::size_t& length) {
    const HornTheory t = random_horn(n, m, 4, false, seed);
    length = t.length();
    const Clause c = Clause::from_signed({-1, -2, 3});
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      volatile bool yes = deduce_interior_formula(t, c, 1).yes();
      (void)yes;
      best = std::min(best, seconds_since(start));
    }
    return best;
  };
  std::size_t small_len = 0, large_len = 0;
  const double small = timed(43000, 7, small_len);
  const double large = timed(430000, 8, large_len);
  const double ratio = large / std::max(small, 1e-9);
  o.expect(small < 2.0 && large < 2.0, "a run took longer than 2 s");
  o.expect(ratio <= 20.0, "time ratio above 20");
  char buf[200];
  std::snprintf(buf, sizeof buf, "length %zu: %.4f s, length %zu: %.4f s, ratio %.2f", small_len,
                small, large_len, large, ratio);
  o.detail = buf;
  return o;
}

Outcome degeneration() {
  Outcome o;
  FuzzReport r;
  std::size_t negative = 0;
  for (std::uint64_t s = 1; s <= 1000; ++s) {
    FuzzConfig cfg;
    cfg.neg_only = s % 3 == 0;
    cfg.inconsistent = s % 10 == 7;
    const auto inst = make_fuzz_instance(s + 500000, cfg);
    negative += inst.theory.is_negative();
    check_degeneration(inst, Execution::kParallel, r);
  }
  for (const auto& m : r.mismatches) o.expect(false, m);
  o.detail = std::to_string(r.checks) + " checks (" + std::to_string(negative) +
             " negative theories), " + std::to_string(r.mismatches.size()) + " mismatches";
  return o;
}

}  // namespace

int main() {
  criterion(1, "Example 2 golden suite", example_two);
  criterion(2, "Example 1 golden suite", example_one);
  criterion(3, "clause interior expansion golden", lemma_one);
  criterion(4, "oracle-equivalence fuzz over all deduction paths", oracle_fuzz);
  criterion(5, "algebraic identities at oracle level (n <= 8)", identities);
  criterion(6, "reduction cross-checks over all graphs with nv <= 5", reductions);
  criterion(7, "interior deduction scales linearly (n = 10^4)", linear_time);
  criterion(8, "alpha = 0 and negative-theory degeneration", degeneration);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
