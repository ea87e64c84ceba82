#include <gtest/gtest.h>

#include <set>

#include "hornstab/horn_engine.hpp"
#include "hornstab/instance_gen.hpp"
#include "hornstab/interior.hpp"
#include "hornstab/oracle.hpp"
#include "support.hpp"

using namespace hornstab;
using namespace hornstab::testing;

namespace {

ModelSet ex2_charset() { return ModelSet::of({"1111", "1011", "1010", "0111", "0001"}); }

struct Case {
  HornTheory theory;
  ModelSet models;
  ModelSet charset;
  Clause clause;
  std::size_t alpha;
};

Case random_case(std::uint64_t seed) {
  const std::size_t n = 1 + seed % 10;
  HornTheory t = seed % 9 == 8 ? random_inconsistent_horn(n, seed % 15, 4, seed)
                               : random_horn(n, seed % 16, 4, false, seed);
  ModelSet mod = all_models(t);
  ModelSet chars = characteristic_set(mod);
  const auto shape = static_cast<ClauseShape>(seed % 5);
  return {std::move(t), std::move(mod), std::move(chars),
          random_clause(n, 4, shape, seed * 31 + 7), (seed / 7) % (n + 1)};
}

}  // namespace

TEST(ClauseInterior, PaperExpansion) {
  const auto ci = clause_interior(cl({1, 2, -3, -4}), 2);
  const std::set<Term> dnf(ci.dnf.begin(), ci.dnf.end());
  const std::set<Term> want_dnf = {Term::from_signed({1, 2, -3}), Term::from_signed({1, 2, -4}),
                                   Term::from_signed({1, -3, -4}), Term::from_signed({2, -3, -4})};
  EXPECT_EQ(dnf, want_dnf);
  const std::set<Clause> cnf(ci.cnf.begin(), ci.cnf.end());
  const std::set<Clause> want_cnf = {cl({1, 2}),  cl({1, -3}), cl({1, -4}),
                                     cl({2, -3}), cl({2, -4}), cl({-3, -4})};
  EXPECT_EQ(cnf, want_cnf);
}

TEST(ClauseInterior, Degenerate) {
  const Clause c = cl({-1, -2, 3});
  EXPECT_EQ(clause_interior(c, 0).cnf, std::vector<Clause>{c});
  const auto gone = clause_interior(cl({-1}), 1);
  EXPECT_EQ(gone.cnf, std::vector<Clause>{Clause()});
  EXPECT_TRUE(gone.dnf.empty());
}

TEST(ClauseInterior, ExpansionCap) {
  std::vector<Var> neg(30);
  for (Var i = 0; i < 30; ++i) neg[i] = i;
  EXPECT_THROW(clause_interior(Clause({}, neg), 15, 1000), ResourceError);
}

// The CNF and DNF forms both describe exactly the models whose radius-alpha
// ball satisfies c.
TEST(ClauseInterior, BothFormsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Clause c = random_clause(n, 5, ClauseShape::kAny, seed);
    const std::size_t alpha = seed % (c.size() + 2);
    std::vector<Model> sat;
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      if (eval_clause(c, Model(n, b))) sat.emplace_back(n, b);
    }
    const ModelSet want = interior_models(ModelSet(n, sat), alpha);
    const auto ci = clause_interior(c, alpha);
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      const Model v(n, b);
      bool cnf = true, dnf = false;
      for (const auto& d : ci.cnf) cnf = cnf && eval_clause(d, v);
      for (const auto& t : ci.dnf) dnf = dnf || eval_term(t, v);
      EXPECT_EQ(cnf, want.contains(v)) << c.to_string() << " alpha " << alpha;
      EXPECT_EQ(dnf, want.contains(v)) << c.to_string() << " alpha " << alpha;
    }
  }
}

TEST(InteriorCnf, ExampleTwo) {
  EXPECT_EQ(all_models(interior_cnf(ex2(), 1)), ModelSet::of({"0011"}));
  EXPECT_TRUE(all_models(interior_cnf(ex2(), 2)).empty());
  EXPECT_EQ(all_models(interior_cnf(ex2(), 0)), all_models(ex2()));
}

TEST(InteriorCnf, HornAndOracleEquivalent) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Case k = random_case(seed);
    const HornTheory ic = interior_cnf(k.theory, k.alpha);
    for (const auto& d : ic.clauses()) EXPECT_TRUE(d.is_horn());
    EXPECT_EQ(all_models(ic), interior_models(k.models, k.alpha)) << seed;
  }
}

TEST(InteriorFormula, ExampleTwo) {
  const HornTheory t = ex2();
  EXPECT_TRUE(deduce_interior_formula(t, cl({-1}), 1).yes());
  const Decision d = deduce_interior_formula(t, cl({-3}), 1);
  EXPECT_FALSE(d.yes());
  EXPECT_EQ(d.witness, mv("0011"));
  EXPECT_TRUE(deduce_interior_formula(t, Clause(), 2).yes());
  EXPECT_TRUE(deduce_interior_formula_reference(t, cl({-1}), 1).yes());
  EXPECT_EQ(deduce_interior_formula_reference(t, cl({-3}), 1).witness, mv("0011"));
}

TEST(InteriorCharset, ExampleTwo) {
  EXPECT_TRUE(deduce_interior_charset(ex2_charset(), cl({-1}), 1).yes());
  const Decision d = deduce_interior_charset(ex2_charset(), cl({-3}), 1);
  EXPECT_FALSE(d.yes());
  EXPECT_EQ(d.witness, mv("0011"));
  EXPECT_TRUE(deduce_interior_charset(ModelSet(4), cl({1}), 2).yes());
}

TEST(InteriorCharset, AlphaZeroIsCharsetEntailment) {
  for (int lits = 0; lits < 81; ++lits) {
    std::vector<int> signed_lits;
    int code = lits;
    for (int v = 1; v <= 4; ++v, code /= 3) {
      if (code % 3 == 1) signed_lits.push_back(v);
      if (code % 3 == 2) signed_lits.push_back(-v);
    }
    const Clause c = Clause::from_signed(std::span<const int>(signed_lits));
    EXPECT_EQ(deduce_interior_charset(m1(), c, 0).yes(), charset_entails(m1(), c).yes());
  }
}

TEST(Interior, AllPathsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const Case k = random_case(seed);
    const ModelSet in = interior_models(k.models, k.alpha);
    const bool want = oracle_deduce(in, k.clause);
    const Decision f = deduce_interior_formula(k.theory, k.clause, k.alpha);
    const Decision r = deduce_interior_formula_reference(k.theory, k.clause, k.alpha);
    const Decision s = deduce_interior_charset(k.charset, k.clause, k.alpha, {Execution::kSerial});
    const Decision p = deduce_interior_charset(k.charset, k.clause, k.alpha, {Execution::kParallel});
    EXPECT_EQ(f.yes(), want) << seed;
    EXPECT_EQ(r.yes(), want) << seed;
    EXPECT_EQ(s.yes(), want) << seed;
    EXPECT_EQ(p.yes(), s.yes());
    EXPECT_EQ(p.trace, s.trace);
    EXPECT_EQ(p.witness, s.witness);
    for (const Decision* d : {&f, &r, &s}) {
      EXPECT_LE(d->rounds, k.theory.vars());
      if (!d->yes()) {
        ASSERT_TRUE(d->witness.has_value());
        EXPECT_TRUE(in.contains(*d->witness)) << seed;
        EXPECT_FALSE(eval_clause(k.clause, *d->witness)) << seed;
      }
    }
    if (k.alpha == 0) EXPECT_EQ(f.yes(), entails(k.theory, k.clause).yes());
  }
}

// Interiors shrink as alpha grows, so a YES survives a larger radius.
TEST(Interior, YesIsMonotoneInAlpha) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Case k = random_case(seed);
    bool seen_yes = false;
    for (std::size_t a = 0; a <= k.theory.vars() + 1; ++a) {
      const bool yes = deduce_interior_formula(k.theory, k.clause, a).yes();
      if (seen_yes) EXPECT_TRUE(yes) << seed << " alpha " << a;
      seen_yes = seen_yes || yes;
    }
  }
}

// A chain x1 -> x2 -> ... -> xn forces one extension of N per clause.
TEST(InteriorFormula, ChainUsesEveryRound) {
  const std::size_t n = 30;
  std::vector<Clause> chain;
  for (Var i = 0; i + 1 < n; ++i) chain.emplace_back(std::vector<Var>{i + 1}, std::vector<Var>{i});
  const HornTheory t(n, chain);
  const Decision d = deduce_interior_formula(t, cl({-1}), 0);
  EXPECT_FALSE(d.yes());
  EXPECT_EQ(d.rounds, n - 1);
  EXPECT_LE(d.rounds, n);
  EXPECT_EQ(d.trace.front(), "N += x2");
  EXPECT_EQ(d.witness, Model::ones(n));
}

TEST(InteriorQuery, DispatchesOnRepresentation) {
  EXPECT_TRUE(deduce_interior({ex2(), cl({-1}), 1}).yes());
  EXPECT_TRUE(deduce_interior({ex2_charset(), cl({-1}), 1}).yes());
  EXPECT_FALSE(deduce_interior({ex2_charset(), cl({-3}), 1}).yes());
}

TEST(InteriorCharset, NeighborhoodCap) {
  const ModelSet wide = ModelSet::from_masks(40, std::vector<Mask>{low_bits(40)});
  EXPECT_THROW(deduce_interior_charset(wide, Clause(), 10, {Execution::kSerial, 1000}),
               ResourceError);
}
