#include <gtest/gtest.h>

#include "hornstab/core.hpp"
#include "support.hpp"

using namespace hornstab;
using namespace hornstab::testing;

TEST(Model, RowStringLeftmostIsX1) {
  const Model v = mv("0101");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_FALSE(v.test(0));
  EXPECT_TRUE(v.test(1));
  EXPECT_TRUE(v.test(3));
  EXPECT_EQ(v.on(), vars_to_mask(std::vector<Var>{1, 3}));
  EXPECT_EQ(v.to_string(), "0101");
  EXPECT_EQ(v.off(), vars_to_mask(std::vector<Var>{0, 2}));
}

TEST(Model, RejectsBadInput) {
  EXPECT_THROW(Model::from_string("01a1"), ParseError);
  EXPECT_THROW(Model(2, 0b100), DimensionError);
  EXPECT_THROW(Model::from_string(std::string(65, '0')), DimensionError);
}

TEST(Model, OrderIsLexicographicOnRows) {
  EXPECT_LT(mv("0101"), mv("1000"));
  EXPECT_LT(mv("0001"), mv("0010"));
  EXPECT_LT(mv("0000"), mv("0001"));
}

TEST(Model, AndAndHamming) {
  EXPECT_EQ(mv("1101") & mv("1110"), mv("1100"));
  EXPECT_EQ(hamming(mv("1100"), mv("0101")), 2);
  EXPECT_TRUE(mv("0100").below(mv("0101")));
  EXPECT_FALSE(mv("0110").below(mv("0101")));
}

TEST(Literals, SignedRoundTripAndOverlap) {
  const Clause c = cl({4, -1, -2, 3});
  EXPECT_EQ(c.pos(), (std::vector<Var>{2, 3}));
  EXPECT_EQ(c.neg(), (std::vector<Var>{0, 1}));
  EXPECT_EQ(c.to_signed(), (std::vector<int>{-1, -2, 3, 4}));
  EXPECT_EQ(c.to_string(), "~x1 | ~x2 | x3 | x4");
  EXPECT_EQ(Clause().to_string(), "[]");
  EXPECT_THROW(cl({1, -1}), ValidationError);
  EXPECT_THROW(cl({0}), ValidationError);
  EXPECT_TRUE(cl({-1, -2, 3}).is_horn());
  EXPECT_FALSE(cl({1, 2}).is_horn());
}

TEST(Eval, ClauseExamples) {
  const Clause c = cl({-1, -2, 3, 4});
  EXPECT_TRUE(eval_clause(c, mv("0101")));
  EXPECT_FALSE(eval_clause(c, mv("1100")));
  EXPECT_FALSE(eval_clause(Clause(), mv("1010")));
  EXPECT_TRUE(eval_term(Term(), mv("1010")));
  EXPECT_TRUE(eval_term(Term::from_signed({1, -2}), mv("1010")));
}

// eval_clause(c, v) is false exactly when P(c) is all off and N(c) all on.
TEST(Eval, ClauseMatchesDefinitionOnCube) {
  const std::vector<Clause> clauses = {cl({-1, -2, 3, 4}), cl({1}), cl({-4}), Clause(), cl({2, -3})};
  for (const auto& c : clauses) {
    for (Mask b = 0; b < 16; ++b) {
      const Model v(4, b);
      const bool falsified = (b & c.pos_mask()) == 0 && (b & c.neg_mask()) == c.neg_mask();
      EXPECT_EQ(eval_clause(c, v), !falsified) << c.to_string() << " " << v.to_string();
    }
  }
}

TEST(Eval, MinimalFalsifier) {
  EXPECT_EQ(minimal_falsifier(cl({-1, -2, 3, 4}), 4), mv("1100"));
  EXPECT_EQ(minimal_falsifier(Clause(), 3), mv("000"));
}

TEST(HornTheory, ValidatesAndDeduplicates) {
  EXPECT_THROW(HornTheory(2, {cl({1, 2})}), ValidationError);
  EXPECT_THROW(HornTheory(2, {cl({-3})}), ValidationError);
  std::size_t dups = 0;
  HornTheory t(3, {cl({-1, 3}), cl({3, -1}), cl({-2})}, &dups);
  EXPECT_EQ(dups, 1u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.length(), 3u);
  EXPECT_FALSE(t.is_negative());
  EXPECT_TRUE(HornTheory(3, {cl({-1, -2})}).is_negative());
}

TEST(ModelSet, CanonicalOrderAndSetOps) {
  std::size_t dups = 0;
  ModelSet m(4, {mv("1000"), mv("0101"), mv("1000")}, &dups);
  EXPECT_EQ(dups, 1u);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.models()[0], mv("0101"));
  EXPECT_TRUE(m.contains(mv("1000")));
  EXPECT_FALSE(m.contains(mv("1001")));
  EXPECT_TRUE(m1().subset_of(m2()));
  EXPECT_FALSE(m2().subset_of(m1()));
  EXPECT_EQ(m1().set_union(m2()), m2());
  EXPECT_EQ(m1().set_intersection(m2()), m1());
  EXPECT_THROW(ModelSet(3, {mv("0101")}), DimensionError);
}

TEST(Masks, Helpers) {
  EXPECT_EQ(mask_to_vars(0b1010), (std::vector<Var>{1, 3}));
  EXPECT_EQ(mask_to_string(0b0010, 4), "0100");
  EXPECT_THROW(vars_to_mask(std::vector<Var>{64}), DimensionError);
  EXPECT_THROW(check_clause_fits(cl({-5}), 4), DimensionError);
  EXPECT_THROW(check_model_width(65), DimensionError);
  EXPECT_EQ(low_bits(64), ~Mask{0});
}
