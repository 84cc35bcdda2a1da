#include <gtest/gtest.h>

#include "mbm/generators.hpp"
#include "mbm/structures.hpp"
#include "support.hpp"

using namespace mbm;

namespace {

const std::vector<std::string> kPlainIds = {"fusion-t1", "counit-t1", "fusion-t2", "counit-t2", "assoc",
                                            "mult-t1",   "mult-t2",   "mbm-1",     "mbm-2"};

std::vector<std::string> ids(const Report& r) {
  std::vector<std::string> out;
  for (const auto& c : r.items()) out.push_back(c.id);
  return out;
}

}  // namespace

TEST(Semigroup, UnitAndAssociativity) {
  const FieldSpec f(2);
  EXPECT_TRUE(check_semigroup(Semigroup::unit(f)).ok());
  EXPECT_TRUE(check_semigroup(oracle::z2_function_by_hand().semigroup).ok());
  // m(x, y) = x is associative; x0 x0 = x1, x1 x0 = x0 is not.
  const Semigroup left{2, Mat(f, {{1, 1, 0, 0}, {0, 0, 1, 1}})};
  EXPECT_TRUE(check_semigroup(left).ok());
  const Semigroup bad{2, Mat(f, {{0, 0, 1, 0}, {1, 0, 0, 0}})};
  EXPECT_FALSE(check_semigroup(bad).ok());
}

TEST(Semigroup, ShapeChecked) {
  const FieldSpec f(2);
  EXPECT_THROW(check_semigroup(Semigroup{2, Mat(f, 2, 2)}), ShapeError);
}

TEST(Fusion, ExamplesAndZeroMap) {
  const FieldSpec f(2);
  const auto ctx = BraidedContext::symmetric(f);
  const auto b = oracle::z2_function_by_hand();
  EXPECT_TRUE(check_fusion(ctx, {2, b.t1, b.e}).ok());
  EXPECT_TRUE(check_fusion(ctx.rev(), {2, b.t2, b.e}).ok());
  EXPECT_TRUE(check_fusion(ctx, {1, Mat::identity(f, 1), Mat(f, {{1}})}).ok());
  const Report r = check_fusion(ctx, {2, Mat(f, 4, 4), b.e});
  EXPECT_TRUE(r.passed("fusion"));
  EXPECT_FALSE(r.passed("counit"));
}

TEST(MultiplierBimonoid, HandWrittenZ2FunctionAlgebra) {
  const auto b = oracle::z2_function_by_hand();
  const Report r = check_multiplier_bimonoid(b);
  EXPECT_TRUE(r.ok()) << r.str();
  EXPECT_EQ(ids(r), kPlainIds);
  EXPECT_EQ(function_bimonoid(FiniteGroupSpec::cyclic(2), FieldSpec(2)), b);
}

TEST(MultiplierBimonoid, FusionCompatibilityOnExample) {
  const auto b = oracle::z2_function_by_hand();
  const auto ctx = BraidedContext::symmetric(b.field());
  const Report r1 = check_fusion_compatibility(ctx, b.semigroup, {2, b.t1, b.e});
  EXPECT_TRUE(r1.ok()) << r1.str();
  EXPECT_EQ(ids(r1), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_TRUE(check_fusion_compatibility(ctx.rev(), b.semigroup, {2, b.t2, b.e}).ok());
}

TEST(MultiplierBimonoid, TrivialOneDimensional) {
  const FieldSpec f(7);
  const Mat one = Mat::identity(f, 1);
  EXPECT_TRUE(check_multiplier_bimonoid({Semigroup::unit(f), one, one, one}).ok());
}

TEST(MultiplierBimonoid, WrongT1FailsWithWitness) {
  auto b = oracle::z2_function_by_hand();
  b.t1 = Mat::identity(b.field(), 4);
  const Report r = check_multiplier_bimonoid(b);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_TRUE(r.first_failure()->witness.has_value());
}

TEST(MultiplierBimonoid, ShapeErrors) {
  auto b = oracle::z2_function_by_hand();
  b.e = Mat(b.field(), 1, 3);
  EXPECT_THROW(check_multiplier_bimonoid(b), ShapeError);
}

TEST(MultiplierBimonoid, GroupAlgebrasOverSeveralPrimes) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (const auto& [name, g] : FiniteGroupSpec::small_groups()) {
      EXPECT_TRUE(check_multiplier_bimonoid(function_bimonoid(g, FieldSpec(p))).ok()) << name << " p=" << p;
      EXPECT_TRUE(check_multiplier_bimonoid(group_algebra_bimonoid(g, FieldSpec(p))).ok()) << name << " p=" << p;
    }
}

TEST(Regular, SuiteIdsAndStrongExtras) {
  const auto b = oracle::z2_function_by_hand();
  const RegularMultiplierBimonoid r{b, b.t1, b.t2, b.e};
  const Report plain = check_regular(r), strong = check_regular(r, true);
  EXPECT_TRUE(plain.ok()) << plain.str();
  EXPECT_TRUE(strong.ok()) << strong.str();
  EXPECT_EQ(strong.items().size(), plain.items().size() + 2);
  EXPECT_NE(plain.find("counit-eq"), nullptr);
  EXPECT_NE(plain.find("reg-5"), nullptr);
  EXPECT_NE(plain.find("mbm-bar-2"), nullptr);
  EXPECT_EQ(plain.find("strong-1"), nullptr);
  EXPECT_NE(strong.find("strong-2"), nullptr);
}

TEST(Regular, DerivedConditionsLetters) {
  const auto b = oracle::z2_function_by_hand();
  const Report d = check_derived_conditions(RegularMultiplierBimonoid{b, b.t1, b.t2, b.e});
  EXPECT_TRUE(d.ok()) << d.str();
  std::string letters;
  for (const auto& c : d.items()) letters += c.id;
  EXPECT_EQ(letters, "efghijklmnopqrst");
}

TEST(Regular, CounitMismatchDetected) {
  const auto b = oracle::z2_function_by_hand();
  const Report r = check_regular(RegularMultiplierBimonoid{b, b.t1, b.t2, Mat(b.field(), {{0, 1}})});
  EXPECT_FALSE(r.passed("counit-eq"));
}

TEST(Nondegenerate, Examples) {
  const FieldSpec f(2);
  EXPECT_TRUE(check_nondegenerate(oracle::z2_function_by_hand().semigroup));
  EXPECT_FALSE(check_nondegenerate(Semigroup{2, Mat(f, 2, 4)}));
  // m(x, y) = x: right multiplication by any element is the identity.
  EXPECT_FALSE(check_nondegenerate(Semigroup{2, Mat(f, {{1, 1, 0, 0}, {0, 0, 1, 1}})}));
  EXPECT_TRUE(check_nondegenerate(Semigroup::unit(f)));
}

TEST(Nondegenerate, RegularRepresentationsAgreeWithMultiplication) {
  const FieldSpec f(3);
  const auto b = group_algebra_bimonoid(FiniteGroupSpec::cyclic(3), f);
  const Mat l = left_regular_representation(b.semigroup), r = right_regular_representation(b.semigroup);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(l(i * 3 + x, a), b.semigroup.m(i, a * 3 + x));
        EXPECT_EQ(r(i * 3 + x, a), b.semigroup.m(i, x * 3 + a));
      }
}

TEST(Twisted, SymmetricTwistIsOppositeMultiplication) {
  const FieldSpec f(2);
  const auto ctx = BraidedContext::symmetric(f);
  const auto b = group_algebra_bimonoid(FiniteGroupSpec::symmetric3(), f);
  const Semigroup t = twisted(ctx, b.semigroup);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v)
      for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(t.m(i, u * 6 + v), b.semigroup.m(i, v * 6 + u));
}

// Every single-entry mutant is rejected by the suites.

TEST(MutationSoundness, Z2FunctionBimonoid) {
  const auto b = oracle::z2_function_by_hand();
  const auto sites = all_sites(b);
  EXPECT_EQ(sites.size(), 8u + 16u + 16u + 2u);
  for (const auto& s : sites) {
    const Report r = check_multiplier_bimonoid(mutate(b, s));
    EXPECT_FALSE(r.ok()) << to_string(s.field) << "(" << s.row << "," << s.col << ")";
  }
}

TEST(MutationSoundness, Z2FunctionRegular) {
  const auto b = oracle::z2_function_by_hand();
  const auto reg = regular_extension(b);
  ASSERT_TRUE(reg.has_value());
  for (const auto& s : all_sites(*reg))
    EXPECT_FALSE(check_regular(mutate(*reg, s)).ok()) << to_string(s.field) << "(" << s.row << "," << s.col << ")";
}

TEST(MutationSoundness, Z3FunctionAtP3) {
  const auto b = function_bimonoid(FiniteGroupSpec::cyclic(3), FieldSpec(3));
  for (const auto& s : all_sites(b)) EXPECT_FALSE(check_multiplier_bimonoid(mutate(b, s)).ok());
}
