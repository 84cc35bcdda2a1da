#include <gtest/gtest.h>

#include "mbm/mcat.hpp"
#include "support.hpp"

using namespace mbm;

namespace {

const FieldSpec F2(2);

MultiplierBimonoid z2fun() { return oracle::z2_function_by_hand(); }

}  // namespace

TEST(MObjects, Membership) {
  EXPECT_TRUE(check_mobject(z2fun().semigroup).ok());
  EXPECT_TRUE(check_mobject(Semigroup::unit(F2)).ok());
  const Report zero = check_mobject(Semigroup{2, Mat(F2, 2, 4)});
  EXPECT_FALSE(zero.passed("nondegenerate"));
  EXPECT_FALSE(zero.passed("surjective"));
}

TEST(MMorphisms, IdentityAndComposition) {
  const auto b = z2fun();
  const MMorphism id = identity_M(b.semigroup);
  EXPECT_TRUE(check_mmorphism(id).ok());
  EXPECT_EQ(compose_M(id, id), id);
  const auto ex = extract_comonoid(b);
  ASSERT_TRUE(ex.comult.has_value());
  const MMorphism& d = *ex.comult;
  EXPECT_EQ(compose_M(identity_M(d.target), d), d);
  EXPECT_EQ(compose_M(d, id), d);
  EXPECT_THROW(compose_M(d, d), ShapeError);
}

TEST(MMorphisms, Associativity) {
  const auto ex = extract_comonoid(z2fun());
  const MMorphism f = *ex.comult;
  const MMorphism g = tensor_M(*ex.counit, identity_M(f.source));
  ASSERT_EQ(g.target, f.source);
  const MMorphism h = *ex.comult;
  EXPECT_EQ(compose_M(h, compose_M(g, f)), compose_M(compose_M(h, g), f));
  const MMorphism k = tensor_M(identity_M(f.source), *ex.comult);
  EXPECT_EQ(compose_M(k, compose_M(h, compose_M(g, f))), compose_M(compose_M(k, h), compose_M(g, f)));
}

TEST(MMorphisms, BrokenSquareDetected) {
  const auto b = z2fun();
  MMorphism f = identity_M(b.semigroup);
  f.f2 = mutate(b, {StructureField::m, 0, 1}).semigroup.m;
  EXPECT_FALSE(check_mmorphism(f).ok());
  f.f1 = Mat(F2, 2, 4);
  EXPECT_FALSE(check_mmorphism(f).passed("f1-surjective"));
}

TEST(Tensor, IdentitiesAndPointwiseProduct) {
  const auto a = z2fun().semigroup;
  const Semigroup aa = tensor_objects(a, a);
  EXPECT_EQ(tensor_M(identity_M(a), identity_M(a)), identity_M(aa));
  // Pointwise product on the four idempotents of GF(2)^4.
  Mat pointwise(F2, 4, 16);
  for (std::size_t i = 0; i < 4; ++i) pointwise.set(i, i * 4 + i, 1);
  EXPECT_EQ(aa.m, pointwise);
  const auto unit = Semigroup::unit(F2);
  EXPECT_EQ(tensor_objects(unit, a), a);
  EXPECT_EQ(tensor_objects(a, unit), a);
}

TEST(Tensor, ComultiplicationTensorIdentityIsAMorphism) {
  const auto ex = extract_comonoid(z2fun());
  const auto id = identity_M(ex.comult->source);
  EXPECT_TRUE(check_mmorphism(tensor_M(*ex.comult, id)).ok());
  EXPECT_TRUE(check_mmorphism(tensor_M(id, *ex.comult)).ok());
  EXPECT_TRUE(check_mmorphism(tensor_M(*ex.counit, *ex.comult)).ok());
}

TEST(Comonoid, Z2FunctionAlgebraComponents) {
  const auto ex = extract_comonoid(z2fun());
  ASSERT_TRUE(ex.q.ok()) << ex.q.str();
  // d1(a, b, v) = [b = a + v] (b, v)
  const Mat& d1 = ex.comult->f1;
  ASSERT_EQ(d1.rows(), 4u);
  ASSERT_EQ(d1.cols(), 8u);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t row = 0; row < 4; ++row) {
          const bool hit = row == b * 2 + v && b == (a + v) % 2;
          EXPECT_EQ(d1(row, a * 4 + b * 2 + v), hit ? 1u : 0u);
        }
  EXPECT_TRUE(is_surjective(d1));
  EXPECT_TRUE(comonoid_laws(*ex.comult, *ex.counit).ok());
}

TEST(Comonoid, TrivialBimonoid) {
  const Mat one = Mat::identity(F2, 1);
  const auto ex = extract_comonoid({Semigroup::unit(F2), one, one, one});
  ASSERT_TRUE(ex.comult.has_value());
  EXPECT_EQ(ex.comult->f1, one);
  EXPECT_EQ(ex.comult->f2, one);
}

TEST(Comonoid, LawsOnSmallCorpus) {
  for (const auto& entry : oracle::corpus({2, 3})) {
    if (entry.b.dim() > 3) continue;
    const auto ex = extract_comonoid(entry.b);
    ASSERT_TRUE(ex.q.ok()) << entry.name << "\n" << ex.q.str();
    const Report laws = comonoid_laws(*ex.comult, *ex.counit);
    EXPECT_TRUE(laws.ok()) << entry.name << "\n" << laws.str();
  }
}

TEST(Comonoid, QFailureReportedNotThrown) {
  auto b = z2fun();
  b.e = Mat(F2, 1, 2);
  const auto ex = extract_comonoid(b);
  EXPECT_FALSE(ex.q.passed("e-surjective"));
  EXPECT_FALSE(ex.comult.has_value());
}

TEST(QMembership, Levels) {
  const auto b = z2fun();
  const auto map = bimonoid_to_map(b);
  EXPECT_TRUE(q_membership(b.semigroup).ok());
  EXPECT_TRUE(q_membership(map.tau).ok());
  EXPECT_TRUE(q_membership(map.eps).ok());
  for (const char* cell : {"phi", "lambda", "rho", "kappa"}) {
    const auto x = image_boundary(map, named_3cell(cell));
    EXPECT_TRUE(q_membership(x).ok()) << cell;
    EXPECT_TRUE(nerve_3simplex(x).ok()) << cell;
  }
}

TEST(QMembership, ZeroMultiplicationFailsAtLevelOne) {
  const Semigroup zero{2, Mat(F2, 2, 4)};
  const Mat id = Mat::identity(F2, 4);
  const TwoSimplex x{zero, zero, zero, id, id, {}, {}};
  ASSERT_TRUE(validate_2simplex(Target::M12, BraidedContext::symmetric(F2), x).ok());
  const Report r = q_membership(x);
  EXPECT_FALSE(r.passed("d0.nondegenerate"));
  EXPECT_FALSE(q_membership(zero).ok());
}

TEST(Nerve, ImagesOfTauAndEps) {
  const auto b = z2fun();
  const auto map = bimonoid_to_map(b);
  const auto ex = extract_comonoid(b);
  EXPECT_EQ(nerve_map(map.tau), *ex.comult);
  EXPECT_EQ(nerve_map(map.eps), *ex.counit);
}

TEST(Nerve, RespectsFaces) {
  const auto b = z2fun();
  const auto map = bimonoid_to_map(b);
  for (const auto& x : {map.tau, map.eps}) {
    const MMorphism w = nerve_map(x);
    EXPECT_EQ(w.source, x.a02);
    EXPECT_EQ(w.target, tensor_objects(x.a01, x.a12));
  }
}

TEST(Nerve, InjectiveOnAllDimTwoSimplicesAtP2) {
  const auto sweep = oracle::nerve_sweep_gf2();
  EXPECT_GT(sweep.simplices, 8u);
  EXPECT_EQ(sweep.collisions, 0u);
}

TEST(MultiplierMonoid, Z2FunctionAlgebraIsItsOwn) {
  const auto b = z2fun();
  const auto mb = multiplier_monoid(b.semigroup);
  EXPECT_EQ(mb.dim, 2u);
  const Report u = universal_property(mb, identity_M(b.semigroup));
  EXPECT_TRUE(u.ok()) << u.str();
  const auto phi = phi_f(mb, identity_M(b.semigroup));
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(inverse(*phi).has_value());
  // The identity morphism corresponds to the unit: phi(1_B) = unit of M(B).
  EXPECT_EQ(compose(*phi, Mat(F2, {{1}, {1}})), mb.unit);
}

TEST(MultiplierMonoid, GroupAlgebraZ3AtP3) {
  const auto b = group_algebra_bimonoid(FiniteGroupSpec::cyclic(3), FieldSpec(3));
  const auto mb = multiplier_monoid(b.semigroup);
  EXPECT_EQ(mb.dim, 3u);
  EXPECT_TRUE(universal_property(mb, identity_M(b.semigroup)).ok());
}

TEST(MultiplierMonoid, MonoidLaws) {
  for (const auto& entry : oracle::corpus({2, 3})) {
    const auto mb = multiplier_monoid(entry.b.semigroup);
    EXPECT_EQ(mb.dim, entry.b.dim()) << entry.name;
    const FieldSpec f = entry.b.field();
    const Mat one = Mat::identity(f, mb.dim);
    EXPECT_EQ(compose(mb.product, kron(mb.product, one)), compose(mb.product, kron(one, mb.product))) << entry.name;
    EXPECT_EQ(compose(mb.product, kron(mb.unit, one)), one) << entry.name;
    EXPECT_EQ(compose(mb.product, kron(one, mb.unit)), one) << entry.name;
  }
}

TEST(MultiplierMonoid, DegenerateSemigroupHasEverything) {
  const auto mb = multiplier_monoid(Semigroup{2, Mat(F2, 2, 4)});
  EXPECT_EQ(mb.dim, 8u);
}

TEST(MultiplierMonoid, UniversalPropertyForNerveMaps) {
  const auto b = z2fun();
  const auto ex = extract_comonoid(b);
  const auto mb = multiplier_monoid(ex.comult->target);
  EXPECT_EQ(mb.dim, 4u);
  const Report r = universal_property(mb, *ex.comult);
  EXPECT_TRUE(r.ok()) << r.str();
  const auto mi = multiplier_monoid(Semigroup::unit(F2));
  EXPECT_TRUE(universal_property(mi, *ex.counit).ok());
}
