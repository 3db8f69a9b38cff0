#include "hkbase/cones.hpp"

#include <gtest/gtest.h>

#include "support/generators.hpp"

namespace hkbase {
namespace {

ContextData u_data(ClassVector ample, std::vector<ClassVector> peds) {
  ContextData d;
  d.gram = {{0, 1}, {1, 0}};
  d.even = true;
  d.ample = std::move(ample);
  d.peds = std::move(peds);
  d.strong_rlf = true;
  return d;
}

const Lattice U = Lattice::hyperbolic_plane();

TEST(ConesTest, ReflectExamples) {
  const ClassVector d{1, -1};
  EXPECT_EQ(reflect(U, d, ClassVector{0, 1}), (ClassVector{1, 0}));
  EXPECT_EQ(reflect(U, d, d), -d);
  EXPECT_EQ(reflect(U, d, ClassVector{1, 1}), (ClassVector{1, 1}));
  EXPECT_THROW(reflect(U, ClassVector{1, 1}, ClassVector{0, 1}), DomainError);
  // q(1,-2) = -4, 2(d,f)/q = 2/-4
  EXPECT_THROW(reflect(U, ClassVector{1, -2}, ClassVector{0, 1}), IntegralityError);
  EXPECT_EQ(reflect(U, ClassVector{1, -2}, ClassVector{0, 2}), (ClassVector{1, 0}));
}

TEST(ConesTest, ContextReflectRequiresDeclaredRoot) {
  const GeometricContext ctx(u_data({1, 2}, {{1, -1}}));
  EXPECT_EQ(reflect(ctx, ClassVector{1, -1}, ClassVector{0, 1}), (ClassVector{1, 0}));
  EXPECT_THROW(reflect(ctx, ClassVector{-1, 1}, ClassVector{0, 1}), DomainError);
  EXPECT_EQ(reflect(ctx, ClassVector{-1, 1}, ClassVector{0, 1}, RootPolicy::allow_adhoc),
            (ClassVector{1, 0}));
}

TEST(ConesTest, ReflectIntoBkExamples) {
  const GeometricContext ctx(u_data({2, 1}, {{-1, 1}}));
  const auto t = reflect_into_bk(ctx, ClassVector{0, 1});
  EXPECT_EQ(t.result, (ClassVector{1, 0}));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].ped, (ClassVector{-1, 1}));
  EXPECT_EQ(t.steps[0].multiplicity, 1);
  EXPECT_EQ(t.steps[0].h_before, 2);
  EXPECT_EQ(t.steps[0].h_after, 1);
  EXPECT_EQ(t.reconstruct(), (ClassVector{0, 1}));

  const auto t2 = reflect_into_bk(ctx, ClassVector{1, 0});
  EXPECT_EQ(t2.result, (ClassVector{1, 0}));
  EXPECT_TRUE(t2.steps.empty());

  const GeometricContext sym(u_data({1, 2}, {{1, -1}}));
  const auto t3 = reflect_into_bk(sym, ClassVector{1, 0});
  EXPECT_EQ(t3.result, (ClassVector{0, 1}));
  ASSERT_EQ(t3.steps.size(), 1u);
  EXPECT_EQ(t3.steps[0].multiplicity, 1);
}

TEST(ConesTest, ReflectIntoBkPreconditions) {
  const GeometricContext ctx(u_data({2, 1}, {{-1, 1}}));
  EXPECT_THROW(reflect_into_bk(ctx, ClassVector{0, 0}), DomainError);
  EXPECT_THROW(reflect_into_bk(ctx, ClassVector{1, -1}), DomainError);   // q < 0
  EXPECT_THROW(reflect_into_bk(ctx, ClassVector{-1, 0}), DomainError);   // wrong side
  EXPECT_THROW(reflect_into_bk(ctx, ClassVector{1, 0, 0}), StructuralError);
}

// Several steps: U + <-2> with two roots, starting far from the chamber.
TEST(ConesTest, ReflectIntoBkMultiStep) {
  ContextData d;
  d.gram = {{0, 1, 0}, {1, 0, 0}, {0, 0, -2}};
  d.even = true;
  d.ample = {3, 2, -1};
  d.peds = {{0, 0, 1}, {-1, 1, 0}};
  d.strong_rlf = true;
  const GeometricContext ctx(d);
  const ClassVector alpha{4, 5, 3};  // q = 22, (alpha, h) = 29
  const auto t = reflect_into_bk(ctx, alpha);
  EXPECT_GE(t.steps.size(), 2u);
  EXPECT_EQ(t.reconstruct(), alpha);
  EXPECT_TRUE(in_bk_closure(ctx, t.result));
  EXPECT_EQ(square(ctx.lattice(), t.result), square(ctx.lattice(), alpha));
}

TEST(ConesTest, PositiveConeExamples) {
  const GeometricContext ctx(u_data({1, 1}, {}));
  EXPECT_TRUE(in_positive_cone(ctx, ClassVector{1, 1}, Closure::open));
  EXPECT_FALSE(in_positive_cone(ctx, ClassVector{1, 0}, Closure::open));
  EXPECT_TRUE(in_positive_cone(ctx, ClassVector{1, 0}, Closure::closed));
  EXPECT_FALSE(in_positive_cone(ctx, ClassVector{1, -1}, Closure::open));
  EXPECT_FALSE(in_positive_cone(ctx, ClassVector{1, -1}, Closure::closed));
  EXPECT_TRUE(in_positive_cone(ctx, ClassVector{0, 0}, Closure::closed));
  EXPECT_FALSE(in_positive_cone(ctx, ClassVector{-1, -1}, Closure::open));
}

TEST(ConesTest, BkClosureExamples) {
  const GeometricContext ctx(u_data({2, 1}, {{-1, 1}}));
  EXPECT_TRUE(in_bk_closure(ctx, ClassVector{1, 0}));
  EXPECT_FALSE(in_bk_closure(ctx, ClassVector{0, 1}));
  EXPECT_TRUE(in_bk_closure(ctx, ClassVector{1, 1}));
}

TEST(ConesTest, WallStrictMode) {
  auto d = u_data({2, 1}, {});
  d.walls = {{-1, 1}};
  const GeometricContext ctx(d);
  EXPECT_TRUE(in_bk_closure(ctx, ClassVector{0, 1}));
  EXPECT_FALSE(in_bk_closure(ctx, ClassVector{0, 1}, WallMode::strict));
  EXPECT_TRUE(in_bk_closure(ctx, ClassVector{1, 0}, WallMode::strict));
}

TEST(ConesTest, PedInequalityExamples) {
  EXPECT_TRUE(ped_inequality_check(U, ClassVector{1, -1}));
  EXPECT_FALSE(ped_inequality_check(U, ClassVector{1, -2}));
  EXPECT_TRUE(ped_inequality_check(direct_sum(U, Lattice::diagonal(-4)), ClassVector{0, 0, 1}));
  EXPECT_THROW(ped_inequality_check(U, ClassVector{1, 1}), DomainError);
}

TEST(ConesTest, Rank2ScanExamples) {
  const std::vector<ClassVector> expected{{-1, 1}, {1, -1}};
  EXPECT_EQ(rank2_exceptional_scan(1), expected);
  EXPECT_EQ(rank2_exceptional_scan(10), expected);
  EXPECT_EQ(rank2_exceptional_scan(50), expected);
  EXPECT_THROW(rank2_exceptional_scan(0), DomainError);
}

// The scan's inequality is the ped inequality of U in disguise.
TEST(ConesTest, Rank2ScanMatchesPedCheck) {
  std::vector<ClassVector> by_check;
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      const ClassVector v{a, b};
      if (v.is_zero() || square(U, v) >= 0) continue;
      if (ped_inequality_check(U, v)) by_check.push_back(v);
    }
  EXPECT_EQ(by_check, rank2_exceptional_scan(12));
}

TEST(ConesTest, ValidationReportsEveryItem) {
  auto d = u_data({1, 3}, {{1, -2}, {1, -1}});
  const auto rep = validate_context(d);
  EXPECT_FALSE(rep.ok());
  const auto* f = rep.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->subject, "ped [1,-2]");
  EXPECT_EQ(f->check, kPedInequality);
  EXPECT_NE(f->detail.find("violated by declared ped [1,-2]"), std::string::npos);
  EXPECT_THROW(GeometricContext{d}, DomainError);

  // the second ped [1,-1] has (h, D) = 2 and passes every check
  int ped2_failures = 0;
  for (const auto& i : rep.items) ped2_failures += i.subject == "ped [1,-1]" && !i.passed;
  EXPECT_EQ(ped2_failures, 0);
}

TEST(ConesTest, ValidationRejections) {
  {
    auto d = u_data({1, 1}, {});
    d.gram = {{0, 1}, {2, 0}};
    EXPECT_FALSE(validate_context(d).ok());
    EXPECT_THROW(GeometricContext{d}, StructuralError);
  }
  {
    auto d = u_data({1, 0}, {});  // q(h) = 0
    EXPECT_THROW(GeometricContext{d}, DomainError);
  }
  {
    auto d = u_data({2, 1}, {{1, -1}});  // (h, D) = -1
    EXPECT_THROW(GeometricContext{d}, DomainError);
  }
  {
    auto d = u_data({2, 1}, {{-2, 2}});  // not primitive
    EXPECT_THROW(GeometricContext{d}, DomainError);
  }
  {
    auto d = u_data({2, 1}, {{1, 1}});  // q(D) > 0
    EXPECT_THROW(GeometricContext{d}, DomainError);
  }
  {
    auto d = u_data({2, 1}, {{1, 1, 0}});
    EXPECT_THROW(GeometricContext{d}, StructuralError);
  }
  {
    auto d = u_data({2, 1}, {});
    d.gram = {{1, 0}, {0, -1}};  // odd lattice with a K3n type
    d.even = false;
    EXPECT_THROW(GeometricContext{d}, DomainError);
    d.dtype = make_generic({Rational(1), Rational(1)}, true);
    EXPECT_NO_THROW(GeometricContext{d});
  }
}

TEST(ConesTest, K3MinusTwoGenerator) {
  const Lattice mayer({{0, 1}, {1, -2}}, true);
  const auto classes = k3_minus_two_classes(mayer, ClassVector{3, 1}, 3);
  ASSERT_FALSE(classes.empty());
  for (const auto& c : classes) {
    EXPECT_EQ(square(mayer, c), -2);
    EXPECT_GT(pairing(mayer, c, ClassVector{3, 1}), 0);
    EXPECT_TRUE(ped_inequality_check(mayer, c));
  }
  EXPECT_NE(std::find(classes.begin(), classes.end(), ClassVector{0, 1}), classes.end());
}

// q-preservation, involution, fixed orthogonal vectors over random data.
TEST(ConesTest, ReflectionProperties) {
  testing::Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto data = testing::random_context(rng, r, trial % 3 != 0, DeformationType{}, 4);
    if (!data) continue;
    ContextData cd = *data;
    if (trial % 3 == 0) cd.dtype = make_generic({Rational(1), Rational(1)}, true);
    const GeometricContext ctx(cd);
    const Lattice& lat = ctx.lattice();
    for (const auto& d : ctx.peds()) {
      for (const auto& a : testing::box_vectors(r, 1)) {
        const ClassVector ra = reflect(ctx, d, a);
        EXPECT_EQ(square(lat, ra), square(lat, a));
        EXPECT_EQ(reflect(ctx, d, ra), a);
        if (pairing(lat, d, a) == 0) {
          EXPECT_EQ(ra, a);
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace hkbase
