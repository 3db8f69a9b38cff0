#include "hkbase/oracle.hpp"

#include <gtest/gtest.h>

namespace hkbase {
namespace {

ContextData mayer_data() {
  ContextData d;
  d.gram = {{0, 1}, {1, -2}};
  d.even = true;
  d.ample = {3, 1};
  d.peds = {{0, 1}};
  d.strong_rlf = true;
  return d;
}

TEST(OracleTest, MayerHasOneDecomposition) {
  const GeometricContext ctx(mayer_data());
  const auto found = oracle::oracle_classify(ctx, ClassVector{3, 1}, 4);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], (Decomposition{3, ClassVector{1, 0}, ClassVector{0, 1}, 1}));
}

TEST(OracleTest, EmptyWithoutPeds) {
  ContextData d;
  d.gram = {{2}};
  d.even = true;
  d.ample = {1};
  d.strong_rlf = true;
  EXPECT_TRUE(oracle::oracle_classify(GeometricContext(d), ClassVector{1}, 8).empty());
  EXPECT_TRUE(oracle::oracle_classify(GeometricContext(d), ClassVector{3}, 8).empty());
}

TEST(OracleTest, Preconditions) {
  const GeometricContext ctx(mayer_data());
  EXPECT_THROW(oracle::oracle_classify(ctx, ClassVector{1, 0}, 4), DomainError);  // q = 0
  EXPECT_THROW(oracle::oracle_classify(ctx, ClassVector{2, 2}, 4), DomainError);  // not nef
  EXPECT_THROW(oracle::oracle_classify(ctx, ClassVector{3, 1}, 9), CapabilityError);

  ContextData big;
  big.gram = {{0, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}};
  big.even = true;
  big.ample = {4, 1, -1, -1};
  big.strong_rlf = true;
  EXPECT_THROW(oracle::oracle_classify(GeometricContext(big), ClassVector{4, 1, -1, -1}, 2),
               CapabilityError);
}

TEST(OracleTest, RrExamples) {
  EXPECT_EQ(oracle::oracle_rr(make_type(DeformationKind::K3n, 1), 4), 4);
  EXPECT_EQ(oracle::oracle_rr(make_type(DeformationKind::K3n, 2), 2), 6);
  EXPECT_EQ(oracle::oracle_rr(make_type(DeformationKind::Kumn, 2), 2), 9);
  EXPECT_EQ(oracle::oracle_rr(make_type(DeformationKind::K3n, 3), -2), 1);  // (3 choose 3)
  EXPECT_EQ(oracle::oracle_rr(make_type(DeformationKind::K3n, 2), -6), 0);  // (0 choose 2)
  EXPECT_THROW(oracle::oracle_rr(make_type(DeformationKind::K3n, 2), 1), DomainError);
}

TEST(OracleTest, RrAgreesWithExpansion) {
  for (int n = 1; n <= 10; ++n) {
    const auto t = make_type(DeformationKind::K3n, n);
    for (long q = -2 * n; q <= 100; q += 2) EXPECT_EQ(oracle::oracle_rr(t, q), rr_eval(t, q));
  }
  for (int n = 2; n <= 10; ++n) {
    const auto t = make_type(DeformationKind::Kumn, n);
    for (long q = -2 * n; q <= 100; q += 2) EXPECT_EQ(oracle::oracle_rr(t, q), rr_eval(t, q));
  }
  const auto g = make_generic({Rational(3), Rational(-4), Rational(1)});
  for (long q = -10; q <= 10; q += 2) EXPECT_EQ(oracle::oracle_rr(g, q), rr_eval(g, q));
}

}  // namespace
}  // namespace hkbase
