#include "hkbase/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/generators.hpp"

namespace hkbase {
namespace {

const Lattice U = Lattice::hyperbolic_plane();
const ClassVector e{1, 0};
const ClassVector f{0, 1};

TEST(LatticeTest, RejectsMalformedGram) {
  EXPECT_THROW(Lattice(Lattice::Gram{}), StructuralError);
  EXPECT_THROW(Lattice({{0, 1}, {2, 0}}), StructuralError);
  EXPECT_THROW(Lattice({{0, 1}, {1}}), StructuralError);
  EXPECT_THROW(Lattice({{1, 0}, {0, 2}}, /*even=*/true), StructuralError);
  EXPECT_NO_THROW(Lattice({{1, 0}, {0, 2}}));
}

TEST(LatticeTest, StandardBlocks) {
  EXPECT_EQ(U.gram(), (Lattice::Gram{{0, 1}, {1, 0}}));
  EXPECT_TRUE(U.even());
  EXPECT_TRUE(Lattice::diagonal(-4).even());
  EXPECT_FALSE(Lattice::diagonal(3).even());
  const Lattice s = direct_sum(U, Lattice::diagonal(-4));
  EXPECT_EQ(s.gram(), (Lattice::Gram{{0, 1, 0}, {1, 0, 0}, {0, 0, -4}}));
  EXPECT_TRUE(s.even());
  EXPECT_FALSE(direct_sum(U, Lattice::diagonal(1)).even());
}

TEST(LatticeTest, PairingExamples) {
  EXPECT_EQ(pairing(U, e, f), 1);
  EXPECT_EQ(pairing(U, ClassVector{1, 1}, ClassVector{1, 1}), 2);
  EXPECT_EQ(pairing(U, e, e), 0);
  EXPECT_EQ(square(U, ClassVector{3, -5}), -30);
  EXPECT_THROW(pairing(U, e, ClassVector{1, 0, 0}), StructuralError);
}

TEST(LatticeTest, DivisibilityExamples) {
  EXPECT_EQ(divisibility(U, ClassVector{2, 4}), 2);
  EXPECT_EQ(divisibility(U, ClassVector{1, -1}), 1);
  EXPECT_EQ(divisibility(direct_sum(U, Lattice::diagonal(-4)), ClassVector{0, 0, 1}), 4);
  EXPECT_THROW(divisibility(U, ClassVector{0, 0}), DomainError);
  // radical of a degenerate form: zero profile, not an error
  EXPECT_EQ(divisibility(Lattice({{0, 0}, {0, 2}}), ClassVector{1, 0}), 0);
}

TEST(LatticeTest, Primitivity) {
  EXPECT_TRUE(is_primitive(U, e));
  EXPECT_FALSE(is_primitive(U, ClassVector{2, 4}));
  EXPECT_TRUE(is_primitive(U, ClassVector{3, 5}));
  EXPECT_FALSE(is_primitive(U, ClassVector{-3, 0}));
  EXPECT_THROW(is_primitive(U, ClassVector{0, 0}), DomainError);
}

TEST(LatticeTest, EnumerateVectorsExamples) {
  using V = std::vector<ClassVector>;
  EXPECT_EQ(enumerate_vectors(U, 0, 1),
            (V{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(enumerate_vectors(U, -2, 1), (V{{-1, 1}, {1, -1}}));
  EXPECT_EQ(enumerate_vectors(U, 2, 1), (V{{-1, -1}, {1, 1}}));
  EXPECT_THROW(enumerate_vectors(U, 0, 0), DomainError);
  const Lattice big(Lattice::Gram(7, std::vector<Integer>(7, Integer(0))));
  EXPECT_THROW(enumerate_vectors(big, 0, 1), CapabilityError);
}

// Random Gram matrices and vectors; all identities are exact.
TEST(LatticeTest, PairingProperties) {
  testing::Rng rng(20260114);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const bool even = trial % 2 == 0;
    const Lattice lat(testing::transform_gram(testing::random_hyperbolic_blocks(rng, r, even),
                                              testing::random_unimodular(rng, r, 4)),
                      even);
    auto rnd = [&] {
      std::vector<Integer> c;
      for (std::size_t i = 0; i < r; ++i) c.emplace_back(testing::uniform(rng, -9, 9));
      return ClassVector(c);
    };
    const ClassVector a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(pairing(lat, a, b), pairing(lat, b, a));
    EXPECT_EQ(pairing(lat, a + c, b), pairing(lat, a, b) + pairing(lat, c, b));
    if (even) {
      EXPECT_TRUE(is_even(square(lat, a)));
    }
    if (!a.is_zero()) {
      const Integer dv = divisibility(lat, a);
      for (const auto& x : {b, c, ClassVector::basis(r, 0)}) {
        EXPECT_TRUE(divides(dv, pairing(lat, x, a)));
      }
    }
  }
}

TEST(LatticeTest, EnumerationClosedUnderNegation) {
  const Lattice lat({{2, 1, 0}, {1, -2, 1}, {0, 1, -4}}, true);
  for (long target : {-6, -2, 0, 2, 4}) {
    const auto vs = enumerate_vectors(lat, target, 3);
    const std::set<ClassVector> s(vs.begin(), vs.end());
    EXPECT_EQ(s.size(), vs.size());
    EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
    for (const auto& v : vs) {
      EXPECT_EQ(square(lat, v), target);
      EXPECT_TRUE(s.count(-v));
    }
    // exhaustive against an independent count over the whole box
    std::size_t expected = 0;
    for (const auto& v : testing::box_vectors(3, 3)) expected += square(lat, v) == target;
    EXPECT_EQ(vs.size(), expected);
  }
}

}  // namespace
}  // namespace hkbase
