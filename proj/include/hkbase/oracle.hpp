#pragma once

// Brute-force reference implementations for tests.
//
// Nothing here calls into the deformation, cones or base_divisor modules;
// the only shared primitive is the lattice pairing. Slow by construction.

#include <string>
#include <vector>

#include "hkbase/base_divisor.hpp"
#include "hkbase/cones.hpp"
#include "hkbase/errors.hpp"
#include "hkbase/lattice.hpp"

namespace hkbase::oracle {

namespace detail {

inline Integer gcd_abs(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// (top choose k) from an explicit numerator product; exact division.
inline Integer product_binomial(const Integer& top, int k) {
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  if (num % den != 0) throw ConsistencyError("oracle binomial: inexact division");
  return num / den;
}

}  // namespace detail

// RR straight from the closed forms, without the expanded polynomial.
// Generic types are summed term by term from their coefficients.
inline Integer oracle_rr(const DeformationType& t, const Integer& q) {
  if (q % 2 != 0 && !t.allows_odd()) throw DomainError("oracle_rr needs even q");
  const int n = t.n();
  switch (t.kind()) {
    case DeformationKind::K3n:
      return detail::product_binomial(q / 2 + n + 1, n);
    case DeformationKind::Kumn:
      return (n + 1) * detail::product_binomial(q / 2 + n, n);
    case DeformationKind::Generic: {
      Rational s = 0;
      Rational power = 1;
      for (const auto& b : t.rr().coeffs()) {
        s += b * power;
        power *= Rational(q);
      }
      if (boost::multiprecision::denominator(s) != 1)
        throw ConsistencyError("oracle_rr: non-integral value");
      return boost::multiprecision::numerator(s);
    }
  }
  throw DomainError("oracle_rr: unknown kind");
}

inline std::vector<ClassVector> box(std::size_t rank, long bound) {
  std::vector<ClassVector> out{ClassVector{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<ClassVector> next;
    for (const auto& prefix : out) {
      for (long c = -bound; c <= bound; ++c) {
        std::vector<Integer> coords = prefix.coords();
        coords.emplace_back(c);
        next.emplace_back(std::move(coords));
      }
    }
    out = std::move(next);
  }
  return out;
}

// All (m, L, F) with 2 <= m <= (H, h), F a declared ped, L in the box,
// satisfying every condition of the base divisor characterisation.
inline std::vector<Decomposition> oracle_classify(const GeometricContext& ctx,
                                                  const ClassVector& H, long coeff_bound) {
  const Lattice& lat = ctx.lattice();
  if (lat.rank() > 3 || coeff_bound > 8) {
    throw CapabilityError("oracle_classify supports rank <= 3 and coefficient bound <= 8");
  }
  if (H.size() != lat.rank()) throw StructuralError("oracle_classify: length mismatch");
  const Integer qH = pairing(lat, H, H);
  const Integer Hh = pairing(lat, H, ctx.ample());
  if (qH <= 0 || Hh <= 0) throw DomainError("oracle_classify: H is not big");
  for (const auto& D : ctx.peds())
    if (pairing(lat, H, D) < 0) throw DomainError("oracle_classify: H is not nef");
  for (const auto& W : ctx.walls())
    if (pairing(lat, H, W) < 0) throw DomainError("oracle_classify: H is not nef");

  const int n = ctx.dtype().n();
  const Integer chi = oracle_rr(ctx.dtype(), qH);
  const auto candidates = box(lat.rank(), coeff_bound);

  std::vector<Decomposition> out;
  for (Integer m = 2; m <= Hh; ++m) {
    if (chi != detail::product_binomial(m + n, n)) continue;
    for (const auto& L : candidates) {
      Integer g = 0;
      for (const auto& c : L) g = detail::gcd_abs(g, c);
      if (g != 1) continue;
      if (pairing(lat, L, L) != 0) continue;
      // movable: closed positive cone and nonnegative on every declared ped
      if (pairing(lat, L, ctx.ample()) <= 0) continue;
      bool movable = true;
      for (const auto& D : ctx.peds()) movable = movable && pairing(lat, L, D) >= 0;
      if (!movable) continue;
      for (const auto& F : ctx.peds()) {
        if (pairing(lat, F, F) >= 0) continue;
        bool equal = true;
        for (std::size_t i = 0; i < lat.rank(); ++i) equal = equal && H[i] == m * L[i] + F[i];
        if (!equal) continue;
        const Integer d = pairing(lat, L, F);
        if (d <= 0) continue;
        out.push_back(Decomposition{m, L, F, d});
      }
    }
  }
  return out;
}

}  // namespace hkbase::oracle
