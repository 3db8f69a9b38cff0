#pragma once

// Big-and-nef classes with a base divisor, and the numerical consequences
// for the K3^[n] and Kum^n families.
//
// Given strict monotonicity of RR on Z>=0 and the strong rational Lagrangian
// fibration conjecture, H has a non-trivial base divisor iff H = mL + F with
// m >= 2, L primitive movable isotropic, F irreducible of negative square,
// (L,F) > 0 and RR(q(H)) = (m+n choose n). F is then the fixed divisor.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkbase/cones.hpp"
#include "hkbase/deformation.hpp"
#include "hkbase/errors.hpp"
#include "hkbase/lattice.hpp"

namespace hkbase {

struct Decomposition {
  Integer m;
  ClassVector L;
  ClassVector F;
  Integer d;  // (L, F)

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.m == b.m && a.L == b.L && a.F == b.F && a.d == b.d;
  }
};

struct Classification {
  Integer q_H;
  Integer rr_value;
  std::optional<Integer> m;  // from binomial inversion, when it exists
  bool monotonic = false;
  bool strong_rlf = false;
  std::optional<Decomposition> decomposition;
};

namespace detail {

inline void require_big_and_nef(const GeometricContext& ctx, const ClassVector& H) {
  const Lattice& lat = ctx.lattice();
  lat.check_member(H);
  const Integer q = square(lat, H);
  if (q <= 0) throw DomainError("H = " + H.str() + " is not big: q(H) = " + q.str() + " <= 0");
  if (pairing(lat, H, ctx.ample()) <= 0)
    throw DomainError("H = " + H.str() + " pairs non-positively with the ample class");
  for (const auto& d : ctx.peds())
    if (pairing(lat, H, d) < 0)
      throw DomainError("H = " + H.str() + " is not nef: (H, D) < 0 for ped " + d.str());
  for (const auto& w : ctx.walls())
    if (pairing(lat, H, w) < 0)
      throw DomainError("H = " + H.str() + " is not nef: (H, W) < 0 for wall " + w.str());
}

}  // namespace detail

// Full classifier report. Throws HypothesisError when strong_rlf is not set
// or RR is not certified strictly monotonic up to q(H), DomainError when H
// is not big and nef, ConsistencyError if two declared peds both decompose H.
inline Classification classify_report(const GeometricContext& ctx, const ClassVector& H) {
  const Lattice& lat = ctx.lattice();
  lat.check_member(H);
  Classification out;
  out.strong_rlf = ctx.strong_rlf();
  if (!ctx.strong_rlf()) {
    throw HypothesisError(
        "refusing to classify: the context does not declare the strong rational Lagrangian "
        "fibration hypothesis (strong_rlf = false)");
  }
  out.q_H = square(lat, H);
  out.monotonic = check_strict_monotonic(ctx.dtype(), out.q_H > 0 ? out.q_H : Integer(0));
  if (!out.monotonic) {
    throw HypothesisError("refusing to classify: RR of " + ctx.dtype().label() +
                          " is not strictly monotonic on [0, " + out.q_H.str() + "]");
  }
  detail::require_big_and_nef(ctx, H);

  const int n = ctx.dtype().n();
  out.rr_value = rr_eval(ctx.dtype(), out.q_H);
  out.m = invert_binomial(out.rr_value, n);
  if (!out.m || *out.m <= 1) return out;
  const Integer& m = *out.m;

  for (const auto& F : ctx.peds()) {
    const ClassVector diff = H - F;
    bool integral = true;
    for (const auto& c : diff) integral = integral && divides(m, c);
    if (!integral || diff.is_zero()) continue;
    std::vector<Integer> lc;
    for (const auto& c : diff) lc.push_back(c / m);
    ClassVector L(std::move(lc));
    if (square(lat, L) != 0 || !is_primitive(lat, L)) continue;
    const Integer d = pairing(lat, L, F);
    if (d <= 0 || !in_bk_closure(ctx, L)) continue;
    if (out.decomposition) {
      throw ConsistencyError("two base divisor decompositions of H = " + H.str() + ": F = " +
                             out.decomposition->F.str() + " and F = " + F.str() +
                             "; the declared peds cannot all be prime exceptional");
    }
    out.decomposition = Decomposition{m, std::move(L), F, d};
  }
  return out;
}

inline std::optional<Decomposition> classify(const GeometricContext& ctx, const ClassVector& H) {
  return classify_report(ctx, H).decomposition;
}

// Re-checks every condition on dec from scratch; never throws.
inline bool verify_decomposition(const GeometricContext& ctx, const ClassVector& H,
                                 const Decomposition& dec) try {
  const Lattice& lat = ctx.lattice();
  if (dec.m < 2) return false;
  if (H != dec.m * dec.L + dec.F) return false;
  if (square(lat, dec.L) != 0 || dec.L.content() != 1) return false;
  const Integer d = pairing(lat, dec.L, dec.F);
  if (d != dec.d || d <= 0) return false;
  const Integer qF = square(lat, dec.F);
  if (qF >= 0 || !ctx.declares_ped(dec.F)) return false;
  const Integer dv = divisibility(lat, dec.F);
  if (-qF > 2 * dv || 2 * dv > 2 * d) return false;
  if (!in_bk_closure(ctx, dec.L)) return false;
  const int n = ctx.dtype().n();
  if (rr_eval(ctx.dtype(), square(lat, H)) != binomial(dec.m + n, n)) return false;
  return square(lat, H) == 2 * dec.m * d + qF;
} catch (const Error&) {
  return false;
}

// A base divisor of H never persists in 2H; false flags inconsistent context data.
inline bool check_2H(const GeometricContext& ctx, const ClassVector& H) {
  if (!classify(ctx, H)) {
    throw DomainError("check_2H needs H = " + H.str() + " to have a base divisor");
  }
  return !classify(ctx, Integer(2) * H).has_value();
}

struct IntRange {
  long lo;
  long hi;
};

struct KumnCandidate {
  long n;
  long m;
  long d;
  long qF;
  friend bool operator==(const KumnCandidate&, const KumnCandidate&) = default;
};

struct KumnSearchReport {
  std::vector<KumnCandidate> solutions;
  long case1_checked = 0;
  long case2_checked = 0;
  // q(H) >= 4(m-1) held at every case-2 point
  bool case2_lower_bound = true;
};

// Looks for (n, m, d, qF) with (n+1)(q(H)/2 + n choose n) = (m+n choose n),
// q(H) = 2md + qF, qF even in [-2d, -2]. Case 1 is d = 1 (forcing qF = -2),
// case 2 is d >= 2. No solution exists, so the list should come back empty.
inline KumnSearchReport kumn_nonexistence_search(IntRange n_range, IntRange m_range,
                                                 IntRange d_range) {
  if (n_range.lo < 2 || m_range.lo < 2 || d_range.lo < 1) {
    throw DomainError("kumn_nonexistence_search needs n >= 2, m >= 2, d >= 1");
  }
  KumnSearchReport rep;
  for (long n = n_range.lo; n <= n_range.hi; ++n) {
    const DeformationType t = make_type(DeformationKind::Kumn, static_cast<int>(n));
    for (long m = m_range.lo; m <= m_range.hi; ++m) {
      const Integer target = binomial(Integer(m + n), static_cast<int>(n));
      for (long d = d_range.lo; d <= d_range.hi; ++d) {
        for (long qF = -2 * d; qF <= -2; qF += 2) {
          const Integer qH = Integer(2 * m * d + qF);
          if (d == 1) {
            ++rep.case1_checked;
          } else {
            ++rep.case2_checked;
            if (qH < 4 * (m - 1)) rep.case2_lower_bound = false;
          }
          if (rr_eval(t, qH) == target) rep.solutions.push_back({n, m, d, qF});
        }
      }
    }
  }
  return rep;
}

// (n+1)(m-1+n choose n) - (m+n choose n) as a polynomial in m. Its only
// root with m >= 1 is m = 1 (case d = 1 of the Kum^n search).
inline RationalPolynomial kumn_case1_difference(int n) {
  if (n < 1) throw DomainError("kumn_case1_difference needs n >= 1");
  RationalPolynomial lhs = RationalPolynomial::constant(Rational(n + 1));
  RationalPolynomial rhs = RationalPolynomial::constant(Rational(1));
  for (int j = 1; j <= n; ++j) {
    lhs = lhs * RationalPolynomial::linear(1, j - 1);
    rhs = rhs * RationalPolynomial::linear(1, j);
  }
  return (lhs - rhs) * RationalPolynomial::constant(Rational(1) / Rational(factorial(n)));
}

struct NumericalNLType {
  Integer m;
  Integer d;
  Integer qF;
  friend bool operator==(const NumericalNLType&, const NumericalNLType&) = default;
};

// Numerical types (m, d, qF) a base divisor of a class with q(H) = qH could
// have: qH = 2md + qF, qF < 0 even, 2d + qF >= 0, m fixed by RR. K3^[n]
// additionally forces d = 1.
inline std::vector<NumericalNLType> nl_numerical_types(const DeformationType& t,
                                                       const Integer& qH) {
  if (qH <= 0 || !is_even(qH)) {
    throw DomainError("nl_numerical_types needs positive even q(H), got " + qH.str());
  }
  std::vector<NumericalNLType> out;
  const auto m = invert_binomial(rr_eval(t, qH), t.n());
  if (!m || *m < 2) return out;
  // 2d + qF >= 0 gives qH >= 2(m-1)d
  const Integer d_max = qH / (2 * (*m - 1));
  for (Integer d = 1; d <= d_max; ++d) {
    if (t.kind() == DeformationKind::K3n && d != 1) break;
    const Integer qF = qH - 2 * (*m) * d;
    if (qF < 0 && is_even(qF) && 2 * d + qF >= 0) out.push_back({*m, d, qF});
  }
  return out;
}

}  // namespace hkbase
