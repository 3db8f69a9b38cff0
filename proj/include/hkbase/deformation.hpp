#pragma once

// Deformation types and their Riemann-Roch polynomials chi(L) = RR(q(L)).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkbase/errors.hpp"
#include "hkbase/integer.hpp"

namespace hkbase {

// Dense univariate polynomial over Q, coeffs_[i] multiplies x^i. Trailing
// zeros are stripped so degree() is exact; the zero polynomial has degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  // a*x + b
  static RationalPolynomial linear(const Rational& a, const Rational& b) {
    return RationalPolynomial({b, a});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + b * RationalPolynomial::constant(-1);
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(c));
  }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += " + ";
      s += "(" + to_string(coeffs_[i]) + ")";
      if (i) s += "*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

enum class DeformationKind { K3n, Kumn, Generic };

inline std::string kind_name(DeformationKind k) {
  switch (k) {
    case DeformationKind::K3n: return "K3n";
    case DeformationKind::Kumn: return "Kumn";
    case DeformationKind::Generic: return "Generic";
  }
  return "?";
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Generalized binomial (top choose k) = top(top-1)...(top-k+1)/k!, defined
// for every integer top, including negative ones.
inline Integer binomial(const Integer& top, int k) {
  if (k < 0) return 0;
  Integer num = 1;
  for (int i = 0; i < k; ++i) num *= top - i;
  return num / factorial(k);
}

class DeformationType {
 public:
  // A K3 surface, the n = 1 member of the K3^[n] family.
  DeformationType() : DeformationType(DeformationKind::K3n, 1, k3n_polynomial(1), false) {}

  DeformationKind kind() const { return kind_; }
  int n() const { return n_; }
  const RationalPolynomial& rr() const { return rr_; }
  const std::optional<Rational>& fujiki() const { return fujiki_; }
  // Only Generic types may be evaluated at odd q.
  bool allows_odd() const { return allow_odd_; }
  bool registered() const { return kind_ != DeformationKind::Generic; }

  std::string label() const {
    return kind_ == DeformationKind::Generic ? "Generic(n=" + std::to_string(n_) + ")"
                                             : kind_name(kind_) + "(n=" + std::to_string(n_) + ")";
  }

  friend DeformationType make_type(DeformationKind kind, int n);
  friend DeformationType make_generic(std::vector<Rational> coeffs, bool allow_odd,
                                      std::optional<Rational> fujiki);

  // (q/2 + n + 1)(q/2 + n)...(q/2 + 2) / n!
  static RationalPolynomial k3n_polynomial(int n) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (int j = 2; j <= n + 1; ++j) p = p * RationalPolynomial::linear(Rational(1, 2), j);
    return p * RationalPolynomial::constant(Rational(1) / Rational(factorial(n)));
  }
  // (n + 1)(q/2 + n)(q/2 + n - 1)...(q/2 + 1) / n!
  static RationalPolynomial kumn_polynomial(int n) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(n + 1));
    for (int j = 1; j <= n; ++j) p = p * RationalPolynomial::linear(Rational(1, 2), j);
    return p * RationalPolynomial::constant(Rational(1) / Rational(factorial(n)));
  }

 private:
  DeformationType(DeformationKind kind, int n, RationalPolynomial rr, bool allow_odd,
                  std::optional<Rational> fujiki = std::nullopt)
      : kind_(kind), n_(n), rr_(std::move(rr)), fujiki_(std::move(fujiki)), allow_odd_(allow_odd) {
    if (rr_.degree() != n_) throw DomainError("RR polynomial must have degree exactly n");
    if (rr_.leading() <= 0) throw DomainError("RR polynomial must have positive leading coefficient");
    if (!fujiki_ && kind_ != DeformationKind::Generic) {
      // integral of a^{2n} = (2n)! b_n q(a)^n
      fujiki_ = Rational(factorial(2 * n_)) * rr_.leading();
    }
  }

  DeformationKind kind_;
  int n_;
  RationalPolynomial rr_;
  std::optional<Rational> fujiki_;
  bool allow_odd_;
};

inline DeformationType make_type(DeformationKind kind, int n) {
  switch (kind) {
    case DeformationKind::K3n:
      if (n < 1) throw DomainError("K3^[n]-type requires n >= 1");
      return DeformationType(kind, n, DeformationType::k3n_polynomial(n), false);
    case DeformationKind::Kumn:
      // At n = 1 this formula is not the K3 surface one; such types are refused.
      if (n < 2) throw DomainError("Kum^n-type requires n >= 2");
      return DeformationType(kind, n, DeformationType::kumn_polynomial(n), false);
    case DeformationKind::Generic:
      throw DomainError("Generic deformation types need explicit coefficients (make_generic)");
  }
  throw DomainError("unknown deformation kind");
}

// coeffs = b_0..b_n; n is coeffs.size() - 1 and must be >= 1.
inline DeformationType make_generic(std::vector<Rational> coeffs, bool allow_odd = false,
                                    std::optional<Rational> fujiki = std::nullopt) {
  if (coeffs.size() < 2) throw DomainError("Generic RR polynomial needs degree n >= 1");
  if (coeffs.back() <= 0) throw DomainError("Generic RR polynomial needs b_n > 0");
  if (fujiki && *fujiki <= 0) throw DomainError("Fujiki constant must be positive");
  const int n = static_cast<int>(coeffs.size()) - 1;
  return DeformationType(DeformationKind::Generic, n, RationalPolynomial(std::move(coeffs)),
                         allow_odd, std::move(fujiki));
}

inline Integer rr_eval(const DeformationType& t, const Integer& q) {
  if (!is_even(q) && !t.allows_odd()) {
    throw DomainError("rr_eval at odd q = " + q.str() + " for " + t.label() +
                      " (even lattice convention)");
  }
  const Rational v = t.rr()(Rational(q));
  if (boost::multiprecision::denominator(v) != 1) {
    throw ConsistencyError("RR(" + q.str() + ") = " + to_string(v) + " is not an integer for " +
                           t.label());
  }
  return boost::multiprecision::numerator(v);
}

// Strict increase of RR along {0, s, 2s, ..., <= q_max}, step s = 2 (or 1 for
// types that allow odd q). A polynomial with b_n > 0 and all b_i >= 0 is
// strictly increasing on [0, inf), which settles the question without a scan.
inline bool check_strict_monotonic(const DeformationType& t, const Integer& q_max) {
  if (q_max < 0) throw DomainError("check_strict_monotonic needs q_max >= 0");
  const auto& c = t.rr().coeffs();
  if (std::all_of(c.begin(), c.end(), [](const Rational& b) { return b >= 0; })) return true;

  const int step = t.allows_odd() ? 1 : 2;
  Rational prev = t.rr()(Rational(0));
  for (Integer q = step; q <= q_max; q += step) {
    Rational cur = t.rr()(Rational(q));
    if (cur <= prev) return false;
    prev = std::move(cur);
  }
  return true;
}

// The unique m >= 1 with (m+n choose n) = value, if any.
inline std::optional<Integer> invert_binomial(const Integer& value, int n) {
  if (n < 1) throw DomainError("invert_binomial needs n >= 1");
  if (value < n + 1) return std::nullopt;
  Integer lo = 1;
  Integer hi = 1;
  while (binomial(hi + n, n) < value) hi *= 2;
  // binomial(lo + n) <= value <= binomial(hi + n), strictly increasing in m
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (binomial(mid + n, n) < value) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (binomial(lo + n, n) == value) return lo;
  return std::nullopt;
}

}  // namespace hkbase
