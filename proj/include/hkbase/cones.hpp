#pragma once

// Geometric contexts, prime-exceptional reflections and cone membership.
//
// The set of prime exceptional (uniruled) divisor classes is declared input:
// it cannot be derived from a Gram matrix alone. All cone predicates are
// therefore relative to the declared set, and only as complete as it is.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "hkbase/deformation.hpp"
#include "hkbase/errors.hpp"
#include "hkbase/lattice.hpp"

namespace hkbase {

// Raw, unvalidated context as read from a file or assembled by a caller.
struct ContextData {
  Lattice::Gram gram;
  bool even = false;
  ClassVector ample;
  std::vector<ClassVector> peds;
  std::vector<ClassVector> walls;
  DeformationType dtype;
  bool strong_rlf = false;
  // Which lattice the Gram matrix models (full H^2 or a Picard sublattice).
  // div(D) computed in a sublattice can exceed the value in H^2.
  std::string note;
};

struct ValidationItem {
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
  }
  const ValidationItem* first_failure() const {
    for (const auto& i : items)
      if (!i.passed) return &i;
    return nullptr;
  }
};

inline constexpr const char* kPedInequality =
    "prime exceptional divisor inequality q(D) | 2 div(D)";

// q(d) | 2 div(d). A false result means d cannot be the class of a prime
// exceptional divisor in this lattice.
inline bool ped_inequality_check(const Lattice& lat, const ClassVector& d) {
  const Integer qd = square(lat, d);
  if (qd >= 0) throw DomainError("ped_inequality_check needs q(d) < 0, got " + qd.str());
  return divides(qd, 2 * divisibility(lat, d));
}

// Runs every context invariant and records each outcome; never throws.
inline ValidationReport validate_context(const ContextData& data) {
  ValidationReport rep;
  auto add = [&rep](std::string check, std::string subject, bool ok, std::string detail = {}) {
    rep.items.push_back({std::move(check), std::move(subject), ok, std::move(detail)});
    return ok;
  };

  const std::size_t r = data.gram.size();
  bool square_ok = r > 0;
  for (const auto& row : data.gram) square_ok = square_ok && row.size() == r;
  if (!add("gram square", "lattice", square_ok,
           square_ok ? "" : "Gram matrix must be a non-empty square matrix")) {
    return rep;
  }
  bool symmetric = true;
  std::string asym;
  for (std::size_t i = 0; i < r && symmetric; ++i)
    for (std::size_t j = i + 1; j < r && symmetric; ++j)
      if (data.gram[i][j] != data.gram[j][i]) {
        symmetric = false;
        asym = "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
               std::to_string(j) + "," + std::to_string(i) + ") differ";
      }
  add("gram symmetric", "lattice", symmetric, asym);

  bool even_diag = true;
  for (std::size_t i = 0; i < r; ++i) even_diag = even_diag && is_even(data.gram[i][i]);
  if (data.even) {
    add("even flag", "lattice", even_diag,
        even_diag ? "" : "lattice flagged even but a diagonal entry is odd");
  }
  if (data.dtype.registered()) {
    add("even form for " + data.dtype.label(), "lattice", even_diag,
        even_diag ? "" : "registered deformation types need an even lattice (q(L) even)");
  }
  if (!symmetric) return rep;

  const Lattice lat(data.gram, data.even && even_diag);
  const std::string ample_name = "ample " + data.ample.str();
  if (!add("length", ample_name, data.ample.size() == r,
           data.ample.size() == r ? "" : "length differs from lattice rank")) {
    return rep;
  }
  const Integer qh = square(lat, data.ample);
  add("q(h) > 0", ample_name, qh > 0, "q(h) = " + qh.str());

  for (const auto& d : data.peds) {
    const std::string name = "ped " + d.str();
    if (!add("length", name, d.size() == r, d.size() == r ? "" : "length differs from lattice rank"))
      continue;
    if (!add("nonzero", name, !d.is_zero())) continue;
    const Integer qd = square(lat, d);
    if (!add("q(D) < 0", name, qd < 0, "q(D) = " + qd.str())) continue;
    add("primitive", name, d.content() == 1, "content " + d.content().str());
    const Integer dv = divisibility(lat, d);
    const bool ineq = divides(qd, 2 * dv);
    add(kPedInequality, name, ineq,
        "q(D) = " + qd.str() + ", div(D) = " + dv.str() +
            (ineq ? "" : "; " + std::string(kPedInequality) + " violated by declared ped " + d.str()));
    const Integer hd = pairing(lat, data.ample, d);
    add("(h, D) > 0", name, hd > 0, "(h, D) = " + hd.str());
  }
  for (const auto& w : data.walls) {
    const std::string name = "wall " + w.str();
    if (!add("length", name, w.size() == r, w.size() == r ? "" : "length differs from lattice rank"))
      continue;
    add("nonzero", name, !w.is_zero());
  }
  return rep;
}

class GeometricContext {
 public:
  // Validates and throws DomainError naming the first failing check
  // (StructuralError for shape problems).
  explicit GeometricContext(ContextData data)
      : data_(std::move(data)), lat_(checked_lattice(data_)) {}

  const Lattice& lattice() const { return lat_; }
  const ClassVector& ample() const { return data_.ample; }
  const std::vector<ClassVector>& peds() const { return data_.peds; }
  const std::vector<ClassVector>& walls() const { return data_.walls; }
  const DeformationType& dtype() const { return data_.dtype; }
  bool strong_rlf() const { return data_.strong_rlf; }
  const std::string& note() const { return data_.note; }
  const ContextData& data() const { return data_; }

  bool declares_ped(const ClassVector& d) const {
    return std::find(data_.peds.begin(), data_.peds.end(), d) != data_.peds.end();
  }

 private:
  static Lattice checked_lattice(const ContextData& data) {
    const ValidationReport rep = validate_context(data);
    if (const auto* f = rep.first_failure()) {
      std::string msg = "invalid context: " + f->subject + ": " + f->check;
      if (!f->detail.empty()) msg += " (" + f->detail + ")";
      if (f->check == "gram square" || f->check == "gram symmetric" || f->check == "length") {
        throw StructuralError(msg);
      }
      throw DomainError(msg);
    }
    const std::size_t r = data.gram.size();
    bool even_diag = true;
    for (std::size_t i = 0; i < r; ++i) even_diag = even_diag && is_even(data.gram[i][i]);
    return Lattice(data.gram, data.even && even_diag);
  }

  ContextData data_;
  Lattice lat_;
};

// R_D(a) = a - (2(D,a)/q(D)) D, with the scalar required to be integral.
inline ClassVector reflect(const Lattice& lat, const ClassVector& root, const ClassVector& alpha) {
  const Integer qd = square(lat, root);
  if (qd >= 0) throw DomainError("reflection root " + root.str() + " has q = " + qd.str() + " >= 0");
  const Integer twice = 2 * pairing(lat, root, alpha);
  if (!divides(qd, twice)) {
    throw IntegralityError("reflection in " + root.str() + " is not integral on " + alpha.str() +
                           ": 2(D,a)/q(D) = " + twice.str() + "/" + qd.str() +
                           "; not a prime exceptional class of this lattice");
  }
  return alpha - Integer(twice / qd) * root;
}

enum class RootPolicy { declared_only, allow_adhoc };

inline ClassVector reflect(const GeometricContext& ctx, const ClassVector& root,
                           const ClassVector& alpha, RootPolicy policy = RootPolicy::declared_only) {
  if (policy == RootPolicy::declared_only && !ctx.declares_ped(root)) {
    throw DomainError("reflection root " + root.str() + " is not a declared ped of the context");
  }
  return reflect(ctx.lattice(), root, alpha);
}

struct ReflectionStep {
  ClassVector ped;
  Integer multiplicity;  // a_i = 2(D_i, a_i)/q(D_i) > 0
  Integer h_before;      // (a_i, h)
  Integer h_after;       // (a_{i+1}, h)
};

struct ReflectionTrace {
  ClassVector original;
  ClassVector result;
  std::vector<ReflectionStep> steps;

  // original = result + sum a_i D_i
  ClassVector reconstruct() const {
    ClassVector acc = result;
    for (const auto& s : steps) acc = acc + s.multiplicity * s.ped;
    return acc;
  }
};

enum class Closure { open, closed };

inline bool in_positive_cone(const GeometricContext& ctx, const ClassVector& alpha,
                             Closure closure) {
  const Lattice& lat = ctx.lattice();
  lat.check_member(alpha);
  if (closure == Closure::closed && alpha.is_zero()) return true;
  const Integer q = square(lat, alpha);
  const Integer h = pairing(lat, alpha, ctx.ample());
  if (h <= 0) return false;
  return closure == Closure::open ? q > 0 : q >= 0;
}

// Walls are ignored by default: the closure of the birational Kahler cone is
// cut out by uniruled divisors only. WallMode::strict additionally demands
// (a, W) >= 0 for declared walls, for callers modelling a Kahler chamber.
enum class WallMode { ignore, strict };

inline bool in_bk_closure(const GeometricContext& ctx, const ClassVector& alpha,
                          WallMode walls = WallMode::ignore) {
  if (!in_positive_cone(ctx, alpha, Closure::closed)) return false;
  const Lattice& lat = ctx.lattice();
  for (const auto& d : ctx.peds())
    if (pairing(lat, alpha, d) < 0) return false;
  if (walls == WallMode::strict) {
    for (const auto& w : ctx.walls())
      if (pairing(lat, alpha, w) < 0) return false;
  }
  return true;
}

// Reflects alpha in the first declared ped it pairs negatively with until no
// such ped remains. (a_i, h) is a strictly decreasing sequence of positive
// integers, so at most (alpha, h) reflections happen.
inline ReflectionTrace reflect_into_bk(const GeometricContext& ctx, const ClassVector& alpha) {
  const Lattice& lat = ctx.lattice();
  lat.check_member(alpha);
  if (alpha.is_zero()) throw DomainError("reflect_into_bk needs a nonzero class");
  if (square(lat, alpha) < 0) {
    throw DomainError("reflect_into_bk needs q(alpha) >= 0, got " + square(lat, alpha).str());
  }
  const Integer h0 = pairing(lat, alpha, ctx.ample());
  if (h0 <= 0) throw DomainError("reflect_into_bk needs (alpha, h) > 0, got " + h0.str());

  ReflectionTrace trace{alpha, alpha, {}};
  Integer h_cur = h0;
  while (true) {
    const ClassVector* violated = nullptr;
    for (const auto& d : ctx.peds()) {
      if (pairing(lat, trace.result, d) < 0) {
        violated = &d;
        break;
      }
    }
    if (!violated) break;
    if (Integer(trace.steps.size()) >= h0) {
      throw ConsistencyError("reflect_into_bk exceeded (alpha, h) = " + h0.str() + " steps");
    }
    const Integer a = 2 * pairing(lat, *violated, trace.result) / square(lat, *violated);
    ClassVector next = reflect(lat, *violated, trace.result);
    const Integer h_next = pairing(lat, next, ctx.ample());
    if (a <= 0 || h_next <= 0 || h_next >= h_cur) {
      throw ConsistencyError("descent invariant broken at step " +
                             std::to_string(trace.steps.size()) + ": (a_i, h) " + h_cur.str() +
                             " -> " + h_next.str());
    }
    trace.steps.push_back({*violated, a, h_cur, h_next});
    trace.result = std::move(next);
    h_cur = h_next;
  }
  return trace;
}

// Classes (a, b) = aE + bF of U with |a|, |b| <= bound, 2ab < 0 and
// |ab| <= gcd(|a|, |b|), i.e. the only possible prime exceptional classes
// of a U-lattice. Lexicographic order.
inline std::vector<ClassVector> rank2_exceptional_scan(long bound) {
  if (bound < 1) throw DomainError("rank2_exceptional_scan needs bound >= 1");
  std::vector<ClassVector> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const long long ab = static_cast<long long>(a) * b;
      if (ab >= 0) continue;
      long long x = std::llabs(a), y = std::llabs(b);
      while (y) {
        const long long t = x % y;
        x = y;
        y = t;
      }
      if (-ab <= x) out.push_back(ClassVector{Integer(a), Integer(b)});
    }
  }
  return out;
}

// Every square -2 class in the coefficient box pairing positively with the
// ample class. On a K3 surface these are exactly the effective -2 classes;
// for higher n no such generator exists and peds must be declared.
inline std::vector<ClassVector> k3_minus_two_classes(const Lattice& lat, const ClassVector& ample,
                                                     long coeff_bound) {
  std::vector<ClassVector> out;
  for (auto& v : enumerate_vectors(lat, Integer(-2), coeff_bound)) {
    if (pairing(lat, v, ample) > 0) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hkbase
