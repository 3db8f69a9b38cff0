#pragma once

// Integral symmetric bilinear forms and the class vectors that live in them.
//
// A Lattice is a Gram matrix in a fixed basis; a ClassVector is a coordinate
// vector in that basis. Everything is exact: entries are arbitrary-precision
// integers and no operation here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hkbase/errors.hpp"
#include "hkbase/integer.hpp"

namespace hkbase {

class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  ClassVector(std::initializer_list<Integer> coords) : coords_(coords) {}

  static ClassVector zero(std::size_t rank) {
    return ClassVector(std::vector<Integer>(rank, Integer(0)));
  }
  static ClassVector basis(std::size_t rank, std::size_t i) {
    ClassVector v = zero(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }

  // gcd of the coordinates; 0 for the zero vector.
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd_of(g, c);
    return g;
  }

  ClassVector operator-() const {
    ClassVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend ClassVector operator+(const ClassVector& a, const ClassVector& b) {
    check_same_size(a, b);
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend ClassVector operator-(const ClassVector& a, const ClassVector& b) {
    check_same_size(a, b);
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
  }
  friend ClassVector operator*(const Integer& k, const ClassVector& a) {
    ClassVector r = a;
    for (auto& c : r.coords_) c *= k;
    return r;
  }

  friend bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const ClassVector& a, const ClassVector& b) { return !(a == b); }
  // Lexicographic, shorter vectors first.
  friend bool operator<(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
    }
    return false;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + "]";
  }

 private:
  static void check_same_size(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size()) {
      throw StructuralError("class vectors of different length: " + a.str() + " and " + b.str());
    }
  }

  std::vector<Integer> coords_;
};

class Lattice {
 public:
  using Gram = std::vector<std::vector<Integer>>;

  // Throws StructuralError unless gram is non-empty, square and symmetric,
  // and, when `even` is set, has even diagonal.
  explicit Lattice(Gram gram, bool even = false) : gram_(std::move(gram)), even_(even) {
    if (gram_.empty()) throw StructuralError("Gram matrix must have rank >= 1");
    const std::size_t r = gram_.size();
    for (const auto& row : gram_) {
      if (row.size() != r) throw StructuralError("Gram matrix is not square");
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (gram_[i][j] != gram_[j][i]) {
          throw StructuralError("Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
      }
    }
    if (even_ && !has_even_diagonal()) {
      throw StructuralError("lattice flagged even but has an odd diagonal entry");
    }
  }

  // U = [[0,1],[1,0]].
  static Lattice hyperbolic_plane() { return Lattice({{0, 1}, {1, 0}}, true); }
  // <k> = [[k]], flagged even when k is.
  static Lattice diagonal(const Integer& k) { return Lattice({{k}}, is_even(k)); }

  std::size_t rank() const { return gram_.size(); }
  const Gram& gram() const { return gram_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  bool even() const { return even_; }

  bool has_even_diagonal() const {
    for (std::size_t i = 0; i < gram_.size(); ++i) {
      if (!is_even(gram_[i][i])) return false;
    }
    return true;
  }

  void check_member(const ClassVector& v) const {
    if (v.size() != rank()) {
      throw StructuralError("class " + v.str() + " has length " + std::to_string(v.size()) +
                            " but the lattice has rank " + std::to_string(rank()));
    }
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.even_ == b.even_ && a.gram_ == b.gram_;
  }

 private:
  Gram gram_;
  bool even_;
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t ra = a.rank();
  const std::size_t r = ra + b.rank();
  Lattice::Gram g(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g[i][j] = a.entry(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g[ra + i][ra + j] = b.entry(i, j);
  return Lattice(std::move(g), a.even() && b.even());
}

// gram * v
inline std::vector<Integer> gram_times(const Lattice& lat, const ClassVector& v) {
  lat.check_member(v);
  std::vector<Integer> out(lat.rank(), Integer(0));
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      if (v[j] != 0) out[i] += lat.entry(i, j) * v[j];
    }
  }
  return out;
}

inline Integer pairing(const Lattice& lat, const ClassVector& a, const ClassVector& b) {
  lat.check_member(a);
  lat.check_member(b);
  Integer s = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      if (b[j] != 0) row += lat.entry(i, j) * b[j];
    }
    s += a[i] * row;
  }
  return s;
}

inline Integer square(const Lattice& lat, const ClassVector& a) { return pairing(lat, a, a); }

// div(d) = gcd_i |(e_i, d)|. Returns 0 when d lies in the radical, which can
// happen for degenerate user-supplied sublattices; the zero vector is rejected.
inline Integer divisibility(const Lattice& lat, const ClassVector& d) {
  lat.check_member(d);
  if (d.is_zero()) throw DomainError("divisibility of the zero vector is undefined");
  Integer g = 0;
  for (const auto& p : gram_times(lat, d)) g = gcd_of(g, p);
  return g;
}

inline bool is_primitive(const Lattice& lat, const ClassVector& v) {
  lat.check_member(v);
  if (v.is_zero()) throw DomainError("primitivity of the zero vector is undefined");
  return v.content() == 1;
}

inline constexpr std::size_t kMaxEnumerationRank = 6;

// Every v with |v_i| <= coeff_bound and q(v) = target, lexicographically
// ordered with the first coordinate most significant.
inline std::vector<ClassVector> enumerate_vectors(const Lattice& lat, const Integer& target,
                                                  long coeff_bound) {
  if (lat.rank() > kMaxEnumerationRank) {
    throw CapabilityError("enumerate_vectors supports rank <= 6, got rank " +
                          std::to_string(lat.rank()));
  }
  if (coeff_bound < 1) throw DomainError("coefficient bound must be >= 1");

  const std::size_t r = lat.rank();
  std::vector<Integer> cur(r, Integer(-coeff_bound));
  std::vector<ClassVector> out;
  while (true) {
    ClassVector v(cur);
    if (square(lat, v) == target) out.push_back(std::move(v));
    // odometer, last coordinate fastest
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (cur[k] < coeff_bound) {
        ++cur[k];
        break;
      }
      cur[k] = -coeff_bound;
      if (k == 0) return out;
    }
  }
}

}  // namespace hkbase
