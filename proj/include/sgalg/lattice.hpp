#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sgalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of Z^2. Differences of semigroup elements and quasi-Frobenius
/// elements live here.
struct IntegerVector {
  Integer x;
  Integer y;

  IntegerVector() = default;
  IntegerVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  IntegerVector(long x_, long y_) : x(x_), y(y_) {}

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_nonnegative() const { return x >= 0 && y >= 0; }

  IntegerVector& operator+=(const IntegerVector& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  IntegerVector& operator-=(const IntegerVector& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend IntegerVector operator+(IntegerVector a, const IntegerVector& b) { return a += b; }
  friend IntegerVector operator-(IntegerVector a, const IntegerVector& b) { return a -= b; }
  friend IntegerVector operator-(const IntegerVector& a) { return {-a.x, -a.y}; }
  friend IntegerVector operator*(const Integer& s, const IntegerVector& v) {
    return {s * v.x, s * v.y};
  }
  friend bool operator==(const IntegerVector& a, const IntegerVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const IntegerVector& a, const IntegerVector& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }

  std::string to_string() const;
};

/// A point of N^2. The nonnegativity invariant is checked on construction.
class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(Integer x, Integer y);
  LatticeVector(long x, long y) : LatticeVector(Integer(x), Integer(y)) {}

  /// Returns the vector if it is componentwise nonnegative.
  static std::optional<LatticeVector> from(const IntegerVector& v);

  const Integer& x() const { return v_.x; }
  const Integer& y() const { return v_.y; }
  const IntegerVector& vec() const { return v_; }
  operator const IntegerVector&() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return LatticeVector(a.v_.x + b.v_.x, a.v_.y + b.v_.y);
  }
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.v_ == b.v_; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.v_ < b.v_; }

  std::string to_string() const { return v_.to_string(); }

 private:
  IntegerVector v_;
};

/// Coordinates (l1, l2) of a vector in a two-element basis of Q^2.
struct RationalPair {
  Rational l1;
  Rational l2;

  Rational sum() const { return l1 + l2; }
  friend bool operator==(const RationalPair& a, const RationalPair& b) {
    return a.l1 == b.l1 && a.l2 == b.l2;
  }
};

Integer det(const IntegerVector& u, const IntegerVector& v);

/// Solves v = l1*e1 + l2*e2 over Q by Cramer's rule. Requires det(e1, e2) != 0.
RationalPair solve_in_basis(const IntegerVector& v, const IntegerVector& e1,
                            const IntegerVector& e2);

/// v in the group G({e1, e2}) = Z e1 + Z e2.
bool in_lattice(const IntegerVector& v, const IntegerVector& e1, const IntegerVector& e2);

/// Parses "x,y" into an integer vector. Throws Error on malformed input.
IntegerVector parse_vector(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IntegerVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

}  // namespace sgalg
