#pragma once

#include "sgalg/lattice.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sgalg {

using Exponent = std::uint32_t;

/// Dense exponent vector over a fixed ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  /// x_i in a ring with nvars variables (0-based index).
  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical (lexicographic on the exponent vector) storage order; not a
  /// monomial order in the algebraic sense.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { GradedRevLex, Lex, Elimination };

/// A monomial order over a fixed number of variables. `precedence` lists
/// variable indices from largest to smallest.
class MonomialOrder {
 public:
  /// Graded reverse lexicographic with x_0 > x_1 > ... unless a precedence is given.
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder grevlex(std::vector<std::size_t> precedence);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder lex(std::vector<std::size_t> precedence);
  /// The first `block` variables of `precedence` are eliminated: grevlex on
  /// that block decides, ties broken by grevlex on the rest.
  static MonomialOrder elimination(std::vector<std::size_t> precedence, std::size_t block);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::size_t block() const { return block_; }
  std::size_t nvars() const { return precedence_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, std::size_t block);
  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                                     std::size_t to) const;

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
  std::size_t block_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  Polynomial(const Monomial& m, Rational c);
  static Polynomial constant(std::size_t nvars, Rational c);
  /// m1 - m2.
  static Polynomial binomial(const Monomial& m1, const Monomial& m2);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// Largest term under `order`. Requires a nonzero polynomial.
  Term leading_term(const MonomialOrder& order) const;
  Monomial leading_monomial(const MonomialOrder& order) const;
  /// Terms sorted from largest to smallest under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  std::uint64_t total_degree() const;
  bool is_standard_homogeneous() const;
  bool has_constant_term() const;

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& p, const Term& t);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// x1, ..., xn (optionally followed by named extra variables).
std::vector<std::string> default_variable_names(std::size_t nvars);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);
/// Terms printed from largest to smallest under `order`, e.g. "x2^2 - x1*x3".
std::string to_string(const Polynomial& p, const std::vector<std::string>& names,
                      const MonomialOrder& order);

}  // namespace sgalg
