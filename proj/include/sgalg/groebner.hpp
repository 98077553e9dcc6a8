#pragma once

// Groebner bases over Q: division, S-polynomials, Buchberger completion,
// toric kernels by elimination and standard-monomial bookkeeping.

#include "sgalg/polynomial.hpp"
#include "sgalg/semigroup.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sgalg {

/// S-degree of each variable: x_i -> a+(i-1)d and, for extended families, y -> b.
struct GradingMap {
  std::vector<IntegerVector> degrees;

  static GradingMap for_family(const SemigroupFamily& f);
  std::size_t nvars() const { return degrees.size(); }
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  bool reduced = false;
};

LatticeVector multidegree(const Monomial& m, const GradingMap& g);
/// All terms share one S-degree.
bool is_s_homogeneous(const Polynomial& p, const GradingMap& g);
/// p(t^{deg x_1}, ..., t^{deg x_n}) == 0.
bool vanishes_under_substitution(const Polynomial& p, const GradingMap& g);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Normal form of f modulo G: no term of the result is divisible by a leading
/// monomial of G. The first divisor in list order is always used.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

/// Reduced Groebner basis of <gens> (normal pair selection with Buchberger's
/// coprime and chain criteria). Elements are monic and sorted by decreasing
/// leading monomial.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         BuchbergerStats* stats = nullptr);

struct GroebnerCheck {
  bool is_groebner = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::optional<Polynomial> remainder;
};

/// Buchberger's criterion: every S-polynomial reduces to zero modulo G.
GroebnerCheck is_groebner_basis(std::span<const Polynomial> G, const MonomialOrder& order);

/// Variables of the ambient ring x_1..x_{k+1} (then y) for a family.
std::size_t family_nvars(const SemigroupFamily& f);

/// Groebner basis of the defining ideal I_S computed by eliminating t1, t2
/// from <x_i - t^{deg x_i}>. Result is in the ring of family_nvars(f)
/// variables under grevlex x_1 > ... > x_{k+1} (> y).
GroebnerBasis toric_kernel(const SemigroupFamily& f, BuchbergerStats* stats = nullptr);

/// <G1> == <G2>, where G1 is a Groebner basis.
bool ideal_equal(const GroebnerBasis& G1, std::span<const Polynomial> G2);

struct StandardMonomials {
  bool finite = false;
  std::vector<Monomial> monomials;  // empty when infinite
};

/// Monomials outside the leading-term ideal of G. Throws Error if the
/// staircase is finite but larger than `cap`.
StandardMonomials standard_monomials(const GroebnerBasis& G,
                                     std::optional<std::size_t> cap = std::nullopt);

/// Groebner basis of <G> + <x_v : v in vars>.
GroebnerBasis add_variables(std::span<const Polynomial> G, std::span<const std::size_t> vars,
                            const MonomialOrder& order);

/// Every element has standard degree 2 (vacuously true for the empty basis).
bool is_quadratic(const GroebnerBasis& G);

}  // namespace sgalg
