#pragma once

// Explicit answers for S_{a,d,k}: the xi-family generators of I_S and their
// Groebner-basis partition, minimal free resolutions and Hilbert numerators
// for k = 2, 3, 4, regularity, and the gluing data of S_{a,d,k}^b.

#include "sgalg/groebner.hpp"
#include "sgalg/polynomial.hpp"
#include "sgalg/semigroup.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sgalg {

class UnsupportedK : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// x1..x_{k+1}, plus y for extended families.
std::vector<std::string> family_variable_names(int k, bool extended);

/// The binomials xi_l, 2 <= l <= k, in a ring with `nvars` >= k+1 variables
/// (x_i has index i-1).
std::vector<Polynomial> xi_family(int l, int k, std::size_t nvars);
inline std::vector<Polynomial> xi_family(int l, int k) {
  return xi_family(l, k, static_cast<std::size_t>(k) + 1);
}

struct GeneratorFamily {
  int k = 0;
  std::map<int, std::vector<Polynomial>> xi;  // l -> xi_l
  std::vector<Polynomial> G;                  // xi_2, ..., xi_k flattened
};

GeneratorFamily generating_set(int k, std::size_t nvars);
inline GeneratorFamily generating_set(int k) {
  return generating_set(k, static_cast<std::size_t>(k) + 1);
}

/// B1..B5 (index 0..4) of the Groebner-basis proof.
std::array<std::vector<Polynomial>, 5> gb_partition(int k);

using PolyMatrix = std::vector<std::vector<Polynomial>>;  // rows x columns

/// One graded summand: multiplicity copies of R(-(a_coeff*a + d_coeff*d)).
struct Shift {
  int multiplicity = 1;
  int a_coeff = 0;
  int d_coeff = 0;
  LatticeVector degree;

  int standard_degree() const { return a_coeff; }
};

struct GradedResolution {
  int k = 0;
  std::vector<PolyMatrix> maps;             // maps[i] is delta_{i+1}: F_{i+1} -> F_i
  std::vector<std::vector<Shift>> shifts;   // shifts[i] is C_i; C_0 = {0}
  std::vector<int> betti;                   // rank F_0, rank F_1, ...

  int length() const { return static_cast<int>(maps.size()); }
};

/// Minimal graded free resolution of k[S_{a,d,k}] for k in {2,3,4}.
GradedResolution resolution(int k, const SemigroupFamily& f);

struct HilbertSeriesForm {
  std::map<LatticeVector, Integer> numerator;  // exponent -> coefficient
  std::vector<LatticeVector> denominator;      // factors (1 - t^g)
};

/// Closed-form Hilbert series numerator for k in {2,3,4}.
HilbertSeriesForm hilbert_numerator(int k, const SemigroupFamily& f);
/// sum_i (-1)^i sum_{s in C_i} beta_{i,s} t^s.
HilbertSeriesForm hilbert_from_resolution(const GradedResolution& res, const SemigroupFamily& f);

struct RegularityResult {
  int regularity = 0;
  /// (Apery element, standard degree of its standard monomial).
  std::vector<std::pair<LatticeVector, std::uint64_t>> norms;
};

/// reg(I_S) = max{||b|| + 1 : b in Ap(S, E)}. Base families only.
RegularityResult regularity(const SemigroupFamily& f);
/// max_i (t_i - i), t_i the largest standard degree of the i-th syzygies of I.
int regularity_from_resolution(const GradedResolution& res);

struct GluingData {
  int mu = 0;
  MembershipCertificate lambda;
  LatticeVector glue_degree;
  Polynomial extra_generator;  // y^mu - x^lambda
  std::size_t qualifying_representations = 0;
};

GluingData gluing_data(const SemigroupFamily& f);

/// Generators of I_{S^b} = I_S + <y^mu - x^lambda> in k+2 variables.
std::vector<Polynomial> extended_generators(const SemigroupFamily& f);

AperySet apery_extended(const SemigroupFamily& f);
std::vector<IntegerVector> qf_extended(const SemigroupFamily& f);

/// Betti numbers of k[S^b] as printed for k in {2,3,4} (rank F_0 first).
std::vector<int> extended_betti(int k);
/// Ranks of the mapping cone of multiplication by one extra generator.
std::vector<int> mapping_cone_betti(const std::vector<int>& base);

}  // namespace sgalg
