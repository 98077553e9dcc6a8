#pragma once

// Independent oracles (grid enumeration, truncated power series, Buchberger,
// elimination) and the named checks that compare them with the closed forms.

#include "sgalg/closed_forms.hpp"
#include "sgalg/groebner.hpp"
#include "sgalg/semigroup.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgalg {

/// Bidegrees 0 <= x <= cap_x, 0 <= y <= cap_y; with cap_sum set, only elements
/// having a representation by at most cap_sum generators are enumerated.
struct EnumerationBox {
  long cap_x = 0;
  long cap_y = 0;
  std::optional<long> cap_sum;

  bool contains(const IntegerVector& v) const {
    return v.x >= 0 && v.y >= 0 && v.x <= cap_x && v.y <= cap_y;
  }
};

/// Square box of side 3*max coordinate of a+kd, enlarged to contain every
/// numerator exponent of `form` when given.
EnumerationBox default_box(const SemigroupFamily& f, const HilbertSeriesForm* form = nullptr);

/// Elements of S inside the box, sorted. Dynamic programming over the grid.
std::vector<LatticeVector> enumerate_semigroup(const SemigroupFamily& f, const EnumerationBox& box);

/// Integer power series truncated to a box, stored densely.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(const EnumerationBox& box);

  const EnumerationBox& box() const { return box_; }
  Integer& at(long x, long y) { return c_[index(x, y)]; }
  const Integer& at(long x, long y) const { return c_[index(x, y)]; }

  /// Multiplies in place by 1/(1 - t^g), truncating to the box.
  void divide_by_one_minus(const LatticeVector& g);
  /// Nonzero coefficients in increasing bidegree order.
  std::vector<std::pair<LatticeVector, Integer>> nonzero() const;
  Integer coefficient_sum() const;

 private:
  std::size_t index(long x, long y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(box_.cap_y + 1) +
           static_cast<std::size_t>(y);
  }
  EnumerationBox box_;
  std::vector<Integer> c_;
};

/// numerator / prod (1 - t^g) expanded inside the box.
TruncatedSeries expand_series(const HilbertSeriesForm& form, const EnumerationBox& box);

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // concrete counterexample; always set on failure
  std::string note;     // optional extra information
};

struct Report {
  std::string family;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  bool all_passed() const;
  const Check* find(const std::string& name) const;
};

Check hilbert_truncation_check(const SemigroupFamily& f, const HilbertSeriesForm& form,
                               const EnumerationBox& box);

/// delta_i delta_{i+1} = 0, constant-free entries, S-degree bookkeeping of the
/// shifts, ranks vs Betti numbers, delta_1 = G, and the named minors.
Check complex_check(const GradedResolution& res, const SemigroupFamily& f);

/// dim k[x]/(<G> + <x_1, x_{k+1}>), or nullopt when infinite. `nvars` includes
/// y for extended rings.
std::optional<std::size_t> quotient_dimension(std::span<const Polynomial> G, int k,
                                              std::size_t nvars);

/// G (or I_S + <y^mu - x^lambda>) vanishes on the parametrization and the
/// quotient by the extremal variables has dimension |Ap|.
Check gastinger_check(const SemigroupFamily& f);
/// Same with an explicit generator list; expected dimension k*mu.
Check gastinger_check(const SemigroupFamily& f, std::span<const Polynomial> G);

/// G is a Groebner basis under grevlex whose binomials lead with their first
/// monomial, Buchberger adds nothing to it, and (against_kernel) its leading
/// terms generate the leading-term ideal of the elimination kernel.
Check groebner_claim_check(const SemigroupFamily& f, std::span<const Polynomial> G,
                           bool against_kernel = true);
Check groebner_claim_check(const SemigroupFamily& f, bool against_kernel = true);

/// <G> equals the elimination kernel; |G| and |xi_l| counts.
Check ideal_identity_check(const SemigroupFamily& f);

/// Type k-1, |Ap| = k (closed form equals enumeration), CM, normality,
/// Gorenstein iff k = 2. Base families only.
Check invariants_check(const SemigroupFamily& f);

/// Apery-norm regularity is 2 and matches the stored resolution for k <= 4.
Check regularity_check(const SemigroupFamily& f);

/// Extended families: the extra generator, Apery closed form vs enumeration,
/// quasi-Frobenius set and Cohen-Macaulayness.
Check gluing_check(const SemigroupFamily& f);

/// The reduced Groebner basis of I_S is quadratic.
bool koszul_flag(const SemigroupFamily& f);

struct ReportOptions {
  std::optional<EnumerationBox> box;
  bool include_toric = true;
  bool record_timings = false;
  std::vector<std::string> only;  // check names to run; empty runs all
};

Report full_report(const SemigroupFamily& f, const ReportOptions& options = {});

}  // namespace sgalg
