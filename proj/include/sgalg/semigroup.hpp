#pragma once

// Affine semigroups S = <a, a+d, ..., a+kd> (optionally extended by one
// element b) inside N^2, with exact membership, Apery sets and the
// invariants derived from them.

#include "sgalg/lattice.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sgalg {

enum class FamilyErrorKind { DependentDirections, NotMinimal, BadExtension, InvalidParameters };

std::string to_string(FamilyErrorKind kind);

/// Coefficients c_i >= 0 with sum c_i * g_i equal to the queried vector.
struct MembershipCertificate {
  std::vector<Integer> coefficients;

  Integer total() const;
  friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

/// Raised by build_family when a family violates its invariants.
class FamilyError : public Error {
 public:
  FamilyError(FamilyErrorKind kind, const std::string& what,
              std::optional<MembershipCertificate> witness = std::nullopt)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  FamilyErrorKind kind() const { return kind_; }
  /// For NotMinimal: a representation of the redundant generator by the others
  /// (the redundant generator's own slot is zero).
  const std::optional<MembershipCertificate>& witness() const { return witness_; }

 private:
  FamilyErrorKind kind_;
  std::optional<MembershipCertificate> witness_;
};

class OutsideCone : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultMuBound = 64;

/// A validated S_{a,d,k} or S_{a,d,k}^b. Immutable after construction.
class SemigroupFamily {
 public:
  const LatticeVector& a() const { return a_; }
  const LatticeVector& d() const { return d_; }
  int k() const { return k_; }
  const std::optional<LatticeVector>& extension() const { return b_; }
  bool is_extended() const { return b_.has_value(); }

  /// [a, a+d, ..., a+kd] followed by b for extended families.
  const std::vector<LatticeVector>& generators() const { return generators_; }
  /// [a, a+d, ..., a+kd].
  std::span<const LatticeVector> base_generators() const {
    return {generators_.data(), static_cast<std::size_t>(k_) + 1};
  }
  LatticeVector generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }

  /// Smallest mu >= 1 with mu*b in S_{a,d,k}; 1 for base families.
  int mu() const { return mu_; }

  std::string describe() const;

 private:
  friend SemigroupFamily build_family(const LatticeVector&, const LatticeVector&, int,
                                      const std::optional<LatticeVector>&, int);
  SemigroupFamily() = default;

  LatticeVector a_;
  LatticeVector d_;
  int k_ = 0;
  std::optional<LatticeVector> b_;
  std::vector<LatticeVector> generators_;
  int mu_ = 1;
};

/// Validates (a, d, k[, b]) eagerly. Throws FamilyError.
SemigroupFamily build_family(const LatticeVector& a, const LatticeVector& d, int k,
                             const std::optional<LatticeVector>& b = std::nullopt,
                             int mu_bound = kDefaultMuBound);

/// Exact membership in the semigroup spanned by `generators`. The certificate
/// returned is the lexicographically largest representation.
std::optional<MembershipCertificate> is_member(std::span<const LatticeVector> generators,
                                               const IntegerVector& v);
std::optional<MembershipCertificate> is_member(const SemigroupFamily& f, const IntegerVector& v);

/// Every representation of v, in lexicographically decreasing order.
std::vector<MembershipCertificate> representations(std::span<const LatticeVector> generators,
                                                   const IntegerVector& v,
                                                   std::size_t limit = 4096);

/// The extremal rays (a, a+kd).
std::pair<LatticeVector, LatticeVector> extremal_rays(const SemigroupFamily& f);

struct AperySet {
  std::vector<LatticeVector> base;
  std::vector<LatticeVector> elements;  // sorted, contains 0

  std::size_t size() const { return elements.size(); }
  bool contains(const LatticeVector& v) const;
};

/// {0, a+d, ..., a+(k-1)d} with respect to the extremal rays. Base families only.
AperySet apery_closed_form(const SemigroupFamily& f);

struct AperyEnumeration {
  AperySet set;
  /// Set when Apery elements remain on the outermost enumerated layer, so
  /// elements beyond the cap may have been missed.
  bool cap_too_small = false;
  std::vector<LatticeVector> boundary;
};

/// Apery set from the definition: every element of S whose shortest
/// representation uses at most `cap` generators and whose differences with
/// each e in E leave S.
AperyEnumeration apery_bruteforce(const SemigroupFamily& f, std::span<const LatticeVector> E,
                                  int cap);
/// Same, with E = extremal rays and cap = 4*mu.
AperyEnumeration apery_bruteforce(const SemigroupFamily& f);

/// The Apery set w.r.t. the extremal rays: closed form for base families,
/// enumeration for extended ones.
AperySet apery_set(const SemigroupFamily& f);

/// {m - sum(E) : m maximal in Ap under the S-divisibility order}.
std::vector<IntegerVector> quasi_frobenius(const SemigroupFamily& f, const AperySet& ap);
std::vector<IntegerVector> quasi_frobenius(const SemigroupFamily& f);

int cm_type(const SemigroupFamily& f);

struct CohenMacaulayResult {
  bool cohen_macaulay = false;
  std::optional<std::pair<LatticeVector, LatticeVector>> violating_pair;
};

/// Rosales' criterion: distinct Apery elements never differ by an element of
/// the group spanned by the extremal rays.
CohenMacaulayResult is_cohen_macaulay(const SemigroupFamily& f, const AperySet& ap);
CohenMacaulayResult is_cohen_macaulay(const SemigroupFamily& f);

enum class NormalityFailure { None, Boundary, NotInCone };

struct NormalityResult {
  bool normal = false;
  NormalityFailure failure = NormalityFailure::None;
  std::optional<IntegerVector> witness;  // an element of -QF
};

/// Normal iff -QF(S) lies in the relative interior of cone(S).
NormalityResult is_normal(const SemigroupFamily& f);
NormalityResult is_normal(const SemigroupFamily& f, std::span<const IntegerVector> qf);

struct RayDegree {
  RationalPair coords;
  Rational deg;
};

/// Coordinates of v in the extremal-ray basis; throws OutsideCone if either is negative.
RayDegree degree_in_rays(const SemigroupFamily& f, const IntegerVector& v);

}  // namespace sgalg
