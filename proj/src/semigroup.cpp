#include "sgalg/semigroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace sgalg {

std::string to_string(FamilyErrorKind kind) {
  switch (kind) {
    case FamilyErrorKind::DependentDirections: return "DependentDirections";
    case FamilyErrorKind::NotMinimal: return "NotMinimal";
    case FamilyErrorKind::BadExtension: return "BadExtension";
    case FamilyErrorKind::InvalidParameters: return "InvalidParameters";
  }
  return "Unknown";
}

Integer MembershipCertificate::total() const {
  Integer s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

namespace {

// Depth-first search over coefficient vectors, largest coefficient first, so
// the first hit is the lexicographically largest representation. Residuals
// known to be unreachable from generator i onwards are memoized.
class RepresentationSearch {
 public:
  RepresentationSearch(std::span<const LatticeVector> gens, std::size_t limit)
      : gens_(gens), limit_(limit), current_(gens.size(), Integer(0)) {}

  void run(const IntegerVector& v) {
    if (!v.is_nonnegative()) return;
    search(0, v);
  }

  std::vector<MembershipCertificate> found;

 private:
  bool done() const { return found.size() >= limit_; }

  // Returns true if at least one representation was found below this node.
  bool search(std::size_t i, const IntegerVector& r) {
    if (r.is_zero()) {
      found.push_back({current_});
      return true;
    }
    if (i == gens_.size()) return false;
    auto key = std::make_tuple(i, r.x, r.y);
    if (dead_.count(key)) return false;

    const IntegerVector& g = gens_[i].vec();
    Integer cmax;
    bool bounded = false;
    if (g.x > 0) {
      cmax = r.x / g.x;
      bounded = true;
    }
    if (g.y > 0) {
      Integer cy = r.y / g.y;
      cmax = bounded ? std::min(cmax, cy) : cy;
      bounded = true;
    }
    if (!bounded) cmax = 0;  // zero generator contributes nothing

    bool any = false;
    if (i + 1 == gens_.size()) {
      // The last generator must absorb the residual exactly.
      if (bounded && cmax * g.x == r.x && cmax * g.y == r.y) {
        current_[i] = cmax;
        found.push_back({current_});
        current_[i] = 0;
        any = true;
      }
    } else {
      for (Integer c = cmax; c >= 0 && !done(); --c) {
        current_[i] = c;
        IntegerVector next(r.x - c * g.x, r.y - c * g.y);
        if (search(i + 1, next)) any = true;
      }
      current_[i] = 0;
    }
    if (!any) dead_.insert(std::move(key));
    return any;
  }

  std::span<const LatticeVector> gens_;
  std::size_t limit_;
  std::vector<Integer> current_;
  std::set<std::tuple<std::size_t, Integer, Integer>> dead_;
};

bool contains_vector(std::span<const LatticeVector> v, const LatticeVector& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::optional<MembershipCertificate> is_member(std::span<const LatticeVector> generators,
                                               const IntegerVector& v) {
  RepresentationSearch search(generators, 1);
  search.run(v);
  if (search.found.empty()) return std::nullopt;
  return search.found.front();
}

std::optional<MembershipCertificate> is_member(const SemigroupFamily& f, const IntegerVector& v) {
  return is_member(f.generators(), v);
}

std::vector<MembershipCertificate> representations(std::span<const LatticeVector> generators,
                                                   const IntegerVector& v, std::size_t limit) {
  RepresentationSearch search(generators, limit);
  search.run(v);
  return std::move(search.found);
}

SemigroupFamily build_family(const LatticeVector& a, const LatticeVector& d, int k,
                             const std::optional<LatticeVector>& b, int mu_bound) {
  if (k < 2) throw FamilyError(FamilyErrorKind::InvalidParameters, "k must be at least 2");
  if (a.is_zero() || d.is_zero())
    throw FamilyError(FamilyErrorKind::DependentDirections, "a and d must be nonzero");
  if (det(a, d) == 0)
    throw FamilyError(FamilyErrorKind::DependentDirections,
                      "a=" + a.to_string() + " and d=" + d.to_string() +
                          " are linearly dependent");
  if (mu_bound < 2) throw FamilyError(FamilyErrorKind::InvalidParameters, "mu bound must be >= 2");

  SemigroupFamily f;
  f.a_ = a;
  f.d_ = d;
  f.k_ = k;
  for (int i = 0; i <= k; ++i) f.generators_.push_back(a + Integer(i) * d);

  if (b) {
    if (b->is_zero()) throw FamilyError(FamilyErrorKind::BadExtension, "b must be nonzero");
    if (auto cert = is_member(f.base_generators(), *b))
      throw FamilyError(FamilyErrorKind::BadExtension,
                        "b=" + b->to_string() + " already lies in S_{a,d,k}", cert);
    f.b_ = b;
    f.generators_.push_back(*b);
  }

  // Minimality of the whole generator list.
  for (std::size_t j = 0; j < f.generators_.size(); ++j) {
    std::vector<LatticeVector> others;
    for (std::size_t i = 0; i < f.generators_.size(); ++i)
      if (i != j) others.push_back(f.generators_[i]);
    if (auto cert = is_member(others, f.generators_[j])) {
      cert->coefficients.insert(cert->coefficients.begin() + static_cast<std::ptrdiff_t>(j),
                                Integer(0));
      throw FamilyError(FamilyErrorKind::NotMinimal,
                        "generator " + f.generators_[j].to_string() +
                            " lies in the semigroup spanned by the others",
                        cert);
    }
  }

  if (b) {
    int mu = 0;
    for (int m = 2; m <= mu_bound; ++m) {
      if (is_member(f.base_generators(), Integer(m) * *b)) {
        mu = m;
        break;
      }
    }
    if (mu == 0)
      throw FamilyError(FamilyErrorKind::BadExtension,
                        "no multiple mu*b with mu <= " + std::to_string(mu_bound) +
                            " lies in S_{a,d,k}");
    auto reps = representations(f.base_generators(), Integer(mu) * *b);
    bool touches_rays = std::any_of(reps.begin(), reps.end(), [&](const auto& r) {
      return r.coefficients.front() != 0 || r.coefficients.back() != 0;
    });
    if (!touches_rays)
      throw FamilyError(FamilyErrorKind::BadExtension,
                        "no representation of mu*b uses a or a+kd");
    f.mu_ = mu;
  }
  return f;
}

std::string SemigroupFamily::describe() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i];
  os << "> with a=" << a_ << ", d=" << d_ << ", k=" << k_;
  if (b_) os << ", b=" << *b_ << ", mu=" << mu_;
  return os.str();
}

std::pair<LatticeVector, LatticeVector> extremal_rays(const SemigroupFamily& f) {
  return {f.generator(0), f.generator(f.k())};
}

bool AperySet::contains(const LatticeVector& v) const { return contains_vector(elements, v); }

AperySet apery_closed_form(const SemigroupFamily& f) {
  if (f.is_extended())
    throw Error("apery_closed_form: the closed form applies to base families only");
  auto [e1, e2] = extremal_rays(f);
  AperySet ap;
  ap.base = {e1, e2};
  ap.elements.push_back(LatticeVector(0, 0));
  for (int i = 1; i < f.k(); ++i) ap.elements.push_back(f.generator(i));
  std::sort(ap.elements.begin(), ap.elements.end());
  return ap;
}

AperyEnumeration apery_bruteforce(const SemigroupFamily& f, std::span<const LatticeVector> E,
                                  int cap) {
  if (cap < 0) throw Error("apery_bruteforce: cap must be nonnegative");
  for (const auto& e : E)
    if (e.is_zero() || !is_member(f, e))
      throw Error("apery_bruteforce: E must consist of nonzero semigroup elements");

  auto in_apery = [&](const LatticeVector& s) {
    for (const auto& e : E) {
      IntegerVector diff = s.vec() - e.vec();
      if (diff.is_nonnegative() && is_member(f, diff)) return false;
    }
    return true;
  };

  // Breadth-first over the number of generators used. Apery sets are closed
  // under removing a generator, so only Apery elements need expanding.
  AperyEnumeration out;
  out.set.base.assign(E.begin(), E.end());
  std::set<LatticeVector> seen{LatticeVector(0, 0)};
  std::vector<LatticeVector> layer{LatticeVector(0, 0)};
  for (int depth = 0; depth <= cap && !layer.empty(); ++depth) {
    std::vector<LatticeVector> next;
    for (const auto& s : layer) {
      if (!in_apery(s)) continue;
      out.set.elements.push_back(s);
      if (depth == cap) {
        out.boundary.push_back(s);
        continue;
      }
      for (const auto& g : f.generators()) {
        LatticeVector t = s + g;
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    layer = std::move(next);
  }
  out.cap_too_small = !out.boundary.empty();
  std::sort(out.set.elements.begin(), out.set.elements.end());
  return out;
}

AperyEnumeration apery_bruteforce(const SemigroupFamily& f) {
  auto [e1, e2] = extremal_rays(f);
  std::vector<LatticeVector> E{e1, e2};
  return apery_bruteforce(f, E, 4 * f.mu());
}

AperySet apery_set(const SemigroupFamily& f) {
  if (!f.is_extended()) return apery_closed_form(f);
  auto enumeration = apery_bruteforce(f);
  if (enumeration.cap_too_small)
    throw Error("apery_set: enumeration cap too small for " + f.describe());
  return enumeration.set;
}

std::vector<IntegerVector> quasi_frobenius(const SemigroupFamily& f, const AperySet& ap) {
  IntegerVector ray_sum(0L, 0L);
  for (const auto& e : ap.base) ray_sum += e.vec();
  std::vector<IntegerVector> qf;
  for (const auto& m : ap.elements) {
    bool maximal = std::none_of(ap.elements.begin(), ap.elements.end(), [&](const auto& other) {
      if (other == m) return false;
      IntegerVector diff = other.vec() - m.vec();
      return diff.is_nonnegative() && is_member(f, diff).has_value();
    });
    if (maximal) qf.push_back(m.vec() - ray_sum);
  }
  std::sort(qf.begin(), qf.end());
  return qf;
}

std::vector<IntegerVector> quasi_frobenius(const SemigroupFamily& f) {
  return quasi_frobenius(f, apery_set(f));
}

int cm_type(const SemigroupFamily& f) { return static_cast<int>(quasi_frobenius(f).size()); }

CohenMacaulayResult is_cohen_macaulay(const SemigroupFamily& f, const AperySet& ap) {
  auto [e1, e2] = extremal_rays(f);
  CohenMacaulayResult res;
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < ap.elements.size(); ++j) {
      IntegerVector diff = ap.elements[i].vec() - ap.elements[j].vec();
      if (in_lattice(diff, e1, e2)) {
        res.violating_pair = std::make_pair(ap.elements[i], ap.elements[j]);
        return res;
      }
    }
  }
  res.cohen_macaulay = true;
  return res;
}

CohenMacaulayResult is_cohen_macaulay(const SemigroupFamily& f) {
  return is_cohen_macaulay(f, apery_set(f));
}

NormalityResult is_normal(const SemigroupFamily& f, std::span<const IntegerVector> qf) {
  auto [e1, e2] = extremal_rays(f);
  NormalityResult res;
  for (const auto& q : qf) {
    IntegerVector v = -q;
    RationalPair c = solve_in_basis(v, e1, e2);
    if (c.l1 < 0 || c.l2 < 0) {
      res.failure = NormalityFailure::NotInCone;
      res.witness = v;
      return res;
    }
    if (c.l1 == 0 || c.l2 == 0) {
      res.failure = NormalityFailure::Boundary;
      res.witness = v;
      return res;
    }
  }
  res.normal = true;
  return res;
}

NormalityResult is_normal(const SemigroupFamily& f) {
  auto qf = quasi_frobenius(f);
  return is_normal(f, qf);
}

RayDegree degree_in_rays(const SemigroupFamily& f, const IntegerVector& v) {
  auto [e1, e2] = extremal_rays(f);
  RationalPair c = solve_in_basis(v, e1, e2);
  if (c.l1 < 0 || c.l2 < 0) throw OutsideCone(v.to_string() + " lies outside cone(S)");
  return {c, c.sum()};
}

}  // namespace sgalg
