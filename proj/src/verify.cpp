#include "sgalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace sgalg {

namespace {

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("value too large for an enumeration box: " + v.get_str());
  return v.get_si();
}

std::string join(const std::vector<IntegerVector>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].to_string();
  return out + "}";
}

std::string join(const std::vector<LatticeVector>& vs) {
  std::vector<IntegerVector> tmp(vs.begin(), vs.end());
  return join(tmp);
}

Check pass(std::string name, std::string note = {}) {
  return {std::move(name), true, {}, std::move(note)};
}

Check fail(std::string name, std::string witness) {
  return {std::move(name), false, std::move(witness), {}};
}

std::string show(const Polynomial& p, std::size_t nvars) {
  return to_string(p, default_variable_names(nvars), MonomialOrder::grevlex(nvars));
}

bool equal_up_to_sign(const Polynomial& p, const Polynomial& q) { return p == q || p == -q; }

// Laplace expansion along the first row; matrices here are at most 5x5.
Polynomial determinant(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  if (n == 1) return m[0][0];
  Polynomial det(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(minor, nvars);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix out;
  for (int r : rows) {
    std::vector<Polynomial> row;
    for (int c : cols) row.push_back(m.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(c - 1)));
    out.push_back(std::move(row));
  }
  return out;
}

struct NamedMinor {
  std::size_t map;  // index into GradedResolution::maps
  std::vector<int> rows, cols;  // 1-based
  Polynomial expected;
};

struct MinorFamily {
  std::vector<NamedMinor> minors;
  bool coprime_leading_terms = false;  // under lex x2 > x4 > x3 > x5 > x1
};

std::vector<MinorFamily> named_minors(int k) {
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  auto x = [n](int i) { return Polynomial(Monomial::variable(n, static_cast<std::size_t>(i - 1)), 1); };
  std::vector<MinorFamily> out;
  if (k == 3) {
    out.push_back({{{1, {1, 2}, {1, 2}, x(3) * x(3) - x(2) * x(4)},
                    {1, {2, 3}, {1, 2}, x(2) * x(2) - x(1) * x(3)}},
                   false});
  } else if (k == 4) {
    Polynomial q1 = x(2) * x(2) - x(1) * x(3);
    Polynomial q2 = x(4) * x(4) - x(3) * x(5);
    out.push_back({{{1, {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5}, x(1) * q1 * q1},
                    {1, {1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}, x(5) * q2 * q2}},
                   true});
    out.push_back({{{2, {4, 6, 8}, {1, 2, 3}, x(2) * x(2) * x(2) - x(1) * x(2) * x(3)},
                    {2, {3, 4, 7}, {1, 2, 3}, x(3) * x(3) * x(3) - x(1) * x(3) * x(5)},
                    {2, {1, 2, 5}, {1, 2, 3}, x(4) * x(4) * x(4) - x(3) * x(4) * x(5)}},
                   true});
  }
  return out;
}

std::string rows_label(const NamedMinor& m) {
  std::string s = "delta" + std::to_string(m.map + 1) + " rows";
  for (int r : m.rows) s += " " + std::to_string(r);
  s += " cols";
  for (int c : m.cols) s += " " + std::to_string(c);
  return s;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

// ---------------------------------------------------------------------------

EnumerationBox default_box(const SemigroupFamily& f, const HilbertSeriesForm* form) {
  LatticeVector top = f.generator(f.k());
  long side = 3 * to_long(std::max(top.x(), top.y()));
  if (form)
    for (const auto& [s, c] : form->numerator) side = std::max({side, to_long(s.x()), to_long(s.y())});
  side = std::max(side, 1L);
  return {side, side, std::nullopt};
}

std::vector<LatticeVector> enumerate_semigroup(const SemigroupFamily& f, const EnumerationBox& box) {
  if (box.cap_x < 0 || box.cap_y < 0) throw Error("enumerate_semigroup: negative box");
  const std::size_t w = static_cast<std::size_t>(box.cap_y + 1);
  const std::size_t cells = static_cast<std::size_t>(box.cap_x + 1) * w;
  constexpr long kUnreached = -1;
  // fewest generators needed to reach each cell
  std::vector<long> dist(cells, kUnreached);
  dist[0] = 0;

  std::vector<std::pair<long, long>> gens;
  for (const auto& g : f.generators())
    if (g.x() <= box.cap_x && g.y() <= box.cap_y) gens.emplace_back(to_long(g.x()), to_long(g.y()));

  for (long x = 0; x <= box.cap_x; ++x)
    for (long y = 0; y <= box.cap_y; ++y) {
      if (x == 0 && y == 0) continue;
      long best = kUnreached;
      for (auto [gx, gy] : gens) {
        if (gx > x || gy > y) continue;
        long prev = dist[static_cast<std::size_t>(x - gx) * w + static_cast<std::size_t>(y - gy)];
        if (prev != kUnreached && (best == kUnreached || prev + 1 < best)) best = prev + 1;
      }
      dist[static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y)] = best;
    }

  std::vector<LatticeVector> out;
  for (long x = 0; x <= box.cap_x; ++x)
    for (long y = 0; y <= box.cap_y; ++y) {
      long d = dist[static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y)];
      if (d == kUnreached) continue;
      if (box.cap_sum && d > *box.cap_sum) continue;
      out.emplace_back(x, y);
    }
  return out;
}

TruncatedSeries::TruncatedSeries(const EnumerationBox& box) : box_(box) {
  if (box.cap_x < 0 || box.cap_y < 0) throw Error("TruncatedSeries: negative box");
  c_.assign(static_cast<std::size_t>(box.cap_x + 1) * static_cast<std::size_t>(box.cap_y + 1), 0);
}

void TruncatedSeries::divide_by_one_minus(const LatticeVector& g) {
  if (g.is_zero()) throw Error("TruncatedSeries: cannot divide by 1 - t^0");
  if (g.x() > box_.cap_x || g.y() > box_.cap_y) return;
  const long gx = g.x().get_si(), gy = g.y().get_si();
  // Increasing order makes c[s] accumulate c[s-g], c[s-2g], ...
  for (long x = gx; x <= box_.cap_x; ++x)
    for (long y = gy; y <= box_.cap_y; ++y) at(x, y) += at(x - gx, y - gy);
}

std::vector<std::pair<LatticeVector, Integer>> TruncatedSeries::nonzero() const {
  std::vector<std::pair<LatticeVector, Integer>> out;
  for (long x = 0; x <= box_.cap_x; ++x)
    for (long y = 0; y <= box_.cap_y; ++y)
      if (at(x, y) != 0) out.emplace_back(LatticeVector(x, y), at(x, y));
  return out;
}

Integer TruncatedSeries::coefficient_sum() const {
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

TruncatedSeries expand_series(const HilbertSeriesForm& form, const EnumerationBox& box) {
  TruncatedSeries series(box);
  for (const auto& [s, c] : form.numerator)
    if (box.contains(s)) series.at(s.x().get_si(), s.y().get_si()) += c;
  for (const auto& g : form.denominator) series.divide_by_one_minus(g);
  return series;
}

// ---------------------------------------------------------------------------

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

Check hilbert_truncation_check(const SemigroupFamily& f, const HilbertSeriesForm& form,
                               const EnumerationBox& box) {
  const std::string name = "hilbert_truncation";
  EnumerationBox grid{box.cap_x, box.cap_y, std::nullopt};
  auto points = enumerate_semigroup(f, grid);
  std::set<LatticeVector> in_s(points.begin(), points.end());
  TruncatedSeries series = expand_series(form, grid);

  for (long x = 0; x <= grid.cap_x; ++x)
    for (long y = 0; y <= grid.cap_y; ++y) {
      Integer expected = in_s.count(LatticeVector(x, y)) ? 1 : 0;
      const Integer& got = series.at(x, y);
      if (got != expected)
        return fail(name, "coefficient " + got.get_str() + " at (" + std::to_string(x) + "," +
                              std::to_string(y) + "), expected " + expected.get_str());
    }
  std::ostringstream note;
  note << points.size() << " semigroup points in box " << grid.cap_x << "x" << grid.cap_y;
  return pass(name, note.str());
}

Check complex_check(const GradedResolution& res, const SemigroupFamily& f) {
  const std::string name = "complex";
  const std::size_t n = static_cast<std::size_t>(res.k) + 1;
  if (f.k() != res.k || f.is_extended()) return fail(name, "resolution does not match the family");
  GradingMap grading = GradingMap::for_family(f);

  // Ranks.
  if (res.betti.size() != res.maps.size() + 1 || res.shifts.size() != res.betti.size())
    return fail(name, "betti/shift/map counts disagree");
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    const auto& m = res.maps[i];
    if (static_cast<int>(m.size()) != res.betti[i])
      return fail(name, "delta" + std::to_string(i + 1) + " has " + std::to_string(m.size()) +
                            " rows, expected " + std::to_string(res.betti[i]));
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != res.betti[i + 1])
        return fail(name, "delta" + std::to_string(i + 1) + " has a row of the wrong length");
  }
  for (std::size_t i = 0; i < res.shifts.size(); ++i) {
    int total = 0;
    for (const auto& s : res.shifts[i]) total += s.multiplicity;
    if (total != res.betti[i])
      return fail(name, "C_" + std::to_string(i) + " multiplicities sum to " + std::to_string(total));
  }

  // delta_i delta_{i+1} = 0.
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    const auto& A = res.maps[i];
    const auto& B = res.maps[i + 1];
    for (std::size_t r = 0; r < A.size(); ++r)
      for (std::size_t c = 0; c < B.front().size(); ++c) {
        Polynomial s(n);
        for (std::size_t j = 0; j < B.size(); ++j) s += A[r][j] * B[j][c];
        if (!s.is_zero())
          return fail(name, "delta" + std::to_string(i + 1) + "*delta" + std::to_string(i + 2) +
                                " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                ") = " + show(s, n));
      }
  }

  // Minimality: entries lie in the homogeneous maximal ideal.
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (std::size_t r = 0; r < res.maps[i].size(); ++r)
      for (std::size_t c = 0; c < res.maps[i][r].size(); ++c)
        if (res.maps[i][r][c].has_constant_term())
          return fail(name, "delta" + std::to_string(i + 1) + " entry (" + std::to_string(r + 1) +
                                "," + std::to_string(c + 1) + ") has a unit term");

  // delta_1 lists the generating set.
  auto G = generating_set(res.k).G;
  const auto& d1 = res.maps.front().front();
  if (d1.size() != G.size()) return fail(name, "delta1 has the wrong number of entries");
  for (const auto& g : G)
    if (std::none_of(d1.begin(), d1.end(), [&](const Polynomial& p) { return equal_up_to_sign(p, g); }))
      return fail(name, "generator " + show(g, n) + " missing from delta1");

  // Degrees of each free module, derived from the matrices and compared with C_i.
  std::vector<IntegerVector> row_deg{IntegerVector(0L, 0L)};
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    const auto& m = res.maps[i];
    std::vector<IntegerVector> col_deg;
    for (std::size_t c = 0; c < m.front().size(); ++c) {
      std::optional<IntegerVector> deg;
      for (std::size_t r = 0; r < m.size(); ++r) {
        const auto& e = m[r][c];
        if (e.is_zero()) continue;
        std::string where = "delta" + std::to_string(i + 1) + " entry (" + std::to_string(r + 1) +
                            "," + std::to_string(c + 1) + ")";
        if (!is_s_homogeneous(e, grading)) return fail(name, where + " is not S-homogeneous");
        IntegerVector d = multidegree(e.terms().begin()->first, grading).vec() + row_deg[r];
        if (deg && !(*deg == d)) return fail(name, where + " has inconsistent S-degree");
        deg = d;
      }
      if (!deg) return fail(name, "delta" + std::to_string(i + 1) + " has a zero column");
      col_deg.push_back(*deg);
    }
    std::vector<IntegerVector> listed;
    for (const auto& s : res.shifts[i + 1])
      for (int j = 0; j < s.multiplicity; ++j) listed.push_back(s.degree.vec());
    auto derived = col_deg;
    std::sort(derived.begin(), derived.end());
    std::sort(listed.begin(), listed.end());
    if (derived != listed)
      return fail(name, "C_" + std::to_string(i + 1) + " listed " + join(listed) +
                            " but the matrices give " + join(derived));
    row_deg = std::move(col_deg);
  }

  // Named minors, up to sign, and coprime leading terms where required.
  std::size_t minors = 0;
  for (const auto& fam : named_minors(res.k)) {
    std::vector<Monomial> lts;
    for (const auto& nm : fam.minors) {
      Polynomial d = determinant(submatrix(res.maps.at(nm.map), nm.rows, nm.cols), n);
      if (!equal_up_to_sign(d, nm.expected))
        return fail(name, rows_label(nm) + " = " + show(d, n) + ", expected +-(" +
                              show(nm.expected, n) + ")");
      ++minors;
      if (fam.coprime_leading_terms)
        lts.push_back(d.leading_monomial(MonomialOrder::lex(std::vector<std::size_t>{1, 3, 2, 4, 0})));
    }
    for (std::size_t i = 0; i < lts.size(); ++i)
      for (std::size_t j = i + 1; j < lts.size(); ++j)
        if (!lts[i].coprime(lts[j]))
          return fail(name, "leading terms " + to_string(lts[i], default_variable_names(n)) + " and " +
                                to_string(lts[j], default_variable_names(n)) + " share a variable");
  }
  return pass(name, std::to_string(minors) + " named minors verified");
}

std::optional<std::size_t> quotient_dimension(std::span<const Polynomial> G, int k,
                                              std::size_t nvars) {
  std::array<std::size_t, 2> rays{0, static_cast<std::size_t>(k)};
  GroebnerBasis gb = add_variables(G, rays, MonomialOrder::grevlex(nvars));
  StandardMonomials sm = standard_monomials(gb, std::size_t{1} << 20);
  if (!sm.finite) return std::nullopt;
  return sm.monomials.size();
}

Check gastinger_check(const SemigroupFamily& f, std::span<const Polynomial> G) {
  const std::string name = "quotient_dimension";
  const std::size_t n = family_nvars(f);
  GradingMap grading = GradingMap::for_family(f);
  for (const auto& g : G) {
    if (g.nvars() != n) return fail(name, "generator lives in the wrong ring");
    if (!vanishes_under_substitution(g, grading))
      return fail(name, "generator " + to_string(g, family_variable_names(f.k(), f.is_extended()),
                                                 MonomialOrder::grevlex(n)) +
                            " does not vanish on the parametrization");
  }
  auto dim = quotient_dimension(G, f.k(), n);
  const std::size_t expected = static_cast<std::size_t>(f.k()) * static_cast<std::size_t>(f.mu());
  if (!dim) return fail(name, "quotient is infinite-dimensional, expected " + std::to_string(expected));
  if (*dim != expected)
    return fail(name, "dimension " + std::to_string(*dim) + ", expected " + std::to_string(expected));
  return pass(name, "dimension " + std::to_string(*dim) + " = |Ap|, so the generators span the defining ideal");
}

Check gastinger_check(const SemigroupFamily& f) {
  if (f.is_extended()) {
    auto G = extended_generators(f);
    return gastinger_check(f, G);
  }
  auto G = generating_set(f.k()).G;
  return gastinger_check(f, G);
}

Check groebner_claim_check(const SemigroupFamily& f, std::span<const Polynomial> G,
                           bool against_kernel) {
  const std::string name = "groebner_basis";
  if (f.is_extended()) return fail(name, "base families only");
  const std::size_t n = static_cast<std::size_t>(f.k()) + 1;
  MonomialOrder order = MonomialOrder::grevlex(n);
  GradingMap grading = GradingMap::for_family(f);
  for (const auto& g : G) {
    if (!is_s_homogeneous(g, grading)) return fail(name, "generator " + show(g, n) + " is not S-homogeneous");
    // the binomials are written LT - tail
    if (g.leading_term(order).coefficient != 1)
      return fail(name, "the leading term of " + show(g, n) + " is its second monomial");
  }

  GroebnerCheck gc = is_groebner_basis(G, order);
  if (!gc.is_groebner) {
    std::string w = "S-polynomial of elements " + std::to_string(gc.failing_pair->first + 1) + " and " +
                    std::to_string(gc.failing_pair->second + 1) + " reduces to " +
                    show(*gc.remainder, n);
    return fail(name, w);
  }
  GroebnerBasis completed = buchberger(G, order);
  std::set<Monomial> given, produced;
  for (const auto& g : G) given.insert(g.leading_monomial(order));
  for (const auto& g : completed.elements) produced.insert(g.leading_monomial(order));
  if (completed.elements.size() != G.size() || given != produced)
    return fail(name, "completion returned " + std::to_string(completed.elements.size()) +
                          " elements from " + std::to_string(G.size()));
  for (const auto& g : G) {
    Polynomial m = g.monic(order);
    if (std::find(completed.elements.begin(), completed.elements.end(), m) == completed.elements.end())
      return fail(name, "completion changed " + show(g, n));
  }

  std::string note = std::to_string(G.size()) + " elements, no completion needed";
  if (against_kernel) {
    // A Groebner basis of I_S must reach every leading term of the kernel basis.
    for (const auto& h : toric_kernel(f).elements) {
      Monomial lt = h.leading_monomial(order);
      if (std::none_of(given.begin(), given.end(), [&](const Monomial& m) { return m.divides(lt); }))
        return fail(name, "leading term " + to_string(lt, default_variable_names(n)) +
                              " of I_S is not divisible by a leading term of G");
    }
    note += ", leading terms generate LT(I_S)";
  }
  return pass(name, note);
}

Check groebner_claim_check(const SemigroupFamily& f, bool against_kernel) {
  auto G = generating_set(f.k()).G;
  return groebner_claim_check(f, G, against_kernel);
}

Check ideal_identity_check(const SemigroupFamily& f) {
  const std::string name = "ideal_identity";
  const int k = f.k();
  GeneratorFamily fam = generating_set(k, family_nvars(f));
  if (fam.G.size() != static_cast<std::size_t>(k * (k - 1) / 2))
    return fail(name, "|G| = " + std::to_string(fam.G.size()));
  for (const auto& [l, xi] : fam.xi)
    if (xi.size() != static_cast<std::size_t>(k - l + 1))
      return fail(name, "|xi_" + std::to_string(l) + "| = " + std::to_string(xi.size()));

  std::vector<Polynomial> G = f.is_extended() ? extended_generators(f) : fam.G;
  GroebnerBasis kernel = toric_kernel(f);
  if (!ideal_equal(kernel, G)) {
    MonomialOrder order = kernel.order;
    for (const auto& g : kernel.elements)
      if (!reduce(g, buchberger(G, order).elements, order).is_zero())
        return fail(name, "kernel element " +
                              to_string(g, family_variable_names(k, f.is_extended()), order) +
                              " is not in the ideal of the generators");
    return fail(name, "a generator lies outside the kernel");
  }
  return pass(name, "kernel Groebner basis has " + std::to_string(kernel.elements.size()) + " elements");
}

Check invariants_check(const SemigroupFamily& f) {
  const std::string name = "invariants";
  if (f.is_extended()) return fail(name, "base families only");
  const int k = f.k();
  AperySet ap = apery_closed_form(f);
  AperyEnumeration brute = apery_bruteforce(f);
  if (brute.cap_too_small) return fail(name, "Apery enumeration cap too small");
  if (brute.set.elements != ap.elements)
    return fail(name, "Apery closed form " + join(ap.elements) + " vs enumeration " +
                          join(brute.set.elements));
  if (ap.size() != static_cast<std::size_t>(k)) return fail(name, "|Ap| = " + std::to_string(ap.size()));

  auto qf = quasi_frobenius(f, ap);
  std::vector<IntegerVector> expected_qf;
  for (int i = 1; i < k; ++i) expected_qf.push_back(-f.generator(i).vec());
  std::sort(expected_qf.begin(), expected_qf.end());
  if (qf != expected_qf) return fail(name, "QF = " + join(qf) + ", expected " + join(expected_qf));
  int type = cm_type(f);
  if (type != k - 1) return fail(name, "type " + std::to_string(type));
  if ((type == 1) != (k == 2)) return fail(name, "Gorenstein flag disagrees with k");

  auto cm = is_cohen_macaulay(f, ap);
  if (!cm.cohen_macaulay)
    return fail(name, "Apery elements " + cm.violating_pair->first.to_string() + " and " +
                          cm.violating_pair->second.to_string() + " differ by a lattice element");
  auto normal = is_normal(f, qf);
  if (!normal.normal) return fail(name, "-QF element " + normal.witness->to_string() + " not in relint");
  return pass(name, "type " + std::to_string(type) + ", |Ap| = " + std::to_string(k));
}

Check regularity_check(const SemigroupFamily& f) {
  const std::string name = "regularity";
  RegularityResult r = regularity(f);
  if (r.regularity != 2) return fail(name, "Apery-norm regularity " + std::to_string(r.regularity));
  if (f.k() <= 4) {
    int from_res = regularity_from_resolution(resolution(f.k(), f));
    if (from_res != r.regularity)
      return fail(name, "resolution gives " + std::to_string(from_res) + ", Apery norms give " +
                            std::to_string(r.regularity));
    return pass(name, "reg = 2 from Apery norms and from the resolution");
  }
  return pass(name, "reg = 2 from Apery norms");
}

Check gluing_check(const SemigroupFamily& f) {
  const std::string name = "gluing";
  if (!f.is_extended()) return fail(name, "family has no extension");
  const int k = f.k();
  GluingData gd = gluing_data(f);
  GradingMap grading = GradingMap::for_family(f);
  auto names = family_variable_names(k, true);
  MonomialOrder order = MonomialOrder::grevlex(family_nvars(f));
  if (!vanishes_under_substitution(gd.extra_generator, grading))
    return fail(name, to_string(gd.extra_generator, names, order) + " does not vanish");
  if (gd.lambda.coefficients.front() == 0 && gd.lambda.coefficients.back() == 0)
    return fail(name, "lambda avoids both extremal generators");

  AperySet closed = apery_extended(f);
  AperyEnumeration brute = apery_bruteforce(f);
  if (brute.cap_too_small) return fail(name, "Apery enumeration cap too small");
  std::string note = "Apery set has " + std::to_string(brute.set.size()) + " elements";
  if (closed.elements != brute.set.elements)
    note = "closed form " + join(closed.elements) + " differs from enumeration " +
           join(brute.set.elements) + "; the enumeration is authoritative";

  auto qf = quasi_frobenius(f, brute.set);
  auto expected = qf_extended(f);
  if (qf != expected) return fail(name, "QF = " + join(qf) + ", closed form " + join(expected));
  if (cm_type(f) != k - 1) return fail(name, "type " + std::to_string(cm_type(f)));
  auto cm = is_cohen_macaulay(f, brute.set);
  if (!cm.cohen_macaulay)
    return fail(name, "Apery elements " + cm.violating_pair->first.to_string() + " and " +
                          cm.violating_pair->second.to_string() + " differ by a lattice element");
  return pass(name, note);
}

bool koszul_flag(const SemigroupFamily& f) {
  if (f.is_extended()) throw Error("koszul_flag: base families only");
  auto G = generating_set(f.k()).G;
  return is_quadratic(buchberger(G, MonomialOrder::grevlex(family_nvars(f))));
}

Report full_report(const SemigroupFamily& f, const ReportOptions& options) {
  Report report;
  report.family = f.describe();
  auto run = [&](const std::string& label, const std::function<Check()>& fn) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), label) == options.only.end())
      return;
    Stopwatch sw;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c = fail(label, std::string("error: ") + e.what());
    }
    if (options.record_timings) report.timings.emplace_back(c.name, sw.seconds());
    report.checks.push_back(std::move(c));
  };

  if (!f.is_extended()) {
    const int k = f.k();
    run("invariants", [&] { return invariants_check(f); });
    run("groebner_basis", [&] { return groebner_claim_check(f, options.include_toric); });
    run("quotient_dimension", [&] { return gastinger_check(f); });
    if (options.include_toric) run("ideal_identity", [&] { return ideal_identity_check(f); });
    if (k <= 4) {
      run("hilbert_truncation", [&] {
        HilbertSeriesForm form = hilbert_numerator(k, f);
        Check c = hilbert_truncation_check(f, form, options.box ? *options.box : default_box(f, &form));
        if (c.passed && form.numerator != hilbert_from_resolution(resolution(k, f), f).numerator)
          return fail(c.name, "numerator differs from the alternating sum of the resolution shifts");
        return c;
      });
      run("complex", [&] { return complex_check(resolution(k, f), f); });
    }
    run("regularity", [&] { return regularity_check(f); });
  } else {
    run("quotient_dimension", [&] { return gastinger_check(f); });
    run("gluing", [&] { return gluing_check(f); });
    if (options.include_toric) run("ideal_identity", [&] { return ideal_identity_check(f); });
  }
  return report;
}

}  // namespace sgalg
