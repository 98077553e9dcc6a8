#include "sgalg/closed_forms.hpp"

#include <algorithm>
#include <limits>

namespace sgalg {

namespace {

// Variable x_i (1-based) as a polynomial in n variables.
struct VarFactory {
  std::size_t n;

  Monomial m(int i) const { return Monomial::variable(n, static_cast<std::size_t>(i - 1)); }
  Polynomial x(int i) const { return Polynomial(m(i), 1); }
  // x_i*x_j - x_p*x_q
  Polynomial bin(int i, int j, int p, int q) const {
    return Polynomial::binomial(m(i) * m(j), m(p) * m(q));
  }
};

void require_supported(int k, const char* what) {
  if (k < 2 || k > 4)
    throw UnsupportedK(std::string(what) + ": closed forms exist only for k = 2, 3, 4 (got k = " +
                       std::to_string(k) + ")");
}

Shift make_shift(const SemigroupFamily& f, int multiplicity, int a_coeff, int d_coeff) {
  LatticeVector deg = Integer(a_coeff) * f.a() + Integer(d_coeff) * f.d();
  return {multiplicity, a_coeff, d_coeff, deg};
}

}  // namespace

std::vector<std::string> family_variable_names(int k, bool extended) {
  auto names = default_variable_names(static_cast<std::size_t>(k) + 1);
  if (extended) names.push_back("y");
  return names;
}

std::vector<Polynomial> xi_family(int l, int k, std::size_t nvars) {
  if (k < 2 || l < 2 || l > k)
    throw BadIndex("xi_family: need 2 <= l <= k (got l = " + std::to_string(l) +
                   ", k = " + std::to_string(k) + ")");
  if (nvars < static_cast<std::size_t>(k) + 1) throw BadIndex("xi_family: ring too small");
  VarFactory v{nvars};
  std::vector<Polynomial> out;
  if (2 * l > k + 1) {
    out.push_back(v.bin(l, l, 2 * l - k - 1, k + 1));
    for (int i = 1; i <= k - l; ++i) out.push_back(v.bin(l, l + i, 2 * l - k - 1 + i, k + 1));
  } else {
    out.push_back(v.bin(l, l, 1, 2 * l - 1));
    for (int i = 1; i <= k - 2 * l + 2; ++i) out.push_back(v.bin(l, l + i, 1, 2 * l - 1 + i));
    for (int i = k - 2 * l + 3; i <= k - l; ++i)
      out.push_back(v.bin(l, l + i, 2 * l - k - 1 + i, k + 1));
  }
  return out;
}

GeneratorFamily generating_set(int k, std::size_t nvars) {
  if (k < 2) throw BadIndex("generating_set: k must be at least 2");
  GeneratorFamily fam;
  fam.k = k;
  for (int l = 2; l <= k; ++l) {
    fam.xi[l] = xi_family(l, k, nvars);
    fam.G.insert(fam.G.end(), fam.xi[l].begin(), fam.xi[l].end());
  }
  return fam;
}

std::array<std::vector<Polynomial>, 5> gb_partition(int k) {
  std::array<std::vector<Polynomial>, 5> parts;
  for (int l = 2; l <= k; ++l) {
    auto xi = xi_family(l, k);
    if (2 * l <= k + 1) {
      // xi_l = {square} u {tails through x_1, i <= k-2l+2} u {tails through x_{k+1}}
      parts[0].push_back(xi[0]);
      std::size_t through_x1 = static_cast<std::size_t>(k - 2 * l + 2);
      for (std::size_t i = 1; i < xi.size(); ++i) parts[i <= through_x1 ? 1 : 2].push_back(xi[i]);
    } else {
      parts[3].push_back(xi[0]);
      for (std::size_t i = 1; i < xi.size(); ++i) parts[4].push_back(xi[i]);
    }
  }
  return parts;
}

GradedResolution resolution(int k, const SemigroupFamily& f) {
  require_supported(k, "resolution");
  if (f.k() != k) throw Error("resolution: family has k = " + std::to_string(f.k()));
  VarFactory v{static_cast<std::size_t>(k) + 1};
  Polynomial zero(static_cast<std::size_t>(k) + 1);
  auto x = [&](int i) { return v.x(i); };

  GradedResolution res;
  res.k = k;
  res.shifts.push_back({make_shift(f, 1, 0, 0)});

  if (k == 2) {
    res.maps.push_back({{v.bin(2, 2, 1, 3)}});
    res.shifts.push_back({make_shift(f, 1, 2, 2)});
    res.betti = {1, 1};
  } else if (k == 3) {
    res.maps.push_back({{v.bin(2, 2, 1, 3), v.bin(2, 3, 1, 4), v.bin(3, 3, 2, 4)}});
    res.maps.push_back({
        {-x(3), x(4)},
        {x(2), -x(3)},
        {-x(1), x(2)},
    });
    res.shifts.push_back({make_shift(f, 1, 2, 2), make_shift(f, 1, 2, 3), make_shift(f, 1, 2, 4)});
    res.shifts.push_back({make_shift(f, 1, 3, 4), make_shift(f, 1, 3, 5)});
    res.betti = {1, 3, 2};
  } else {
    res.maps.push_back({{v.bin(2, 2, 1, 3), v.bin(2, 3, 1, 4), v.bin(3, 3, 1, 5),
                         v.bin(2, 4, 1, 5), v.bin(3, 4, 2, 5), v.bin(4, 4, 3, 5)}});
    // Row 4, column 8 carries -x5; with +x5 the product with delta_1 is nonzero.
    res.maps.push_back({
        {-x(3), zero, -x(4), zero, x(5), zero, zero, zero},
        {x(2), -x(3), zero, -x(4), zero, x(5), x(5), zero},
        {-x(1), x(2), zero, zero, zero, -x(4), zero, x(5)},
        {x(1), zero, x(2), x(3), -x(3), zero, -x(4), -x(5)},
        {zero, -x(1), -x(1), zero, x(2), x(3), zero, -x(4)},
        {zero, zero, zero, -x(1), zero, zero, x(2), x(3)},
    });
    res.maps.push_back({
        {x(4), -x(5), zero},
        {zero, x(4), -x(5)},
        {-x(3), zero, x(5)},
        {x(2), -x(3), zero},
        {zero, -x(3), x(4)},
        {-x(1), x(2), zero},
        {x(1), zero, -x(3)},
        {zero, -x(1), x(2)},
    });
    res.shifts.push_back({make_shift(f, 1, 2, 2), make_shift(f, 1, 2, 3), make_shift(f, 2, 2, 4),
                          make_shift(f, 1, 2, 5), make_shift(f, 1, 2, 6)});
    res.shifts.push_back({make_shift(f, 1, 3, 4), make_shift(f, 2, 3, 5), make_shift(f, 2, 3, 6),
                          make_shift(f, 2, 3, 7), make_shift(f, 1, 3, 8)});
    res.shifts.push_back({make_shift(f, 1, 4, 7), make_shift(f, 1, 4, 8), make_shift(f, 1, 4, 9)});
    res.betti = {1, 6, 8, 3};
  }
  return res;
}

HilbertSeriesForm hilbert_numerator(int k, const SemigroupFamily& f) {
  require_supported(k, "hilbert_numerator");
  if (f.k() != k) throw Error("hilbert_numerator: family has k = " + std::to_string(f.k()));
  HilbertSeriesForm h;
  auto add = [&](int sign, int a_coeff, int d_coeff) {
    LatticeVector s = Integer(a_coeff) * f.a() + Integer(d_coeff) * f.d();
    h.numerator[s] += sign;
  };
  add(+1, 0, 0);
  if (k == 2) {
    add(-1, 2, 2);
  } else if (k == 3) {
    for (int i = 2; i <= 4; ++i) add(-1, 2, i);
    for (int i = 4; i <= 5; ++i) add(+1, 3, i);
  } else {
    add(-1, 2, 4);
    for (int i = 2; i <= 6; ++i) add(-1, 2, i);
    for (int i = 4; i <= 8; ++i) add(+1, 3, i);
    for (int i = 5; i <= 7; ++i) add(+1, 3, i);
    for (int i = 7; i <= 9; ++i) add(-1, 4, i);
  }
  std::erase_if(h.numerator, [](const auto& kv) { return kv.second == 0; });
  for (int i = 0; i <= k; ++i) h.denominator.push_back(f.generator(i));
  return h;
}

HilbertSeriesForm hilbert_from_resolution(const GradedResolution& res, const SemigroupFamily& f) {
  HilbertSeriesForm h;
  for (std::size_t i = 0; i < res.shifts.size(); ++i) {
    int sign = (i % 2 == 0) ? 1 : -1;
    for (const auto& s : res.shifts[i]) h.numerator[s.degree] += sign * s.multiplicity;
  }
  std::erase_if(h.numerator, [](const auto& kv) { return kv.second == 0; });
  for (int i = 0; i <= f.k(); ++i) h.denominator.push_back(f.generator(i));
  return h;
}

RegularityResult regularity(const SemigroupFamily& f) {
  if (f.is_extended()) throw Error("regularity: only base families are supported");
  const int k = f.k();
  auto G = generating_set(k).G;
  for (const auto& g : G)
    if (!g.is_standard_homogeneous())
      throw NotHomogeneous("regularity: generator is not standard-homogeneous");

  MonomialOrder order = MonomialOrder::grevlex(static_cast<std::size_t>(k) + 1);
  std::array<std::size_t, 2> rays{0, static_cast<std::size_t>(k)};
  GroebnerBasis quotient = add_variables(G, rays, order);
  StandardMonomials sm = standard_monomials(quotient);
  if (!sm.finite) throw Error("regularity: quotient by the extremal variables is infinite");

  GradingMap grading = GradingMap::for_family(f);
  std::map<LatticeVector, std::vector<Monomial>> by_degree;
  for (const auto& m : sm.monomials) by_degree[multidegree(m, grading)].push_back(m);

  RegularityResult out;
  int reg = 0;
  for (const auto& b : apery_closed_form(f).elements) {
    auto it = by_degree.find(b);
    if (it == by_degree.end() || it->second.size() != 1)
      throw Error("regularity: no unique standard monomial of degree " + b.to_string());
    std::uint64_t norm = it->second.front().degree();
    out.norms.emplace_back(b, norm);
    reg = std::max(reg, static_cast<int>(norm) + 1);
  }
  out.regularity = reg;
  return out;
}

int regularity_from_resolution(const GradedResolution& res) {
  int reg = std::numeric_limits<int>::min();
  // C_{i+1} holds the degrees of the i-th syzygies of I.
  for (std::size_t i = 1; i < res.shifts.size(); ++i) {
    int t = 0;
    for (const auto& s : res.shifts[i]) t = std::max(t, s.standard_degree());
    reg = std::max(reg, t - static_cast<int>(i - 1));
  }
  return reg;
}

GluingData gluing_data(const SemigroupFamily& f) {
  if (!f.is_extended()) throw Error("gluing_data: family has no extension");
  const int k = f.k();
  const LatticeVector& b = *f.extension();
  GluingData g;
  g.mu = f.mu();
  g.glue_degree = Integer(g.mu) * b;

  auto reps = representations(f.base_generators(), g.glue_degree);
  std::vector<MembershipCertificate> qualifying;
  for (auto& r : reps)
    if (r.coefficients.front() != 0 || r.coefficients.back() != 0) qualifying.push_back(r);
  if (qualifying.empty()) throw Error("gluing_data: no qualifying representation of mu*b");
  g.qualifying_representations = qualifying.size();
  // Representations arrive in decreasing lexicographic order.
  g.lambda = qualifying.front();

  const std::size_t n = static_cast<std::size_t>(k) + 2;
  Monomial ymu = Monomial::variable(n, n - 1, static_cast<Exponent>(g.mu));
  Monomial xl(n);
  for (int i = 0; i <= k; ++i) {
    const Integer& c = g.lambda.coefficients[static_cast<std::size_t>(i)];
    if (c > std::numeric_limits<Exponent>::max()) throw Error("gluing_data: exponent overflow");
    xl[static_cast<std::size_t>(i)] = static_cast<Exponent>(c.get_ui());
  }
  g.extra_generator = Polynomial::binomial(ymu, xl);
  return g;
}

std::vector<Polynomial> extended_generators(const SemigroupFamily& f) {
  auto G = generating_set(f.k(), static_cast<std::size_t>(f.k()) + 2).G;
  G.push_back(gluing_data(f).extra_generator);
  return G;
}

AperySet apery_extended(const SemigroupFamily& f) {
  if (!f.is_extended()) throw Error("apery_extended: family has no extension");
  const LatticeVector& b = *f.extension();
  auto [e1, e2] = extremal_rays(f);
  AperySet ap;
  ap.base = {e1, e2};
  ap.elements.push_back(LatticeVector(0, 0));
  for (int j = 1; j < f.mu(); ++j) ap.elements.push_back(Integer(j) * b);
  for (int i = 1; i < f.k(); ++i)
    for (int l = 0; l < f.mu(); ++l) ap.elements.push_back(f.generator(i) + Integer(l) * b);
  std::sort(ap.elements.begin(), ap.elements.end());
  ap.elements.erase(std::unique(ap.elements.begin(), ap.elements.end()), ap.elements.end());
  return ap;
}

std::vector<IntegerVector> qf_extended(const SemigroupFamily& f) {
  if (!f.is_extended()) throw Error("qf_extended: family has no extension");
  IntegerVector top = (Integer(f.mu() - 1) * *f.extension()).vec();
  std::vector<IntegerVector> qf;
  for (int i = 1; i < f.k(); ++i) qf.push_back(top - f.generator(i).vec());
  std::sort(qf.begin(), qf.end());
  return qf;
}

std::vector<int> extended_betti(int k) {
  require_supported(k, "extended_betti");
  switch (k) {
    case 2: return {1, 2, 1};
    case 3: return {1, 4, 5, 2};
    default: return {1, 7, 14, 11, 3};
  }
}

std::vector<int> mapping_cone_betti(const std::vector<int>& base) {
  std::vector<int> out(base.size() + 1, 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    out[i] += base[i];
    out[i + 1] += base[i];
  }
  return out;
}

}  // namespace sgalg
