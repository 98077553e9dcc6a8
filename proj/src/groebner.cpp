#include "sgalg/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace sgalg {

GradingMap GradingMap::for_family(const SemigroupFamily& f) {
  GradingMap g;
  for (const auto& gen : f.generators()) g.degrees.push_back(gen.vec());
  return g;
}

LatticeVector multidegree(const Monomial& m, const GradingMap& g) {
  if (m.nvars() != g.nvars()) throw Error("multidegree: ring size mismatch");
  Integer x = 0, y = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    x += Integer(m[i]) * g.degrees[i].x;
    y += Integer(m[i]) * g.degrees[i].y;
  }
  return LatticeVector(x, y);
}

bool is_s_homogeneous(const Polynomial& p, const GradingMap& g) {
  if (p.is_zero()) return true;
  LatticeVector first = multidegree(p.terms().begin()->first, g);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return multidegree(t.first, g) == first; });
}

bool vanishes_under_substitution(const Polynomial& p, const GradingMap& g) {
  std::map<LatticeVector, Rational> image;
  for (const auto& [m, c] : p.terms()) image[multidegree(m, g)] += c;
  return std::all_of(image.begin(), image.end(), [](const auto& kv) { return kv.second == 0; });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  Term lf = f.leading_term(order);
  Term lg = g.leading_term(order);
  Monomial gamma = lcm(lf.monomial, lg.monomial);
  return f * Term{gamma / lf.monomial, 1 / lf.coefficient} -
         g * Term{gamma / lg.monomial, 1 / lg.coefficient};
}

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, OrderLess>;

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Rational lc;
};

std::vector<Reducer> make_reducers(std::span<const Polynomial> G, const MonomialOrder& order) {
  std::vector<Reducer> out;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    Term lt = g.leading_term(order);
    out.push_back({&g, lt.monomial, lt.coefficient});
  }
  return out;
}

Polynomial reduce_with(const Polynomial& f, const std::vector<Reducer>& reducers,
                       const MonomialOrder& order) {
  OrderedTerms work(OrderLess{&order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  Polynomial remainder(f.nvars());
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Reducer* hit = nullptr;
    for (const auto& r : reducers)
      if (r.lm.divides(top->first)) {
        hit = &r;
        break;
      }
    if (!hit) {
      remainder.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    Monomial q = top->first / hit->lm;
    Rational s = top->second / hit->lc;
    for (const auto& [m, c] : hit->poly->terms()) {
      Monomial mq = m * q;
      Rational delta = -s * c;
      auto [it, inserted] = work.try_emplace(mq, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

// Minimal, inter-reduced, monic, sorted.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const MonomialOrder& order) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    Monomial lm = G[i].leading_monomial(order);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial other = G[j].leading_monomial(order);
      // Equal leading monomials: keep the earliest.
      if (other.divides(lm) && (other != lm || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i].monic(order));
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Term lt = minimal[i].leading_term(order);
    Polynomial tail = minimal[i] - Polynomial(lt.monomial, lt.coefficient);
    Polynomial r = reduce(tail, others, order);
    r.add_term(lt.monomial, lt.coefficient);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto c = order.compare(a.leading_monomial(order), b.leading_monomial(order));
    if (c != 0) return c > 0;
    return a.leading_monomial(order) < b.leading_monomial(order);
  });
  return out;
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order) {
  return reduce_with(f, make_reducers(G, order), order);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<Polynomial> G;
  std::vector<Monomial> lms;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != order.nvars()) throw Error("buchberger: ring size mismatch");
    G.push_back(g.monic(order));
    lms.push_back(G.back().leading_monomial(order));
  }
  if (G.empty()) return {order, {}, true};

  // Pending pairs keyed by (lcm degree, j, i): normal strategy, deterministic.
  using Key = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<Key> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    queue.emplace(lcm(lms[i], lms[j]).degree(), j, i);
    pending.emplace(i, j);
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    return pending.count({std::min(i, j), std::max(i, j)}) > 0;
  };
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    ++st.pairs_considered;

    if (lms[i].coprime(lms[j])) {
      ++st.coprime_skips;
      continue;
    }
    Monomial gamma = lcm(lms[i], lms[j]);
    bool chain = false;
    for (std::size_t m = 0; m < G.size() && !chain; ++m) {
      if (m == i || m == j) continue;
      if (lms[m].divides(gamma) && !is_pending(i, m) && !is_pending(j, m)) chain = true;
    }
    if (chain) {
      ++st.chain_skips;
      continue;
    }

    Polynomial r = reduce(s_polynomial(G[i], G[j], order), G, order);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    G.push_back(r.monic(order));
    lms.push_back(G.back().leading_monomial(order));
    ++st.elements_added;
    std::size_t n = G.size() - 1;
    for (std::size_t p = 0; p < n; ++p) push_pair(p, n);
  }
  return {order, reduce_basis(std::move(G), order), true};
}

GroebnerCheck is_groebner_basis(std::span<const Polynomial> G, const MonomialOrder& order) {
  GroebnerCheck out;
  auto reducers = make_reducers(G, order);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].is_zero() || G[j].is_zero()) continue;
      Polynomial r = reduce_with(s_polynomial(G[i], G[j], order), reducers, order);
      if (!r.is_zero()) {
        out.failing_pair = std::make_pair(i, j);
        out.remainder = std::move(r);
        return out;
      }
    }
  }
  out.is_groebner = true;
  return out;
}

std::size_t family_nvars(const SemigroupFamily& f) { return f.generators().size(); }

GroebnerBasis toric_kernel(const SemigroupFamily& f, BuchbergerStats* stats) {
  const std::size_t nx = family_nvars(f);
  const std::size_t n = nx + 2;
  const std::size_t t1 = nx, t2 = nx + 1;

  auto to_exponent = [](const Integer& v) {
    if (v < 0 || v > std::numeric_limits<Exponent>::max())
      throw Error("toric_kernel: coordinate too large for an exponent: " + v.get_str());
    return static_cast<Exponent>(v.get_ui());
  };

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nx; ++i) {
    const LatticeVector& g = f.generators()[i];
    Monomial t(n);
    t[t1] = to_exponent(g.x());
    t[t2] = to_exponent(g.y());
    gens.push_back(Polynomial::binomial(Monomial::variable(n, i), t));
  }
  std::vector<std::size_t> precedence{t1, t2};
  for (std::size_t i = 0; i < nx; ++i) precedence.push_back(i);
  MonomialOrder elim = MonomialOrder::elimination(precedence, 2);
  GroebnerBasis big = buchberger(gens, elim, stats);

  GroebnerBasis out{MonomialOrder::grevlex(nx), {}, true};
  GradingMap grading = GradingMap::for_family(f);
  for (const auto& p : big.elements) {
    bool free_of_t = std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
      return t.first[t1] == 0 && t.first[t2] == 0;
    });
    if (!free_of_t) continue;
    Polynomial q(nx);
    for (const auto& [m, c] : p.terms()) {
      std::vector<Exponent> e(m.exponents().begin(), m.exponents().begin() + nx);
      q.add_term(Monomial(std::move(e)), c);
    }
    if (!is_s_homogeneous(q, grading) || !vanishes_under_substitution(q, grading))
      throw Error("toric_kernel: eliminated element is not in the kernel");
    out.elements.push_back(std::move(q));
  }
  return out;
}

bool ideal_equal(const GroebnerBasis& G1, std::span<const Polynomial> G2) {
  for (const auto& g : G2)
    if (!reduce(g, G1.elements, G1.order).is_zero()) return false;
  GroebnerBasis other = buchberger(G2, G1.order);
  for (const auto& g : G1.elements)
    if (!reduce(g, other.elements, other.order).is_zero()) return false;
  return true;
}

StandardMonomials standard_monomials(const GroebnerBasis& G, std::optional<std::size_t> cap) {
  const std::size_t n = G.order.nvars();
  std::vector<Monomial> lms;
  for (const auto& g : G.elements)
    if (!g.is_zero()) lms.push_back(g.leading_monomial(G.order));

  StandardMonomials out;
  for (std::size_t v = 0; v < n; ++v) {
    bool pure_power = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      if (m[v] == 0) return false;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && m[u] != 0) return false;
      return true;
    });
    if (!pure_power) return out;
  }
  out.finite = true;

  auto is_standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Standard monomials form an order ideal: grow it from 1.
  std::set<Monomial> seen;
  std::vector<Monomial> frontier;
  Monomial one(n);
  if (is_standard(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial mv = m * Monomial::variable(n, v);
        if (!seen.count(mv) && is_standard(mv)) {
          seen.insert(mv);
          next.push_back(mv);
          if (cap && seen.size() > *cap)
            throw Error("standard_monomials: more than " + std::to_string(*cap) + " monomials");
        }
      }
    }
    frontier = std::move(next);
  }
  out.monomials.assign(seen.begin(), seen.end());
  std::sort(out.monomials.begin(), out.monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return G.order.less(a, b);
  });
  return out;
}

GroebnerBasis add_variables(std::span<const Polynomial> G, std::span<const std::size_t> vars,
                            const MonomialOrder& order) {
  std::vector<Polynomial> gens(G.begin(), G.end());
  for (std::size_t v : vars) gens.emplace_back(Monomial::variable(order.nvars(), v), 1);
  return buchberger(gens, order);
}

bool is_quadratic(const GroebnerBasis& G) {
  return std::all_of(G.elements.begin(), G.elements.end(), [](const Polynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return t.first.degree() == 2; });
  });
}

}  // namespace sgalg
