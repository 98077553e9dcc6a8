#pragma once

// Shared fixtures for the test binaries: seeded random families and small
// oracles written independently of the library's own algorithms.

#include "sgalg/closed_forms.hpp"
#include "sgalg/semigroup.hpp"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace sgtest {

using namespace sgalg;

/// Valid base families with a, d drawn from [0, 6]^2 (fixed seed per call site).
inline std::vector<SemigroupFamily> random_families(int k, int count, unsigned seed = 20240601,
                                                    int max_coord = 6) {
  std::mt19937 rng(seed + static_cast<unsigned>(k) * 7919u);
  std::uniform_int_distribution<long> coord(0, max_coord);
  std::vector<SemigroupFamily> out;
  while (static_cast<int>(out.size()) < count) {
    LatticeVector a(coord(rng), coord(rng)), d(coord(rng), coord(rng));
    try {
      out.push_back(build_family(a, d, k));
    } catch (const FamilyError&) {
    }
  }
  return out;
}

/// Valid extensions S_{a,d,k}^b of random base families, b drawn from [0, 12]^2.
inline std::vector<SemigroupFamily> random_extended_families(int k, int count, unsigned seed = 1789) {
  std::mt19937 rng(seed + static_cast<unsigned>(k) * 104729u);
  std::uniform_int_distribution<long> coord(0, 6), bcoord(0, 12);
  std::vector<SemigroupFamily> out;
  while (static_cast<int>(out.size()) < count) {
    LatticeVector a(coord(rng), coord(rng)), d(coord(rng), coord(rng)), b(bcoord(rng), bcoord(rng));
    try {
      out.push_back(build_family(a, d, k, b, 8));
    } catch (const FamilyError&) {
    }
  }
  return out;
}

/// Every sum of generators inside [0, cx] x [0, cy], by repeated closure.
inline std::set<std::pair<long, long>> closure(const std::vector<LatticeVector>& gens, long cx, long cy) {
  std::set<std::pair<long, long>> seen{{0, 0}};
  std::vector<std::pair<long, long>> frontier{{0, 0}};
  while (!frontier.empty()) {
    auto [x, y] = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      long nx = x + g.x().get_si(), ny = y + g.y().get_si();
      if (nx > cx || ny > cy) continue;
      if (seen.insert({nx, ny}).second) frontier.push_back({nx, ny});
    }
  }
  return seen;
}

/// Apery set with respect to the extremal rays, straight from the definition
/// over a box large enough to hold it.
inline std::vector<LatticeVector> apery_by_definition(const SemigroupFamily& f, long cx, long cy) {
  auto s = closure(f.generators(), cx, cy);
  auto [e1, e2] = extremal_rays(f);
  std::vector<LatticeVector> out;
  for (auto [x, y] : s) {
    bool keep = true;
    for (const auto& e : {e1, e2}) {
      long dx = x - e.x().get_si(), dy = y - e.y().get_si();
      if (dx >= 0 && dy >= 0 && s.count({dx, dy})) keep = false;
    }
    if (keep) out.emplace_back(x, y);
  }
  return out;
}

/// All binomials x_i x_j - x_p x_q (i <= j, p <= q, i < p) with i + j = p + q.
/// deg(x_i x_j) = 2a + (i+j-2)d, so these are exactly the quadratic binomials of I_S.
inline std::vector<Polynomial> quadratic_binomials(int k) {
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  auto var = [n](int i) { return Monomial::variable(n, static_cast<std::size_t>(i - 1)); };
  std::vector<Polynomial> out;
  for (int i = 1; i <= k + 1; ++i)
    for (int j = i; j <= k + 1; ++j)
      for (int p = i + 1; p <= k + 1; ++p) {
        int q = i + j - p;
        if (q < p || q > k + 1) continue;
        out.push_back(Polynomial::binomial(var(p) * var(q), var(i) * var(j)));
      }
  return out;
}

}  // namespace sgtest
