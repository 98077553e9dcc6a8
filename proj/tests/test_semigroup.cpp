#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sgalg;
using sgtest::random_families;

namespace {

std::vector<LatticeVector> pts(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<LatticeVector> out;
  for (auto [x, y] : xs) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse_vector accepts x,y and rejects junk") {
  CHECK(parse_vector("5,4") == IntegerVector(5L, 4L));
  CHECK(parse_vector(" -3 , 7 ") == IntegerVector(-3L, 7L));
  CHECK_THROWS_AS(parse_vector("5"), Error);
  CHECK_THROWS_AS(parse_vector("5,x"), Error);
  CHECK_THROWS_AS(parse_vector("1,2,3"), Error);
}

TEST_CASE("lattice vectors stay in N^2") {
  CHECK_THROWS_AS(LatticeVector(-1L, 2L), Error);
  CHECK_FALSE(LatticeVector::from(IntegerVector(-1L, 0L)).has_value());
  CHECK(Integer(3) * LatticeVector(1L, 2L) == LatticeVector(3L, 6L));
}

TEST_CASE("solve_in_basis and in_lattice") {
  IntegerVector e1(5L, 4L), e2(17L, 31L);
  auto c = solve_in_basis(IntegerVector(22L, 35L), e1, e2);
  CHECK(c.l1 == 1);
  CHECK(c.l2 == 1);
  CHECK(in_lattice(IntegerVector(22L, 35L), e1, e2));
  CHECK_FALSE(in_lattice(IntegerVector(9L, 13L), e1, e2));
}

TEST_CASE("build_family validates eagerly") {
  SUBCASE("dependent directions") {
    try {
      build_family(LatticeVector(1L, 1L), LatticeVector(2L, 2L), 3);
      FAIL("expected FamilyError");
    } catch (const FamilyError& e) {
      CHECK(e.kind() == FamilyErrorKind::DependentDirections);
    }
  }
  SUBCASE("k too small") {
    try {
      build_family(LatticeVector(1L, 0L), LatticeVector(0L, 1L), 1);
      FAIL("expected FamilyError");
    } catch (const FamilyError& e) {
      CHECK(e.kind() == FamilyErrorKind::InvalidParameters);
    }
  }
  SUBCASE("extension making the family non-minimal") {
    // (2,1) = (0,1) + 2*(1,0)
    try {
      build_family(LatticeVector(1L, 0L), LatticeVector(1L, 1L), 3, LatticeVector(0L, 1L));
      FAIL("expected FamilyError");
    } catch (const FamilyError& e) {
      CHECK(e.kind() == FamilyErrorKind::NotMinimal);
      REQUIRE(e.witness().has_value());
      const auto& c = e.witness()->coefficients;
      CHECK(c[2] == 0);
      // the witness reproduces the redundant generator
      IntegerVector sum(0L, 0L);
      std::vector<LatticeVector> gens{LatticeVector(1L, 0L), LatticeVector(2L, 1L), LatticeVector(3L, 2L),
                                      LatticeVector(4L, 3L), LatticeVector(0L, 1L)};
      for (std::size_t i = 0; i < gens.size(); ++i) sum += c[i] * gens[i].vec();
      CHECK(sum == IntegerVector(2L, 1L));
    }
  }
  SUBCASE("b already in S") {
    try {
      build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3, LatticeVector(10L, 8L));
      FAIL("expected FamilyError");
    } catch (const FamilyError& e) {
      CHECK(e.kind() == FamilyErrorKind::BadExtension);
    }
  }
  SUBCASE("mu bound exceeded") {
    CHECK_THROWS_AS(build_family(LatticeVector(2L, 3L), LatticeVector(2L, 2L), 3, LatticeVector(9L, 11L), 1),
                    FamilyError);
  }
}

TEST_CASE("membership on the base family a=(2,3) d=(2,2) k=3") {
  auto f = build_family(LatticeVector(2L, 3L), LatticeVector(2L, 2L), 3);
  auto cert = is_member(f, IntegerVector(18L, 22L));
  REQUIRE(cert.has_value());
  IntegerVector sum(0L, 0L);
  for (int i = 0; i <= 3; ++i) sum += cert->coefficients[static_cast<std::size_t>(i)] * f.generator(i).vec();
  CHECK(sum == IntegerVector(18L, 22L));
  CHECK_FALSE(is_member(f, IntegerVector(9L, 11L)).has_value());
  CHECK_FALSE(is_member(f, IntegerVector(-1L, 3L)).has_value());
}

TEST_CASE("representations are complete and ordered") {
  auto f = build_family(LatticeVector(2L, 3L), LatticeVector(2L, 2L), 3);
  auto reps = representations(f.base_generators(), IntegerVector(18L, 22L));
  REQUIRE(reps.size() >= 2);
  for (std::size_t i = 1; i < reps.size(); ++i)
    CHECK(reps[i].coefficients < reps[i - 1].coefficients);
  // (2,0,1,1) is the first representation touching an extremal generator
  auto it = std::find_if(reps.begin(), reps.end(), [](const MembershipCertificate& c) {
    return c.coefficients.front() != 0 || c.coefficients.back() != 0;
  });
  REQUIRE(it != reps.end());
  CHECK(it->coefficients == std::vector<Integer>{2, 0, 1, 1});
}

TEST_CASE("a=(5,4) d=(4,9) k=3 invariants") {
  auto f = build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3);
  auto ap = apery_closed_form(f);
  CHECK(ap.elements == pts({{0, 0}, {9, 13}, {13, 22}}));
  CHECK(cm_type(f) == 2);
  CHECK(is_cohen_macaulay(f).cohen_macaulay);
  CHECK(is_normal(f).normal);
  auto qf = quasi_frobenius(f);
  CHECK(qf == std::vector<IntegerVector>{IntegerVector(-13L, -22L), IntegerVector(-9L, -13L)});
}

TEST_CASE("brute-force Apery set agrees with closed form and with the definition") {
  for (int k = 2; k <= 6; ++k)
    for (const auto& f : random_families(k, 5)) {
      auto brute = apery_bruteforce(f);
      CHECK_FALSE(brute.cap_too_small);
      CHECK(brute.set.elements == apery_closed_form(f).elements);
      LatticeVector top = f.generator(k);
      long cx = 3 * top.x().get_si() + 1, cy = 3 * top.y().get_si() + 1;
      CHECK(sgtest::apery_by_definition(f, cx, cy) == brute.set.elements);
    }
}

TEST_CASE("Apery enumeration flags a cap that is too small") {
  auto f = build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3);
  auto [e1, e2] = extremal_rays(f);
  std::vector<LatticeVector> E{e1, e2};
  auto shallow = apery_bruteforce(f, E, 0);
  CHECK(shallow.cap_too_small);
  auto deep = apery_bruteforce(f, E, 4);
  CHECK_FALSE(deep.cap_too_small);
  CHECK(deep.set.size() == 3);
}

TEST_CASE("Rosales criterion detects a non-CM Apery set") {
  // Two elements differing by e1 violate the criterion.
  auto f = build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3);
  AperySet fake = apery_closed_form(f);
  fake.elements.push_back(LatticeVector(14L, 17L));  // (9,13) + (5,4)
  auto res = is_cohen_macaulay(f, fake);
  CHECK_FALSE(res.cohen_macaulay);
  REQUIRE(res.violating_pair.has_value());
}

TEST_CASE("normality failure modes") {
  auto f = build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3);
  std::vector<IntegerVector> boundary{IntegerVector(-5L, -4L)};
  auto b = is_normal(f, boundary);
  CHECK_FALSE(b.normal);
  CHECK(b.failure == NormalityFailure::Boundary);
  std::vector<IntegerVector> outside{IntegerVector(3L, 4L)};
  auto o = is_normal(f, outside);
  CHECK_FALSE(o.normal);
  CHECK(o.failure == NormalityFailure::NotInCone);
}

TEST_CASE("degree in ray coordinates") {
  auto f = build_family(LatticeVector(5L, 4L), LatticeVector(4L, 9L), 3);
  auto r = degree_in_rays(f, IntegerVector(22L, 35L));
  CHECK(r.deg == 2);
  auto mid = degree_in_rays(f, IntegerVector(9L, 13L));
  CHECK(mid.deg == 1);
  CHECK_THROWS_AS(degree_in_rays(f, IntegerVector(0L, 5L)), OutsideCone);
}

TEST_CASE("extension of a=(2,3) d=(2,2) k=3 by b=(9,11)") {
  auto f = build_family(LatticeVector(2L, 3L), LatticeVector(2L, 2L), 3, LatticeVector(9L, 11L));
  CHECK(f.mu() == 2);
  auto ap = apery_set(f);
  CHECK(ap.elements == pts({{0, 0}, {4, 5}, {6, 7}, {9, 11}, {13, 16}, {15, 18}}));
  auto qf = quasi_frobenius(f);
  CHECK(qf == std::vector<IntegerVector>{IntegerVector(3L, 4L), IntegerVector(5L, 6L)});
  CHECK(cm_type(f) == 2);
  CHECK(is_cohen_macaulay(f).cohen_macaulay);
  auto n = is_normal(f);
  CHECK_FALSE(n.normal);
  CHECK(n.failure == NormalityFailure::NotInCone);
}
