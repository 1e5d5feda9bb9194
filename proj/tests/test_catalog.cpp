#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "cgafact/catalog.hpp"

using namespace cgafact;

namespace {

RealPolynomial expected_quadrance(const CatalogEntry& e) {
  const LinearQuadrance q1 = linear_quadrance(e.h1);
  const LinearQuadrance q2 = linear_quadrance(e.h2);
  return RealPolynomial({q1.p, -q1.s, 1.0}) * RealPolynomial({q2.p, -q2.s, 1.0});
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& es = entries();
  REQUIRE(es.size() == 8);
  std::set<std::string> names;
  for (const auto& e : es) {
    names.insert(e.name);
    CHECK(e.polynomial().degree() == 2);
  }
  CHECK(names.size() == 8);
  CHECK(find_entry("villarceau") != nullptr);
  CHECK(find_entry("no-such-entry") == nullptr);
}

TEST_CASE("catalog factor types match the declared pairings") {
  for (const auto& e : entries()) {
    INFO(e.name);
    CHECK(classify_linear(e.h1) == e.expected_type_h1);
    CHECK(classify_linear(e.h2) == e.expected_type_h2);
  }
}

TEST_CASE("catalog pairs are irregular by construction") {
  for (const auto& e : entries()) {
    INFO(e.name);
    CHECK(is_irregular_pair(e.h1, e.h2));
    CHECK(study_conditions(e.h1).both());
    CHECK(study_conditions(e.h2).both());
  }
}

TEST_CASE("catalog quadrances factor as the pairing dictates") {
  for (const auto& e : entries()) {
    INFO(e.name);
    const RealPolynomial P = quadrance_poly(e.polynomial());
    const RealPolynomial E = expected_quadrance(e);
    REQUIRE(P.c.size() == 5);
    REQUIRE(E.c.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(P.c[i] - E.c[i]) <= 1e-12);
  }
}

TEST_CASE("specific quadrance shapes") {
  // the three infinite entries all sit over (t^2 + 1)^2
  for (const char* name : {"rotation-rotation", "circular-translation", "villarceau"}) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e != nullptr);
    const RealPolynomial P = quadrance_poly(e->polynomial());
    const double expect[5] = {1.0, 0.0, 2.0, 0.0, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(P.c[i] - expect[i]) <= 1e-12);
  }
  // nilpotent-pair entry sits over t^2 (t^2 + 1)
  {
    const CatalogEntry* e = find_entry("transversion-rotation");
    const RealPolynomial P = quadrance_poly(e->polynomial());
    const double expect[5] = {0.0, 0.0, 1.0, 0.0, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(P.c[i] - expect[i]) <= 1e-12);
  }
}

TEST_CASE("expected verdicts are internally consistent") {
  int finite = 0, infinite = 0;
  for (const auto& e : entries()) {
    if (e.expected_verdict == Verdict::Finite) {
      ++finite;
      CHECK(e.expected_count >= 1);
    } else {
      CHECK(e.expected_verdict == Verdict::Infinite);
      ++infinite;
    }
    CHECK_FALSE(e.expected_trivial);
  }
  CHECK(finite == 5);
  CHECK(infinite == 3);
}

TEST_CASE("verify_entry passes on the nilpotent-pair entry") {
  const CatalogEntry* e = find_entry("transversion-rotation");
  REQUIRE(e != nullptr);
  SolveOptions opt;
  opt.multistart = 3000;
  const EntryVerification v = verify_entry(*e, opt);
  for (const auto& c : v.checks) {
    INFO(c.name << ": " << c.detail << " value " << c.value);
    CHECK(c.pass);
  }
  CHECK(v.pass);
}
