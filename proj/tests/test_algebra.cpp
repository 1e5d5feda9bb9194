#include <catch2/catch_amalgamated.hpp>

#include "cgafact/algebra.hpp"
#include "cgafact/numeric.hpp"

using namespace cgafact;

namespace {

// blade masks used throughout: bit0..bit4 = e1 e2 e3 e+ e-
constexpr unsigned E1 = 1, E2 = 2, E3 = 4, EP = 8, EM = 16;
constexpr unsigned E12 = 3, E13 = 5, E23 = 6, E1P = 9, E2P = 10, E3P = 12,
                   E1M = 17, E2M = 18, E3M = 20, EPM = 24;
constexpr unsigned E123P = 15, E123PM = 31;

Multivector bl(unsigned mask, double v = 1.0) { return Multivector::blade(mask, v); }

Multivector random_mv(Rng& rng) {
  Multivector m;
  for (auto& c : m.c) c = rng.uniform(-1.0, 1.0);
  return m;
}

EvenMultivector random_even(Rng& rng) {
  EvenMultivector m;
  for (auto& c : m.c) c = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("generator squares and anticommutation") {
  const unsigned gens[5] = {E1, E2, E3, EP, EM};
  const double sq[5] = {1.0, 1.0, 1.0, 1.0, -1.0};
  for (int i = 0; i < 5; ++i) {
    const Multivector p = bl(gens[i]) * bl(gens[i]);
    CHECK(p.c[0] == sq[i]);
    CHECK(non_scalar_norm(p) == 0.0);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const Multivector anti = bl(gens[i]) * bl(gens[j]) + bl(gens[j]) * bl(gens[i]);
      CHECK(anti.inf_norm() == 0.0);
    }
}

TEST_CASE("hand-computed bivector products") {
  struct Oracle {
    unsigned a, b, r;
    double sign;
  };
  const Oracle cases[] = {
      {E12, E13, E23, -1.0}, {E13, E12, E23, 1.0},  {E1M, E12, E2M, 1.0},
      {E12, E1M, E2M, -1.0}, {E12, E23, E13, 1.0},  {E23, E12, E13, -1.0},
      {E2M, E12, E1M, -1.0}, {E12, E2M, E1M, 1.0},  {E12, E1P, E2P, -1.0},
      {E1P, E12, E2P, 1.0},  {E3P, E13, E1P, -1.0}, {E13, E3P, E1P, 1.0},
      {E3P, E2P, E23, 1.0},  {E2P, E3P, E23, -1.0}, {E3P, E23, E2P, -1.0},
      {E23, E3P, E2P, 1.0},  {E3P, E1P, E13, 1.0},  {E1P, E3P, E13, -1.0},
      {E2M, E2P, EPM, 1.0},  {E2P, E2M, EPM, -1.0}, {E2M, EPM, E2P, 1.0},
      {EPM, E2M, E2P, -1.0}, {E2P, EPM, E2M, 1.0},  {EPM, E2P, E2M, -1.0},
      {E3M, EPM, E3P, 1.0},  {E12, E3P, E123P, 1.0}, {E3P, E12, E123P, 1.0},
  };
  for (const auto& o : cases) {
    const Multivector p = bl(o.a) * bl(o.b);
    INFO("masks " << o.a << " * " << o.b);
    CHECK(p.c[o.r] == o.sign);
    Multivector rest = p;
    rest.c[o.r] = 0.0;
    CHECK(rest.inf_norm() == 0.0);
  }
}

TEST_CASE("bivector squares") {
  CHECK((bl(E1M) * bl(E1M)).c[0] == 1.0);
  CHECK((bl(E1P) * bl(E1P)).c[0] == -1.0);
  CHECK((bl(E13) * bl(E13)).c[0] == -1.0);
  CHECK((bl(EPM) * bl(EPM)).c[0] == 1.0);
  CHECK((bl(E3P) * bl(E3P)).c[0] == -1.0);
  CHECK((bl(E123P) * bl(E123P)).c[0] == 1.0);
}

TEST_CASE("grades and reversion signs") {
  CHECK(grade_of(0) == 0);
  CHECK(grade_of(E1) == 1);
  CHECK(grade_of(E12) == 2);
  CHECK(grade_of(E123P) == 4);
  CHECK(grade_of(E123PM) == 5);
  CHECK(reversion_sign(0) == 1);
  CHECK(reversion_sign(1) == 1);     // e1, grade 1
  CHECK(reversion_sign(3) == -1);    // e12, grade 2
  CHECK(reversion_sign(7) == -1);    // e123, grade 3
  CHECK(reversion_sign(15) == 1);    // e123+, grade 4
  CHECK(reversion_sign(31) == 1);    // pseudoscalar, grade 5
  CHECK(bl(E12).reversed().c[E12] == -1.0);
  CHECK(bl(E123P).reversed().c[E123P] == 1.0);
}

TEST_CASE("reversion is an anti-automorphism") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const Multivector a = random_mv(rng), b = random_mv(rng);
    CHECK(approx_equal((a * b).reversed(), b.reversed() * a.reversed(), 1e-12));
  }
}

TEST_CASE("geometric product is associative and distributive") {
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    const Multivector a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
    CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12));
    CHECK(approx_equal(a * (b + c), a * b + a * c, 1e-12));
  }
}

TEST_CASE("quadrance oracles") {
  const Multivector null2 = bl(E3P) + bl(E3M);
  CHECK(quadrance(null2).inf_norm() <= 1e-15);

  const Multivector g = Multivector::scalar(2.0) + bl(E12);
  const Multivector q = quadrance(g);
  CHECK(q.c[0] == 5.0);
  CHECK(non_scalar_norm(q) == 0.0);

  CHECK(quadrance(bl(E12)).c[0] == 1.0);
}

TEST_CASE("even subalgebra closure and table consistency") {
  Rng rng(13);
  for (int k = 0; k < 25; ++k) {
    const EvenMultivector a = random_even(rng), b = random_even(rng);
    const Multivector full = a.embed() * b.embed();
    CHECK(full.odd_part().inf_norm() <= 1e-14);
    CHECK(approx_equal((a * b).embed(), full, 1e-12));
    CHECK(approx_equal(a.reversed().embed(), a.embed().reversed(), 0.0));
  }
}

TEST_CASE("even masks cover exactly the even grades") {
  int count = 0;
  for (unsigned mask = 0; mask < kBladeCount; ++mask)
    if (grade_of(mask) % 2 == 0) {
      ++count;
      CHECK(even_index_of_mask(mask) >= 0);
    } else {
      CHECK(even_index_of_mask(mask) < 0);
    }
  CHECK(count == kEvenCount);
}

TEST_CASE("commutators behind the torus motion are exactly zero") {
  const EvenMultivector a =
      EvenMultivector::blade(E12) + EvenMultivector::blade(E3P);
  const EvenMultivector u =
      EvenMultivector::blade(E13) + EvenMultivector::blade(E2P);
  const EvenMultivector v =
      EvenMultivector::blade(E23) - EvenMultivector::blade(E1P);
  CHECK(commutator(a, u).inf_norm() == 0.0);
  CHECK(commutator(a, v).inf_norm() == 0.0);
  // the pieces do not commute individually
  CHECK(commutator(EvenMultivector::blade(E12), u).inf_norm() == 2.0);
}

TEST_CASE("grade-4 norm and study-condition ingredients") {
  EvenMultivector h = EvenMultivector::blade(E12, 2.0);
  CHECK(grade4_norm(h) == 0.0);
  h.set_mask(27, 0.5);  // e12pm
  CHECK(grade4_norm(h) == 0.5);
}

TEST_CASE("blade names round trip") {
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    const std::string name = blade_name(mask);
    CHECK(parse_blade_name(name) == mask);
  }
  CHECK(blade_name(0) == "s");
  CHECK(blade_name(E12) == "e12");
  CHECK(blade_name(E3P) == "e3p");
  CHECK(blade_name(E123PM) == "e123pm");
  CHECK_THROWS_AS(parse_blade_name("e21"), FormatError);
  CHECK_THROWS_AS(parse_blade_name("e11"), FormatError);
  CHECK_THROWS_AS(parse_blade_name("ex"), FormatError);
  CHECK_THROWS_AS(parse_blade_name(""), FormatError);
  CHECK_THROWS_AS(parse_blade_name("q"), FormatError);
}

TEST_CASE("wedge agrees with the antisymmetrized product on vectors") {
  Rng rng(17);
  for (int k = 0; k < 10; ++k) {
    Multivector u, v;
    for (unsigned i = 0; i < 5; ++i) {
      u.c[1u << i] = rng.uniform(-1.0, 1.0);
      v.c[1u << i] = rng.uniform(-1.0, 1.0);
    }
    const Multivector w = (u * v - v * u) * 0.5;
    CHECK(approx_equal(u ^ v, w, 1e-13));
  }
}
