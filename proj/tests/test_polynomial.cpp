#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cgafact/numeric.hpp"
#include "cgafact/polynomial.hpp"

using namespace cgafact;

namespace {

constexpr unsigned E12 = 3, E13 = 5, E3P = 12, E3M = 20, EPM = 24, E12PM = 27;
constexpr unsigned E123P = 15;

EvenMultivector ebl(unsigned mask, double v = 1.0) {
  return EvenMultivector::blade(mask, v);
}

// random grade-1 vector product: uv + s is always a simple-motion generator
EvenMultivector random_study(Rng& rng, bool with_scalar = true) {
  Multivector u, v;
  for (unsigned i = 0; i < 5; ++i) {
    u.c[1u << i] = rng.uniform(-1.0, 1.0);
    v.c[1u << i] = rng.uniform(-1.0, 1.0);
  }
  EvenMultivector h = EvenMultivector::from_multivector(u * v);
  if (with_scalar) h.c[0] += rng.uniform(-1.0, 1.0);
  return h;
}

}  // namespace

TEST_CASE("real roots of a cubic") {
  // (t - 1)(t - 2)(t + 3) = t^3 - 7t + 6
  const RealPolynomial p({6.0, -7.0, 0.0, 1.0});
  const auto roots = real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0].value + 3.0) <= 1e-10);
  CHECK(std::abs(roots[1].value - 1.0) <= 1e-10);
  CHECK(std::abs(roots[2].value - 2.0) <= 1e-10);
  for (const auto& r : roots) CHECK(r.multiplicity == 1);
}

TEST_CASE("clustered double root is reported with multiplicity") {
  // (t - 1)^2 (t^2 + 1) = t^4 - 2t^3 + 2t^2 - 2t + 1
  const RealPolynomial p({1.0, -2.0, 2.0, -2.0, 1.0});
  const auto roots = real_roots(p);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].value - 1.0) <= 1e-6);
  CHECK(roots[0].multiplicity == 2);
}

TEST_CASE("polynomial arithmetic and evaluation") {
  const RealPolynomial a({1.0, 1.0});       // 1 + t
  const RealPolynomial b({-2.0, 0.0, 1.0}); // t^2 - 2
  const RealPolynomial ab = a * b;
  CHECK(ab.c.size() == 4);
  CHECK(ab.evaluate(3.0) == a.evaluate(3.0) * b.evaluate(3.0));
  const RealPolynomial s = a + b;
  CHECK(s.evaluate(2.0) == a.evaluate(2.0) + b.evaluate(2.0));
  CHECK(b.derivative().evaluate(5.0) == 10.0);
}

TEST_CASE("motion polynomial product oracle") {
  // (t - e12)(t - (-1 + e12)) = t^2 + (1 - 2 e12) t - 1 - e12
  const EvenMultivector h1 = ebl(E12);
  EvenMultivector h2 = EvenMultivector::scalar(-1.0);
  h2 += ebl(E12);
  const MotionPolynomial C = MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
  REQUIRE(C.degree() == 2);
  EvenMultivector c1 = EvenMultivector::scalar(1.0);
  c1 += ebl(E12, -2.0);
  EvenMultivector c0 = EvenMultivector::scalar(-1.0);
  c0 += ebl(E12, -1.0);
  CHECK(approx_equal(C.coeff(1), c1, 1e-15));
  CHECK(approx_equal(C.coeff(0), c0, 1e-15));
  CHECK(approx_equal(C.coeff(2), EvenMultivector::scalar(1.0), 0.0));
}

TEST_CASE("right evaluation annihilates right factors") {
  Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    const EvenMultivector h1 = random_study(rng);
    const EvenMultivector h2 = random_study(rng);
    const MotionPolynomial C =
        MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
    CHECK(C.right_evaluate(h2).inf_norm() <= 1e-12);
    // plain evaluation at a real value matches the coefficient sum
    const EvenMultivector v = C.evaluate(2.0);
    EvenMultivector expect = C.coeff(2) * 4.0 + C.coeff(1) * 2.0 + C.coeff(0);
    CHECK(approx_equal(v, expect, 1e-14));
  }
}

TEST_CASE("quadrance of the torus motion is (t^2+1)^2") {
  const MotionPolynomial C =
      MotionPolynomial::linear(ebl(E12)) * MotionPolynomial::linear(ebl(E3P));
  // C = t^2 - (e12 + e3p) t + e123p
  CHECK(approx_equal(C.coeff(0), ebl(E123P), 1e-15));
  const RealPolynomial P = quadrance_poly(C);
  REQUIRE(P.c.size() == 5);
  const double expect[5] = {1.0, 0.0, 2.0, 0.0, 1.0};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(P.c[i] - expect[i]) <= 1e-14);
}

TEST_CASE("study-violating input is rejected") {
  // h with a grade-4 part: h + rev(h) is not real
  EvenMultivector h = ebl(E12);
  h.set_mask(E12PM, 0.5);
  CHECK_FALSE(study_conditions(h).both());
  const MotionPolynomial C = MotionPolynomial::linear(h);
  CHECK_THROWS_AS(quadrance_poly(C), NotAMotionPolynomial);
  CHECK_FALSE(is_motion_polynomial(C));
}

TEST_CASE("zero quadrance is its own failure mode") {
  const MotionPolynomial C{{ebl(E3P) + ebl(E3M)}};  // null constant
  CHECK_THROWS_AS(quadrance_poly(C), ZeroQuadrance);
  CHECK_FALSE(is_motion_polynomial(C));
}

TEST_CASE("division by a real quadratic reproduces quotient and remainder") {
  // C = (t^2 + 1)(t + e12) + (e13 t + 1)
  const MotionPolynomial Q{{ebl(E12), EvenMultivector::scalar(1.0)}};
  const MotionPolynomial M = MotionPolynomial::from_real(RealPolynomial({1.0, 0.0, 1.0}));
  MotionPolynomial C = M * Q;
  C.c[1] += ebl(E13);
  C.c[0] += EvenMultivector::scalar(1.0);
  const QuadraticDivision d = divide_by_real_quadratic(C, 0.0, 1.0);
  CHECK(approx_equal(d.quotient.coeff(0), ebl(E12), 1e-14));
  CHECK(approx_equal(d.quotient.coeff(1), EvenMultivector::scalar(1.0), 1e-14));
  CHECK(approx_equal(d.r1, ebl(E13), 1e-14));
  CHECK(approx_equal(d.r0, EvenMultivector::scalar(1.0), 1e-14));
}

TEST_CASE("monic normalization factors out an invertible leading coefficient") {
  EvenMultivector lead = EvenMultivector::scalar(2.0);
  lead += ebl(E12);
  MotionPolynomial C =
      MotionPolynomial::linear(ebl(E12)) * MotionPolynomial::linear(ebl(E3P));
  C = lead * C;
  const MotionPolynomial Cm = monic_normalized(C);
  CHECK(approx_equal(Cm.coeff(2), EvenMultivector::scalar(1.0), 1e-14));
  const MotionPolynomial back = lead * Cm;
  for (int i = 0; i <= 2; ++i)
    CHECK(approx_equal(back.coeff(i), C.coeff(i), 1e-12));

  // a null leading coefficient cannot be normalized away
  MotionPolynomial bad = C;
  bad.c[2] = ebl(E3P) + ebl(E3M);
  CHECK_THROWS_AS(monic_normalized(bad), NonInvertibleLeadingCoefficient);
}

TEST_CASE("linear motion classification") {
  CHECK(classify_linear(ebl(E12)) == MotionType::Rotation);
  CHECK(classify_linear(ebl(E3P) + ebl(E3M)) == MotionType::Transversion);
  CHECK(classify_linear(ebl(EPM)) == MotionType::Scaling);

  CHECK(classify_discriminant(0.0, 1.0) == MotionType::Rotation);
  CHECK(classify_discriminant(2.0 * std::sqrt(2.0), 2.0) == MotionType::Transversion);
  CHECK(classify_discriminant(0.0, -1.0) == MotionType::Scaling);

  EvenMultivector bad = ebl(E12);
  bad.set_mask(E12PM, 1.0);
  CHECK_THROWS_AS(classify_linear(bad), NotAMotionPolynomial);
}

TEST_CASE("study conditions hold on vector-product generators") {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    const EvenMultivector h = random_study(rng);
    const auto sc = study_conditions(h);
    CHECK(sc.both());
    // quadrance of t - h is t^2 - s t + p with the classified values
    const LinearQuadrance lq = linear_quadrance(h);
    const MotionPolynomial lin = MotionPolynomial::linear(h);
    const RealPolynomial P = quadrance_poly(lin);
    CHECK(std::abs(P.coeff(1) + lq.s) <= 1e-12 * std::max(1.0, std::abs(lq.s)));
    CHECK(std::abs(P.coeff(0) - lq.p) <= 1e-12 * std::max(1.0, std::abs(lq.p)));
  }
}
