#ifndef CGAFACT_MATRIX_REP_HPP
#define CGAFACT_MATRIX_REP_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "cgafact/algebra.hpp"
#include "cgafact/errors.hpp"

//------------------------------------------------------------------------------
// Faithful representation of the algebra on 4x4 complex matrices, plus the
// closed-form determinant of self-reverse elements and invertibility tests
// built on it. An element a is invertible iff a*rev(a) is, and a*rev(a) is
// always self-reverse, so the 12-coefficient determinant formula decides
// invertibility of arbitrary elements.
//------------------------------------------------------------------------------

namespace cgafact {

using RepMatrix = Eigen::Matrix4cd;

namespace detail {

inline std::array<RepMatrix, 5> make_generator_matrices() {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C o(0.0, 0.0);
  const C one(1.0, 0.0);
  std::array<RepMatrix, 5> g;
  // e1
  g[0] << o, -i, o, o,
          i,  o, o, o,
          o,  o, o, -i,
          o,  o, i,  o;
  // e2
  g[1] << -one, o,    o,   o,
           o,   one,  o,   o,
           o,   o,   -one, o,
           o,   o,    o,   one;
  // e3
  g[2] << o, o, o, one,
          o, o, one, o,
          o, one, o, o,
          one, o, o, o;
  // e+
  g[3] << o,   one, o,    o,
          one, o,   o,    o,
          o,   o,   o,   -one,
          o,   o,  -one,  o;
  // e-
  g[4] << o,    o,   o,   one,
          o,    o,   one, o,
          o,   -one, o,   o,
          -one, o,   o,   o;
  return g;
}

}  // namespace detail

inline const std::array<RepMatrix, 5>& generator_matrices() {
  static const std::array<RepMatrix, 5> g = detail::make_generator_matrices();
  return g;
}

// Image of each basis blade: the product of its generators in canonical order.
inline const std::array<RepMatrix, 32>& blade_matrices() {
  static const std::array<RepMatrix, 32> tab = [] {
    std::array<RepMatrix, 32> t;
    const auto& g = generator_matrices();
    for (unsigned mask = 0; mask < 32; ++mask) {
      RepMatrix m = RepMatrix::Identity();
      for (int b = 0; b < 5; ++b)
        if (mask & (1u << b)) m = m * g[b];
      t[mask] = m;
    }
    return t;
  }();
  return tab;
}

inline RepMatrix represent(const Multivector& a) {
  RepMatrix m = RepMatrix::Zero();
  const auto& tab = blade_matrices();
  for (unsigned mask = 0; mask < 32; ++mask)
    if (a.c[mask] != 0.0) m += a.c[mask] * tab[mask];
  return m;
}

inline RepMatrix represent(const EvenMultivector& a) { return represent(a.embed()); }

//------------------------------------------------------------------------------
// Self-reverse elements: reversion fixes exactly grades 0, 1, 4, 5, i.e. the
// 12 coefficients below. Their matrix determinant is (q - 2 i m)^2 with the
// two real quadratic forms q and m.
//------------------------------------------------------------------------------

inline constexpr std::array<unsigned, 12> kSelfReverseMasks = {
    0,                   // scalar
    1, 2, 4, 8, 16,      // e1 e2 e3 ep em
    15, 23, 27, 29, 30,  // e123p e123m e12pm e13pm e23pm
    31};                 // e123pm

struct SelfReverseElement {
  // grade 0        grade 1                    grade 4                              grade 5
  double s = 0, x1 = 0, x2 = 0, x3 = 0, xp = 0, xm = 0, x123p = 0, x123m = 0,
         x12pm = 0, x13pm = 0, x23pm = 0, x123pm = 0;

  static SelfReverseElement from_multivector(const Multivector& a,
                                             double tol = kDefaultTol) {
    Multivector rest = a;
    for (unsigned m : kSelfReverseMasks) rest.c[m] = 0.0;
    if (rest.inf_norm() > tol * std::max(1.0, a.inf_norm()))
      throw std::invalid_argument(
          "element has grade-2/3 parts; not self-reverse");
    SelfReverseElement x;
    x.s = a.c[0];
    x.x1 = a.c[1];
    x.x2 = a.c[2];
    x.x3 = a.c[4];
    x.xp = a.c[8];
    x.xm = a.c[16];
    x.x123p = a.c[15];
    x.x123m = a.c[23];
    x.x12pm = a.c[27];
    x.x13pm = a.c[29];
    x.x23pm = a.c[30];
    x.x123pm = a.c[31];
    return x;
  }

  Multivector to_multivector() const {
    Multivector a;
    a.c[0] = s;
    a.c[1] = x1;
    a.c[2] = x2;
    a.c[4] = x3;
    a.c[8] = xp;
    a.c[16] = xm;
    a.c[15] = x123p;
    a.c[23] = x123m;
    a.c[27] = x12pm;
    a.c[29] = x13pm;
    a.c[30] = x23pm;
    a.c[31] = x123pm;
    return a;
  }

  double inf_norm() const {
    return to_multivector().inf_norm();
  }
};

inline double det_form_q(const SelfReverseElement& x) {
  return x.s * x.s - x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3 - x.xp * x.xp +
         x.xm * x.xm - x.x123p * x.x123p + x.x123m * x.x123m + x.x12pm * x.x12pm +
         x.x13pm * x.x13pm + x.x23pm * x.x23pm - x.x123pm * x.x123pm;
}

inline double det_form_m(const SelfReverseElement& x) {
  return x.s * x.x123pm - x.x1 * x.x23pm + x.x2 * x.x13pm - x.x3 * x.x12pm +
         x.xp * x.x123m - x.xm * x.x123p;
}

// det represent(x) = (q - 2 i m)^2 for self-reverse x.
inline std::complex<double> det_fast(const SelfReverseElement& x) {
  const std::complex<double> z(det_form_q(x), -2.0 * det_form_m(x));
  return z * z;
}

inline std::complex<double> det_fast(const Multivector& a, double tol = kDefaultTol) {
  return det_fast(SelfReverseElement::from_multivector(a, tol));
}

//------------------------------------------------------------------------------
// Invertibility. Singularity threshold scales quadratically because q and m
// are quadratic in the coefficients of x = a*rev(a).
//------------------------------------------------------------------------------

inline constexpr double kSingularTol = 1e-7;

namespace detail {

// 32x32 matrix of y -> a*y in blade coordinates.
inline Eigen::Matrix<double, 32, 32> left_mult_matrix(const Multivector& a) {
  Eigen::Matrix<double, 32, 32> L = Eigen::Matrix<double, 32, 32>::Zero();
  for (unsigned k = 0; k < 32; ++k) {
    if (a.c[k] == 0.0) continue;
    for (unsigned j = 0; j < 32; ++j)
      L(k ^ j, j) += kSigns.s[k][j] * a.c[k];
  }
  return L;
}

}  // namespace detail

struct InvertibilityWitness {
  bool invertible = false;
  double q = 0.0;  // determinant forms of a*rev(a)
  double m = 0.0;
  std::optional<Multivector> inverse;
  double residual = 0.0;  // |a * inverse - 1|_inf when the inverse is present
};

// Decides invertibility of a from the determinant forms of x = a*rev(a); when
// invertible (and wanted) produces the inverse rev(a) * x^{-1}, computing
// x^{-1} inside the 12-dim self-reverse subspace and falling back to a full
// 32-dim solve of a*y = 1 if that fails to verify.
inline InvertibilityWitness check_invertibility(const Multivector& a,
                                                double singular_tol = kSingularTol,
                                                bool want_inverse = true) {
  InvertibilityWitness w;
  const Multivector x = quadrance(a);
  const auto sr = SelfReverseElement::from_multivector(x, 1e-6);
  w.q = det_form_q(sr);
  w.m = det_form_m(sr);
  const double xn = x.inf_norm();
  const double thr = singular_tol * (1.0 + xn * xn);
  w.invertible = std::max(std::abs(w.q), std::abs(w.m)) > thr;
  if (!w.invertible || !want_inverse) return w;

  const double an = std::max(1.0, a.inf_norm());

  // x^{-1} lives in the self-reverse subspace whenever it exists: solve the
  // 32x12 least-squares system x * y = 1 over that subspace.
  Eigen::Matrix<double, 32, 12> A;
  for (int j = 0; j < 12; ++j) {
    const Multivector col = x * Multivector::blade(kSelfReverseMasks[j]);
    for (int i = 0; i < 32; ++i) A(i, j) = col.c[i];
  }
  Eigen::Matrix<double, 32, 1> e0 = Eigen::Matrix<double, 32, 1>::Zero();
  e0(0) = 1.0;
  const Eigen::Matrix<double, 12, 1> y = A.colPivHouseholderQr().solve(e0);

  Multivector xinv;
  for (int j = 0; j < 12; ++j) xinv.c[kSelfReverseMasks[j]] = y(j);
  Multivector inv = a.reversed() * xinv;
  double res = (a * inv - Multivector::scalar(1.0)).inf_norm();
  const double ok = 1e-8 * an * std::max(1.0, inv.inf_norm());
  if (res <= ok) {
    w.inverse = inv;
    w.residual = res;
    return w;
  }

  // Fallback: solve a*y = 1 on all 32 coordinates.
  const Eigen::Matrix<double, 32, 32> L = detail::left_mult_matrix(a);
  const Eigen::Matrix<double, 32, 1> yfull = L.colPivHouseholderQr().solve(e0);
  Multivector inv2;
  for (int i = 0; i < 32; ++i) inv2.c[i] = yfull(i);
  res = (a * inv2 - Multivector::scalar(1.0)).inf_norm();
  if (res > 1e-8 * an * std::max(1.0, inv2.inf_norm()))
    throw InverseVerificationFailed(
        "element passed the determinant test but no inverse verified");
  w.inverse = inv2;
  w.residual = res;
  return w;
}

inline bool is_invertible(const Multivector& a, double singular_tol = kSingularTol) {
  return check_invertibility(a, singular_tol, false).invertible;
}

inline bool is_invertible(const EvenMultivector& a,
                          double singular_tol = kSingularTol) {
  return is_invertible(a.embed(), singular_tol);
}

inline Multivector inverse(const Multivector& a,
                           double singular_tol = kSingularTol) {
  const auto w = check_invertibility(a, singular_tol, true);
  if (!w.invertible) throw NotInvertible("element is not invertible");
  return *w.inverse;
}

// Inverses of even elements stay even.
inline EvenMultivector inverse(const EvenMultivector& a,
                               double singular_tol = kSingularTol) {
  return EvenMultivector::from_multivector(inverse(a.embed(), singular_tol), 1e-8);
}

}  // namespace cgafact

#endif
