#ifndef CGAFACT_POLYNOMIAL_HPP
#define CGAFACT_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "cgafact/algebra.hpp"
#include "cgafact/errors.hpp"
#include "cgafact/matrix_rep.hpp"

//------------------------------------------------------------------------------
// Real polynomials (quadrances, quadratic divisors) and polynomials with even
// multivector coefficients and a central indeterminate. The indeterminate
// commutes with everything; the coefficients do not commute with each other,
// which is why left/right factor order matters throughout.
//------------------------------------------------------------------------------

namespace cgafact {

//------------------------------------------------------------------------------
// RealPolynomial
//------------------------------------------------------------------------------

struct RealPolynomial {
  std::vector<double> c;  // c[i] multiplies t^i

  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  static RealPolynomial constant(double v) { return RealPolynomial({v}); }

  // highest index with |c[i]| > tol; -1 for the zero polynomial
  int degree(double tol = 0.0) const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (std::abs(c[i]) > tol) return i;
    return -1;
  }

  double coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0.0;
  }

  double evaluate(double t) const {
    double v = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
    return v;
  }

  std::complex<double> evaluate(std::complex<double> t) const {
    std::complex<double> v = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
    return v;
  }

  RealPolynomial derivative() const {
    if (c.size() <= 1) return RealPolynomial({0.0});
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return RealPolynomial(std::move(d));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }

  RealPolynomial monic(double tol = 1e-12) const {
    const int d = degree(tol * max_abs_coeff());
    if (d < 0) throw Error("cannot normalize the zero polynomial");
    std::vector<double> out(c.begin(), c.begin() + d + 1);
    const double lead = out.back();
    for (double& v : out) v /= lead;
    return RealPolynomial(std::move(out));
  }
};

inline RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.c.empty() || b.c.empty()) return RealPolynomial({0.0});
  std::vector<double> out(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return RealPolynomial(std::move(out));
}

inline RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> out(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RealPolynomial(std::move(out));
}

//------------------------------------------------------------------------------
// Roots: companion-matrix eigenvalues, one Newton polish, conservative
// clustering. Multiplicity comes from cluster size.
//------------------------------------------------------------------------------

inline std::vector<std::complex<double>> all_roots(const RealPolynomial& p) {
  const double scale = p.max_abs_coeff();
  const int d = p.degree(1e-12 * scale);
  if (d < 0) throw Error("root finding on the zero polynomial");
  if (d == 0) return {};
  std::vector<double> a(p.c.begin(), p.c.begin() + d + 1);
  const double lead = a.back();
  for (double& v : a) v /= lead;

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -a[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);

  std::vector<std::complex<double>> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);

  // one round of Newton polish; skipped near multiple roots where p' vanishes
  const RealPolynomial dp = p.derivative();
  for (auto& z : roots) {
    for (int k = 0; k < 3; ++k) {
      const std::complex<double> fv = p.evaluate(z);
      const std::complex<double> dv = dp.evaluate(z);
      if (std::abs(dv) < 1e-12 * std::max(1.0, scale)) break;
      const std::complex<double> step = fv / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

struct RealRoot {
  double value = 0.0;
  int multiplicity = 0;
};

// Real roots with multiplicities; imaginary parts below cluster_tol * scale are
// projected out, and roots closer than cluster_tol * scale merge.
inline std::vector<RealRoot> real_roots(const RealPolynomial& p,
                                        double cluster_tol = 1e-7) {
  std::vector<double> vals;
  for (const auto& z : all_roots(p)) {
    if (std::abs(z.imag()) <= cluster_tol * std::max(1.0, std::abs(z)))
      vals.push_back(z.real());
  }
  std::sort(vals.begin(), vals.end());
  std::vector<RealRoot> out;
  for (double v : vals) {
    if (!out.empty() &&
        std::abs(v - out.back().value) <= cluster_tol * std::max(1.0, std::abs(v))) {
      // running mean keeps the merged value centered
      auto& r = out.back();
      r.value = (r.value * r.multiplicity + v) / (r.multiplicity + 1);
      r.multiplicity += 1;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

//------------------------------------------------------------------------------
// MotionPolynomial
//------------------------------------------------------------------------------

struct MotionPolynomial {
  std::vector<EvenMultivector> c;  // c[i] multiplies t^i

  MotionPolynomial() = default;
  explicit MotionPolynomial(std::vector<EvenMultivector> coeffs) : c(std::move(coeffs)) {}

  // t - h
  static MotionPolynomial linear(const EvenMultivector& h) {
    return MotionPolynomial({-h, EvenMultivector::scalar(1.0)});
  }

  static MotionPolynomial from_real(const RealPolynomial& p) {
    std::vector<EvenMultivector> out(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) out[i] = EvenMultivector::scalar(p.c[i]);
    return MotionPolynomial(std::move(out));
  }

  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (!c[i].is_zero()) return i;
    return -1;
  }

  EvenMultivector coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : EvenMultivector{};
  }

  double inf_norm() const {
    double m = 0.0;
    for (const auto& k : c) m = std::max(m, k.inf_norm());
    return m;
  }

  // ordinary evaluation at a real parameter
  EvenMultivector evaluate(double t) const {
    EvenMultivector v;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
    return v;
  }

  // right evaluation: sum c_i h^i with the powers of h on the right
  EvenMultivector right_evaluate(const EvenMultivector& h) const {
    EvenMultivector acc;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * h + c[i];
    return acc;
  }

  // coefficientwise reversion
  MotionPolynomial reversed() const {
    std::vector<EvenMultivector> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].reversed();
    return MotionPolynomial(std::move(out));
  }
};

inline MotionPolynomial operator+(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<EvenMultivector> out(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return MotionPolynomial(std::move(out));
}

inline MotionPolynomial operator-(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<EvenMultivector> out(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return MotionPolynomial(std::move(out));
}

// Cauchy product; coefficient products keep left-to-right order.
inline MotionPolynomial operator*(const MotionPolynomial& a, const MotionPolynomial& b) {
  if (a.c.empty() || b.c.empty()) return MotionPolynomial({EvenMultivector{}});
  std::vector<EvenMultivector> out(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  }
  return MotionPolynomial(std::move(out));
}

inline MotionPolynomial operator*(const EvenMultivector& a, const MotionPolynomial& b) {
  std::vector<EvenMultivector> out(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = a * b.c[i];
  return MotionPolynomial(std::move(out));
}

inline MotionPolynomial operator*(double s, const MotionPolynomial& b) {
  std::vector<EvenMultivector> out(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = b.c[i] * s;
  return MotionPolynomial(std::move(out));
}

inline bool approx_equal(const MotionPolynomial& a, const MotionPolynomial& b,
                         double tol = kDefaultTol) {
  const std::size_t n = std::max(a.c.size(), b.c.size());
  const double scale = std::max({1.0, a.inf_norm(), b.inf_norm()});
  for (std::size_t i = 0; i < n; ++i) {
    const EvenMultivector d = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    if (d.inf_norm() > tol * scale) return false;
  }
  return true;
}

//------------------------------------------------------------------------------
// Quadrance polynomial and the motion-polynomial predicate
//------------------------------------------------------------------------------

// C * rev(C), checked to be real, nonzero, and equal to rev(C) * C.
inline RealPolynomial quadrance_poly(const MotionPolynomial& C, double tol = kDefaultTol) {
  const MotionPolynomial right = C * C.reversed();
  const MotionPolynomial left = C.reversed() * C;
  const double n = C.inf_norm();
  const double scale = std::max(1.0, n * n);

  std::vector<double> coeffs(right.c.size(), 0.0);
  for (std::size_t i = 0; i < right.c.size(); ++i) {
    if (non_scalar_norm(right.c[i]) > tol * scale)
      throw NotAMotionPolynomial("quadrance coefficient of t^" + std::to_string(i) +
                                 " is not real");
    coeffs[i] = right.c[i].scalar_part();
  }
  for (std::size_t i = 0; i < std::max(left.c.size(), right.c.size()); ++i) {
    const EvenMultivector d =
        left.coeff(static_cast<int>(i)) - right.coeff(static_cast<int>(i));
    if (d.inf_norm() > tol * scale)
      throw NotAMotionPolynomial("left and right quadrances disagree");
  }
  bool nonzero = false;
  for (double v : coeffs)
    if (std::abs(v) > tol * scale) nonzero = true;
  if (!nonzero) throw ZeroQuadrance("quadrance is the zero polynomial");
  return RealPolynomial(std::move(coeffs));
}

inline bool is_motion_polynomial(const MotionPolynomial& C, double tol = kDefaultTol) {
  try {
    quadrance_poly(C, tol);
    return true;
  } catch (const NotAMotionPolynomial&) {
    return false;
  } catch (const ZeroQuadrance&) {
    return false;
  }
}

//------------------------------------------------------------------------------
// Division by a real monic quadratic: C = Q * M + (r1 t + r0). M is central,
// so the division is one-sided-safe and always defined.
//------------------------------------------------------------------------------

struct QuadraticDivision {
  MotionPolynomial quotient;
  EvenMultivector r1, r0;

  MotionPolynomial remainder() const {
    return MotionPolynomial({r0, r1});
  }
};

inline QuadraticDivision divide_by_real_quadratic(const MotionPolynomial& C,
                                                  double mu1, double mu0) {
  std::vector<EvenMultivector> rem = C.c;
  const int dc = C.degree();
  std::vector<EvenMultivector> q(dc >= 2 ? dc - 1 : 1);
  for (int k = dc; k >= 2; --k) {
    const EvenMultivector lead = rem[k];
    if (lead.is_zero()) continue;
    q[k - 2] = lead;
    rem[k] = EvenMultivector{};
    rem[k - 1] -= lead * mu1;
    rem[k - 2] -= lead * mu0;
  }
  QuadraticDivision out;
  out.quotient = MotionPolynomial(std::move(q));
  out.r0 = rem.empty() ? EvenMultivector{} : rem[0];
  out.r1 = rem.size() > 1 ? rem[1] : EvenMultivector{};
  return out;
}

inline QuadraticDivision divide_by_real_quadratic(const MotionPolynomial& C,
                                                  const RealPolynomial& M,
                                                  double tol = 1e-9) {
  if (M.degree() != 2 || std::abs(M.c[2] - 1.0) > tol)
    throw Error("divisor must be a monic real quadratic");
  return divide_by_real_quadratic(C, M.coeff(1), M.coeff(0));
}

//------------------------------------------------------------------------------
// Linear factors t - h: the two realness conditions and the three-way
// classification via the discriminant of the quadrance.
//------------------------------------------------------------------------------

enum class MotionType { Rotation, Transversion, Scaling };

inline const char* motion_type_name(MotionType t) {
  switch (t) {
    case MotionType::Rotation: return "rotation";
    case MotionType::Transversion: return "transversion";
    case MotionType::Scaling: return "scaling";
  }
  return "?";
}

struct StudyConditions {
  bool sum_real = false;   // h + rev(h) real, i.e. no grade-4 part
  bool quad_real = false;  // h rev(h) real
  double sum_residual = 0.0;
  double quad_residual = 0.0;

  bool both() const { return sum_real && quad_real; }
};

inline StudyConditions study_conditions(const EvenMultivector& h,
                                        double tol = 1e-7) {
  StudyConditions out;
  const double n = std::max(1.0, h.inf_norm());
  out.sum_residual = grade4_norm(h);
  out.sum_real = out.sum_residual <= tol * n;
  out.quad_residual = non_scalar_norm(quadrance(h));
  out.quad_real = out.quad_residual <= tol * n * n;
  return out;
}

// Quadrance of t - h as (s, p): (t-h)(t-rev h) = t^2 - s t + p.
struct LinearQuadrance {
  double s = 0.0;
  double p = 0.0;
  double discriminant() const { return s * s - 4.0 * p; }
};

inline LinearQuadrance linear_quadrance(const EvenMultivector& h) {
  LinearQuadrance q;
  q.s = 2.0 * h.scalar_part();  // h + rev(h), assuming the grade-4 part vanishes
  q.p = quadrance(h).scalar_part();
  return q;
}

inline constexpr double kDiscriminantTol = 1e-8;

inline MotionType classify_discriminant(double s, double p,
                                        double disc_tol = kDiscriminantTol) {
  const double disc = s * s - 4.0 * p;
  const double scale = std::max({1.0, std::abs(s), std::sqrt(std::abs(p))});
  if (std::abs(disc) <= disc_tol * scale * scale) return MotionType::Transversion;
  return disc < 0.0 ? MotionType::Rotation : MotionType::Scaling;
}

// 0, 1, or 2 distinct real roots of the quadrance of t - h.
inline MotionType classify_linear(const EvenMultivector& h,
                                  double tol = 1e-7) {
  const StudyConditions sc = study_conditions(h, tol);
  if (!sc.both())
    throw NotAMotionPolynomial("t - h is not a motion polynomial");
  const LinearQuadrance q = linear_quadrance(h);
  return classify_discriminant(q.s, q.p);
}

//------------------------------------------------------------------------------
// Monic normalization: left-multiply by the inverse of the leading coefficient.
// The scaled polynomial is again a motion polynomial because the leading
// coefficient has real nonzero quadrance.
//------------------------------------------------------------------------------

inline MotionPolynomial monic_normalized(const MotionPolynomial& C,
                                         double singular_tol = kSingularTol) {
  const int d = C.degree();
  if (d < 0) throw Error("cannot normalize the zero polynomial");
  const EvenMultivector lead = C.c[d];
  const EvenMultivector one = EvenMultivector::scalar(1.0);
  if ((lead - one).inf_norm() == 0.0) {
    MotionPolynomial out = C;
    out.c.resize(d + 1);
    return out;
  }
  EvenMultivector inv;
  try {
    inv = inverse(lead, singular_tol);
  } catch (const NotInvertible&) {
    throw NonInvertibleLeadingCoefficient(
        "leading coefficient is not invertible; cannot normalize");
  }
  std::vector<EvenMultivector> out(d + 1);
  for (int i = 0; i <= d; ++i) out[i] = inv * C.c[i];
  return MotionPolynomial(std::move(out));
}

}  // namespace cgafact

#endif
