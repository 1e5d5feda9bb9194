#ifndef CGAFACT_FACTORIZATION_HPP
#define CGAFACT_FACTORIZATION_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgafact/algebra.hpp"
#include "cgafact/errors.hpp"
#include "cgafact/matrix_rep.hpp"
#include "cgafact/numeric.hpp"
#include "cgafact/polynomial.hpp"

//------------------------------------------------------------------------------
// Factorization of quadratic motion polynomials into linear factors.
//
// Pipeline per quadratic divisor M of the quadrance: divide C = Q M + r1 t + r0.
// If r1 is invertible the unique candidate is h = -r1^{-1} r0 (regular branch);
// otherwise the right factors are the solutions of the linear system R(h) = 0
// intersected with the quadric conditions h rev(h) real and M(h) = 0 (irregular
// branch). Everything found is re-verified by right evaluation, and the
// cofactor is checked to be a simple motion as well.
//------------------------------------------------------------------------------

namespace cgafact {

//------------------------------------------------------------------------------
// Quadratic divisors of the quadrance
//------------------------------------------------------------------------------

struct QuadraticChoice {
  double mu1 = 0.0, mu0 = 0.0;  // M = t^2 + mu1 t + mu0
  std::array<std::complex<double>, 2> roots{};  // the two quadrance roots consumed

  RealPolynomial poly() const { return RealPolynomial({mu0, mu1, 1.0}); }
};

// All monic quadratic divisors of P assembled from conjugation-closed pairs of
// its roots: each complex-conjugate pair is forced together, real roots pair
// freely (respecting multiplicity). Deduplicated by coefficients.
inline std::vector<QuadraticChoice> quadratic_factor_choices(
    const RealPolynomial& P, double cluster_tol = 1e-7) {
  const int deg = P.degree(1e-12 * P.max_abs_coeff());
  if (deg <= 0 || deg % 2 != 0)
    throw Error("quadrance must have positive even degree");

  const auto roots = all_roots(P);
  std::vector<double> reals;
  std::vector<std::complex<double>> upper, lower;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) <= cluster_tol * std::max(1.0, std::abs(z)))
      reals.push_back(z.real());
    else if (z.imag() > 0.0)
      upper.push_back(z);
    else
      lower.push_back(z);
  }
  if (reals.size() % 2 != 0 || upper.size() != lower.size())
    throw OddRealRootCount("real/complex root split is inconsistent; root "
                           "finding failed to resolve a conjugate pair");

  // multiplicity-aware polish: an m-fold root of P is a simple root of the
  // (m-1)-th derivative, where Newton is well conditioned; evaluating P
  // itself there would drown in cancellation at the eps^(1/m) noise floor
  auto polish = [&](std::complex<double> z, int mult) {
    RealPolynomial Q = P;
    for (int k = 1; k < mult; ++k) Q = Q.derivative();
    const RealPolynomial Qd = Q.derivative();
    for (int it = 0; it < 6; ++it) {
      const std::complex<double> dv = Qd.evaluate(z);
      if (std::abs(dv) < 1e-300) break;
      const std::complex<double> step = Q.evaluate(z) / dv;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return z;
  };

  // cluster real roots into (value, multiplicity)
  std::sort(reals.begin(), reals.end());
  std::vector<RealRoot> rr;
  for (double v : reals) {
    if (!rr.empty() &&
        std::abs(v - rr.back().value) <= cluster_tol * std::max(1.0, std::abs(v))) {
      auto& r = rr.back();
      r.value = (r.value * r.multiplicity + v) / (r.multiplicity + 1);
      r.multiplicity += 1;
    } else {
      rr.push_back({v, 1});
    }
  }
  for (auto& r : rr)
    r.value = polish({r.value, 0.0}, r.multiplicity).real();

  std::vector<QuadraticChoice> out;
  auto push = [&](double mu1, double mu0, std::complex<double> a,
                  std::complex<double> b) {
    // repeated conjugate pairs carry O(sqrt(eps)) root error, so dedup at
    // cluster_tol rather than machine precision
    const double s = std::max({1.0, std::abs(mu1), std::abs(mu0)});
    for (const auto& c : out)
      if (std::abs(c.mu1 - mu1) <= cluster_tol * s &&
          std::abs(c.mu0 - mu0) <= cluster_tol * s)
        return;
    out.push_back({mu1, mu0, {a, b}});
  };

  // validate conjugate symmetry: every upper root needs a lower partner
  std::vector<bool> used(lower.size(), false);
  for (const auto& z : upper) {
    int best = -1;
    double bd = 0.0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (used[i]) continue;
      const double dd = std::abs(lower[i] - std::conj(z));
      if (best < 0 || dd < bd) {
        best = static_cast<int>(i);
        bd = dd;
      }
    }
    if (best < 0 || bd > 1e-6 * std::max(1.0, std::abs(z)))
      throw OddRealRootCount("unpaired complex root");
    used[best] = true;
  }

  // cluster the upper half-plane roots, polish, emit one divisor per cluster
  std::sort(upper.begin(), upper.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return a.real() != b.real() ? a.real() < b.real()
                                          : a.imag() < b.imag();
            });
  struct ComplexRoot {
    std::complex<double> z;
    int multiplicity;
  };
  std::vector<ComplexRoot> cc;
  for (const auto& z : upper) {
    if (!cc.empty() && std::abs(z - cc.back().z) <=
                           cluster_tol * std::max(1.0, std::abs(z))) {
      auto& r = cc.back();
      r.z = (r.z * static_cast<double>(r.multiplicity) + z) /
            static_cast<double>(r.multiplicity + 1);
      r.multiplicity += 1;
    } else {
      cc.push_back({z, 1});
    }
  }
  for (auto& r : cc) {
    r.z = polish(r.z, r.multiplicity);
    push(-2.0 * r.z.real(), std::norm(r.z), r.z, std::conj(r.z));
  }

  // real pairs, same root twice only with multiplicity >= 2
  for (std::size_t i = 0; i < rr.size(); ++i)
    for (std::size_t j = i; j < rr.size(); ++j) {
      if (i == j && rr[i].multiplicity < 2) continue;
      const double a = rr[i].value, b = rr[j].value;
      push(-(a + b), a * b, a, b);
    }

  std::sort(out.begin(), out.end(), [](const QuadraticChoice& a, const QuadraticChoice& b) {
    if (a.mu1 != b.mu1) return a.mu1 < b.mu1;
    return a.mu0 < b.mu0;
  });
  return out;
}

//------------------------------------------------------------------------------
// Regular branch
//------------------------------------------------------------------------------

struct RightFactorOutcome {
  enum class Kind {
    Found,      // h is a verified right factor
    NoRoot,     // this divisor yields no motion factorization
    Irregular,  // r1 not invertible; the irregular solver takes over
  };
  Kind kind = Kind::NoRoot;
  EvenMultivector h;
  double residual = 0.0;   // |C(h)| for Found
  EvenMultivector r1, r0;  // division remainder, always filled
};

inline RightFactorOutcome regular_right_factor(const MotionPolynomial& C,
                                               const QuadraticChoice& M,
                                               double tol = kDefaultTol) {
  RightFactorOutcome out;
  const QuadraticDivision div = divide_by_real_quadratic(C, M.mu1, M.mu0);
  out.r1 = div.r1;
  out.r0 = div.r0;

  const auto w = check_invertibility(div.r1.embed());
  if (!w.invertible) {
    out.kind = RightFactorOutcome::Kind::Irregular;
    return out;
  }
  const EvenMultivector inv = EvenMultivector::from_multivector(*w.inverse, 1e-8);
  const EvenMultivector h = -(inv * div.r0);

  const double hn = h.inf_norm();
  const double vscale = std::max({1.0, hn * hn, C.inf_norm()});
  const double res = C.right_evaluate(h).inf_norm();
  if (res >= 1e-5 * vscale) {
    out.kind = RightFactorOutcome::Kind::NoRoot;  // clean miss: not a right root
    return out;
  }
  if (res > 1e-8 * vscale)
    throw RootVerificationFailed(
        "candidate right root neither verifies nor cleanly fails (residual " +
        std::to_string(res) + ")");
  if (!study_conditions(h).both()) {
    out.kind = RightFactorOutcome::Kind::NoRoot;
    return out;
  }
  // cofactor of the monic quadratic: C = (t - h1)(t - h)
  const EvenMultivector h1 = -(C.coeff(1) + h);
  if (!study_conditions(h1).both()) {
    out.kind = RightFactorOutcome::Kind::NoRoot;
    return out;
  }
  (void)tol;
  out.kind = RightFactorOutcome::Kind::Found;
  out.h = h;
  out.residual = res;
  return out;
}

//------------------------------------------------------------------------------
// Irregular branch
//------------------------------------------------------------------------------

struct SolveOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int multistart = 10000;     // random seeds for 3 <= d <= 8
  int grid_points = 101;      // per axis for d <= 2
  double search_radius = 10.0;
  int max_dimension = 8;
  int max_solutions = 48;     // stop collecting past this; families plateau early
  int family_samples = 5;
};

struct FamilySample {
  EvenMultivector h1, h2;
  double residual = 0.0;  // reconstruction residual of (t-h1)(t-h2)
};

struct FamilyDescriptor {
  int dimension = 0;                      // tangent dimension at the base point
  EvenMultivector base_h1, base_h2;
  double base_residual = 0.0;             // reconstruction residual at the base
  std::vector<EvenMultivector> tangents;  // directions in right-factor space
  std::vector<FamilySample> samples;
};

struct IrregularSolveResult {
  enum class Kind { Empty, Finite, Infinite };
  Kind kind = Kind::Empty;
  std::vector<EvenMultivector> solutions;  // verified right factors (Finite)
  std::optional<FamilyDescriptor> family;  // Infinite
  int affine_dimension = 0;
};

namespace detail {

inline bool even_close(const EvenMultivector& a, const EvenMultivector& b,
                       double tol) {
  const double s = std::max({1.0, a.inf_norm(), b.inf_norm()});
  for (int i = 0; i < 16; ++i)
    if (std::abs(a.c[i] - b.c[i]) > tol * s) return false;
  return true;
}

inline bool even_lex_less(const EvenMultivector& a, const EvenMultivector& b) {
  for (int i = 0; i < 16; ++i) {
    if (a.c[i] < b.c[i]) return true;
    if (a.c[i] > b.c[i]) return false;
  }
  return false;
}

}  // namespace detail

inline double reconstruction_residual(const MotionPolynomial& C,
                                      const EvenMultivector& h1,
                                      const EvenMultivector& h2) {
  const MotionPolynomial rebuilt =
      MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
  double res = 0.0;
  const int n = std::max(static_cast<int>(C.c.size()),
                         static_cast<int>(rebuilt.c.size()));
  for (int i = 0; i < n; ++i)
    res = std::max(res, (rebuilt.coeff(i) - C.coeff(i)).inf_norm());
  return res;
}

// Solves for right factors t - h of C when the division remainder R = r1 t + r0
// has a non-invertible leading coefficient. h must satisfy: R(h) = 0 (linear),
// the grade-4 part of h vanishes (linear; makes h + rev h real), h rev(h) is
// real, and h^2 + mu1 h + mu0 = 0. The two linear conditions carve out an
// affine subspace; the rest is solved by seeded Gauss-Newton and classified
// finite/infinite by the constraint Jacobian's nullity at the solutions.
inline IrregularSolveResult irregular_solve(const MotionPolynomial& C,
                                            const QuadraticChoice& M,
                                            const EvenMultivector& r1,
                                            const EvenMultivector& r0,
                                            const SolveOptions& opt = {}) {
  IrregularSolveResult res;
  if (C.degree() != 2) throw Error("irregular solving expects a quadratic");

  // linear part: 16 rows r1 * h = -r0, 5 rows selecting the grade-4 coordinates
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(21, 16);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(21);
  for (int k = 0; k < 16; ++k) {
    if (r1.c[k] == 0.0) continue;
    for (int j = 0; j < 16; ++j)
      A(detail::kEvenTable.idx[k][j], j) +=
          static_cast<double>(detail::kEvenTable.sign[k][j]) * r1.c[k];
  }
  for (int i = 0; i < 16; ++i) b(i) = -r0.c[i];
  for (int k = 0; k < 5; ++k) A(16 + k, 11 + k) = 1.0;

  const AffineSolution aff = svd_affine_solve(A, b, 1e-9, 100.0, 1e-7);
  if (!aff.consistent) return res;  // Empty: R(h) = 0 has no solution at all
  const int d = static_cast<int>(aff.nullspace.cols());
  res.affine_dimension = d;
  if (d > opt.max_dimension)
    throw DimensionTooLarge("affine solution space has dimension " +
                            std::to_string(d) + " (limit " +
                            std::to_string(opt.max_dimension) + ")");

  EvenMultivector xp;
  for (int i = 0; i < 16; ++i) xp.c[i] = aff.particular(i);
  std::vector<EvenMultivector> dirs(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < 16; ++i) dirs[k].c[i] = aff.nullspace(i, k);

  auto h_of = [&](const Eigen::VectorXd& u) {
    EvenMultivector h = xp;
    for (int k = 0; k < d; ++k) h += dirs[k] * u(k);
    return h;
  };

  const double mu1 = M.mu1, mu0 = M.mu0;
  // residual: 15 non-scalar components of h rev(h), then the 16 of M(h)
  auto F = [&](const Eigen::VectorXd& u) {
    const EvenMultivector h = h_of(u);
    const EvenMultivector hr = quadrance(h);
    EvenMultivector mh = h * h + h * mu1;
    mh.c[0] += mu0;
    Eigen::VectorXd f(31);
    for (int i = 1; i < 16; ++i) f(i - 1) = hr.c[i];
    for (int i = 0; i < 16; ++i) f(15 + i) = mh.c[i];
    return f;
  };
  auto J = [&](const Eigen::VectorXd& u) {
    const EvenMultivector h = h_of(u);
    const EvenMultivector hrev = h.reversed();
    Eigen::MatrixXd j(31, d);
    for (int k = 0; k < d; ++k) {
      const EvenMultivector& dh = dirs[k];
      const EvenMultivector dhr = dh * hrev + h * dh.reversed();
      const EvenMultivector dmh = dh * h + h * dh + dh * mu1;
      for (int i = 1; i < 16; ++i) j(i - 1, k) = dhr.c[i];
      for (int i = 0; i < 16; ++i) j(15 + i, k) = dmh.c[i];
    }
    return j;
  };

  const double sol_scale = std::max(
      {1.0, std::abs(mu1), std::sqrt(std::abs(mu0)), xp.inf_norm()});
  const double s2 = sol_scale * sol_scale;
  GaussNewtonOptions gn_opt;
  gn_opt.max_iterations = 60;
  gn_opt.stop_tol = 1e-12 * s2;
  const double accept_tol = 1e-10 * s2;

  // candidate collection
  struct Hit {
    Eigen::VectorXd u;
    EvenMultivector h;
    int nullity = 0;
  };
  std::vector<Hit> hits;

  auto jac_nullity = [&](const Eigen::VectorXd& u) {
    const Eigen::MatrixXd j = J(u);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > 1e-7 * std::max(smax, 1.0)) ++rank;
    return d - rank;
  };

  const double vscale = std::max({1.0, C.inf_norm(), s2});
  auto try_seed = [&](const Eigen::VectorXd& u0) {
    if (static_cast<int>(hits.size()) >= opt.max_solutions) return;
    const GaussNewtonResult gn = gauss_newton(F, J, u0, gn_opt);
    if (gn.residual_inf > accept_tol) return;
    const EvenMultivector h = h_of(gn.x);
    for (const auto& hit : hits)
      if (detail::even_close(hit.h, h, 1e-7)) return;
    // confirm by division: zero remainder means right_evaluate(C, h) = 0
    if (C.right_evaluate(h).inf_norm() > 1e-8 * vscale) return;
    if (!study_conditions(h).both()) return;
    const EvenMultivector h1 = -(C.coeff(1) + h);
    if (!study_conditions(h1).both()) return;
    hits.push_back({gn.x, h, jac_nullity(gn.x)});
  };

  if (d == 0) {
    try_seed(Eigen::VectorXd::Zero(0));
  } else if (d <= 2) {
    const int g = std::max(2, opt.grid_points);
    const double R = opt.search_radius;
    Eigen::VectorXd u(d);
    if (d == 1) {
      for (int i = 0; i < g; ++i) {
        u(0) = -R + 2.0 * R * i / (g - 1);
        try_seed(u);
      }
    } else {
      for (int i = 0; i < g; ++i)
        for (int jj = 0; jj < g; ++jj) {
          u(0) = -R + 2.0 * R * i / (g - 1);
          u(1) = -R + 2.0 * R * jj / (g - 1);
          try_seed(u);
        }
    }
  } else {
    Rng rng(opt.seed);
    try_seed(Eigen::VectorXd::Zero(d));
    for (int s = 0; s < opt.multistart; ++s) {
      Eigen::VectorXd u(d);
      for (int k = 0; k < d; ++k)
        u(k) = rng.uniform(-opt.search_radius, opt.search_radius);
      try_seed(u);
      if (static_cast<int>(hits.size()) >= opt.max_solutions) break;
    }
  }

  if (hits.empty()) return res;  // Empty

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return detail::even_lex_less(a.h, b.h);
  });

  int degenerate = 0;
  for (const auto& hit : hits)
    if (hit.nullity >= 1) ++degenerate;

  const bool infinite = hits.size() >= 3 && degenerate >= 3;
  if (!infinite) {
    res.kind = IrregularSolveResult::Kind::Finite;
    for (const auto& hit : hits) res.solutions.push_back(hit.h);
    return res;
  }

  // family: base at the lexicographically first degenerate solution
  const Hit* base = nullptr;
  for (const auto& hit : hits)
    if (hit.nullity >= 1) {
      base = &hit;
      break;
    }

  FamilyDescriptor fam;
  fam.base_h2 = base->h;
  fam.base_h1 = -(C.coeff(1) + base->h);
  fam.base_residual = reconstruction_residual(C, fam.base_h1, fam.base_h2);
  fam.dimension = base->nullity;

  // tangent directions: nullspace of the constraint Jacobian, mapped back to
  // right-factor space through the affine parametrization
  const Eigen::MatrixXd jb = J(base->u);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jb, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-7 * std::max(smax, 1.0)) ++rank;
  Eigen::MatrixXd nullvecs = svd.matrixV().rightCols(d - rank);
  detail::normalize_column_signs(nullvecs);
  for (int k = 0; k < nullvecs.cols(); ++k) {
    EvenMultivector t;
    for (int kk = 0; kk < d; ++kk) t += dirs[kk] * nullvecs(kk, k);
    fam.tangents.push_back(t);
  }

  // samples: walk along tangents and re-converge onto the solution set
  auto add_sample = [&](const Eigen::VectorXd& u0) {
    const GaussNewtonResult gn = gauss_newton(F, J, u0, gn_opt);
    if (gn.residual_inf > accept_tol) return;
    const EvenMultivector h = h_of(gn.x);
    if (detail::even_close(h, fam.base_h2, 1e-6)) return;
    for (const auto& smp : fam.samples)
      if (detail::even_close(smp.h2, h, 1e-6)) return;
    if (C.right_evaluate(h).inf_norm() > 1e-8 * vscale) return;
    if (!study_conditions(h).both()) return;
    const EvenMultivector h1 = -(C.coeff(1) + h);
    if (!study_conditions(h1).both()) return;
    fam.samples.push_back({h1, h, reconstruction_residual(C, h1, h)});
  };

  const int fdim = static_cast<int>(nullvecs.cols());
  for (int i = 0; i < 16 * std::max(1, fdim); ++i) {
    if (static_cast<int>(fam.samples.size()) >= opt.family_samples) break;
    const int axis = i % std::max(1, fdim);
    const double mag = 0.4 * (1 + i / std::max(1, fdim));
    const double step = (i % 2 == 0 ? mag : -mag) * sol_scale;
    add_sample(base->u + step * nullvecs.col(axis));
  }
  // fallback: random jumps re-converged onto the set
  if (static_cast<int>(fam.samples.size()) < opt.family_samples) {
    Rng rng(opt.seed + 1);
    for (int s = 0; s < 400; ++s) {
      if (static_cast<int>(fam.samples.size()) >= opt.family_samples) break;
      Eigen::VectorXd u(d);
      for (int k = 0; k < d; ++k)
        u(k) = base->u(k) + rng.uniform(-2.0, 2.0) * sol_scale;
      add_sample(u);
    }
  }

  res.kind = IrregularSolveResult::Kind::Infinite;
  res.family = std::move(fam);
  return res;
}

//------------------------------------------------------------------------------
// Irregularity tests
//------------------------------------------------------------------------------

// A factorization (t-h1)(t-h2) is irregular exactly when h1 - rev(h2) is not
// invertible.
inline bool is_irregular_pair(const EvenMultivector& h1, const EvenMultivector& h2,
                              double singular_tol = kSingularTol) {
  return !is_invertible((h1 - h2.reversed()).embed(), singular_tol);
}

//------------------------------------------------------------------------------
// Full factorization of a quadratic motion polynomial
//------------------------------------------------------------------------------

struct Factorization {
  EvenMultivector h1, h2;  // C_monic = (t - h1)(t - h2)
  bool irregular = false;
  double residual = 0.0;  // reconstruction residual
};

enum class Verdict { None, Finite, Infinite };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::None: return "none";
    case Verdict::Finite: return "finite";
    case Verdict::Infinite: return "infinite";
  }
  return "?";
}

struct FactorizationReport {
  Verdict verdict = Verdict::None;
  std::vector<Factorization> factorizations;  // the finite list
  std::optional<FamilyDescriptor> family;     // evidence for Infinite
  EvenMultivector leading;                    // factored-out leading coefficient
  RealPolynomial quadrance;                   // of the monic polynomial
  std::vector<QuadraticChoice> choices;
};

inline FactorizationReport factorize(const MotionPolynomial& C,
                                     const SolveOptions& opt = {}) {
  if (C.degree() != 2)
    throw Error("factorization handles quadratic motion polynomials");
  FactorizationReport rep;
  rep.leading = C.c[C.degree()];
  const MotionPolynomial Cm = monic_normalized(C);
  rep.quadrance = quadrance_poly(Cm, opt.tol);
  rep.choices = quadratic_factor_choices(rep.quadrance);

  bool infinite = false;
  for (const auto& choice : rep.choices) {
    const RightFactorOutcome out = regular_right_factor(Cm, choice, opt.tol);
    if (out.kind == RightFactorOutcome::Kind::Found) {
      const EvenMultivector h1 = -(Cm.coeff(1) + out.h);
      rep.factorizations.push_back(
          {h1, out.h, false, reconstruction_residual(Cm, h1, out.h)});
    } else if (out.kind == RightFactorOutcome::Kind::Irregular) {
      const IrregularSolveResult irr =
          irregular_solve(Cm, choice, out.r1, out.r0, opt);
      if (irr.kind == IrregularSolveResult::Kind::Finite) {
        for (const auto& h : irr.solutions) {
          const EvenMultivector h1 = -(Cm.coeff(1) + h);
          rep.factorizations.push_back(
              {h1, h, true, reconstruction_residual(Cm, h1, h)});
        }
      } else if (irr.kind == IrregularSolveResult::Kind::Infinite) {
        infinite = true;
        if (!rep.family) rep.family = irr.family;
      }
    }
  }

  // dedup (distinct divisors normally give distinct right factors, but stay safe)
  std::vector<Factorization> unique;
  for (const auto& f : rep.factorizations) {
    bool dup = false;
    for (const auto& g : unique)
      if (detail::even_close(f.h1, g.h1, 1e-7) && detail::even_close(f.h2, g.h2, 1e-7))
        dup = true;
    if (!dup) unique.push_back(f);
  }
  rep.factorizations = std::move(unique);
  std::sort(rep.factorizations.begin(), rep.factorizations.end(),
            [](const Factorization& a, const Factorization& b) {
              if (detail::even_lex_less(a.h2, b.h2)) return true;
              if (detail::even_lex_less(b.h2, a.h2)) return false;
              return detail::even_lex_less(a.h1, b.h1);
            });

  rep.verdict = infinite ? Verdict::Infinite
                         : (rep.factorizations.empty() ? Verdict::None
                                                       : Verdict::Finite);
  return rep;
}

//------------------------------------------------------------------------------
// Triviality: C is a reparametrized simple motion exactly when the non-scalar
// parts of its lower coefficients span at most one direction whose quadrance
// is real.
//------------------------------------------------------------------------------

inline bool is_trivial(const MotionPolynomial& C, double tol = 1e-7) {
  if (C.degree() != 2) return false;
  MotionPolynomial Cm;
  try {
    Cm = monic_normalized(C);
  } catch (const NonInvertibleLeadingCoefficient&) {
    return false;
  }
  Eigen::MatrixXd B(2, 15);
  for (int i = 1; i < 16; ++i) {
    B(0, i - 1) = Cm.coeff(1).c[i];
    B(1, i - 1) = Cm.coeff(0).c[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeFullV);
  const double s1 = svd.singularValues()(0);
  const double s2 = svd.singularValues()(1);
  const double scale = std::max(1.0, Cm.inf_norm());
  if (s1 <= tol * scale) return true;  // both coefficients are real
  if (s2 > tol * std::max(s1, 1.0)) return false;
  EvenMultivector dir;
  for (int i = 1; i < 16; ++i) dir.c[i] = svd.matrixV()(i - 1, 0);
  return non_scalar_norm(quadrance(dir)) <= tol;
}

//------------------------------------------------------------------------------
// Construction of irregular pairs: given a simple motion t - h2, find h1 with
// t - h1 a simple motion and h1 - rev(h2) non-invertible. Unknowns are the
// scalar and the ten bivector coordinates of h1 (the grade-4 part must vanish
// anyway), plus a complex 4-vector w certifying the rank drop: the system
// couples represent(h1 - rev h2) w = 0 with |w|^2 = 1. The bilinear bordered
// form keeps the residual transversal; a determinant equation would vanish to
// second order on the strata where the kernel is two-dimensional, stalling
// the solver there.
//------------------------------------------------------------------------------

struct ConstructOptions {
  std::optional<MotionType> type;  // constrain the motion type of t - h1
  std::uint64_t seed = 0;
  int restarts = 400;
  std::optional<EvenMultivector> initial;
  bool exclude_trivial = true;
  double tol = kDefaultTol;
};

inline EvenMultivector construct_irregular(const EvenMultivector& h2,
                                           const ConstructOptions& opt = {}) {
  if (!study_conditions(h2).both())
    throw NotAMotionPolynomial("t - h2 is not a motion polynomial");
  const EvenMultivector rev_h2 = h2.reversed();
  const bool want_transversion =
      opt.type.has_value() && *opt.type == MotionType::Transversion;
  const int m = 24 + (want_transversion ? 1 : 0);
  constexpr int hdim = 11;      // scalar + bivector coordinates of h1
  constexpr int dim = hdim + 8; // plus Re/Im of the kernel certificate w

  std::array<RepMatrix, hdim> basis_rep;
  for (int k = 0; k < hdim; ++k) {
    EvenMultivector b;
    b.c[k] = 1.0;
    basis_rep[k] = represent(b);
  }
  const RepMatrix rep_rev_h2 = represent(rev_h2);

  auto h_of = [&](const Eigen::VectorXd& u) {
    EvenMultivector h;
    for (int i = 0; i < hdim; ++i) h.c[i] = u(i);
    return h;
  };
  auto w_of = [&](const Eigen::VectorXd& u) {
    Eigen::Vector4cd w;
    for (int r = 0; r < 4; ++r)
      w(r) = std::complex<double>(u(hdim + 2 * r), u(hdim + 2 * r + 1));
    return w;
  };
  auto rep_of = [&](const Eigen::VectorXd& u) {
    RepMatrix A = -rep_rev_h2;  // represent(h1 - rev h2), linear in u
    for (int k = 0; k < hdim; ++k) A += u(k) * basis_rep[k];
    return A;
  };

  // rows 0..14: nonscalar part of h1 rev(h1); rows 15..22: Re/Im of the
  // kernel equation represent(h1 - rev h2) w = 0; row 23: |w|^2 = 1;
  // row 24 (optional): vanishing discriminant of the quadrance of h1
  auto F = [&](const Eigen::VectorXd& u) {
    const EvenMultivector h1 = h_of(u);
    const EvenMultivector G = quadrance(h1);
    const Eigen::Vector4cd w = w_of(u);
    const Eigen::Vector4cd r = rep_of(u) * w;
    Eigen::VectorXd f = Eigen::VectorXd::Zero(m);
    for (int i = 1; i < 16; ++i) f(i - 1) = G.c[i];
    for (int k = 0; k < 4; ++k) {
      f(15 + 2 * k) = r(k).real();
      f(16 + 2 * k) = r(k).imag();
    }
    f(23) = w.squaredNorm() - 1.0;
    if (want_transversion)
      f(24) = 4.0 * (u(0) * u(0) - G.c[0]);  // discriminant of the quadrance
    return f;
  };
  auto Jac = [&](const Eigen::VectorXd& u) {
    const EvenMultivector h1 = h_of(u);
    const EvenMultivector h1rev = h1.reversed();
    const Eigen::Vector4cd w = w_of(u);
    const RepMatrix A = rep_of(u);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, dim);
    for (int k = 0; k < hdim; ++k) {
      EvenMultivector dh;
      dh.c[k] = 1.0;
      const EvenMultivector dG = dh * h1rev + h1 * dh.reversed();
      for (int i = 1; i < 16; ++i) j(i - 1, k) = dG.c[i];
      const Eigen::Vector4cd dr = basis_rep[k] * w;
      for (int r = 0; r < 4; ++r) {
        j(15 + 2 * r, k) = dr(r).real();
        j(16 + 2 * r, k) = dr(r).imag();
      }
      if (want_transversion)
        j(24, k) = 8.0 * u(0) * (k == 0 ? 1.0 : 0.0) - 4.0 * dG.c[0];
    }
    for (int c = 0; c < 4; ++c) {
      for (int r = 0; r < 4; ++r) {
        const std::complex<double> a = A(r, c);
        j(15 + 2 * r, hdim + 2 * c) = a.real();
        j(15 + 2 * r, hdim + 2 * c + 1) = -a.imag();
        j(16 + 2 * r, hdim + 2 * c) = a.imag();
        j(16 + 2 * r, hdim + 2 * c + 1) = a.real();
      }
      j(23, hdim + 2 * c) = 2.0 * w(c).real();
      j(23, hdim + 2 * c + 1) = 2.0 * w(c).imag();
    }
    return j;
  };

  const double hscale = std::max(1.0, h2.inf_norm());
  GaussNewtonOptions gn_opt;
  gn_opt.max_iterations = 300;
  gn_opt.stop_tol = 1e-13 * hscale * hscale;

  Rng rng(opt.seed);
  auto accept = [&](const Eigen::VectorXd& v) -> std::optional<EvenMultivector> {
    const EvenMultivector h1 = h_of(v);
    const double s = std::max(1.0, h1.inf_norm());
    if (F(v).lpNorm<Eigen::Infinity>() > 1e-10 * s * s) return std::nullopt;
    const EvenMultivector a = h1 - rev_h2;
    if (a.inf_norm() <= 1e-6 * std::max(1.0, hscale)) return std::nullopt;
    if (!is_irregular_pair(h1, h2)) return std::nullopt;
    if (opt.type) {
      const LinearQuadrance lq = linear_quadrance(h1);
      const double sc = std::max({1.0, std::abs(lq.s), std::sqrt(std::abs(lq.p))});
      if (*opt.type != MotionType::Transversion &&
          std::abs(lq.discriminant()) < 1e-6 * sc * sc)
        return std::nullopt;  // too close to the transversion boundary
      if (classify_discriminant(lq.s, lq.p) != *opt.type) return std::nullopt;
    }
    if (opt.exclude_trivial) {
      const MotionPolynomial Cc =
          MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
      if (is_trivial(Cc)) return std::nullopt;
    }
    return h1;
  };

  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    Eigen::VectorXd u0 = Eigen::VectorXd::Zero(dim);
    if (attempt == 0 && opt.initial) {
      for (int i = 0; i < hdim; ++i) u0(i) = opt.initial->c[i];
    } else {
      for (int i = 0; i < hdim; ++i) u0(i) = rng.uniform(-2.0, 2.0) * hscale;
    }
    // seed w with the least singular direction of the current pencil point
    Eigen::JacobiSVD<RepMatrix> svd(rep_of(u0), Eigen::ComputeFullV);
    const Eigen::Vector4cd w0 = svd.matrixV().col(3);
    for (int r = 0; r < 4; ++r) {
      u0(hdim + 2 * r) = w0(r).real();
      u0(hdim + 2 * r + 1) = w0(r).imag();
    }
    const GaussNewtonResult gn = gauss_newton(F, Jac, u0, gn_opt);
    if (const auto h1 = accept(gn.x)) return *h1;
  }
  throw NoRealSolutionFound(
      "no irregular partner found within the restart budget");
}

}  // namespace cgafact

#endif
