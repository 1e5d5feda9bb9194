#ifndef CGAFACT_NUMERIC_HPP
#define CGAFACT_NUMERIC_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

#include "cgafact/errors.hpp"

//------------------------------------------------------------------------------
// Numeric workhorses shared by the solvers: a reproducible RNG, a rank-aware
// affine linear solve, and a damped Gauss-Newton loop. Rank decisions are the
// one place where a wrong guess silently changes results, so the solve refuses
// to pick a rank when the singular-value gap is too small.
//------------------------------------------------------------------------------

namespace cgafact {

// mt19937_64 driven, but doubles are built from the raw bits so streams do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

struct AffineSolution {
  bool consistent = false;     // does A x = b have a solution at all
  Eigen::VectorXd particular;  // minimal-norm least-squares solution
  Eigen::MatrixXd nullspace;   // orthonormal columns spanning ker A
  int rank = 0;
};

namespace detail {

// Canonical sign: largest-magnitude entry of each column is positive.
inline void normalize_column_signs(Eigen::MatrixXd& m) {
  for (int j = 0; j < m.cols(); ++j) {
    int imax = 0;
    m.col(j).cwiseAbs().maxCoeff(&imax);
    if (m(imax, j) < 0.0) m.col(j) = -m.col(j);
  }
}

}  // namespace detail

// Solves A x = b in the least-squares sense and reports the nullspace.
// Singular values below rank_tol * sigma_max count as zero; if the smallest
// kept and largest dropped value are within gap_factor of each other the rank
// is ambiguous and the call refuses to guess.
inline AffineSolution svd_affine_solve(const Eigen::MatrixXd& A,
                                       const Eigen::VectorXd& b,
                                       double rank_tol = 1e-9,
                                       double gap_factor = 100.0,
                                       double consistency_tol = 1e-7) {
  const int n = static_cast<int>(A.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;

  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * smax) ++rank;
  if (smax == 0.0) rank = 0;

  if (rank > 0 && rank < sv.size()) {
    const double kept = sv(rank - 1);
    const double dropped = sv(rank);
    if (dropped > 0.0 && kept / dropped < gap_factor)
      throw NumericalRankAmbiguity(
          "singular values straddle the rank tolerance (kept " +
          std::to_string(kept) + ", dropped " + std::to_string(dropped) + ")");
  }

  AffineSolution out;
  out.rank = rank;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(rank);
  const Eigen::VectorXd utb = svd.matrixU().transpose() * b;
  for (int i = 0; i < rank; ++i) y(i) = utb(i) / sv(i);
  out.particular = svd.matrixV().leftCols(rank) * y;
  out.nullspace = svd.matrixV().rightCols(n - rank);
  detail::normalize_column_signs(out.nullspace);
  const double resid = (A * out.particular - b).lpNorm<Eigen::Infinity>();
  out.consistent = resid <= consistency_tol * std::max(1.0, b.lpNorm<Eigen::Infinity>());
  return out;
}

struct GaussNewtonOptions {
  int max_iterations = 60;
  double stop_tol = 1e-12;    // on the residual inf-norm
  double lambda0 = 1e-3;      // initial Levenberg damping
  double lambda_max = 1e10;
};

struct GaussNewtonResult {
  Eigen::VectorXd x;
  double residual_inf = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Levenberg-damped Gauss-Newton. residual: x -> VectorXd, jacobian: x -> MatrixXd.
template <class Residual, class Jacobian>
GaussNewtonResult gauss_newton(const Residual& residual, const Jacobian& jacobian,
                               Eigen::VectorXd x,
                               const GaussNewtonOptions& opt = {}) {
  GaussNewtonResult out;
  double lambda = opt.lambda0;
  Eigen::VectorXd r = residual(x);
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    const double rinf = r.lpNorm<Eigen::Infinity>();
    if (rinf <= opt.stop_tol) break;
    const Eigen::MatrixXd J = jacobian(x);
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;
    bool accepted = false;
    for (int k = 0; k < 12; ++k) {
      Eigen::MatrixXd H = JtJ;
      H.diagonal().array() += lambda;
      const Eigen::VectorXd step = H.ldlt().solve(-g);
      const Eigen::VectorXd xn = x + step;
      const Eigen::VectorXd rn = residual(xn);
      if (rn.squaredNorm() < r.squaredNorm()) {
        x = xn;
        r = rn;
        lambda = std::max(lambda / 3.0, 1e-14);
        accepted = true;
        break;
      }
      lambda *= 10.0;
      if (lambda > opt.lambda_max) break;
    }
    if (!accepted) break;  // stalled; report whatever we have
  }
  out.x = x;
  out.residual_inf = r.lpNorm<Eigen::Infinity>();
  out.converged = out.residual_inf <= opt.stop_tol;
  out.iterations = it;
  return out;
}

}  // namespace cgafact

#endif
