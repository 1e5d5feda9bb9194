#ifndef CGAFACT_GEOMETRY_HPP
#define CGAFACT_GEOMETRY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "cgafact/algebra.hpp"
#include "cgafact/errors.hpp"
#include "cgafact/polynomial.hpp"

//------------------------------------------------------------------------------
// Spheres, points, and planes as grade-1 vectors, the sandwich action, and
// point trajectories under a motion polynomial. Embeddings are projective;
// extraction fixes the gauge where the (e- minus e+) weight is 1.
//------------------------------------------------------------------------------

namespace cgafact {

struct EuclideanPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

struct Sphere {
  EuclideanPoint center;
  double radius = 0.0;
};

struct Plane {
  double nx = 0.0, ny = 0.0, nz = 1.0;  // normal, not required to be unit
  double d = 0.0;                       // support parameter
};

inline Multivector embed_sphere(const Sphere& s) {
  const double q = s.center.x * s.center.x + s.center.y * s.center.y +
                   s.center.z * s.center.z - s.radius * s.radius;
  Multivector v;
  v.c[1] = s.center.x;
  v.c[2] = s.center.y;
  v.c[4] = s.center.z;
  v.c[8] = 0.5 * (q - 1.0);   // e+
  v.c[16] = 0.5 * (q + 1.0);  // e-
  return v;
}

// a point is a radius-zero sphere; its embedding is null
inline Multivector embed_point(const EuclideanPoint& p) {
  return embed_sphere({p, 0.0});
}

inline Multivector embed_point(double x, double y, double z) {
  return embed_point(EuclideanPoint{x, y, z});
}

inline Multivector embed_plane(const Plane& pl) {
  const double nn = pl.nx * pl.nx + pl.ny * pl.ny + pl.nz * pl.nz;
  Multivector v;
  v.c[1] = pl.nx;
  v.c[2] = pl.ny;
  v.c[4] = pl.nz;
  v.c[8] = nn * pl.d;
  v.c[16] = nn * pl.d;
  return v;
}

inline Multivector sandwich(const Multivector& g, const Multivector& a) {
  return g * a * g.reversed();
}

inline Multivector sandwich(const EvenMultivector& g, const Multivector& a) {
  return sandwich(g.embed(), a);
}

// Gauge-fixes the weight (coefficient of e- minus coefficient of e+) to 1 and
// reads the Euclidean coordinates back off.
inline EuclideanPoint extract_point(const Multivector& v, double tol = 1e-8) {
  const double scale = v.inf_norm();
  const double w = v.c[16] - v.c[8];
  if (std::abs(w) <= tol * std::max(1.0, scale))
    throw PointAtInfinity("weight is zero; the point lies at infinity");
  const Multivector u = v * (1.0 / w);
  const double un = u.inf_norm();
  const Multivector offgrade = u - u.grade_part(1);
  if (offgrade.inf_norm() > tol * std::max(1.0, un))
    throw NotNull("element is not a grade-1 vector");
  const double q = (u * u).c[0];  // grade-1 vectors square to their quadrance
  if (std::abs(q) > tol * std::max(1.0, un * un))
    throw NotNull("vector is not null; it represents a sphere, not a point");
  return {u.c[1], u.c[2], u.c[4]};
}

inline EuclideanPoint transform_point(const EvenMultivector& g,
                                      const EuclideanPoint& p,
                                      double tol = 1e-8) {
  return extract_point(sandwich(g, embed_point(p)), tol);
}

//------------------------------------------------------------------------------
// Trajectories. Samples where the quadrance polynomial (nearly) vanishes are
// exceptional parameters: the evaluated element is not invertible there, so
// the sample is skipped and reported instead of producing garbage.
//------------------------------------------------------------------------------

struct TrajectorySample {
  double t = 0.0;
  EuclideanPoint point;
};

struct TrajectoryResult {
  std::vector<TrajectorySample> samples;
  std::vector<double> skipped;  // exceptional parameter values
};

inline TrajectoryResult trajectory(const MotionPolynomial& C,
                                   const EuclideanPoint& p,
                                   const std::vector<double>& ts,
                                   double tol = kDefaultTol) {
  const RealPolynomial P = quadrance_poly(C, tol);  // also validates C
  const Multivector pe = embed_point(p);
  const double pscale = P.max_abs_coeff();
  const int pdeg = P.degree(1e-12 * pscale);

  TrajectoryResult out;
  for (double t : ts) {
    const double growth = std::pow(std::max(1.0, std::abs(t)), pdeg);
    if (std::abs(P.evaluate(t)) < 1e-9 * pscale * growth) {
      out.skipped.push_back(t);
      continue;
    }
    const EvenMultivector g = C.evaluate(t);
    try {
      out.samples.push_back({t, extract_point(sandwich(g, pe))});
    } catch (const PointAtInfinity&) {
      out.skipped.push_back(t);
    } catch (const NotNull&) {
      out.skipped.push_back(t);
    }
  }
  return out;
}

inline std::vector<double> linspace(double t_min, double t_max, int n) {
  if (n < 2) throw Error("need at least 2 samples");
  std::vector<double> ts(n);
  const double step = (t_max - t_min) / (n - 1);
  for (int i = 0; i < n; ++i) ts[i] = t_min + step * i;
  return ts;
}

}  // namespace cgafact

#endif
