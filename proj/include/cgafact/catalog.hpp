#ifndef CGAFACT_CATALOG_HPP
#define CGAFACT_CATALOG_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgafact/algebra.hpp"
#include "cgafact/factorization.hpp"
#include "cgafact/geometry.hpp"
#include "cgafact/numeric.hpp"
#include "cgafact/polynomial.hpp"

//------------------------------------------------------------------------------
// Catalog of quadratic motions with an irregular factorization, one entry per
// combination of factor types, plus the two classical infinite families (the
// circular translation and the Villarceau motion). Every entry records what a
// full factorization run is expected to produce, so the catalog doubles as an
// end-to-end regression suite.
//------------------------------------------------------------------------------

namespace cgafact {

struct CatalogEntry {
  std::string name;
  EvenMultivector h1, h2;  // construction: C = (t - h1)(t - h2)
  Verdict expected_verdict = Verdict::None;
  int expected_count = 0;  // number of factorizations when Finite
  MotionType expected_type_h1 = MotionType::Rotation;
  MotionType expected_type_h2 = MotionType::Rotation;
  bool expected_commuting = false;   // all sampled factor pairs commute
  bool expected_translation = false; // every C(t) acts as a pure translation
  bool expected_trivial = false;

  MotionPolynomial polynomial() const {
    return MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
  }
};

namespace detail {

inline EvenMultivector ev(std::initializer_list<std::pair<unsigned, double>> parts) {
  EvenMultivector m;
  for (const auto& [mask, v] : parts) m.set_mask(mask, v);
  return m;
}

// blade masks: e12=3 e13=5 e23=6 e1p=9 e2p=10 e3p=12 e1m=17 e2m=18 e3m=20 epm=24
constexpr unsigned kE12 = 3, kE13 = 5, kE23 = 6, kE1p = 9, kE2p = 10,
                   kE3p = 12, kE1m = 17, kE2m = 18, kE3m = 20, kEpm = 24;

}  // namespace detail

inline const std::vector<CatalogEntry>& entries() {
  using namespace detail;
  static const std::vector<CatalogEntry> table = [] {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0),
                 r6 = std::sqrt(6.0);
    std::vector<CatalogEntry> t;

    CatalogEntry tr;  // nilpotent bivector against a rotation
    tr.name = "transversion-rotation";
    tr.h1 = ev({{kE12, -0.5}, {kE13, 0.8}, {kE1m, 49.0 / 30.0}, {kE1p, 4.0 / 3.0}});
    tr.h2 = ev({{kE12, 1.0}});
    tr.expected_verdict = Verdict::Finite;
    tr.expected_count = 1;
    tr.expected_type_h1 = MotionType::Transversion;
    tr.expected_type_h2 = MotionType::Rotation;
    t.push_back(tr);

    CatalogEntry sr;
    sr.name = "scaling-rotation";
    sr.h1 = ev({{0u, r6 / 3.0}, {kE13, 1.0}, {kE1m, 2.0 * r6 / 3.0}});
    sr.h2 = ev({{kE12, 1.0}});
    sr.expected_verdict = Verdict::Finite;
    sr.expected_count = 1;
    sr.expected_type_h1 = MotionType::Scaling;
    sr.expected_type_h2 = MotionType::Rotation;
    t.push_back(sr);

    CatalogEntry tt;
    tt.name = "transversion-transversion";
    tt.h1 = ev({{0u, r2},
                {kE13, -1.0},
                {kE23, -1.0},
                {kE1p, 1.0},
                {kE2p, 1.0},
                {kE1m, 1.0},
                {kE2m, 1.0},
                {kE3m, 1.0},
                {kEpm, -1.0}});
    tt.h2 = ev({{kE3p, 1.0}, {kE3m, 1.0}});
    tt.expected_verdict = Verdict::Finite;
    tt.expected_count = 2;
    tt.expected_type_h1 = MotionType::Transversion;
    tt.expected_type_h2 = MotionType::Transversion;
    t.push_back(tt);

    CatalogEntry ss;
    ss.name = "scaling-scaling";
    ss.h1 = ev({{0u, r3}, {kE3m, -1.0}, {kE2m, 1.0}});
    ss.h2 = ev({{kEpm, -1.0}});
    ss.expected_verdict = Verdict::Finite;
    ss.expected_count = 5;
    ss.expected_type_h1 = MotionType::Scaling;
    ss.expected_type_h2 = MotionType::Scaling;
    t.push_back(ss);

    CatalogEntry ts;
    ts.name = "transversion-scaling";
    ts.h1 = ev({{kE2m, 1.0}, {kE2p, r5 / 2.0}, {kEpm, 0.5}});
    ts.h2 = ev({{kEpm, -1.0}});
    ts.expected_verdict = Verdict::Finite;
    ts.expected_count = 3;
    ts.expected_type_h1 = MotionType::Transversion;
    ts.expected_type_h2 = MotionType::Scaling;
    t.push_back(ts);

    CatalogEntry rr;
    rr.name = "rotation-rotation";
    rr.h1 = ev({{kE12, -1.0}, {kE13, 1.0}, {kE1m, 1.0}, {kE23, 1.0}, {kE2m, 1.0}});
    rr.h2 = ev({{kE12, 1.0}});
    rr.expected_verdict = Verdict::Infinite;
    rr.expected_type_h1 = MotionType::Rotation;
    rr.expected_type_h2 = MotionType::Rotation;
    t.push_back(rr);

    CatalogEntry ct;  // every trajectory is a circle traversed by translations
    ct.name = "circular-translation";
    ct.h1 = ev({{kE12, -1.0}, {kE1m, 1.0}, {kE1p, 1.0}});
    ct.h2 = ev({{kE12, 1.0}});
    ct.expected_verdict = Verdict::Infinite;
    ct.expected_type_h1 = MotionType::Rotation;
    ct.expected_type_h2 = MotionType::Rotation;
    ct.expected_translation = true;
    t.push_back(ct);

    CatalogEntry vc;  // torus motion whose trajectories are Villarceau circles
    vc.name = "villarceau";
    vc.h1 = ev({{kE12, 1.0}});
    vc.h2 = ev({{kE3p, 1.0}});
    vc.expected_verdict = Verdict::Infinite;
    vc.expected_type_h1 = MotionType::Rotation;
    vc.expected_type_h2 = MotionType::Rotation;
    vc.expected_commuting = true;
    t.push_back(vc);

    return t;
  }();
  return table;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

//------------------------------------------------------------------------------
// Verification
//------------------------------------------------------------------------------

struct PropertyCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;  // residual or other magnitude backing the verdict
  std::string detail;
};

struct EntryVerification {
  std::string entry;
  bool pass = false;
  FactorizationReport report;
  std::vector<PropertyCheck> checks;

  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks)
      if (c.name == "reconstruction") r = c.value;
    return r;
  }
};

namespace detail {

inline double commutator_gap(const EvenMultivector& a, const EvenMultivector& b) {
  const double s =
      std::max(1.0, a.inf_norm()) * std::max(1.0, b.inf_norm());
  return commutator(a, b).inf_norm() / s;
}

}  // namespace detail

inline EntryVerification verify_entry(const CatalogEntry& e,
                                      const SolveOptions& opt = {}) {
  EntryVerification v;
  v.entry = e.name;
  const MotionPolynomial C = e.polynomial();
  v.report = factorize(C, opt);
  const FactorizationReport& rep = v.report;

  {
    PropertyCheck pc;
    pc.name = "verdict";
    const bool verdict_ok = rep.verdict == e.expected_verdict;
    const bool count_ok = e.expected_verdict != Verdict::Finite ||
                          static_cast<int>(rep.factorizations.size()) ==
                              e.expected_count;
    pc.pass = verdict_ok && count_ok;
    pc.value = static_cast<double>(rep.factorizations.size());
    pc.detail = std::string(verdict_name(rep.verdict)) + "/" +
                std::to_string(rep.factorizations.size()) + " vs " +
                verdict_name(e.expected_verdict) +
                (e.expected_verdict == Verdict::Finite
                     ? "/" + std::to_string(e.expected_count)
                     : "");
    v.checks.push_back(pc);
  }

  {
    PropertyCheck pc;
    pc.name = "reconstruction";
    double worst = 0.0;
    bool enough = true;
    for (const auto& f : rep.factorizations)
      worst = std::max(worst, reconstruction_residual(C, f.h1, f.h2));
    if (rep.verdict == Verdict::Infinite) {
      if (rep.family) {
        worst = std::max(
            worst, reconstruction_residual(C, rep.family->base_h1,
                                           rep.family->base_h2));
        for (const auto& s : rep.family->samples)
          worst = std::max(worst, reconstruction_residual(C, s.h1, s.h2));
        enough = static_cast<int>(rep.family->samples.size()) >=
                 opt.family_samples;
      } else {
        enough = false;
      }
    }
    pc.value = worst;
    pc.pass = enough && worst <= 1e-8;
    pc.detail = enough ? "max residual" : "too few family samples";
    v.checks.push_back(pc);
  }

  {
    PropertyCheck pc;
    pc.name = "factor-types";
    const MotionType t1 = classify_linear(e.h1);
    const MotionType t2 = classify_linear(e.h2);
    pc.pass = t1 == e.expected_type_h1 && t2 == e.expected_type_h2;
    pc.detail = std::string(motion_type_name(t1)) + "," + motion_type_name(t2);
    v.checks.push_back(pc);
  }

  {
    PropertyCheck pc;
    pc.name = "irregular-pair";
    pc.pass = is_irregular_pair(e.h1, e.h2);
    pc.detail = "h1 - rev(h2) not invertible";
    v.checks.push_back(pc);
  }

  {
    PropertyCheck pc;
    pc.name = "triviality";
    pc.pass = is_trivial(C) == e.expected_trivial;
    pc.detail = e.expected_trivial ? "expected trivial" : "expected non-trivial";
    v.checks.push_back(pc);
  }

  if (e.expected_commuting) {
    PropertyCheck pc;
    pc.name = "commuting";
    double worst = detail::commutator_gap(e.h1, e.h2);
    if (rep.family) {
      worst = std::max(worst,
                       detail::commutator_gap(rep.family->base_h1,
                                              rep.family->base_h2));
      for (const auto& s : rep.family->samples)
        worst = std::max(worst, detail::commutator_gap(s.h1, s.h2));
    }
    pc.value = worst;
    pc.pass = worst <= 1e-9;
    pc.detail = "max |h1 h2 - h2 h1| over sampled factor pairs";
    v.checks.push_back(pc);
  }

  if (e.expected_translation) {
    PropertyCheck pc;
    pc.name = "translation";
    // trajectories of random points must differ from the origin's trajectory
    // by a vector that does not depend on t
    const std::vector<double> ts = linspace(-2.0, 2.0, 9);
    const TrajectoryResult base = trajectory(C, EuclideanPoint{0, 0, 0}, ts);
    double worst = 0.0;
    bool ok = base.skipped.empty();
    Rng rng(12345);
    for (int i = 0; i < 10 && ok; ++i) {
      const EuclideanPoint p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                             rng.uniform(-2.0, 2.0)};
      const TrajectoryResult tr = trajectory(C, p, ts);
      if (!tr.skipped.empty() || tr.samples.size() != base.samples.size()) {
        ok = false;
        break;
      }
      const double dx0 = tr.samples[0].point.x - base.samples[0].point.x;
      const double dy0 = tr.samples[0].point.y - base.samples[0].point.y;
      const double dz0 = tr.samples[0].point.z - base.samples[0].point.z;
      const double ps = std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
      for (std::size_t j = 1; j < tr.samples.size(); ++j) {
        const double dx = tr.samples[j].point.x - base.samples[j].point.x;
        const double dy = tr.samples[j].point.y - base.samples[j].point.y;
        const double dz = tr.samples[j].point.z - base.samples[j].point.z;
        worst = std::max({worst, std::abs(dx - dx0) / ps,
                          std::abs(dy - dy0) / ps, std::abs(dz - dz0) / ps});
      }
    }
    pc.value = worst;
    pc.pass = ok && worst <= 1e-8;
    pc.detail = "trajectory offsets constant in t";
    v.checks.push_back(pc);
  }

  v.pass = true;
  for (const auto& c : v.checks) v.pass = v.pass && c.pass;
  return v;
}

}  // namespace cgafact

#endif
