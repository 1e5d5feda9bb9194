//------------------------------------------------------------------------------
// cgafact: factor quadratic motion polynomials over conformal space, classify
// simple motions, sample trajectories, and check the built-in catalog.
// stdout carries data only; diagnostics go to stderr.
//------------------------------------------------------------------------------

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cgafact/catalog.hpp"
#include "cgafact/factorization.hpp"
#include "cgafact/geometry.hpp"
#include "cgafact/io.hpp"

namespace {

using namespace cgafact;

json read_json_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_factor(const std::string& input, double tolerance, std::uint64_t seed,
               bool self_check) {
  const MotionPolynomial C = polynomial_from_json(read_json_input(input));
  SolveOptions opt;
  opt.tol = tolerance;
  opt.seed = seed;
  const FactorizationReport rep = factorize(C, opt);

  if (self_check) {
    const double scale = std::max(1.0, C.inf_norm());
    int checked = 0;
    auto recheck = [&](const EvenMultivector& h1, const EvenMultivector& h2) {
      const MotionPolynomial rebuilt =
          rep.leading * (MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2));
      double res = 0.0;
      for (int i = 0; i <= 2; ++i)
        res = std::max(res, (rebuilt.coeff(i) - C.coeff(i)).inf_norm());
      if (res > 1e-8 * scale)
        throw Error("self-check failed: factorization does not reproduce the "
                    "input (residual " + format_double(res) + ")");
      ++checked;
    };
    for (const auto& f : rep.factorizations) recheck(f.h1, f.h2);
    if (rep.family) {
      recheck(rep.family->base_h1, rep.family->base_h2);
      for (const auto& s : rep.family->samples) recheck(s.h1, s.h2);
    }
    std::cerr << "self-check: ok (" << checked << " factorizations re-multiplied)\n";
  }

  std::cout << report_to_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& input, const std::string& format) {
  const EvenMultivector h = even_from_json(read_json_input(input));
  const MotionType type = classify_linear(h);  // validates the study conditions
  const LinearQuadrance lq = linear_quadrance(h);
  const double disc = lq.discriminant();

  std::vector<double> roots;
  if (type == MotionType::Transversion) {
    roots.push_back(lq.s / 2.0);
  } else if (type == MotionType::Scaling) {
    const double r = std::sqrt(disc);
    roots.push_back((lq.s - r) / 2.0);
    roots.push_back((lq.s + r) / 2.0);
  }

  if (format == "json") {
    json j;
    j["type"] = motion_type_name(type);
    j["s"] = scrub_zero(lq.s);
    j["p"] = scrub_zero(lq.p);
    j["discriminant"] = scrub_zero(disc);
    json r = json::array();
    for (double v : roots) r.push_back(scrub_zero(v));
    j["real_roots"] = r;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type: " << motion_type_name(type) << "\n";
    std::cout << "s: " << format_double(lq.s) << "\n";
    std::cout << "p: " << format_double(lq.p) << "\n";
    std::cout << "discriminant: " << format_double(disc) << "\n";
    std::cout << "real roots:";
    if (roots.empty()) {
      std::cout << " none";
    } else {
      for (double v : roots) std::cout << " " << format_double(v);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_trajectory(const std::string& input, const std::vector<double>& point,
                   double t_min, double t_max, int samples, double tolerance) {
  const MotionPolynomial C = polynomial_from_json(read_json_input(input));
  const EuclideanPoint p{point[0], point[1], point[2]};
  const TrajectoryResult tr = trajectory(C, p, linspace(t_min, t_max, samples),
                                         tolerance);
  for (double t : tr.skipped)
    std::cerr << "skipped t=" << format_double(t)
              << ": exceptional parameter (motion degenerates)\n";
  std::cout << trajectory_csv(tr);
  return 0;
}

int cmd_verify_catalog(double tolerance, std::uint64_t seed) {
  SolveOptions opt;
  opt.tol = tolerance;
  opt.seed = seed;
  bool all_pass = true;
  std::printf("%-26s %-12s %-12s %6s %12s  %s\n", "entry", "expected",
              "verdict", "count", "residual", "result");
  for (const auto& e : entries()) {
    const EntryVerification v = verify_entry(e, opt);
    all_pass = all_pass && v.pass;
    std::string expected = verdict_name(e.expected_verdict);
    if (e.expected_verdict == Verdict::Finite)
      expected += "/" + std::to_string(e.expected_count);
    std::printf("%-26s %-12s %-12s %6zu %12.3e  %s\n", e.name.c_str(),
                expected.c_str(), verdict_name(v.report.verdict),
                v.report.factorizations.size(), v.max_residual(),
                v.pass ? "PASS" : "FAIL");
    if (!v.pass)
      for (const auto& c : v.checks)
        if (!c.pass)
          std::fprintf(stderr, "  %s: %s FAILED (%s, value %.3e)\n",
                       e.name.c_str(), c.name.c_str(), c.detail.c_str(),
                       c.value);
  }
  std::printf("%s\n", all_pass ? "catalog: all entries pass"
                               : "catalog: FAILURES present");
  return all_pass ? 0 : 1;
}

int cmd_catalog(const std::string& export_name) {
  if (export_name.empty()) {
    for (const auto& e : entries()) {
      std::string expected = verdict_name(e.expected_verdict);
      if (e.expected_verdict == Verdict::Finite)
        expected += "/" + std::to_string(e.expected_count);
      std::printf("%-26s %s\n", e.name.c_str(), expected.c_str());
    }
    return 0;
  }
  const CatalogEntry* e = find_entry(export_name);
  if (!e) throw Error("no catalog entry named '" + export_name + "'");
  std::cout << to_json(e->polynomial()).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization of quadratic motion polynomials over the "
               "conformal algebra of 3-space"};
  app.require_subcommand(1);

  std::string input = "-";
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  bool self_check = false;
  std::string format = "text";
  std::vector<double> point{0.0, 0.0, 0.0};
  double t_min = -1.0, t_max = 1.0;
  int samples = 101;
  std::string export_name;

  auto* factor = app.add_subcommand("factor", "factor a quadratic motion polynomial");
  factor->add_option("input", input, "polynomial JSON file, or - for stdin");
  factor->add_option("--tolerance", tolerance, "numerical tolerance");
  factor->add_option("--seed", seed, "random seed for the irregular solver");
  factor->add_flag("--self-check", self_check,
                   "re-multiply every reported factorization against the input");

  auto* classify = app.add_subcommand("classify", "classify a simple motion t - h");
  classify->add_option("input", input, "multivector JSON file, or - for stdin");
  classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* traj = app.add_subcommand("trajectory", "sample the trajectory of a point");
  traj->add_option("input", input, "polynomial JSON file, or - for stdin");
  traj->add_option("--point", point, "Euclidean point to move")->expected(3);
  traj->add_option("--t-min", t_min, "start of the parameter range");
  traj->add_option("--t-max", t_max, "end of the parameter range");
  traj->add_option("--samples", samples, "number of samples (>= 2)")
      ->check(CLI::Range(2, 1000000));
  traj->add_option("--tolerance", tolerance, "numerical tolerance");

  auto* verify = app.add_subcommand("verify-catalog",
                                    "factor every catalog entry and check it");
  verify->add_option("--tolerance", tolerance, "numerical tolerance");
  verify->add_option("--seed", seed, "random seed for the irregular solver");

  auto* cat = app.add_subcommand("catalog", "list catalog entries or export one");
  cat->add_option("--export", export_name, "entry name to export as polynomial JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // malformed command line -> 1
  }

  try {
    if (app.got_subcommand(factor))
      return cmd_factor(input, tolerance, seed, self_check);
    if (app.got_subcommand(classify)) return cmd_classify(input, format);
    if (app.got_subcommand(traj))
      return cmd_trajectory(input, point, t_min, t_max, samples, tolerance);
    if (app.got_subcommand(verify)) return cmd_verify_catalog(tolerance, seed);
    if (app.got_subcommand(cat)) return cmd_catalog(export_name);
  } catch (const NotAMotionPolynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroQuadrance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // a zero quadrance also fails the motion polynomial contract
  } catch (const NumericalRankAmbiguity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
