#include <catch2/catch_amalgamated.hpp>

#include "cgafact/catalog.hpp"
#include "cgafact/io.hpp"
#include "cgafact/numeric.hpp"

using namespace cgafact;

namespace {
constexpr unsigned E12 = 3, E3P = 12;
}

TEST_CASE("multivector json round trip omits zeros") {
  Multivector m = Multivector::scalar(1.5);
  m.c[E12] = -2.0;
  const json j = to_json(m);
  CHECK(j.size() == 2);
  CHECK(j.at("s").get<double>() == 1.5);
  CHECK(j.at("e12").get<double>() == -2.0);
  const Multivector back = multivector_from_json(j);
  CHECK(approx_equal(back, m, 0.0));
}

TEST_CASE("even multivector json rejects odd blades") {
  CHECK_THROWS_AS(even_from_json(json{{"e1", 1.0}}), FormatError);
  CHECK_THROWS_AS(even_from_json(json{{"e123", 0.5}}), FormatError);
  const EvenMultivector h = even_from_json(json{{"e12", 1.0}, {"s", 2.0}});
  CHECK(h.scalar_part() == 2.0);
  CHECK(h.at_mask(E12) == 1.0);
}

TEST_CASE("malformed multivector json fails loudly") {
  CHECK_THROWS_AS(multivector_from_json(json::array()), FormatError);
  CHECK_THROWS_AS(multivector_from_json(json{{"e21", 1.0}}), FormatError);
  CHECK_THROWS_AS(multivector_from_json(json{{"e12", "x"}}), FormatError);
}

TEST_CASE("polynomial json round trip") {
  const MotionPolynomial C = MotionPolynomial::linear(EvenMultivector::blade(E12)) *
                             MotionPolynomial::linear(EvenMultivector::blade(E3P));
  const json j = to_json(C);
  REQUIRE(j.contains("coeffs"));
  REQUIRE(j.at("coeffs").is_array());
  CHECK(j.at("coeffs").size() == 3);
  const MotionPolynomial back = polynomial_from_json(j);
  REQUIRE(back.c.size() == 3);
  for (int i = 0; i <= 2; ++i) CHECK(approx_equal(back.coeff(i), C.coeff(i), 0.0));

  CHECK_THROWS_AS(polynomial_from_json(json{{"wrong", 1}}), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(json{{"coeffs", 3}}), FormatError);
}

TEST_CASE("doubles are emitted in shortest round-trip form") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.1) == "0.1");
  const double v = 1.0 / 3.0;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("negative zero never reaches the output") {
  Multivector m;
  m.c[E12] = -0.0;
  const json j = to_json(m);
  CHECK(j.empty());  // -0.0 == 0.0, omitted entirely
  json r = json::object();
  r["v"] = scrub_zero(-0.0);
  CHECK(r.dump().find("-0") == std::string::npos);
}

TEST_CASE("factorization report serialization carries the pinned fields") {
  const CatalogEntry* e = find_entry("transversion-rotation");
  REQUIRE(e != nullptr);
  SolveOptions opt;
  opt.multistart = 2000;
  const FactorizationReport rep = factorize(e->polynomial(), opt);
  const json j = report_to_json(rep);
  CHECK(j.at("verdict") == "finite");
  CHECK(j.at("count").get<int>() == 1);
  REQUIRE(j.at("factorizations").is_array());
  REQUIRE(j.at("factorizations").size() == 1);
  const json& f = j.at("factorizations")[0];
  CHECK(f.at("irregular").get<bool>());
  CHECK(f.at("factors").size() == 2);
  CHECK(f.at("residual").get<double>() <= 1e-8);
  CHECK(j.at("quadrance").at("coeffs").size() == 5);
  CHECK(j.at("leading").at("s").get<double>() == 1.0);
  CHECK_FALSE(j.contains("family"));
  // byte-identical on repeat with the same seed
  const FactorizationReport rep2 = factorize(e->polynomial(), opt);
  CHECK(report_to_json(rep2).dump(2) == j.dump(2));
}

TEST_CASE("trajectory csv has the mandatory header") {
  const MotionPolynomial C = MotionPolynomial::linear(EvenMultivector::blade(E12));
  const TrajectoryResult tr = trajectory(C, {1.0, 0.0, 0.0}, linspace(0.0, 1.0, 3));
  const std::string csv = trajectory_csv(tr);
  CHECK(csv.rfind("t,x,y,z\n", 0) == 0);
  int rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 4);  // header + 3 samples
  CHECK(csv.find("-0,") == std::string::npos);
}
