#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hsred/criticality.hpp"
#include "hsred/eigensolver.hpp"
#include "hsred/error.hpp"
#include "hsred/hamiltonian.hpp"

using namespace hsred;

namespace {

LadderConfig two_rungs() {
  LadderConfig c;
  c.sites_per_leg = 2;
  c.j_rung = 15.0;
  return c;
}

ReductionTrajectory with_couplings(std::initializer_list<std::pair<std::size_t, double>> pts) {
  ReductionTrajectory t;
  for (auto [n, g] : pts) {
    ReductionStep s;
    s.n = n;
    s.g = g;
    t.steps.push_back(s);
  }
  return t;
}

}  // namespace

TEST_CASE("two-rung level crossing sits at J = J_t") {
  // Rung-singlet product: -3 J_t / 2. Two rung triplets bound into a total
  // singlet: J_t / 2 - 2 J. They cross at J = J_t.
  ScanSpec scan;
  scan.from = 13.0;
  scan.to = 17.5;
  scan.points = 10;
  scan.rel_tol = 1e-10;
  const CrossingReport r = scan_crossing(two_rungs(), scan);
  CHECK(r.g_e == doctest::Approx(15.0).epsilon(1e-8));
  CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.true_crossing);
  CHECK(r.lambda1 == doctest::Approx(-22.5).epsilon(1e-8));
  CHECK(r.bracket.first <= 15.0);
  CHECK(r.bracket.second >= 15.0);
  CHECK(r.curve.size() == 10);
  CHECK(r.parameter_path == "J_l=J_c");

  for (const GapPoint& p : r.curve) {
    const auto h = build_ladder(with_parameter(two_rungs(), ScanParameter::leg_and_cross, p.param))
                       .hamiltonian;
    const auto ref = dense_spectrum(h, 15.0);
    CHECK(p.lambda1 == doctest::Approx(ref[0]).epsilon(1e-9));
    CHECK(p.gap == doctest::Approx(ref[1] - ref[0]).epsilon(1e-7));
    const double analytic = std::abs(-22.5 - (7.5 - 2 * p.param));
    if (analytic < 15.0) CHECK(p.gap == doctest::Approx(analytic).epsilon(1e-9));
  }
}

TEST_CASE("monotone gap has no crossing") {
  ScanSpec scan;
  scan.from = 2.0;
  scan.to = 5.0;
  scan.points = 7;
  try {
    scan_crossing(two_rungs(), scan);
    FAIL("expected no_crossing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_crossing);
  }
}

TEST_CASE("scan arguments") {
  ScanSpec scan;
  scan.points = 2;
  CHECK_THROWS_AS(scan_crossing(two_rungs(), scan), Error);
  scan.points = 5;
  scan.to = scan.from;
  CHECK_THROWS_AS(scan_crossing(two_rungs(), scan), Error);
  CHECK(parse_scan_parameter("J_l=J_c") == ScanParameter::leg_and_cross);
  CHECK(parse_scan_parameter("J_t") == ScanParameter::rung);
  CHECK_THROWS_AS(parse_scan_parameter("J_x"), Error);
  const LadderConfig c = with_parameter(two_rungs(), ScanParameter::cross, 4.0);
  CHECK(c.j_cross == 4.0);
  CHECK(c.j_leg == two_rungs().j_leg);
}

TEST_CASE("degeneracy gap") {
  LadderConfig c;
  c.sites_per_leg = 1;
  CHECK(degeneracy_gap(build_ladder(c).hamiltonian, 15.0) == doctest::Approx(15.0));
}

TEST_CASE("fixed-point drift") {
  const auto flat = with_couplings({{10, 15.0}, {9, 15.0}, {8, 15.0}});
  CHECK(fixed_point_drift(flat, 8).drift == 0.0);
  CHECK(fixed_point_drift(flat, 8).window_steps == 3);

  const auto rising = with_couplings({{10, 10.0}, {9, 10.5}, {8, 12.0}});
  CHECK(fixed_point_drift(rising, 9).drift == doctest::Approx(0.05));
  CHECK(fixed_point_drift(rising, 9).window_steps == 2);
  CHECK(fixed_point_drift(rising, 1).drift == doctest::Approx(0.2));

  try {
    fixed_point_drift(rising, 11);
    FAIL("expected empty window");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_window);
  }
  CHECK_THROWS_AS(fixed_point_drift(ReductionTrajectory{}, 1), Error);
}
