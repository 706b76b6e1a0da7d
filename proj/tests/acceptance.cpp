// Acceptance checks. One PASS/FAIL line per criterion; pass criterion names
// (A1 ... A6) as arguments to run a subset. Exit status is nonzero when any
// selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hsred/basis.hpp"
#include "hsred/criticality.hpp"
#include "hsred/eigensolver.hpp"
#include "hsred/error.hpp"
#include "hsred/hamiltonian.hpp"
#include "hsred/observables.hpp"
#include "hsred/reduction.hpp"

using namespace hsred;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [miss: " << what << "]";
    }
  }
};

LadderConfig ladder(int L, double jt, double jl, double jc) {
  LadderConfig c;
  c.sites_per_leg = L;
  c.j_rung = jt;
  c.j_leg = jl;
  c.j_cross = jc;
  return c;
}

// Crossing shared between A3 and A4.
std::optional<CrossingReport> cached_crossing;

const CrossingReport& l6_crossing() {
  if (!cached_crossing) {
    ScanSpec scan;  // J_l = J_c from 10 to 14, 41 points
    cached_crossing = scan_crossing(ladder(6, 15.0, 12.0, 12.0), scan);
  }
  return *cached_crossing;
}

void a1(Outcome& o) {
  const auto t0 = Clock::now();
  const std::size_t n6 = enumerate_sector(6, HalfInt{}).size();
  const std::size_t n9 = enumerate_sector(9, HalfInt{}).size();
  const double dt = seconds_since(t0);
  o.detail << "N(L=6)=" << n6 << " N(L=9)=" << n9 << " time=" << dt << "s";
  o.require(n6 == 924, "N(L=6) == 924");
  o.require(n9 == 48620, "N(L=9) == 48620");
  o.require(dt < 1.0, "runtime < 1 s");
}

void a2(Outcome& o) {
  const auto t0 = Clock::now();
  const LadderConfig c = ladder(6, 15.0, 12.21, 12.21);
  const auto h = build_ladder(c).hamiltonian;
  const EigenResult r = lowest_k(h, c.j_rung);
  double e[3];
  for (int i = 0; i < 3; ++i) e[i] = energy_per_site(r.values[i], c.sites_per_leg);
  const double dt = seconds_since(t0);
  o.detail << "boundary=open e1=" << e[0] << " e2=" << e[1] << " e3=" << e[2] << " time=" << dt
           << "s";
  o.require(std::abs(e[0] + 11.25) <= 0.02, "|e1 + 11.25| <= 0.02");
  o.require(std::abs(e[1] + 11.25) <= 0.02, "|e2 + 11.25| <= 0.02");
  o.require(std::abs(e[2] + 10.7) <= 0.1, "|e3 + 10.7| <= 0.1");
  o.require(dt < 10.0, "runtime < 10 s");
}

void a3(Outcome& o) {
  const auto t0 = Clock::now();
  const CrossingReport& r = l6_crossing();
  const double dt = seconds_since(t0);
  o.detail << "J_l=J_c crossing at " << r.g_e << " J_t/J_l=" << r.ratio
           << " min_gap=" << r.min_gap << " true_crossing=" << r.true_crossing << " time=" << dt
           << "s";
  o.require(std::abs(r.ratio - 1.23) <= 0.02 * 1.23, "J_t/J_l within 2% of 1.23");
  o.require(dt < 60.0, "runtime < 1 min");
}

void a4(Outcome& o) {
  const auto t0 = Clock::now();
  const double at = l6_crossing().g_e;

  ReductionOptions ro;
  ro.n_min = 100;
  const ReductionTrajectory crit = run_reduction(ladder(6, 15.0, at, at), {}, ro);
  const FixedPointCheck d1 = fixed_point_drift(crit, 100);

  ro.n_min = 250;
  const ReductionTrajectory near = run_reduction(ladder(6, 15.0, 12.21, 11.0), {}, ro);
  const FixedPointCheck d2 = fixed_point_drift(near, 250);
  const double dt = seconds_since(t0);

  o.detail << "drift(J=" << at << ", n>=100)=" << d1.drift * 100 << "% stop="
           << to_string(crit.stop_reason) << "; drift(J_l=12.21 J_c=11, n>=250)=" << d2.drift * 100
           << "% stop=" << to_string(near.stop_reason) << " time=" << dt << "s";
  o.require(crit.steps.back().n == 100, "critical run reaches n = 100");
  o.require(near.steps.back().n == 250, "near-critical run reaches n = 250");
  o.require(d1.drift <= 0.01, "critical drift <= 1%");
  o.require(d2.drift <= 0.01, "near-critical drift <= 1%");
  o.require(dt < 120.0, "runtime < 2 min");
}

void a5(Outcome& o) {
  const auto t0 = Clock::now();
  ReductionOptions ro;
  ro.n_min = 500;
  ro.batch = 1;
  ro.coarse_fraction = 0.05;
  ro.coarse_above = 2000;

  const ReductionTrajectory strong = run_reduction(ladder(9, 15.0, 5.0, 3.0), {}, ro);
  double worst_p1 = 0.0;
  for (const auto& s : strong.steps)
    if (s.n >= 500) worst_p1 = std::max(worst_p1, s.p[0]);

  const ReductionTrajectory weak = run_reduction(ladder(9, 2.5, 5.0, 3.0), {}, ro);
  const ReductionStep& last = weak.steps.back();

  // single-state steps throughout the checked window
  bool window_batch_one = true;
  for (const auto* t : {&strong, &weak})
    for (std::size_t i = 1; i < t->steps.size(); ++i)
      if (t->steps[i - 1].n <= 2000 && t->steps[i].eliminated.size() != 1)
        window_batch_one = false;
  const double dt = seconds_since(t0);

  o.detail << "J_t=15: max p1(n>=500)=" << worst_p1 << "%; J_t=2.5 at n=" << last.n
           << ": p2=" << last.p[1] << "% p3=" << last.p[2] << "% time=" << dt << "s";
  o.require(strong.steps.back().n == 500 && last.n == 500, "both runs reach n = 500");
  o.require(window_batch_one, "batch = 1 for n <= 2000");
  o.require(worst_p1 <= 0.5, "p1 <= 0.5% for n >= 500 at J_t=15");
  o.require(last.p[1] >= 0.5 && last.p[1] <= 5.0, "p2 in [0.5%, 5%] at J_t=2.5");
  o.require(last.p[2] >= 0.5 && last.p[2] <= 5.0, "p3 in [0.5%, 5%] at J_t=2.5");
}

void a6(Outcome& o) {
  const auto t0 = Clock::now();

  // pinning, monotone g and entropy bounds along a full ladder reduction
  ReductionOptions ro;
  ro.n_min = 8;
  const LadderConfig c5 = ladder(5, 15.0, 5.0, 3.0);
  const ReductionTrajectory t = run_reduction(c5, {}, ro);
  const double lambda1 = t.steps.front().lambdas[0];
  double worst_pin = 0.0, worst_drop = 0.0;
  bool entropy_ok = true;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    worst_pin = std::max(worst_pin, std::abs(s.lambdas[0] - lambda1) / std::abs(lambda1));
    if (i > 0) worst_drop = std::max(worst_drop, (t.steps[i - 1].g - s.g) / s.g);
    const double cap = std::log(static_cast<double>(s.n)) / (2.0 * c5.sites_per_leg);
    if (!(s.entropy >= 0.0 && s.entropy <= cap + 1e-12)) entropy_ok = false;
  }
  o.require(t.stop_reason == StopReason::reached_n_min, "L=5 reduction reaches n_min");
  o.require(worst_pin <= 1e-10, "pinning <= 1e-10 |lambda1|");
  o.require(worst_drop <= 1e-12, "g non-decreasing up to rounding");
  o.require(entropy_ok, "0 <= entropy <= ln(n)/2L");

  // closed form against the bracketed root solve on the same reduced spaces
  ReductionOptions closed = ro, bracketed = ro;
  closed.root_method = RootMethod::closed_form;
  bracketed.root_method = RootMethod::bracketed;
  bracketed.lambda_tol_rel = 1e-13;
  const LadderConfig c4 = ladder(4, 15.0, 5.0, 3.0);
  const ReductionTrajectory tc = run_reduction(c4, {}, closed);
  const ReductionTrajectory tb = run_reduction(c4, {}, bracketed);
  double worst_g = 0.0;
  for (std::size_t i = 0; i < std::min(tc.steps.size(), tb.steps.size()); ++i)
    worst_g = std::max(worst_g, std::abs(tc.steps[i].g - tb.steps[i].g) / tc.steps[i].g);
  o.require(tc.steps.size() == tb.steps.size(), "closed and bracketed runs have equal length");
  o.require(worst_g <= 1e-9, "closed form vs bracketed g within 1e-9");

  // Lanczos against dense on every sector up to dimension 1024
  double worst_dev = 0.0;
  int sectors = 0;
  for (int L = 1; L <= 8; ++L) {
    for (int twice = -2 * L; twice <= 2 * L; twice += 2) {
      if (binomial(2 * L, L + twice / 2) > 1024) continue;
      LadderConfig c = ladder(L, 15.0, 5.0, 3.0);
      c.m_tot = HalfInt::from_twice(twice);
      const auto h = build_ladder(c).hamiltonian;
      EigenOptions eo;
      eo.k = static_cast<int>(std::min<std::size_t>(3, h.dim()));
      const EigenResult r = lowest_k(h, 15.0, eo);
      const auto ref = dense_spectrum(h, 15.0);
      for (std::size_t i = 0; i < r.values.size(); ++i)
        worst_dev = std::max(worst_dev, std::abs(r.values[i] - ref[i]));
      ++sectors;
    }
  }
  o.require(worst_dev <= 1e-8, "dense vs Lanczos <= 1e-8");

  // single rung
  const auto h1 = build_ladder(ladder(1, 15.0, 5.0, 3.0)).hamiltonian;
  EigenOptions eo1;
  eo1.k = 1;
  const EigenResult r1 = lowest_k(h1, 15.0, eo1);
  ReductionOptions ro1;
  ro1.n_min = 1;
  const std::vector<double> ref1{energy_per_site(r1.values[0], 1)};
  const StepOutcome step1 = reduce_step(h1, 15.0, r1.values[0], r1, 1, ref1, ro1, eo1);
  const double s1 = ground_entropy(r1.ground(), 1);
  o.require(std::abs(r1.values[0] + 0.75 * 15.0) <= 1e-12, "L=1 lambda = -3g/4");
  o.require(std::abs(step1.step.g - 45.0) <= 1e-12, "L=1 g 15 -> 45");
  o.require(std::abs(s1 - std::log(2.0) / 2) <= 1e-12, "L=1 entropy ln2/2");
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime < 1 min");

  o.detail << "pin=" << worst_pin << " g_drop=" << worst_drop << " entropy_ok=" << entropy_ok
           << " closed_vs_bracketed=" << worst_g << " dense_dev=" << worst_dev << " over "
           << sectors << " sectors; L=1 lambda=" << r1.values[0] << " g'=" << step1.step.g
           << " S=" << s1 << " time=" << dt << "s";
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<void(Outcome&)>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A6", a6}};
  std::set<std::string> selected;
  for (int i = 1; i < argc; ++i) {
    if (!criteria.count(argv[i])) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    selected.insert(argv[i]);
  }
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %s %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
