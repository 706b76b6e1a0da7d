#include "hsred/root_finding.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hsred/error.hpp"

namespace hsred {

namespace {
bool straddles(double a, double b) { return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0); }
}  // namespace

Bracket expand_bracket(const std::function<double(double)>& f, double lo, double hi,
                       double factor, int max_expansions) {
  if (!(factor > 1.0)) throw Error(ErrorCode::invalid_argument, "bracket factor must exceed 1");
  if (lo > hi) std::swap(lo, hi);
  Bracket b{lo, hi, f(lo), f(hi)};
  while (!straddles(b.f_lo, b.f_hi)) {
    if (b.expansions >= max_expansions) {
      throw Error(ErrorCode::bracket_failure, "no sign change after " +
                                                  std::to_string(max_expansions) +
                                                  " bracket expansions");
    }
    if (b.lo > 0.0) {
      b.lo /= factor;
      b.hi *= factor;
    } else {
      const double mid = 0.5 * (b.lo + b.hi);
      const double half = 0.5 * (b.hi - b.lo) * factor;
      b.lo = mid - half;
      b.hi = mid + half;
    }
    b.f_lo = f(b.lo);
    b.f_hi = f(b.hi);
    ++b.expansions;
  }
  return b;
}

RootResult brent(const std::function<double(double)>& f, const Bracket& bracket, double ftol,
                 double xtol, int max_iter) {
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (!straddles(fa, fb)) throw Error(ErrorCode::bracket_failure, "bracket does not change sign");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a;
  bool bisected = true;
  RootResult r{b, fb, 0};
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (; r.iterations < max_iter; ++r.iterations) {
    if (std::abs(fb) <= ftol) break;
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    if (std::abs(b - a) <= 2.0 * tol) break;

    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double lo = (3.0 * a + b) / 4.0;
    const bool outside = !((s > std::min(lo, b)) && (s < std::max(lo, b)));
    const bool slow = bisected ? std::abs(s - b) >= 0.5 * std::abs(b - c)
                               : std::abs(s - b) >= 0.5 * std::abs(c - d);
    const bool tiny = bisected ? std::abs(b - c) < tol : std::abs(c - d) < tol;
    if (outside || slow || tiny) {
      s = 0.5 * (a + b);
      bisected = true;
    } else {
      bisected = false;
    }
    const double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (straddles(fa, fs)) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  r.x = b;
  r.fx = fb;
  return r;
}

}  // namespace hsred
