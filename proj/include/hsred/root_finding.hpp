#pragma once

#include <functional>

namespace hsred {

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
  int expansions = 0;
};

// Widens [lo, hi] geometrically until f changes sign. On a positive interval
// the ends move as lo / factor and hi * factor; otherwise the half-widths grow
// by `factor` around the midpoint. Throws Error(bracket_failure) after
// `max_expansions` attempts.
Bracket expand_bracket(const std::function<double(double)>& f, double lo, double hi,
                       double factor = 2.0, int max_expansions = 60);

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Brent's method (inverse quadratic interpolation / secant with bisection
// safeguard) on a sign-changing bracket. Stops when |f| <= ftol or the bracket
// shrinks below xtol.
RootResult brent(const std::function<double(double)>& f, const Bracket& bracket, double ftol,
                 double xtol = 0.0, int max_iter = 200);

}  // namespace hsred
