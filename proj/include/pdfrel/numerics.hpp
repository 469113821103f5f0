#pragma once

#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <vector>

namespace pdfrel::numerics {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Integrand over the unit interval receiving both `p` and `q = 1 - p`,
/// where whichever of the two is small is exact to full relative precision.
using UnitIntegrand = std::function<double(double p, double q)>;

/// Integrates over (0, 1) with tanh-sinh, splitting at the given interior
/// points (kinks of the integrand). Throws IntegralDiverged when the result
/// is not finite or the error estimate exceeds `max_abs_error`.
QuadResult integrate_unit(const UnitIntegrand& fn,
                          std::initializer_list<double> splits = {},
                          double rel_tol = 1e-13, double max_abs_error = 1e-7);

QuadResult integrate_unit(const UnitIntegrand& fn,
                          const std::vector<double>& splits,
                          double rel_tol = 1e-13, double max_abs_error = 1e-7);

/// Integrates over (a, b); either endpoint may be infinite.
QuadResult integrate(const std::function<double(double)>& fn, double a,
                     double b, double rel_tol = 1e-13,
                     double max_abs_error = 1e-7);

/// Root of a monotone function on [lo, hi] where g(lo) and g(hi) straddle
/// the target. Bisection to a relative width of ~4 ulp.
double bisect(const std::function<double(double)>& g, double lo, double hi,
              double target);

/// Safeguarded Newton iteration: `g` returns {value, derivative}. The bracket
/// [lo, hi] must straddle the target. Falls back to bisection whenever a
/// Newton step leaves the bracket or fails to shrink it.
double newton_bracketed(
    const std::function<std::pair<double, double>(double)>& g, double lo,
    double hi, double target, double x0 = kNaN);

/// Expands an interval outward from `anchor` in direction `dir` (+1/-1)
/// until `g` crosses `target`; returns the far end of the bracket.
double expand_bracket(const std::function<double(double)>& g, double anchor,
                      int dir, double target, double limit);

/// The p-grid {eps + k (1 - 2 eps) / (n - 1)}.
std::vector<double> probability_grid(int n, double eps);

}  // namespace pdfrel::numerics
