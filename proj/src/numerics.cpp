#include "pdfrel/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <sstream>

#include "pdfrel/error.hpp"

namespace pdfrel::numerics {

namespace {

boost::math::quadrature::tanh_sinh<double>& tanh_sinh_engine() {
  thread_local boost::math::quadrature::tanh_sinh<double> engine(15);
  return engine;
}

void check_result(const QuadResult& r, double max_abs_error) {
  if (!std::isfinite(r.value) || !(r.abs_error <= max_abs_error)) {
    std::ostringstream os;
    os << "quadrature failed to converge (value " << r.value << ", error "
       << r.abs_error << ")";
    fail(ErrorCode::kIntegralDiverged, os.str());
  }
}

}  // namespace

QuadResult integrate_unit(const UnitIntegrand& fn,
                          std::initializer_list<double> splits,
                          double rel_tol, double max_abs_error) {
  return integrate_unit(fn, std::vector<double>(splits), rel_tol,
                        max_abs_error);
}

QuadResult integrate_unit(const UnitIntegrand& fn,
                          const std::vector<double>& splits, double rel_tol,
                          double max_abs_error) {
  std::vector<double> nodes{0.0};
  for (double s : splits) {
    if (s > 1e-12 && s < 1.0 - 1e-12) nodes.push_back(s);
  }
  nodes.push_back(1.0);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  QuadResult total;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i];
    const double b = nodes[i + 1];
    // tanh-sinh hands over the signed distance to the nearest endpoint; on
    // the first and last panels that distance is the exact small p or q.
    auto panel = [&](double x, double xc) {
      double p = x;
      double q = 1.0 - x;
      if (a == 0.0 && xc <= 0.0 && x < 0.5 * (a + b)) p = -xc;
      if (b == 1.0 && xc >= 0.0 && x > 0.5 * (a + b)) q = xc;
      const double v = fn(p, q);
      return std::isfinite(v) ? v : 0.0;
    };
    double err = 0.0;
    double l1 = 0.0;
    const double v = tanh_sinh_engine().integrate(panel, a, b, rel_tol, &err, &l1);
    total.value += v;
    total.abs_error += err;
  }
  check_result(total, max_abs_error);
  return total;
}

QuadResult integrate(const std::function<double(double)>& fn, double a,
                     double b, double rel_tol, double max_abs_error) {
  QuadResult r;
  if (a == b) return r;
  auto guarded = [&](double x) {
    const double v = fn(x);
    return std::isfinite(v) ? v : 0.0;
  };
  double l1 = 0.0;
  r.value = tanh_sinh_engine().integrate(guarded, a, b, rel_tol, &r.abs_error, &l1);
  check_result(r, max_abs_error);
  return r;
}

double bisect(const std::function<double(double)>& g, double lo, double hi,
              double target) {
  double glo = g(lo) - target;
  if (glo == 0.0) return lo;
  double ghi = g(hi) - target;
  if (ghi == 0.0) return hi;
  if ((glo > 0) == (ghi > 0)) {
    fail(ErrorCode::kInvalidArgument, "bisect: bracket does not straddle target");
  }
  for (int it = 0; it < 2200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid) - target;
    if (gm == 0.0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(lo), std::abs(hi))) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_bracketed(
    const std::function<std::pair<double, double>(double)>& g, double lo,
    double hi, double target, double x0) {
  auto [vlo, dlo] = g(lo);
  vlo -= target;
  if (vlo == 0.0) return lo;
  auto [vhi, dhi] = g(hi);
  vhi -= target;
  if (vhi == 0.0) return hi;
  if ((vlo > 0) == (vhi > 0)) {
    fail(ErrorCode::kInvalidArgument,
         "newton_bracketed: bracket does not straddle target");
  }
  const bool increasing = vhi > 0;
  double x = (std::isfinite(x0) && x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
  double dx_old = hi - lo;
  for (int it = 0; it < 400; ++it) {
    auto [v, d] = g(x);
    v -= target;
    if (v == 0.0) return x;
    if ((v > 0) == increasing) {
      hi = x;
    } else {
      lo = x;
    }
    const double width = hi - lo;
    if (width <= 4 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(lo), std::abs(hi))) {
      return 0.5 * (lo + hi);
    }
    double next = (d != 0.0 && std::isfinite(d)) ? x - v / d : kNaN;
    if (!(next > lo && next < hi) || std::abs(next - x) > 0.5 * dx_old) {
      next = 0.5 * (lo + hi);
    }
    dx_old = std::abs(next - x);
    if (next == x) return x;
    x = next;
    if (dx_old <= 2 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return x;
    }
  }
  return x;
}

double expand_bracket(const std::function<double(double)>& g, double anchor,
                      int dir, double target, double limit) {
  const double g0 = g(anchor) - target;
  double step = std::max(1.0, std::abs(anchor));
  double x = anchor;
  for (int it = 0; it < 2000; ++it) {
    double next = anchor + dir * step;
    if ((dir > 0 && next >= limit) || (dir < 0 && next <= limit)) {
      return limit;
    }
    const double gn = g(next) - target;
    if (gn == 0.0 || (gn > 0) != (g0 > 0)) return next;
    x = next;
    step *= 2.0;
  }
  return x;
}

std::vector<double> probability_grid(int n, double eps) {
  std::vector<double> ps(static_cast<std::size_t>(n));
  if (n == 1) {
    ps[0] = 0.5;
    return ps;
  }
  for (int k = 0; k < n; ++k) {
    ps[static_cast<std::size_t>(k)] = eps + k * (1.0 - 2.0 * eps) / (n - 1);
  }
  return ps;
}

}  // namespace pdfrel::numerics
