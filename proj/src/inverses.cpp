#include "pdfrel/inverses.hpp"

#include <sstream>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"

namespace pdfrel {

namespace {

constexpr double kSnap = 1e-12;

[[noreturn]] void not_attained(const Distribution& d, double y, const char* branch) {
  std::ostringstream os;
  os << "y=" << y << " is not attained on the " << branch << " branch of "
     << d.spec_string();
  fail(ErrorCode::kYNotAttained, os.str());
}

double log_density(const Distribution& d, double x) {
  const Support& s = d.support();
  if (x <= s.lower) return std::log(d.endpoint_density(Endpoint::kLower));
  if (x >= s.upper) return std::log(d.endpoint_density(Endpoint::kUpper));
  return d.log_pdf(x);
}

// Root of f(x) = y on [lo, hi] where f is strictly monotone; either end may
// be infinite. Works on log f so tail values keep relative precision.
double solve_branch(const Distribution& d, double y, double lo, double hi) {
  const double target = std::log(y);
  auto g = [&d](double x) { return log_density(d, x); };
  if (!std::isfinite(lo)) lo = numerics::expand_bracket(g, hi, -1, target, lo);
  if (!std::isfinite(hi)) hi = numerics::expand_bracket(g, lo, +1, target, hi);
  auto gd = [&d](double x) {
    const double v = log_density(d, x);
    const double p = d.pdf(x);
    return std::make_pair(v, p > 0 ? d.pdf_derivative(x) / p : numerics::kNaN);
  };
  return numerics::newton_bracketed(gd, lo, hi, target);
}

void require_positive(const Distribution& d, double y) {
  if (!(y > 0.0) || std::isnan(y)) not_attained(d, y, "any");
}

}  // namespace

ImPlusRange im_plus(const Distribution& d) {
  ImPlusRange r;
  const Support& s = d.support();
  const double fa = d.endpoint_density(Endpoint::kLower);
  const double fb = d.endpoint_density(Endpoint::kUpper);
  switch (d.shape()) {
    case Shape::kConstant:
      r.lo = r.hi = fa;
      r.lo_open = r.hi_open = false;
      r.atom = true;
      break;
    case Shape::kStrictlyDecreasing:
      r = {fb, fa, true, s.lower_open || !std::isfinite(fa), false};
      break;
    case Shape::kStrictlyIncreasing:
      r = {fa, fb, true, s.upper_open || !std::isfinite(fb), false};
      break;
    case Shape::kUnimodal:
      r = {std::min(fa, fb), d.max_density(), true, false, false};
      break;
    case Shape::kValley: {
      const double bottom = d.pdf(d.mode());
      const double top = std::max(fa, fb);
      const bool top_open = fa >= fb ? s.lower_open : s.upper_open;
      r = {bottom, top, bottom <= 0.0, top_open, false};
      break;
    }
  }
  return r;
}

double lower_inverse(const Distribution& d, double y) {
  require_positive(d, y);
  const Support& s = d.support();
  const double fa = d.endpoint_density(Endpoint::kLower);
  switch (d.shape()) {
    case Shape::kConstant:
      fail(ErrorCode::kDegenerateLaw, "constant density has no inverse");
    case Shape::kStrictlyDecreasing: {
      const double fb = d.endpoint_density(Endpoint::kUpper);
      if (y > fa || y < fb) not_attained(d, y, "decreasing");
      if (y == fa) return s.lower;
      if (y == fb) return s.upper;
      if (auto x = d.closed_lower_inverse(y)) return std::clamp(*x, s.lower, s.upper);
      return solve_branch(d, y, s.lower, s.upper);
    }
    case Shape::kStrictlyIncreasing: {
      const double fb = d.endpoint_density(Endpoint::kUpper);
      if (y > fb || y < fa) not_attained(d, y, "increasing");
      if (y == fa) return s.lower;
      if (y == fb) return s.upper;
      if (auto x = d.closed_lower_inverse(y)) return std::clamp(*x, s.lower, s.upper);
      return solve_branch(d, y, s.lower, s.upper);
    }
    case Shape::kUnimodal: {
      const double m = d.mode();
      const double peak = d.max_density();
      if (y > peak * (1.0 + kSnap) || y < fa) not_attained(d, y, "lower");
      if (y >= peak * (1.0 - kSnap)) return m;
      if (y == fa) return s.lower;
      if (auto x = d.closed_lower_inverse(y)) return std::clamp(*x, s.lower, m);
      return solve_branch(d, y, s.lower, m);
    }
    case Shape::kValley: {
      const double m = d.mode();
      if (y > fa || y < d.pdf(m)) not_attained(d, y, "lower");
      if (auto x = d.closed_lower_inverse(y)) return std::clamp(*x, s.lower, m);
      return solve_branch(d, y, s.lower, m);
    }
  }
  return numerics::kNaN;
}

double upper_inverse(const Distribution& d, double y) {
  const Shape shape = d.shape();
  if (shape != Shape::kUnimodal && shape != Shape::kValley) {
    fail(ErrorCode::kNotUnimodal,
         d.spec_string() + " is not unimodal; no upper inverse");
  }
  require_positive(d, y);
  const Support& s = d.support();
  const double m = d.mode();
  const double fb = d.endpoint_density(Endpoint::kUpper);
  if (shape == Shape::kValley) {
    if (y > fb || y < d.pdf(m)) not_attained(d, y, "upper");
    if (auto x = d.closed_upper_inverse(y)) return std::clamp(*x, m, s.upper);
    return solve_branch(d, y, m, s.upper);
  }
  const double peak = d.max_density();
  if (y > peak * (1.0 + kSnap) || y < fb) not_attained(d, y, "upper");
  if (y >= peak * (1.0 - kSnap)) return m;
  if (y == fb) return s.upper;
  if (auto x = d.closed_upper_inverse(y)) return std::clamp(*x, m, s.upper);
  if (d.symmetric()) return 2.0 * m - lower_inverse(d, y);
  return solve_branch(d, y, m, s.upper);
}

double clamped_lower_inverse(const Distribution& d, double y) {
  const Support& s = d.support();
  switch (d.shape()) {
    case Shape::kUnimodal:
      if (y <= d.endpoint_density(Endpoint::kLower)) return s.lower;
      break;
    case Shape::kStrictlyIncreasing:
      if (y <= d.endpoint_density(Endpoint::kLower)) return s.lower;
      if (y >= d.endpoint_density(Endpoint::kUpper)) return s.upper;
      break;
    case Shape::kStrictlyDecreasing:
      if (y >= d.endpoint_density(Endpoint::kLower)) return s.lower;
      if (y <= d.endpoint_density(Endpoint::kUpper)) return s.upper;
      break;
    case Shape::kValley:
      if (y >= d.endpoint_density(Endpoint::kLower)) return s.lower;
      if (y <= d.pdf(d.mode())) return d.mode();
      break;
    case Shape::kConstant:
      break;
  }
  return lower_inverse(d, y);
}

double clamped_upper_inverse(const Distribution& d, double y) {
  const Support& s = d.support();
  if (d.shape() == Shape::kUnimodal && y <= d.endpoint_density(Endpoint::kUpper)) {
    return s.upper;
  }
  if (d.shape() == Shape::kValley) {
    if (y >= d.endpoint_density(Endpoint::kUpper)) return s.upper;
    if (y <= d.pdf(d.mode())) return d.mode();
  }
  return upper_inverse(d, y);
}

}  // namespace pdfrel
