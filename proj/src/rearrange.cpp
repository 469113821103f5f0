#include "pdfrel/rearrange.hpp"

#include <algorithm>

#include "pdfrel/error.hpp"
#include "pdfrel/inverses.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/pdf_related.hpp"

namespace pdfrel {

namespace {

double fa(const Distribution& d) { return d.endpoint_density(Endpoint::kLower); }
double fb(const Distribution& d) { return d.endpoint_density(Endpoint::kUpper); }

// m'(c), summing the active branch contributions 1 / f'(branch).
double level_measure_slope(const Distribution& d, double c) {
  double slope = 0.0;
  switch (d.shape()) {
    case Shape::kUnimodal:
      if (c > fb(d)) slope += 1.0 / d.pdf_derivative(upper_inverse(d, c));
      if (c > fa(d)) slope -= 1.0 / d.pdf_derivative(lower_inverse(d, c));
      break;
    case Shape::kValley:
      if (c < fa(d)) slope += 1.0 / d.pdf_derivative(lower_inverse(d, c));
      if (c < fb(d)) slope -= 1.0 / d.pdf_derivative(upper_inverse(d, c));
      break;
    default:
      break;
  }
  return slope;
}

// Solves m(c) = x for c by safeguarded Newton on the decreasing level measure.
double invert_level_measure(const Distribution& d, double x) {
  const double top = d.max_density();
  double lo = std::isfinite(top) ? top : 1.0;
  while (level_measure(d, lo) <= x) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  double hi = std::isfinite(top) ? top : lo;
  while (level_measure(d, hi) > x) hi *= 2.0;
  auto g = [&d](double c) {
    return std::make_pair(level_measure(d, c), level_measure_slope(d, c));
  };
  return numerics::newton_bracketed(g, lo, hi, x);
}

}  // namespace

double level_measure(const Distribution& d, double c) {
  const Support& s = d.support();
  const double len = s.length();
  if (c <= 0.0) return len;
  switch (d.shape()) {
    case Shape::kConstant:
      return c < fa(d) ? len : 0.0;
    case Shape::kStrictlyDecreasing:
      return clamped_lower_inverse(d, c) - s.lower;
    case Shape::kStrictlyIncreasing:
      return s.upper - clamped_lower_inverse(d, c);
    case Shape::kUnimodal:
      if (c >= d.max_density()) return 0.0;
      return clamped_upper_inverse(d, c) - clamped_lower_inverse(d, c);
    case Shape::kValley:
      if (c >= std::max(fa(d), fb(d))) return 0.0;
      return len - (clamped_upper_inverse(d, c) - clamped_lower_inverse(d, c));
  }
  return numerics::kNaN;
}

double decreasing_rearrangement(const Distribution& d, double x) {
  const Support& s = d.support();
  if (!(x > 0.0)) return d.max_density();
  if (x >= s.length()) return 0.0;
  switch (d.shape()) {
    case Shape::kConstant:
      return fa(d);
    case Shape::kStrictlyDecreasing:
      return d.pdf(s.lower + x);
    case Shape::kStrictlyIncreasing:
      return d.pdf(s.upper - x);
    case Shape::kUnimodal:
      if (d.symmetric()) return d.pdf(d.mode() - 0.5 * x);
      break;
    case Shape::kValley:
      break;
  }
  return invert_level_measure(d, x);
}

RearrangedLaw::RearrangedLaw(Distribution source)
    : source_(std::move(source)), len_(source_.support().length()) {}

double RearrangedLaw::fstar(double x) const {
  return decreasing_rearrangement(source_, x);
}

double RearrangedLaw::cdf_by_quadrature(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (t >= len_) return 1.0;
  return numerics::integrate([this](double x) { return fstar(x); }, 0.0, t, 1e-12, 1e-8)
      .value;
}

double RearrangedLaw::cdf_by_pdf_related(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (t >= len_) return 1.0;
  if (has_flat_zone()) return t / len_;
  return 1.0 - pdf_related_cdf_total(source_, fstar(t));
}

double RearrangedLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  const Distribution& d = source_;
  const Support& s = d.support();
  switch (d.shape()) {
    case Shape::kConstant:
      return u * len_;
    case Shape::kStrictlyDecreasing:
      return d.quantile(u) - s.lower;
    case Shape::kStrictlyIncreasing:
      return s.upper - d.isf(u);
    case Shape::kUnimodal: {
      if (d.symmetric()) return 2.0 * (d.isf(0.5 * (1.0 - u)) - d.mode());
      // Level c with P(f(X) > c) = u, then the measure of {f > c}.
      const double top = d.max_density();
      auto mass = [&d, top](double c) {
        if (c <= 0.0) return std::make_pair(1.0, numerics::kNaN);
        if (c >= top) return std::make_pair(0.0, numerics::kNaN);
        const double l = clamped_lower_inverse(d, c);
        const double r = clamped_upper_inverse(d, c);
        return std::make_pair(d.cdf(r) - d.cdf(l), c * level_measure_slope(d, c));
      };
      if (std::isfinite(top)) {
        return level_measure(d, numerics::newton_bracketed(mass, 0.0, top, u));
      }
      break;
    }
    case Shape::kValley:
      break;
  }
  auto g = [this](double x) { return std::make_pair(cdf(x), fstar(x)); };
  double hi = std::isfinite(len_) ? len_ : 1.0;
  while (!std::isfinite(len_) && cdf(hi) < u) hi *= 2.0;
  return numerics::newton_bracketed(g, 0.0, hi, u);
}

double pdf_related_quantile_via_rearrangement(const Distribution& d, double p) {
  const RearrangedLaw law(d);
  if (law.has_flat_zone()) {
    fail(ErrorCode::kFlatZone, d.spec_string() + " has a flat density");
  }
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  return law.fstar(law.quantile(1.0 - p));
}

}  // namespace pdfrel
