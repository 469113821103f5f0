#include "pdfrel/residual.hpp"

#include <algorithm>
#include <sstream>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"

namespace pdfrel {

namespace {

void check_age(const Distribution& d, double t) {
  const Support& s = d.support();
  if (!(t > s.lower && t < s.upper) || !(d.sf(t) > 0.0)) {
    std::ostringstream os;
    os << "t=" << t << " is not interior to the support of " << d.spec_string();
    fail(ErrorCode::kTOutOfSupport, os.str());
  }
}

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
}

double fa(const Distribution& d) { return d.endpoint_density(Endpoint::kLower); }
double fb(const Distribution& d) { return d.endpoint_density(Endpoint::kUpper); }

// F(hi) - F(lo) for lo <= hi, using whichever tail is more accurate.
double mass_between(const Distribution& d, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  if (lo >= d.median()) return d.sf(lo) - d.sf(hi);
  return d.cdf(hi) - d.cdf(lo);
}

// Unimodal view of a unimodal or strictly decreasing base.
struct PeakView {
  double mode;
  double peak;
  bool decreasing;
};

PeakView peak_view(const Distribution& d) {
  switch (d.shape()) {
    case Shape::kUnimodal:
      return {d.mode(), d.max_density(), false};
    case Shape::kStrictlyDecreasing:
      return {d.support().lower, fa(d), true};
    default:
      fail(ErrorCode::kNotUnimodal,
           d.spec_string() + " is neither unimodal nor strictly decreasing");
  }
}

// Branch solutions with the endpoint convention of clamped_*_inverse.
double left_branch(const Distribution& d, const PeakView& v, double y) {
  return v.decreasing ? d.support().lower : clamped_lower_inverse(d, y);
}

double right_branch(const Distribution& d, const PeakView& v, double y) {
  return v.decreasing ? clamped_lower_inverse(d, y) : clamped_upper_inverse(d, y);
}

}  // namespace

ResidualSpec::ResidualSpec(Distribution base, double t)
    : base_(std::move(base)), t_(t) {
  check_age(base_, t_);
  survival_ = base_.sf(t_);
}

Support ResidualSpec::support() const {
  return {0.0, base_.support().upper - t_, true, true};
}

MonotoneClass ResidualSpec::mono() const {
  MonotoneClass m;
  m.kind = base_.shape();
  switch (base_.shape()) {
    case Shape::kUnimodal:
      if (t_ < base_.mode()) {
        m.mode = base_.mode() - t_;
      } else {
        m.kind = Shape::kStrictlyDecreasing;
      }
      break;
    case Shape::kValley:
      if (t_ < base_.mode()) {
        m.mode = base_.mode() - t_;
      } else {
        m.kind = Shape::kStrictlyIncreasing;
      }
      break;
    default:
      break;
  }
  return m;
}

double ResidualSpec::pdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  return base_.pdf(x + t_) / survival_;
}

double ResidualSpec::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  return mass_between(base_, t_, x + t_) / survival_;
}

double ResidualSpec::sf(double x) const {
  if (!(x > 0.0)) return 1.0;
  return base_.sf(x + t_) / survival_;
}

double ResidualSpec::quantile(double p) const {
  check_probability(p);
  const double q = (1.0 - p) * survival_;
  if (q < 0.5) return base_.isf(q) - t_;
  return base_.quantile(base_.cdf(t_) + p * survival_) - t_;
}

double ResidualSpec::isf(double q) const {
  check_probability(q);
  return quantile(1.0 - q);
}

double residual_quantile(const Distribution& d, double t, double p) {
  return ResidualSpec(d, t).quantile(p);
}

double hazard_at(const Distribution& d, double t) {
  check_age(d, t);
  return d.pdf(t) / d.sf(t);
}

double cumulative_hazard_at(const Distribution& d, double t) {
  check_age(d, t);
  return -std::log(d.sf(t));
}

double mean_residual_at(const Distribution& d, double t) {
  check_age(d, t);
  if (!d.has_finite_mean()) {
    fail(ErrorCode::kIntegralDiverged, d.spec_string() + " has no finite mean");
  }
  const double s = d.sf(t);
  auto integrand = [&](double, double q) { return d.isf(q * s) - t; };
  return numerics::integrate_unit(integrand, {}, 1e-12, 1e-8).value;
}

ImPlusRange residual_im_plus(const Distribution& d, double t) {
  check_age(d, t);
  const double s = d.sf(t);
  const double ft = d.pdf(t);
  ImPlusRange r;
  switch (d.shape()) {
    case Shape::kConstant:
      r = {ft / s, ft / s, false, false, true};
      break;
    case Shape::kStrictlyDecreasing:
      r = {fb(d) / s, ft / s, true, true, false};
      break;
    case Shape::kStrictlyIncreasing:
      r = {ft / s, fb(d) / s, true, true, false};
      break;
    case Shape::kUnimodal:
      if (t >= d.mode()) {
        r = {fb(d) / s, ft / s, true, true, false};
      } else {
        r = {std::min(ft, fb(d)) / s, d.max_density() / s, true, false, false};
      }
      break;
    case Shape::kValley:
      fail(ErrorCode::kCaseUnsupported, "residual pdf-related law of a valley-shaped density");
  }
  return r;
}

ResidualKValue residual_pdf_related_cdf(const Distribution& d, double t, double y) {
  const ImPlusRange r = residual_im_plus(d, t);
  if (r.atom) {
    fail(ErrorCode::kDegenerateLaw, "f_t(X_t) is degenerate for a constant density");
  }
  if (!(y >= r.lo) || y > r.hi * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "y=" << y << " outside the closure of Im+(f_t) = (" << r.lo << ", " << r.hi << ")";
    fail(ErrorCode::kYOutOfRange, os.str());
  }
  const double s = d.sf(t);
  const double c = y * s;
  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  ResidualKValue out;

  if (d.shape() == Shape::kStrictlyIncreasing) {
    out.which = ResidualKCase::kIncreasing;
    out.value = clamp01(mass_between(d, t, clamped_lower_inverse(d, c)) / s);
    return out;
  }
  if (d.shape() == Shape::kStrictlyDecreasing) {
    out.which = ResidualKCase::kDecreasing;
    out.value = clamp01(d.sf(std::max(t, clamped_lower_inverse(d, c))) / s);
    return out;
  }
  const double m = d.mode();
  if (t >= m) {
    out.which = ResidualKCase::kDecreasing;
    out.value = clamp01(d.sf(std::max(t, clamped_upper_inverse(d, c))) / s);
    return out;
  }
  if (c >= d.max_density()) {
    out.which = d.symmetric() ? ResidualKCase::kSymmetricUnimodal
                              : ResidualKCase::kGeneralUnimodal;
    out.value = 1.0;
    return out;
  }
  const double l = clamped_lower_inverse(d, c);
  if (d.symmetric()) {
    out.which = ResidualKCase::kSymmetricUnimodal;
    // Below the hazard rate only the right tail beyond u_c = 2m - l_c
    // contributes; from lambda(t) on, the left piece (t, l_c] joins it.
    const double ft = d.pdf(t);
    out.value = c < ft ? d.cdf(l) / s : (2.0 * d.cdf(l) - d.cdf(t)) / s;
    out.value = clamp01(out.value);
    return out;
  }
  out.which = ResidualKCase::kGeneralUnimodal;
  const double u = clamped_upper_inverse(d, c);
  out.value = clamp01((d.sf(u) + mass_between(d, t, l)) / s);
  return out;
}

double residual_pdf_related_inverse(const Distribution& d, double t, double p) {
  if (d.shape() != Shape::kStrictlyDecreasing && d.shape() != Shape::kStrictlyIncreasing) {
    fail(ErrorCode::kNotMonotone, d.spec_string() + " does not have a strictly monotone density");
  }
  const ResidualSpec res(d, t);
  return res.pdf(res.quantile(p));
}

const char* gt_case_name(GtCase c) noexcept {
  switch (c) {
    case GtCase::kA: return "a";
    case GtCase::kB: return "b";
    case GtCase::kC: return "c";
    case GtCase::kD: return "d";
  }
  return "?";
}

GtCase shifted_case(const Distribution& d, double t, double tol_eq) {
  check_age(d, t);
  const PeakView v = peak_view(d);
  if (v.decreasing || t >= v.mode) return GtCase::kD;
  const double f_a = fa(d);
  const double f_b = fb(d);
  const double f_t = d.pdf(t);
  auto leq = [tol_eq](double x, double y) {
    return x <= y + tol_eq * std::max(std::abs(x), std::abs(y));
  };
  if (leq(f_b, f_a)) return GtCase::kC;
  if (leq(f_b, f_t)) return GtCase::kA;
  return GtCase::kB;
}

ShiftedPdfLawPoint shifted_pdf_related_survival(const Distribution& d, double t,
                                                double y, double tol_eq) {
  ShiftedPdfLawPoint out;
  out.case_tag = shifted_case(d, t, tol_eq);
  out.y = y;
  const PeakView v = peak_view(d);
  if (!(y >= 0.0) || y > v.peak * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "y=" << y << " outside the closure of Im+(f) = (0, " << v.peak << "]";
    fail(ErrorCode::kYOutOfRange, os.str());
  }
  if (y >= v.peak) return out;
  const double s = d.sf(t);
  // {f > y} is the interval (l*, u*); conditioning on X > t cuts it at t.
  const double lo = std::max(t, left_branch(d, v, y));
  const double hi = right_branch(d, v, y);
  out.survival = std::clamp(mass_between(d, lo, hi) / s, 0.0, 1.0);
  return out;
}

std::vector<double> shifted_branch_points(const Distribution& d, double t) {
  check_age(d, t);
  const PeakView v = peak_view(d);
  std::vector<double> pts{fb(d), d.pdf(t)};
  if (!v.decreasing && t < v.mode) {
    pts.push_back(fa(d));
    pts.push_back(v.peak);
  }
  std::vector<double> out;
  for (double p : pts) {
    if (p > 0.0 && p <= v.peak && std::isfinite(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double shifted_pdf_related_pdf(const Distribution& d, double t, double y,
                               bool strict, double tol_eq) {
  const PeakView v = peak_view(d);
  check_age(d, t);
  if (!(y > 0.0) || y > v.peak * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "y=" << y << " outside Im+(f) = (0, " << v.peak << "]";
    fail(ErrorCode::kYOutOfRange, os.str());
  }
  if (strict) {
    for (double c : shifted_branch_points(d, t)) {
      if (std::abs(y - c) <= tol_eq * c) {
        std::ostringstream os;
        os << "y=" << y << " sits on a branch boundary of g_t";
        fail(ErrorCode::kAtBranchBoundary, os.str());
      }
    }
  }
  if (y >= v.peak) return 0.0;
  const double s = d.sf(t);
  const double f_t = d.pdf(t);
  const bool before_mode = !v.decreasing && t < v.mode;
  // Each condition is read as a left limit in y.
  const bool u_active = y > fb(d) && (before_mode || y <= f_t);
  const bool l_active = before_mode && y > fa(d) && y > f_t;
  double g = 0.0;
  if (u_active) {
    const double u = right_branch(d, v, y);
    const double du = d.pdf_derivative(u);
    if (l_active && d.symmetric()) return -2.0 * y / (s * du);
    g -= y / (s * du);
  }
  if (l_active) {
    g += y / (s * d.pdf_derivative(clamped_lower_inverse(d, y)));
  }
  return g;
}

}  // namespace pdfrel
