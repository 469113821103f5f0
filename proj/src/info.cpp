#include "pdfrel/info.hpp"

#include <algorithm>
#include <vector>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/pdf_related.hpp"

namespace pdfrel {

namespace {

using family::kPi;

struct ClosedInfo {
  double entropy;
  double varentropy;
};

// Values for the base family (scale 1); the affine wrapper adds log(scale).
std::optional<ClosedInfo> closed_info(const FamilyModel& model) {
  return std::visit(
      [](const auto& m) -> std::optional<ClosedInfo> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, family::Exponential>) {
          return ClosedInfo{1.0 - std::log(m.rate), 1.0};
        } else if constexpr (std::is_same_v<T, family::ShiftedExponential> ||
                             std::is_same_v<T, family::ReflectedExponential> ||
                             std::is_same_v<T, family::LaplaceRate2>) {
          return ClosedInfo{1.0, 1.0};
        } else if constexpr (std::is_same_v<T, family::Uniform>) {
          return ClosedInfo{std::log(m.b - m.a), 0.0};
        } else if constexpr (std::is_same_v<T, family::Normal>) {
          return ClosedInfo{0.5 * std::log(2.0 * kPi * std::exp(1.0)) + std::log(m.sigma), 0.5};
        } else if constexpr (std::is_same_v<T, family::Logistic>) {
          return ClosedInfo{2.0 + std::log(m.s), 4.0 - kPi * kPi / 3.0};
        } else if constexpr (std::is_same_v<T, family::Cauchy>) {
          return ClosedInfo{std::log(4.0 * kPi * m.gamma), kPi * kPi / 3.0};
        } else if constexpr (std::is_same_v<T, family::ParetoType>) {
          // -log f = 2 log(1 + X) with 1 + X Pareto(1): log(1 + X) ~ Exp(1).
          return ClosedInfo{2.0, 4.0};
        } else if constexpr (std::is_same_v<T, family::SymmetricTriangular>) {
          return ClosedInfo{0.5 + std::log(m.half()), 0.25};
        } else if constexpr (std::is_same_v<T, family::TriangularAbs>) {
          return ClosedInfo{0.5, 0.25};
        } else {
          return std::nullopt;
        }
      },
      model);
}

// Probability-space splits at the kinks of -log f(Q(p)).
std::vector<double> kink_splits(const Distribution& d) {
  if (d.mono().mode && d.support().interior(*d.mono().mode)) {
    return {d.cdf(*d.mono().mode)};
  }
  return {};
}

// x = Q(p) taken from whichever tail keeps precision.
double quantile_pq(const Distribution& d, double p, double q) {
  return p <= 0.5 ? d.quantile(p) : d.isf(q);
}

void check_age(const Distribution& d, double t) {
  const Support& s = d.support();
  if (!(t > s.lower && t < s.upper) || !(d.sf(t) > 0.0)) {
    fail(ErrorCode::kTOutOfSupport,
         "t is not interior to the support of " + d.spec_string());
  }
}

// f(x) log(f(x))^power with 0 log 0 = 0.
double f_log_pow(const Distribution& d, double x, int power) {
  const double f = d.pdf(x);
  if (!(f > 0.0)) return 0.0;
  const double l = d.log_pdf(x);
  return power == 1 ? f * l : f * l * l;
}

// int_t^b g(x) dx, split at the mode when it lies beyond t.
double integrate_tail(const Distribution& d, double t,
                      const std::function<double(double)>& g) {
  const double b = d.support().upper;
  double total = 0.0;
  double from = t;
  if (d.mono().mode && *d.mono().mode > t && *d.mono().mode < b) {
    total += numerics::integrate(g, t, *d.mono().mode, 1e-13, 1e-8).value;
    from = *d.mono().mode;
  }
  total += numerics::integrate(g, from, b, 1e-13, 1e-8).value;
  return total;
}

}  // namespace

const char* info_method_name(InfoMethod m) noexcept {
  return m == InfoMethod::kClosedForm ? "closed_form" : "quadrature";
}

InfoReport info_by_quadrature(const Distribution& d) {
  InfoReport r;
  r.method = InfoMethod::kQuadrature;
  if (d.shape() == Shape::kConstant) {
    r.entropy = -std::log(d.max_density());
    return r;
  }
  const auto splits = kink_splits(d);
  auto ic = [&d](double p, double q) { return -d.log_pdf(quantile_pq(d, p, q)); };
  const auto h = numerics::integrate_unit(ic, splits, 1e-13, 1e-8);
  const double mean = h.value;
  auto centred = [&](double p, double q) {
    const double z = ic(p, q) - mean;
    return z * z;
  };
  const auto v = numerics::integrate_unit(centred, splits, 1e-13, 1e-7);
  r.entropy = mean;
  r.varentropy = std::max(0.0, v.value);
  r.est_abs_error = h.abs_error + v.abs_error;
  return r;
}

InfoReport info_report(const Distribution& d) {
  InfoReport quad = info_by_quadrature(d);
  auto closed = closed_info(d.model());
  if (!closed) return quad;
  InfoReport r;
  r.method = InfoMethod::kClosedForm;
  r.entropy = closed->entropy + std::log(d.scale());
  r.varentropy = closed->varentropy;
  r.est_abs_error = std::max({quad.est_abs_error, std::abs(quad.entropy - r.entropy),
                              std::abs(quad.varentropy - r.varentropy)});
  return r;
}

double entropy(const Distribution& d) { return info_report(d).entropy; }
double varentropy(const Distribution& d) { return info_report(d).varentropy; }

double residual_entropy(const Distribution& d, double t, ResidualEntropyForm form) {
  check_age(d, t);
  const double s = d.sf(t);
  switch (form) {
    case ResidualEntropyForm::kDirect: {
      // x = F^-1(1 - (1 - p) S(t)) maps p in (0, 1) onto (t, b).
      std::vector<double> splits;
      if (d.mono().mode && *d.mono().mode > t && d.support().interior(*d.mono().mode)) {
        splits.push_back(1.0 - d.sf(*d.mono().mode) / s);
      }
      auto ic = [&](double, double q) { return -d.log_pdf(d.isf(q * s)) + std::log(s); };
      if (d.shape() == Shape::kConstant) return std::log(s / d.max_density());
      return numerics::integrate_unit(ic, splits, 1e-13, 1e-8).value;
    }
    case ResidualEntropyForm::kLambdaForm: {
      const double i1 = integrate_tail(d, t, [&d](double x) { return f_log_pow(d, x, 1); });
      return std::log(s) - i1 / s;
    }
    case ResidualEntropyForm::kHazardForm: {
      auto g = [&d](double x) {
        const double f = d.pdf(x);
        if (!(f > 0.0)) return 0.0;
        return f * (d.log_pdf(x) - std::log(d.sf(x)));
      };
      return 1.0 - integrate_tail(d, t, g) / s;
    }
  }
  return numerics::kNaN;
}

ResidualVarentropy residual_varentropy_forms(const Distribution& d, double t) {
  check_age(d, t);
  const double s = d.sf(t);
  ResidualVarentropy out;
  if (d.shape() == Shape::kConstant) return out;

  std::vector<double> splits;
  if (d.mono().mode && *d.mono().mode > t && d.support().interior(*d.mono().mode)) {
    splits.push_back(1.0 - d.sf(*d.mono().mode) / s);
  }
  const double h = residual_entropy(d, t, ResidualEntropyForm::kDirect);
  auto centred = [&](double, double q) {
    const double z = -d.log_pdf(d.isf(q * s)) + std::log(s) - h;
    return z * z;
  };
  out.variance_form = numerics::integrate_unit(centred, splits, 1e-13, 1e-7).value;

  const double i1 = integrate_tail(d, t, [&d](double x) { return f_log_pow(d, x, 1); });
  const double i2 = integrate_tail(d, t, [&d](double x) { return f_log_pow(d, x, 2); });
  // Lambda(t) + H(X_t) = -(1/S) int_t f log f.
  const double lambda_plus_h = -i1 / s;
  out.moment_form = i2 / s - lambda_plus_h * lambda_plus_h;
  out.value = std::max(0.0, out.variance_form);
  return out;
}

double residual_varentropy(const Distribution& d, double t) {
  return residual_varentropy_forms(d, t).value;
}

double ic_cdf(const Distribution& d, double x) {
  const double y = std::exp(-x);
  if (d.shape() == Shape::kConstant) return y <= d.max_density() ? 1.0 : 0.0;
  return 1.0 - pdf_related_cdf_total(d, y);
}

double weibull_ratio(double k, double u, double v, double p) {
  if (!(k > 0.0) || !std::isfinite(k)) fail(ErrorCode::kParamOutOfRange, "k must be > 0");
  if (!(0.0 < v && v < u && u < 1.0)) {
    fail(ErrorCode::kBadUVOrder, "need 0 < v < u < 1");
  }
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  const double ratio = std::log((1.0 - p) * u) / std::log((1.0 - p) * v);
  return (u / v) * std::pow(ratio, (k - 1.0) / k);
}

double residual_density_ratio(const Distribution& d, double u, double v, double p) {
  if (!(0.0 < v && v < u && u < 1.0)) {
    fail(ErrorCode::kBadUVOrder, "need 0 < v < u < 1");
  }
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  return d.pdf(d.isf((1.0 - p) * u)) / d.pdf(d.isf((1.0 - p) * v));
}

}  // namespace pdfrel
