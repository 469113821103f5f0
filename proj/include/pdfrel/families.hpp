#pragma once

// Parametric families in their own coordinates. Distribution adds the
// affine wrapper, support checks and validation on top of these; the members
// below may assume that `x` lies inside the (closed) support.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "pdfrel/numerics.hpp"

namespace pdfrel {

enum class Shape {
  kStrictlyDecreasing,
  kStrictlyIncreasing,
  kUnimodal,
  // Strictly decreasing then strictly increasing (e.g. |x| on [-1, 1]).
  kValley,
  // Constant density; only the uniform family.
  kConstant,
};

struct Support {
  double lower = -numerics::kInf;
  double upper = numerics::kInf;
  bool lower_open = true;
  bool upper_open = true;

  double length() const { return upper - lower; }
  bool contains(double x) const {
    const bool above = lower_open ? x > lower : x >= lower;
    const bool below = upper_open ? x < upper : x <= upper;
    return above && below;
  }
  bool interior(double x) const { return x > lower && x < upper; }
};

namespace family {

using numerics::kInf;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

double normal_cdf(double z);
double normal_sf(double z);
double normal_quantile(double p);
double normal_isf(double q);

struct Exponential {
  static constexpr std::string_view kName = "exponential";
  double rate = 1.0;

  Support support() const { return {0.0, kInf, true, true}; }
  Shape shape() const { return Shape::kStrictlyDecreasing; }
  double mode() const { return 0.0; }
  bool symmetric() const { return false; }
  double pdf(double x) const { return rate * std::exp(-rate * x); }
  double log_pdf(double x) const { return std::log(rate) - rate * x; }
  double dpdf(double x) const { return -rate * pdf(x); }
  double cdf(double x) const { return -std::expm1(-rate * x); }
  double sf(double x) const { return std::exp(-rate * x); }
  double quantile(double p) const { return -std::log1p(-p) / rate; }
  double isf(double q) const { return -std::log(q) / rate; }
  double density_at_lower() const { return rate; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const { return std::log(rate / y) / rate; }
};

struct ShiftedExponential {
  static constexpr std::string_view kName = "shifted_exponential";
  double a = 0.0;

  Support support() const { return {a, kInf, true, true}; }
  Shape shape() const { return Shape::kStrictlyDecreasing; }
  double mode() const { return a; }
  bool symmetric() const { return false; }
  double pdf(double x) const { return std::exp(a - x); }
  double log_pdf(double x) const { return a - x; }
  double dpdf(double x) const { return -pdf(x); }
  double cdf(double x) const { return -std::expm1(a - x); }
  double sf(double x) const { return std::exp(a - x); }
  double quantile(double p) const { return a - std::log1p(-p); }
  double isf(double q) const { return a - std::log(q); }
  double density_at_lower() const { return 1.0; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const { return a - std::log(y); }
};

struct ReflectedExponential {
  static constexpr std::string_view kName = "reflected_exponential";
  double b = 0.0;

  Support support() const { return {-kInf, b, true, true}; }
  Shape shape() const { return Shape::kStrictlyIncreasing; }
  double mode() const { return b; }
  bool symmetric() const { return false; }
  double pdf(double x) const { return std::exp(x - b); }
  double log_pdf(double x) const { return x - b; }
  double dpdf(double x) const { return pdf(x); }
  double cdf(double x) const { return std::exp(x - b); }
  double sf(double x) const { return -std::expm1(x - b); }
  double quantile(double p) const { return b + std::log(p); }
  double isf(double q) const { return b + std::log1p(-q); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 1.0; }
  double lower_inverse(double y) const { return b + std::log(y); }
};

// Laplace law with rate 2: f(x) = exp(-2|x - m|).
struct LaplaceRate2 {
  static constexpr std::string_view kName = "laplace2";
  double m = 0.0;

  Support support() const { return {}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return m; }
  bool symmetric() const { return true; }
  double pdf(double x) const { return std::exp(-2.0 * std::abs(x - m)); }
  double log_pdf(double x) const { return -2.0 * std::abs(x - m); }
  double dpdf(double x) const {
    if (x == m) return 0.0;
    return (x < m ? 2.0 : -2.0) * pdf(x);
  }
  double cdf(double x) const {
    return x < m ? 0.5 * std::exp(2.0 * (x - m))
                 : 1.0 - 0.5 * std::exp(-2.0 * (x - m));
  }
  double sf(double x) const { return cdf(2.0 * m - x); }
  double quantile(double p) const {
    return p <= 0.5 ? m + 0.5 * std::log(2.0 * p)
                    : m - 0.5 * std::log(2.0 * (1.0 - p));
  }
  double isf(double q) const { return 2.0 * m - quantile(q); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const { return m + 0.5 * std::log(y); }
  double upper_inverse(double y) const { return m - 0.5 * std::log(y); }
};

struct Uniform {
  static constexpr std::string_view kName = "uniform";
  double a = 0.0;
  double b = 1.0;

  Support support() const { return {a, b, true, true}; }
  Shape shape() const { return Shape::kConstant; }
  double mode() const { return 0.5 * (a + b); }
  bool symmetric() const { return false; }
  double pdf(double) const { return 1.0 / (b - a); }
  double log_pdf(double) const { return -std::log(b - a); }
  double dpdf(double) const { return 0.0; }
  double cdf(double x) const { return (x - a) / (b - a); }
  double sf(double x) const { return (b - x) / (b - a); }
  double quantile(double p) const { return a + p * (b - a); }
  double isf(double q) const { return b - q * (b - a); }
  double density_at_lower() const { return 1.0 / (b - a); }
  double density_at_upper() const { return 1.0 / (b - a); }
};

// f(x) = 1 / (1 + x)^2 on (0, inf).
struct ParetoType {
  static constexpr std::string_view kName = "paretotype";

  Support support() const { return {0.0, kInf, true, true}; }
  Shape shape() const { return Shape::kStrictlyDecreasing; }
  double mode() const { return 0.0; }
  bool symmetric() const { return false; }
  double pdf(double x) const { return 1.0 / ((1.0 + x) * (1.0 + x)); }
  double log_pdf(double x) const { return -2.0 * std::log1p(x); }
  double dpdf(double x) const { return -2.0 / ((1.0 + x) * (1.0 + x) * (1.0 + x)); }
  double cdf(double x) const { return x / (1.0 + x); }
  double sf(double x) const { return 1.0 / (1.0 + x); }
  double quantile(double p) const { return p / (1.0 - p); }
  double isf(double q) const { return (1.0 - q) / q; }
  double density_at_lower() const { return 1.0; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const { return 1.0 / std::sqrt(y) - 1.0; }
};

// f(x) = b/3 + 1/2 - b (x - 1)^2 on (0, 2), b in (0, 3/4].
struct Parabolic {
  static constexpr std::string_view kName = "parabolic";
  double b = 0.5;

  double peak() const { return b / 3.0 + 0.5; }
  Support support() const { return {0.0, 2.0, true, true}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return 1.0; }
  bool symmetric() const { return true; }
  double pdf(double x) const { return peak() - b * (x - 1.0) * (x - 1.0); }
  double log_pdf(double x) const { return std::log(pdf(x)); }
  double dpdf(double x) const { return -2.0 * b * (x - 1.0); }
  double cdf(double x) const {
    if (x > 1.0) return 1.0 - lower_cdf(2.0 - x);
    return lower_cdf(x);
  }
  double sf(double x) const { return cdf(2.0 - x); }
  double quantile(double p) const {
    return p <= 0.5 ? lower_quantile(p) : 2.0 - lower_quantile(1.0 - p);
  }
  double isf(double q) const {
    return q <= 0.5 ? 2.0 - lower_quantile(q) : lower_quantile(1.0 - q);
  }
  double density_at_lower() const { return 0.5 - 2.0 * b / 3.0; }
  double density_at_upper() const { return 0.5 - 2.0 * b / 3.0; }
  double lower_inverse(double y) const {
    return 1.0 - std::sqrt(std::max(0.0, (peak() - y) / b));
  }
  double upper_inverse(double y) const {
    return 1.0 + std::sqrt(std::max(0.0, (peak() - y) / b));
  }

  // F on [0, 1], expanded around 0 so small x keeps relative precision.
  double lower_cdf(double x) const {
    return x * ((0.5 - 2.0 * b / 3.0) + b * x - (b / 3.0) * x * x);
  }
  double lower_quantile(double p) const;
};

struct Weibull {
  static constexpr std::string_view kName = "weibull";
  double k = 1.0;
  double lambda = 1.0;

  Support support() const { return {0.0, kInf, true, true}; }
  Shape shape() const {
    return k > 1.0 ? Shape::kUnimodal : Shape::kStrictlyDecreasing;
  }
  double mode() const {
    return k > 1.0 ? lambda * std::pow((k - 1.0) / k, 1.0 / k) : 0.0;
  }
  bool symmetric() const { return false; }
  double pdf(double x) const { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const {
    const double z = x / lambda;
    if (k == 1.0) return -std::log(lambda) - z;
    return std::log(k / lambda) + (k - 1.0) * std::log(z) - std::pow(z, k);
  }
  double dpdf(double x) const {
    const double z = x / lambda;
    if (k == 1.0) return -pdf(x) / lambda;
    return pdf(x) / x * ((k - 1.0) - k * std::pow(z, k));
  }
  double cdf(double x) const { return -std::expm1(-std::pow(x / lambda, k)); }
  double sf(double x) const { return std::exp(-std::pow(x / lambda, k)); }
  double quantile(double p) const {
    return lambda * std::pow(-std::log1p(-p), 1.0 / k);
  }
  double isf(double q) const { return lambda * std::pow(-std::log(q), 1.0 / k); }
  double density_at_lower() const {
    if (k < 1.0) return kInf;
    return k == 1.0 ? 1.0 / lambda : 0.0;
  }
  double density_at_upper() const { return 0.0; }
};

struct Normal {
  static constexpr std::string_view kName = "normal";
  double mu = 0.0;
  double sigma = 1.0;

  Support support() const { return {}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return mu; }
  bool symmetric() const { return true; }
  double pdf(double x) const { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z - kLogSqrt2Pi - std::log(sigma);
  }
  double dpdf(double x) const { return -(x - mu) / (sigma * sigma) * pdf(x); }
  double cdf(double x) const { return normal_cdf((x - mu) / sigma); }
  double sf(double x) const { return normal_sf((x - mu) / sigma); }
  double quantile(double p) const { return mu + sigma * normal_quantile(p); }
  double isf(double q) const { return mu + sigma * normal_isf(q); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 0.0; }
  double half_width(double y) const {
    const double w = -2.0 * (std::log(y * sigma) + kLogSqrt2Pi);
    return sigma * std::sqrt(std::max(0.0, w));
  }
  double lower_inverse(double y) const { return mu - half_width(y); }
  double upper_inverse(double y) const { return mu + half_width(y); }
};

struct Logistic {
  static constexpr std::string_view kName = "logistic";
  double mu = 0.0;
  double s = 1.0;

  Support support() const { return {}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return mu; }
  bool symmetric() const { return true; }
  double pdf(double x) const { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const {
    const double a = std::abs((x - mu) / s);
    return -a - 2.0 * std::log1p(std::exp(-a)) - std::log(s);
  }
  double dpdf(double x) const {
    return -pdf(x) * std::tanh(0.5 * (x - mu) / s) / s;
  }
  double cdf(double x) const { return 1.0 / (1.0 + std::exp(-(x - mu) / s)); }
  double sf(double x) const { return 1.0 / (1.0 + std::exp((x - mu) / s)); }
  double quantile(double p) const {
    return mu + s * (std::log(p) - std::log1p(-p));
  }
  double isf(double q) const { return mu + s * (std::log1p(-q) - std::log(q)); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const {
    // p (1 - p) = y s on the lower branch p <= 1/2.
    const double r = y * s;
    const double p = 2.0 * r / (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * r)));
    return quantile(p);
  }
  double upper_inverse(double y) const { return 2.0 * mu - lower_inverse(y); }
};

struct Cauchy {
  static constexpr std::string_view kName = "cauchy";
  double x0 = 0.0;
  double gamma = 1.0;

  Support support() const { return {}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return x0; }
  bool symmetric() const { return true; }
  double pdf(double x) const {
    const double z = (x - x0) / gamma;
    return 1.0 / (kPi * gamma * (1.0 + z * z));
  }
  double log_pdf(double x) const {
    const double z = (x - x0) / gamma;
    return -std::log(kPi * gamma) - std::log1p(z * z);
  }
  double dpdf(double x) const {
    const double z = (x - x0) / gamma;
    const double d = 1.0 + z * z;
    return -2.0 * z / (kPi * gamma * gamma * d * d);
  }
  double cdf(double x) const { return std::atan2(1.0, -(x - x0) / gamma) / kPi; }
  double sf(double x) const { return std::atan2(1.0, (x - x0) / gamma) / kPi; }
  double quantile(double p) const {
    if (p == 0.5) return x0;
    return p < 0.5 ? x0 - gamma / std::tan(kPi * p)
                   : x0 + gamma / std::tan(kPi * (1.0 - p));
  }
  double isf(double q) const { return 2.0 * x0 - quantile(q); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 0.0; }
  double half_width(double y) const {
    return gamma * std::sqrt(std::max(0.0, 1.0 / (kPi * gamma * y) - 1.0));
  }
  double lower_inverse(double y) const { return x0 - half_width(y); }
  double upper_inverse(double y) const { return x0 + half_width(y); }
};

// sign = +1: f(x) = 1 - |x|; sign = -1: f(x) = |x|; both on [-1, 1].
struct TriangularAbs {
  static constexpr std::string_view kName = "triangular_abs";
  double sign = 1.0;

  bool peaked() const { return sign > 0; }
  Support support() const { return {-1.0, 1.0, false, false}; }
  Shape shape() const { return peaked() ? Shape::kUnimodal : Shape::kValley; }
  double mode() const { return 0.0; }
  bool symmetric() const { return peaked(); }
  double pdf(double x) const {
    return peaked() ? 1.0 - std::abs(x) : std::abs(x);
  }
  double log_pdf(double x) const { return std::log(pdf(x)); }
  double dpdf(double x) const {
    if (x == 0.0) return 0.0;
    const double s = x < 0 ? 1.0 : -1.0;
    return peaked() ? s : -s;
  }
  double cdf(double x) const {
    if (peaked()) {
      return x <= 0 ? 0.5 * (1.0 + x) * (1.0 + x)
                    : 1.0 - 0.5 * (1.0 - x) * (1.0 - x);
    }
    return x <= 0 ? 0.5 * (1.0 - x * x) : 0.5 * (1.0 + x * x);
  }
  double sf(double x) const { return cdf(-x); }
  double quantile(double p) const {
    if (peaked()) {
      return p <= 0.5 ? -1.0 + std::sqrt(2.0 * p)
                      : 1.0 - std::sqrt(2.0 * (1.0 - p));
    }
    return p <= 0.5 ? -std::sqrt(1.0 - 2.0 * p) : std::sqrt(2.0 * p - 1.0);
  }
  double isf(double q) const { return -quantile(q); }
  double density_at_lower() const { return peaked() ? 0.0 : 1.0; }
  double density_at_upper() const { return peaked() ? 0.0 : 1.0; }
  // For the valley shape these are the solutions on the left (decreasing)
  // and right (increasing) branches.
  double lower_inverse(double y) const { return peaked() ? y - 1.0 : -y; }
  double upper_inverse(double y) const { return peaked() ? 1.0 - y : y; }
};

struct SymmetricTriangular {
  static constexpr std::string_view kName = "symmetric_triangular";
  double a = 0.0;
  double b = 2.0;

  double half() const { return 0.5 * (b - a); }
  Support support() const { return {a, b, true, true}; }
  Shape shape() const { return Shape::kUnimodal; }
  double mode() const { return 0.5 * (a + b); }
  bool symmetric() const { return true; }
  double pdf(double x) const {
    const double w = half();
    return (x <= mode() ? x - a : b - x) / (w * w);
  }
  double log_pdf(double x) const { return std::log(pdf(x)); }
  double dpdf(double x) const {
    const double w = half();
    if (x == mode()) return 0.0;
    return (x < mode() ? 1.0 : -1.0) / (w * w);
  }
  double cdf(double x) const {
    const double w = half();
    return x <= mode() ? 0.5 * (x - a) * (x - a) / (w * w)
                       : 1.0 - 0.5 * (b - x) * (b - x) / (w * w);
  }
  double sf(double x) const { return cdf(a + b - x); }
  double quantile(double p) const {
    return p <= 0.5 ? a + half() * std::sqrt(2.0 * p)
                    : b - half() * std::sqrt(2.0 * (1.0 - p));
  }
  double isf(double q) const { return a + b - quantile(q); }
  double density_at_lower() const { return 0.0; }
  double density_at_upper() const { return 0.0; }
  double lower_inverse(double y) const { return a + y * half() * half(); }
  double upper_inverse(double y) const { return b - y * half() * half(); }
};

struct TruncatedNormal {
  static constexpr std::string_view kName = "truncated_normal";
  double mu = 0.0;
  double sigma = 1.0;
  double lo = -1.0;
  double hi = 1.0;

  double alpha() const { return (lo - mu) / sigma; }
  double beta() const { return (hi - mu) / sigma; }
  // Mass of the untruncated law on (lo, hi), using the far tail for accuracy.
  double mass() const {
    return alpha() > 0 ? normal_sf(alpha()) - normal_sf(beta())
                       : normal_cdf(beta()) - normal_cdf(alpha());
  }
  Support support() const { return {lo, hi, true, true}; }
  Shape shape() const {
    if (mu <= lo) return Shape::kStrictlyDecreasing;
    if (mu >= hi) return Shape::kStrictlyIncreasing;
    return Shape::kUnimodal;
  }
  double mode() const { return std::clamp(mu, lo, hi); }
  bool symmetric() const {
    return shape() == Shape::kUnimodal &&
           std::abs((mu - lo) - (hi - mu)) <= 1e-12 * (hi - lo);
  }
  double pdf(double x) const { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z - kLogSqrt2Pi - std::log(sigma * mass());
  }
  double dpdf(double x) const { return -(x - mu) / (sigma * sigma) * pdf(x); }
  double cdf(double x) const {
    const double z = (x - mu) / sigma;
    if (alpha() > 0) return (normal_sf(alpha()) - normal_sf(z)) / mass();
    return (normal_cdf(z) - normal_cdf(alpha())) / mass();
  }
  double sf(double x) const {
    const double z = (x - mu) / sigma;
    if (beta() < 0) return (normal_cdf(beta()) - normal_cdf(z)) / mass();
    return (normal_sf(z) - normal_sf(beta())) / mass();
  }
  double quantile(double p) const {
    if (alpha() > 0) return mu + sigma * normal_isf(normal_sf(alpha()) - p * mass());
    return mu + sigma * normal_quantile(normal_cdf(alpha()) + p * mass());
  }
  double isf(double q) const {
    if (beta() < 0) return mu + sigma * normal_quantile(normal_cdf(beta()) - q * mass());
    return mu + sigma * normal_isf(normal_sf(beta()) + q * mass());
  }
  double density_at_lower() const {
    return std::isfinite(lo) ? pdf(lo) : 0.0;
  }
  double density_at_upper() const {
    return std::isfinite(hi) ? pdf(hi) : 0.0;
  }
  double half_width(double y) const {
    const double w = -2.0 * (std::log(y * sigma * mass()) + kLogSqrt2Pi);
    return sigma * std::sqrt(std::max(0.0, w));
  }
  double lower_inverse(double y) const {
    return shape() == Shape::kStrictlyDecreasing ? mu + half_width(y)
                                                 : mu - half_width(y);
  }
  double upper_inverse(double y) const { return mu + half_width(y); }
};

}  // namespace family
}  // namespace pdfrel
