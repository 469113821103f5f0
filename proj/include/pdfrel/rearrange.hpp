#pragma once

#include "pdfrel/distribution.hpp"

namespace pdfrel {

/// Lebesgue measure of {x : f(x) > c}; the support length (possibly +inf)
/// for c <= 0.
double level_measure(const Distribution& d, double c);

/// f*(x) = sup{c : m(c) > x}, the decreasing rearrangement on (0, inf).
double decreasing_rearrangement(const Distribution& d, double x);

/// The law of X*, the variable with density f* on (0, |S_X|).
class RearrangedLaw {
 public:
  explicit RearrangedLaw(Distribution source);

  const Distribution& source() const { return source_; }
  double support_len() const { return len_; }
  bool has_flat_zone() const { return source_.shape() == Shape::kConstant; }

  double fstar(double x) const;
  /// Integral of f* over (0, t).
  double cdf_by_quadrature(double t) const;
  /// 1 - K(f*(t)) = P(f(X) > f*(t)).
  double cdf_by_pdf_related(double t) const;
  double cdf(double t) const { return cdf_by_pdf_related(t); }
  double quantile(double u) const;
  double density_at_quantile(double u) const { return fstar(quantile(u)); }

 private:
  Distribution source_;
  double len_;
};

/// f*(F_{X*}^-1(1 - p)), the p-quantile of f(X) through the rearrangement.
/// FlatZone for a constant density.
double pdf_related_quantile_via_rearrangement(const Distribution& d, double p);

}  // namespace pdfrel
