#pragma once

#include <optional>

#include "pdfrel/distribution.hpp"

namespace pdfrel {

enum class InfoMethod { kQuadrature, kClosedForm };

const char* info_method_name(InfoMethod m) noexcept;

/// Entropy and varentropy of IC(X) = -log f(X), in nats.
struct InfoReport {
  double entropy = 0.0;
  double varentropy = 0.0;
  InfoMethod method = InfoMethod::kQuadrature;
  double est_abs_error = 0.0;
};

/// Closed form when the family has one (cross-checked against quadrature,
/// the discrepancy folded into est_abs_error), quadrature otherwise.
InfoReport info_report(const Distribution& d);
double entropy(const Distribution& d);
double varentropy(const Distribution& d);

/// Quadrature in probability space only, never the closed forms.
InfoReport info_by_quadrature(const Distribution& d);

enum class ResidualEntropyForm {
  kDirect,      // E[-log f_t(X_t)]
  kLambdaForm,  // -Lambda(t) - (1/S(t)) int_t f log f
  kHazardForm,  // 1 - (1/S(t)) int_t f log lambda
};

double residual_entropy(const Distribution& d, double t,
                        ResidualEntropyForm form = ResidualEntropyForm::kDirect);

struct ResidualVarentropy {
  double value = 0.0;          // max(0, variance_form)
  double variance_form = 0.0;  // Var[IC(X_t)], centred in probability space
  double moment_form = 0.0;    // (1/S) int f log^2 f - (Lambda + H)^2
};

ResidualVarentropy residual_varentropy_forms(const Distribution& d, double t);
double residual_varentropy(const Distribution& d, double t);

/// L(x) = P(IC(X) <= x) = 1 - K(e^-x), right-continuous.
double ic_cdf(const Distribution& d, double x);

/// (u/v) (ln((1-p)u) / ln((1-p)v))^((k-1)/k); BadUVOrder unless 0 < v < u < 1.
double weibull_ratio(double k, double u, double v, double p);

/// f(F^-1(1 - (1-p)u)) / f(F^-1(1 - (1-p)v)) for any base law.
double residual_density_ratio(const Distribution& d, double u, double v, double p);

}  // namespace pdfrel
