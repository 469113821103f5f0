#pragma once

#include <functional>
#include <string>

#include "pdfrel/distribution.hpp"

namespace pdfrel {

/// Read-only view of a univariate law through its quantile function, the
/// representation every order decider works on.
struct LawView {
  std::string label;
  std::function<double(double)> quantile;
  std::function<double(double)> cdf;
  // Density evaluated at the p-quantile; empty when not available.
  std::function<double(double)> density_at_quantile;
  double lower = -numerics::kInf;
  double upper = numerics::kInf;
  bool symmetric = false;
  // Flat density or an atom: excluded from the convex and star deciders.
  bool flat = false;

  double median() const { return quantile(0.5); }
};

LawView law_of(const Distribution& d);
/// X_t.
LawView law_of_residual(const Distribution& d, double t);
/// f(X).
LawView law_of_pdf_related(const Distribution& d);
/// f_t(X_t), the pdf-related law of the residual lifetime.
LawView law_of_residual_pdf_related(const Distribution& d, double t);
/// X*, with density f*.
LawView law_of_rearranged(const Distribution& d);
/// |X - Me|.
LawView law_of_abs_centered(const Distribution& d);
/// log V for a law on (0, inf), by quantile composition.
LawView law_of_log(const LawView& v);

}  // namespace pdfrel
