#pragma once

#include <vector>

#include "pdfrel/distribution.hpp"
#include "pdfrel/inverses.hpp"

namespace pdfrel {

/// Residual lifetime X_t = [X - t | X > t] of a base law at age t.
class ResidualSpec {
 public:
  /// TOutOfSupport unless t is interior to the support with F(t) < 1.
  ResidualSpec(Distribution base, double t);

  const Distribution& base() const { return base_; }
  double t() const { return t_; }
  double survival_at_t() const { return survival_; }
  /// (0, b - t).
  Support support() const;
  /// Unimodal with mode m - t while t < m; strictly decreasing once t >= m.
  MonotoneClass mono() const;

  double pdf(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  double quantile(double p) const;
  double isf(double q) const;

 private:
  Distribution base_;
  double t_;
  double survival_;
};

/// F^-1(1 - (1 - p) S(t)) - t.
double residual_quantile(const Distribution& d, double t, double p);

/// f(t) / S(t).
double hazard_at(const Distribution& d, double t);
/// -log S(t).
double cumulative_hazard_at(const Distribution& d, double t);
/// E[X - t | X > t]; IntegralDiverged when the base has no finite mean.
double mean_residual_at(const Distribution& d, double t);

/// Im+(f_t) for the residual density f_t(x) = f(x + t) / S(t).
ImPlusRange residual_im_plus(const Distribution& d, double t);

/// Which K_t formula produced a value.
enum class ResidualKCase {
  kDecreasing,        // f strictly decreasing on (t, b)
  kIncreasing,        // f strictly increasing on (t, b)
  kSymmetricUnimodal, // symmetric unimodal base, t <= m
  kGeneralUnimodal,   // non-symmetric unimodal base, t < m
};

struct ResidualKValue {
  double value = 0.0;
  ResidualKCase which = ResidualKCase::kDecreasing;
};

/// K_t(y) = P(f_t(X_t) <= y). YOutOfRange outside the closure of Im+(f_t).
ResidualKValue residual_pdf_related_cdf(const Distribution& d, double t, double y);

/// y = f(F^-1(1 - (1 - p) S(t))) / S(t) for a strictly monotone base; then
/// K_t(y) = 1 - p (decreasing) or p (increasing). NotMonotone otherwise.
double residual_pdf_related_inverse(const Distribution& d, double t, double p);

enum class GtCase { kA, kB, kC, kD };

const char* gt_case_name(GtCase c) noexcept;

struct ShiftedPdfLawPoint {
  double y = 0.0;
  double survival = 0.0;
  GtCase case_tag = GtCase::kD;
};

/// Case of the G_t formula for age t: (a) t < m, f(a) < f(b) <= f(t);
/// (b) t < m, f(a) < f(t) < f(b); (c) t < m, f(b) <= f(a); (d) t >= m.
/// Comparisons use the relative tolerance tol_eq; ties go to the weak side.
GtCase shifted_case(const Distribution& d, double t, double tol_eq = 1e-8);

/// P(f(X) > y | X > t) for a unimodal (or strictly decreasing) base.
ShiftedPdfLawPoint shifted_pdf_related_survival(const Distribution& d, double t,
                                                double y, double tol_eq = 1e-8);

/// g_t(y) = -d/dy of the survival above. At a branch boundary the value of
/// the branch to the left of y is returned, or AtBranchBoundary is thrown
/// when `strict` is set.
double shifted_pdf_related_pdf(const Distribution& d, double t, double y,
                               bool strict = false, double tol_eq = 1e-8);

/// Density values where g_t switches branch (sorted, inside Im+(f)).
std::vector<double> shifted_branch_points(const Distribution& d, double t);

}  // namespace pdfrel
