#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pdfrel/families.hpp"

namespace pdfrel {

enum class Endpoint { kLower, kUpper };

struct MonotoneClass {
  Shape kind = Shape::kUnimodal;
  // Present iff kind is kUnimodal (for kValley it holds the antimode).
  std::optional<double> mode;
  bool symmetric = false;
};

const char* shape_name(Shape shape) noexcept;

struct GridConfig {
  int n_points = 999;
  double eps_boundary = 1e-3;
  double tol_mono = 1e-9;  // relative
  double tol_eq = 1e-8;
};

using FamilyModel =
    std::variant<family::Exponential, family::ShiftedExponential,
                 family::ReflectedExponential, family::LaplaceRate2,
                 family::Uniform, family::ParetoType, family::Parabolic,
                 family::Weibull, family::Normal, family::Logistic,
                 family::Cauchy, family::TriangularAbs,
                 family::SymmetricTriangular, family::TruncatedNormal>;

/// An absolutely continuous law: a parametric family pushed through the
/// increasing affine map x -> scale * x + shift. Immutable value type.
class Distribution {
 public:
  /// Validates parameters (ParamOutOfRange) and the numeric invariants:
  /// unit mass, slope signs matching the declared class, cdf/quantile
  /// round-trips.
  explicit Distribution(FamilyModel model, double scale = 1.0,
                        double shift = 0.0);

  /// Parses `family[:key=value[,key=value]*]`.
  static Distribution parse(std::string_view spec);

  const FamilyModel& model() const { return model_; }
  std::string_view family_name() const;
  /// Canonical spec string that parses back to this distribution.
  std::string spec_string() const;

  const Support& support() const { return support_; }
  const MonotoneClass& mono() const { return mono_; }
  Shape shape() const { return mono_.kind; }
  bool symmetric() const { return mono_.symmetric; }
  bool has_closed_quantile() const;
  bool has_finite_mean() const;
  double scale() const { return scale_; }
  double shift() const { return shift_; }

  /// Density; zero outside the support (and at open endpoints).
  double pdf(double x) const;
  double log_pdf(double x) const;
  double pdf_derivative(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  /// Inverse cdf; POutOfRange unless p in (0, 1).
  double quantile(double p) const;
  /// Inverse survival function: x with sf(x) = q.
  double isf(double q) const;
  /// One-sided limit of the density at a support endpoint (may be +inf).
  double endpoint_density(Endpoint which) const;

  /// Mode for unimodal laws; for monotone laws the endpoint where the
  /// density is largest; the antimode for valley shapes.
  double mode() const;
  double median() const { return quantile(0.5); }
  /// Largest density value (supremum, possibly +inf).
  double max_density() const;

  std::optional<double> closed_lower_inverse(double y) const;
  std::optional<double> closed_upper_inverse(double y) const;

  /// Law of scale * X + shift, scale > 0.
  Distribution affine(double scale, double shift) const;

 private:
  void validate_parameters() const;
  void validate_invariants() const;
  double to_base(double x) const { return (x - shift_) / scale_; }
  double from_base(double z) const { return scale_ * z + shift_; }

  FamilyModel model_;
  double scale_;
  double shift_;
  Support support_;
  MonotoneClass mono_;
};

}  // namespace pdfrel
