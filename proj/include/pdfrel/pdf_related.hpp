#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "pdfrel/distribution.hpp"
#include "pdfrel/inverses.hpp"

namespace pdfrel {

/// K(y) = P(f(X) <= y) for y in the closure of Im+(f). YOutOfRange outside
/// it, DegenerateLaw for a constant density.
double pdf_related_cdf(const Distribution& d, double y);

/// K extended to the real line (0 below Im+(f), 1 above). DegenerateLaw for
/// a constant density.
double pdf_related_cdf_total(const Distribution& d, double y);

/// (xi_u, xi_{1-u}): the level-u and level-(1-u) quantiles of f(X) for a
/// symmetric unimodal density, f(F^-1(u/2)) and f(F^-1((1-u)/2)).
std::pair<double, double> pdf_related_quantiles(const Distribution& d, double u);

/// f(F^-1(p)) for a strictly monotone density; K of the result is 1 - p
/// (decreasing density) or p (increasing density). NotMonotone otherwise.
double monotone_pdf_related_inverse(const Distribution& d, double p);

struct UniformityReport {
  bool uniform = false;
  double max_deviation = 0.0;
  double worst_y = 0.0;
};

/// sup |K(y) - y| over a probability-spaced grid of density values.
UniformityReport check_uniform_characterization(const Distribution& d,
                                                const GridConfig& grid = {});

/// The law of f(X), with a cached monotone grid for inversion.
class PdfRelatedLaw {
 public:
  enum class Kind { kClosedForm, kGridded, kAtom };

  explicit PdfRelatedLaw(Distribution source);

  const Distribution& source() const { return source_; }
  Kind kind() const { return kind_; }
  const ImPlusRange& y_range() const { return range_; }
  /// Location of the atom; only meaningful for Kind::kAtom.
  double atom_location() const { return range_.lo; }
  const std::vector<std::pair<double, double>>& cdf_grid() const { return grid_; }

  /// K extended to the real line: 0 below the range, 1 above; a step for
  /// the atom.
  double cdf(double y) const;
  /// Left-continuous inverse of K.
  double quantile(double u) const;
  /// Density of f(X) at its u-quantile: 1 / (dK^-1/du).
  double density_at_quantile(double u) const;

 private:
  Distribution source_;
  Kind kind_;
  ImPlusRange range_;
  std::vector<std::pair<double, double>> grid_;
};

const char* kind_name(PdfRelatedLaw::Kind kind) noexcept;

/// Writes `y,K` rows on the probability-spaced grid of n points.
void write_pdf_related_curve(std::ostream& out, const Distribution& d, int n);

}  // namespace pdfrel
