#include "pdfrel/pdf_related.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"

namespace pdfrel {

namespace {

constexpr int kCacheSize = 2048;

// K on the closure of Im+(f), by the monotonicity case of the density.
double k_in_range(const Distribution& d, double y) {
  if (y <= 0.0) return 0.0;
  switch (d.shape()) {
    case Shape::kConstant:
      fail(ErrorCode::kDegenerateLaw,
           "f(X) is degenerate for a constant density; use the atom representation");
    case Shape::kStrictlyDecreasing:
      return d.sf(clamped_lower_inverse(d, y));
    case Shape::kStrictlyIncreasing:
      return d.cdf(clamped_lower_inverse(d, y));
    case Shape::kUnimodal:
      if (y >= d.max_density()) return 1.0;
      if (d.symmetric()) return std::min(1.0, 2.0 * d.cdf(clamped_lower_inverse(d, y)));
      return std::min(1.0, d.cdf(clamped_lower_inverse(d, y)) +
                               d.sf(clamped_upper_inverse(d, y)));
    case Shape::kValley:
      return std::max(0.0, d.cdf(clamped_upper_inverse(d, y)) -
                               d.cdf(clamped_lower_inverse(d, y)));
  }
  return numerics::kNaN;
}

// dK/dy on the interior of Im+(f).
double k_density(const Distribution& d, double y) {
  switch (d.shape()) {
    case Shape::kConstant:
      return 0.0;
    case Shape::kStrictlyDecreasing:
      return -y / d.pdf_derivative(lower_inverse(d, y));
    case Shape::kStrictlyIncreasing:
      return y / d.pdf_derivative(lower_inverse(d, y));
    case Shape::kUnimodal: {
      double total = 0.0;
      if (y > d.endpoint_density(Endpoint::kLower)) {
        total += y / d.pdf_derivative(lower_inverse(d, y));
      }
      if (y > d.endpoint_density(Endpoint::kUpper)) {
        total -= y / d.pdf_derivative(upper_inverse(d, y));
      }
      return total;
    }
    case Shape::kValley: {
      double total = 0.0;
      if (y < d.endpoint_density(Endpoint::kLower)) {
        total -= y / d.pdf_derivative(lower_inverse(d, y));
      }
      if (y < d.endpoint_density(Endpoint::kUpper)) {
        total += y / d.pdf_derivative(upper_inverse(d, y));
      }
      return total;
    }
  }
  return numerics::kNaN;
}

void check_probability(double u) {
  if (!(u > 0.0 && u < 1.0)) fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
}

}  // namespace

double pdf_related_cdf(const Distribution& d, double y) {
  const ImPlusRange r = im_plus(d);
  if (r.atom) {
    fail(ErrorCode::kDegenerateLaw,
         "f(X) is degenerate for a constant density; use the atom representation");
  }
  if (!(y >= r.lo) || y > r.hi * (1.0 + 1e-12) || y < 0.0) {
    std::ostringstream os;
    os << "y=" << y << " outside the closure of Im+(f) = (" << r.lo << ", " << r.hi << ")";
    fail(ErrorCode::kYOutOfRange, os.str());
  }
  return k_in_range(d, std::min(y, r.hi));
}

double pdf_related_cdf_total(const Distribution& d, double y) {
  const ImPlusRange r = im_plus(d);
  if (r.atom) {
    fail(ErrorCode::kDegenerateLaw,
         "f(X) is degenerate for a constant density; use the atom representation");
  }
  if (y <= r.lo) return 0.0;
  if (y >= r.hi) return 1.0;
  return k_in_range(d, y);
}

std::pair<double, double> pdf_related_quantiles(const Distribution& d, double u) {
  if (d.shape() != Shape::kUnimodal || !d.symmetric()) {
    fail(ErrorCode::kNotSymmetricUnimodal,
         d.spec_string() + " is not symmetric and unimodal");
  }
  check_probability(u);
  return {d.pdf(d.quantile(0.5 * u)), d.pdf(d.quantile(0.5 * (1.0 - u)))};
}

double monotone_pdf_related_inverse(const Distribution& d, double p) {
  if (d.shape() != Shape::kStrictlyDecreasing && d.shape() != Shape::kStrictlyIncreasing) {
    fail(ErrorCode::kNotMonotone, d.spec_string() + " does not have a strictly monotone density");
  }
  check_probability(p);
  return d.pdf(d.quantile(p));
}

UniformityReport check_uniform_characterization(const Distribution& d,
                                                const GridConfig& grid) {
  UniformityReport report;
  const ImPlusRange r = im_plus(d);
  if (r.atom) {
    // K jumps from 0 to 1 at c, so sup |K(y) - y| = max(c, 1 - c) (or 1).
    report.max_deviation = r.lo < 1.0 ? std::max(r.lo, 1.0 - r.lo) : 1.0;
    report.worst_y = r.lo;
    return report;
  }
  for (double p : numerics::probability_grid(grid.n_points, grid.eps_boundary)) {
    const double y = d.pdf(d.quantile(p));
    const double dev = std::abs(k_in_range(d, y) - y);
    if (dev > report.max_deviation || std::isnan(dev)) {
      report.max_deviation = dev;
      report.worst_y = y;
    }
  }
  // Im+(f) must itself be (0, 1) for f(X) to be uniform on (0, 1).
  const double range_dev = std::max(std::abs(r.lo), std::abs(r.hi - 1.0));
  if (range_dev > report.max_deviation) {
    report.max_deviation = range_dev;
    report.worst_y = std::abs(r.lo) > std::abs(r.hi - 1.0) ? r.lo : r.hi;
  }
  report.uniform = report.max_deviation <= grid.tol_eq;
  return report;
}

PdfRelatedLaw::PdfRelatedLaw(Distribution source)
    : source_(std::move(source)), range_(im_plus(source_)) {
  if (range_.atom) {
    kind_ = Kind::kAtom;
    return;
  }
  const Distribution& d = source_;
  const bool closed = d.closed_lower_inverse(0.5 * (range_.lo + std::min(range_.hi, 1e300)))
                          .has_value();
  kind_ = closed ? Kind::kClosedForm : Kind::kGridded;
  grid_.reserve(kCacheSize);
  for (int i = 0; i < kCacheSize; ++i) {
    const double y = d.pdf(d.quantile((i + 0.5) / kCacheSize));
    grid_.emplace_back(y, k_in_range(d, y));
  }
  std::sort(grid_.begin(), grid_.end());
  grid_.erase(std::unique(grid_.begin(), grid_.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              grid_.end());
  // Enforce monotone K on the cache against rounding in the branch sums.
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    grid_[i].second = std::max(grid_[i].second, grid_[i - 1].second);
  }
}

double PdfRelatedLaw::cdf(double y) const {
  if (kind_ == Kind::kAtom) return y >= range_.lo ? 1.0 : 0.0;
  if (y <= range_.lo) return 0.0;
  if (y >= range_.hi) return 1.0;
  return k_in_range(source_, y);
}

double PdfRelatedLaw::quantile(double u) const {
  check_probability(u);
  const Distribution& d = source_;
  switch (d.shape()) {
    case Shape::kConstant:
      return range_.lo;
    case Shape::kStrictlyDecreasing:
      return d.pdf(d.isf(u));
    case Shape::kStrictlyIncreasing:
      return d.pdf(d.quantile(u));
    case Shape::kUnimodal:
      if (d.symmetric()) return d.pdf(d.quantile(0.5 * u));
      break;
    case Shape::kValley:
      break;
  }
  auto it = std::lower_bound(grid_.begin(), grid_.end(), u,
                             [](const auto& node, double v) { return node.second < v; });
  double lo = it == grid_.begin() ? range_.lo : std::prev(it)->first;
  double hi = it == grid_.end() ? range_.hi : it->first;
  auto k = [this](double y) { return cdf(y); };
  if (!std::isfinite(hi)) {
    hi = numerics::expand_bracket(k, lo, +1, u, hi);
  }
  return numerics::bisect(k, lo, hi, u);
}

double PdfRelatedLaw::density_at_quantile(double u) const {
  if (kind_ == Kind::kAtom) return numerics::kInf;
  return k_density(source_, quantile(u));
}

const char* kind_name(PdfRelatedLaw::Kind kind) noexcept {
  switch (kind) {
    case PdfRelatedLaw::Kind::kClosedForm:
      return "ClosedForm";
    case PdfRelatedLaw::Kind::kGridded:
      return "Gridded";
    case PdfRelatedLaw::Kind::kAtom:
      return "Atom";
  }
  return "?";
}

void write_pdf_related_curve(std::ostream& out, const Distribution& d, int n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "curve needs at least 2 points");
  const PdfRelatedLaw law(d);
  std::vector<std::pair<double, double>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  if (law.kind() == PdfRelatedLaw::Kind::kAtom) {
    const double c = law.atom_location();
    for (int i = 0; i < n; ++i) {
      const double y = c * (0.5 + static_cast<double>(i) / (n - 1));
      rows.emplace_back(y, law.cdf(y));
    }
  } else {
    for (double p : numerics::probability_grid(n, 1e-3)) {
      const double y = d.pdf(d.quantile(p));
      rows.emplace_back(y, law.cdf(y));
    }
    std::sort(rows.begin(), rows.end());
  }
  out << "y,K\n";
  char buf[80];
  for (const auto& [y, k] : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", y, k);
    out << buf;
  }
}

}  // namespace pdfrel
