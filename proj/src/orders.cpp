#include "pdfrel/orders.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"

namespace pdfrel {

namespace {

double scale_of(std::initializer_list<double> values) {
  double s = 1.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

class Tally {
 public:
  explicit Tally(OrderKind kind, const GridConfig& grid) {
    verdict_.order = kind;
    verdict_.grid = grid;
  }

  // Requires lhs <= rhs up to tol * scale.
  void require_leq(double p, double lhs, double rhs, double tol, double scale) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
      fail(ErrorCode::kInvalidArgument,
           "non-finite value in order check at p = " + std::to_string(p));
    }
    const double slack = rhs - lhs;
    verdict_.margin = std::min(verdict_.margin, slack);
    if (slack < -tol * scale && !verdict_.first_violation) {
      verdict_.holds = false;
      verdict_.first_violation = OrderViolation{p, lhs, rhs};
    }
  }

  OrderVerdict finish() { return verdict_; }

 private:
  OrderVerdict verdict_;
};

void require_nonnegative(const LawView& v, const char* order) {
  if (v.lower < 0.0) {
    fail(ErrorCode::kPreconditionViolated,
         std::string(order) + " order needs a nonnegative support: " + v.label);
  }
  if (v.flat) {
    fail(ErrorCode::kPreconditionViolated,
         std::string(order) + " order needs a density without flat zones: " + v.label);
  }
}

// Checks that the sequence r is nondecreasing along ps.
void require_nondecreasing(Tally& tally, const std::vector<double>& ps,
                           const std::vector<double>& r, double tol) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    tally.require_leq(ps[i + 1], r[i], r[i + 1], tol, scale_of({r[i], r[i + 1]}));
  }
}

}  // namespace

const char* order_name(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::kSt: return "st";
    case OrderKind::kDisp: return "disp";
    case OrderKind::kConvex: return "convex";
    case OrderKind::kStar: return "star";
    case OrderKind::kKurtosis: return "kurtosis";
  }
  return "?";
}

OrderKind parse_order(std::string_view name) {
  for (OrderKind k : {OrderKind::kSt, OrderKind::kDisp, OrderKind::kConvex,
                      OrderKind::kStar, OrderKind::kKurtosis}) {
    if (name == order_name(k)) return k;
  }
  fail(ErrorCode::kInvalidArgument, "unknown order: " + std::string(name));
}

OrderVerdict check_order(OrderKind kind, const LawView& x, const LawView& y,
                         const GridConfig& grid) {
  const std::vector<double> ps =
      numerics::probability_grid(grid.n_points, grid.eps_boundary);
  const double tol = grid.tol_mono;
  Tally tally(kind, grid);

  switch (kind) {
    case OrderKind::kSt:
      for (double p : ps) {
        const double a = x.quantile(p);
        const double b = y.quantile(p);
        tally.require_leq(p, a, b, tol, scale_of({a, b}));
      }
      break;

    case OrderKind::kDisp: {
      std::vector<double> qx(ps.size()), qy(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i) {
        qx[i] = x.quantile(ps[i]);
        qy[i] = y.quantile(ps[i]);
      }
      for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        tally.require_leq(ps[i + 1], qx[i + 1] - qx[i], qy[i + 1] - qy[i], tol,
                          scale_of({qx[i], qx[i + 1], qy[i], qy[i + 1]}));
      }
      break;
    }

    case OrderKind::kConvex: {
      require_nonnegative(x, "convex");
      require_nonnegative(y, "convex");
      if (!x.density_at_quantile || !y.density_at_quantile) {
        fail(ErrorCode::kPreconditionViolated, "convex order needs densities");
      }
      std::vector<double> r(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i) {
        r[i] = x.density_at_quantile(ps[i]) / y.density_at_quantile(ps[i]);
      }
      require_nondecreasing(tally, ps, r, tol);
      break;
    }

    case OrderKind::kStar: {
      require_nonnegative(x, "star");
      require_nonnegative(y, "star");
      std::vector<double> ps_used, r;
      for (double p : ps) {
        const double a = x.quantile(p);
        if (a == 0.0) continue;
        ps_used.push_back(p);
        r.push_back(y.quantile(p) / a);
      }
      require_nondecreasing(tally, ps_used, r, tol);
      break;
    }

    case OrderKind::kKurtosis: {
      if (!x.symmetric || !y.symmetric) {
        fail(ErrorCode::kPreconditionViolated,
             "kurtosis order needs symmetric unimodal inputs");
      }
      const double mx = x.median();
      const double my = y.median();
      std::vector<double> ps_used, cx, cy;
      for (double p : ps) {
        if (p <= 0.5) continue;
        ps_used.push_back(p);
        cx.push_back(x.quantile(p) - mx);
        cy.push_back(y.quantile(p) - my);
      }
      // Convexity of the point cloud: secant slopes nondecreasing.
      std::vector<double> slopes, ps_slope;
      for (std::size_t i = 0; i + 1 < cx.size(); ++i) {
        slopes.push_back((cy[i + 1] - cy[i]) / (cx[i + 1] - cx[i]));
        ps_slope.push_back(ps_used[i]);
      }
      require_nondecreasing(tally, ps_slope, slopes, tol);
      break;
    }
  }
  return tally.finish();
}

OrderVerdict check_order(OrderKind kind, const Distribution& x,
                         const Distribution& y, const GridConfig& grid) {
  return check_order(kind, law_of(x), law_of(y), grid);
}

double mapping_phi(const Distribution& x_dist, const Distribution& y_dist, double x) {
  if (!x_dist.support().interior(x)) {
    fail(ErrorCode::kXOutOfSupport, "x must be interior to the support of X");
  }
  const double p = x_dist.cdf(x);
  if (p <= 0.5) return y_dist.quantile(p);
  return y_dist.isf(x_dist.sf(x));
}

MappingReport check_mapping_conditions(const Distribution& x_dist,
                                       const Distribution& y_dist,
                                       const GridConfig& grid) {
  const std::vector<double> ps =
      numerics::probability_grid(grid.n_points, grid.eps_boundary);
  const double tol = grid.tol_mono;
  std::vector<double> xs, phis;
  for (double p : ps) {
    const double x = p <= 0.5 ? x_dist.quantile(p) : x_dist.isf(1.0 - p);
    xs.push_back(x);
    phis.push_back(mapping_phi(x_dist, y_dist, x));
  }
  MappingReport rep;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (phis[i] - xs[i] < -tol * scale_of({xs[i], phis[i]})) {
      rep.phi_geq_x = false;
      if (!rep.first_phi_violation) rep.first_phi_violation = xs[i];
    }
    if (i + 1 < xs.size()) {
      const double dphi = phis[i + 1] - phis[i];
      const double dx = xs[i + 1] - xs[i];
      if (dphi - dx < -tol * scale_of({xs[i], xs[i + 1], phis[i], phis[i + 1]})) {
        rep.phi_slope_geq_1 = false;
        if (!rep.first_slope_violation) rep.first_slope_violation = xs[i];
      }
    }
  }
  return rep;
}

}  // namespace pdfrel
