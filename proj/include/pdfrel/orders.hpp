#pragma once

#include <optional>
#include <string_view>

#include "pdfrel/distribution.hpp"
#include "pdfrel/law.hpp"

namespace pdfrel {

enum class OrderKind { kSt, kDisp, kConvex, kStar, kKurtosis };

const char* order_name(OrderKind kind) noexcept;
/// InvalidArgument for an unknown name.
OrderKind parse_order(std::string_view name);

struct OrderViolation {
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct OrderVerdict {
  OrderKind order = OrderKind::kSt;
  bool holds = true;
  std::optional<OrderViolation> first_violation;
  // Worst signed slack over the grid; negative beyond tolerance iff !holds.
  double margin = numerics::kInf;
  GridConfig grid;
};

/// Decides X <=_order Y on the probability grid of `grid`.
///   st:       F^-1(p) <= G^-1(p)
///   disp:     adjacent quantile gaps of X <= those of Y
///   convex:   f(F^-1(p)) / g(G^-1(p)) nondecreasing
///   star:     G^-1(p) / F^-1(p) nondecreasing
///   kurtosis: G~^-1(F~(x)) convex on x > 0, both laws centred at the median
/// PreconditionViolated when the inputs do not suit the order.
OrderVerdict check_order(OrderKind kind, const LawView& x, const LawView& y,
                         const GridConfig& grid = {});
OrderVerdict check_order(OrderKind kind, const Distribution& x,
                         const Distribution& y, const GridConfig& grid = {});

/// phi(x) = G^-1(F(x)). XOutOfSupport unless x is interior to X's support.
double mapping_phi(const Distribution& x_dist, const Distribution& y_dist, double x);

struct MappingReport {
  bool phi_geq_x = true;
  bool phi_slope_geq_1 = true;
  std::optional<double> first_phi_violation;    // x where phi(x) < x
  std::optional<double> first_slope_violation;  // left end of the offending gap
};

/// Pointwise checks of phi(x) >= x and phi(x2) - phi(x1) >= x2 - x1 on the
/// quantile grid of X.
MappingReport check_mapping_conditions(const Distribution& x_dist,
                                       const Distribution& y_dist,
                                       const GridConfig& grid = {});

}  // namespace pdfrel
