#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdfrel/distribution.hpp"

namespace pdfrel {

enum class CurveLaw { kK, kKt, kGt, kgt, kL };

const char* curve_law_name(CurveLaw law) noexcept;
/// InvalidArgument for an unknown name.
CurveLaw parse_curve_law(std::string_view name);

struct Curve {
  std::string x_name;
  std::string value_name;
  std::vector<double> x;
  std::vector<double> value;
};

/// Tabulates one law on n points:
///   K   K(y) on the closure of Im+(f) (probability-spaced when unbounded)
///   Kt  K_t(y) on the closure of Im+(f_t), evenly spaced
///   Gt  P(f(t + X_t) > y) on (0, sup f over [t, b)]
///   gt  the density of f(t + X_t) on the same grid
///   L   P(-log f(X) <= x) on the probability-spaced grid of x
Curve make_curve(const Distribution& d, CurveLaw law, std::optional<double> t, int n);

/// Header line then one row per point, 17 significant digits, LF endings.
void write_csv(std::ostream& out, const Curve& c);

}  // namespace pdfrel
