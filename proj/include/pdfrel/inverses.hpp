#pragma once

#include "pdfrel/distribution.hpp"

namespace pdfrel {

/// The set Im+(f) of positive values attained by the density.
struct ImPlusRange {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = true;
  bool hi_open = true;
  // Constant density: the whole range is the single value lo == hi.
  bool atom = false;

  bool contains(double y) const {
    if (atom) return y == lo;
    const bool above = lo_open ? y > lo : y >= lo;
    const bool below = hi_open ? y < hi : y <= hi;
    return above && below;
  }
};

ImPlusRange im_plus(const Distribution& d);

/// Solution of f(x) = y on the increasing branch (the whole support for a
/// monotone density; the decreasing left branch for a valley shape).
/// Throws YNotAttained outside the closure of Im+(f), DegenerateLaw for a
/// constant density.
double lower_inverse(const Distribution& d, double y);

/// Solution of f(x) = y with x >= mode. NotUnimodal for monotone classes.
double upper_inverse(const Distribution& d, double y);

/// Branch solutions extended by the endpoint convention: when y lies below
/// the density at the branch's outer endpoint, that endpoint is returned.
double clamped_lower_inverse(const Distribution& d, double y);
double clamped_upper_inverse(const Distribution& d, double y);

}  // namespace pdfrel
