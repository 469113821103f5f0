#include "pdfrel/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "pdfrel/error.hpp"
#include "pdfrel/info.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/residual.hpp"

namespace pdfrel {

const char* curve_law_name(CurveLaw law) noexcept {
  switch (law) {
    case CurveLaw::kK: return "K";
    case CurveLaw::kKt: return "Kt";
    case CurveLaw::kGt: return "Gt";
    case CurveLaw::kgt: return "gt";
    case CurveLaw::kL: return "L";
  }
  return "?";
}

CurveLaw parse_curve_law(std::string_view name) {
  for (CurveLaw l : {CurveLaw::kK, CurveLaw::kKt, CurveLaw::kGt, CurveLaw::kgt, CurveLaw::kL}) {
    if (name == curve_law_name(l)) return l;
  }
  fail(ErrorCode::kInvalidArgument, "unknown law: " + std::string(name));
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
  }
  if (n > 1) out.back() = hi;
  return out;
}

// Largest density value over [t, b).
double tail_max_density(const Distribution& d, double t) {
  if (d.shape() == Shape::kUnimodal && t < d.mode()) return d.pdf(d.mode());
  if (d.shape() == Shape::kStrictlyIncreasing || d.shape() == Shape::kValley) {
    return std::max(d.pdf(t), d.endpoint_density(Endpoint::kUpper));
  }
  return d.pdf(t);
}

}  // namespace

Curve make_curve(const Distribution& d, CurveLaw law, std::optional<double> t, int n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "a curve needs at least two points");
  const bool needs_t = law == CurveLaw::kKt || law == CurveLaw::kGt || law == CurveLaw::kgt;
  if (needs_t && !t) fail(ErrorCode::kInvalidArgument, "this law needs an age t");
  Curve c;
  switch (law) {
    case CurveLaw::kK: {
      c.x_name = "y";
      c.value_name = "K";
      const PdfRelatedLaw k(d);
      const ImPlusRange r = k.y_range();
      if (std::isfinite(r.hi) && !r.atom) {
        c.x = linspace(r.lo, r.hi, n);
      } else {
        for (double p : numerics::probability_grid(n, 1e-3)) c.x.push_back(k.quantile(p));
      }
      for (double y : c.x) c.value.push_back(k.cdf(y));
      break;
    }
    case CurveLaw::kKt: {
      c.x_name = "y";
      c.value_name = "Kt";
      const ImPlusRange r = residual_im_plus(d, *t);
      if (!std::isfinite(r.hi)) {
        fail(ErrorCode::kInvalidArgument, "Im+(f_t) is unbounded; no Kt curve");
      }
      c.x = linspace(r.lo, r.hi, n);
      for (double y : c.x) {
        c.value.push_back(y >= r.hi ? 1.0 : residual_pdf_related_cdf(d, *t, y).value);
      }
      break;
    }
    case CurveLaw::kGt:
    case CurveLaw::kgt: {
      c.x_name = "y";
      c.value_name = law == CurveLaw::kGt ? "Gbar_t" : "g_t";
      const double top = tail_max_density(d, *t);
      if (!std::isfinite(top)) {
        fail(ErrorCode::kInvalidArgument, "unbounded density; no G_t curve");
      }
      for (int k = 1; k <= n; ++k) c.x.push_back(top * k / n);
      for (double y : c.x) {
        c.value.push_back(law == CurveLaw::kGt
                              ? shifted_pdf_related_survival(d, *t, y).survival
                              : shifted_pdf_related_pdf(d, *t, y));
      }
      break;
    }
    case CurveLaw::kL: {
      c.x_name = "x";
      c.value_name = "L";
      const PdfRelatedLaw k(d);
      for (double p : numerics::probability_grid(n, 1e-3)) {
        c.x.push_back(-std::log(k.quantile(1.0 - p)));
      }
      std::sort(c.x.begin(), c.x.end());
      for (double x : c.x) c.value.push_back(ic_cdf(d, x));
      break;
    }
  }
  return c;
}

void write_csv(std::ostream& out, const Curve& c) {
  out << c.x_name << ',' << c.value_name << '\n';
  char buf[64];
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.x[i], c.value[i]);
    out << buf;
  }
}

}  // namespace pdfrel
