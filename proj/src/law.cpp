#include "pdfrel/law.hpp"

#include <cmath>
#include <memory>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/rearrange.hpp"
#include "pdfrel/residual.hpp"

namespace pdfrel {

LawView law_of(const Distribution& d) {
  LawView v;
  v.label = d.spec_string();
  v.quantile = [d](double p) { return p <= 0.5 ? d.quantile(p) : d.isf(1.0 - p); };
  v.cdf = [d](double x) { return d.cdf(x); };
  v.density_at_quantile = [d](double p) {
    return d.pdf(p <= 0.5 ? d.quantile(p) : d.isf(1.0 - p));
  };
  v.lower = d.support().lower;
  v.upper = d.support().upper;
  v.symmetric = d.symmetric() && d.shape() == Shape::kUnimodal;
  v.flat = d.shape() == Shape::kConstant;
  return v;
}

LawView law_of_residual(const Distribution& d, double t) {
  auto r = std::make_shared<ResidualSpec>(d, t);
  LawView v;
  v.label = d.spec_string() + " residual at t=" + std::to_string(t);
  v.quantile = [r](double p) { return r->quantile(p); };
  v.cdf = [r](double x) { return r->cdf(x); };
  v.density_at_quantile = [r](double p) { return r->pdf(r->quantile(p)); };
  const Support s = r->support();
  v.lower = s.lower;
  v.upper = s.upper;
  v.flat = d.shape() == Shape::kConstant;
  return v;
}

LawView law_of_pdf_related(const Distribution& d) {
  auto k = std::make_shared<PdfRelatedLaw>(d);
  LawView v;
  v.label = "f(X) for " + d.spec_string();
  v.quantile = [k](double u) { return k->quantile(u); };
  v.cdf = [k](double y) { return k->cdf(y); };
  if (k->kind() != PdfRelatedLaw::Kind::kAtom) {
    v.density_at_quantile = [k](double u) { return k->density_at_quantile(u); };
  }
  v.lower = k->y_range().lo;
  v.upper = k->y_range().hi;
  v.flat = k->kind() == PdfRelatedLaw::Kind::kAtom;
  return v;
}

LawView law_of_residual_pdf_related(const Distribution& d, double t) {
  const ResidualSpec spec(d, t);
  const ImPlusRange range = residual_im_plus(d, t);
  auto cdf = [d, t, range](double y) {
    if (y < range.lo) return 0.0;
    if (y >= range.hi) return 1.0;
    return residual_pdf_related_cdf(d, t, y).value;
  };
  LawView v;
  v.label = "f_t(X_t) for " + d.spec_string() + " at t=" + std::to_string(t);
  v.cdf = cdf;
  v.quantile = [cdf, range](double u) {
    if (!(u > 0.0 && u < 1.0)) fail(ErrorCode::kPOutOfRange, "u must lie in (0, 1)");
    return numerics::bisect(cdf, range.lo, range.hi, u);
  };
  v.lower = range.lo;
  v.upper = range.hi;
  v.flat = range.atom;
  return v;
}

LawView law_of_rearranged(const Distribution& d) {
  auto r = std::make_shared<RearrangedLaw>(d);
  LawView v;
  v.label = "X* for " + d.spec_string();
  v.quantile = [r](double u) { return r->quantile(u); };
  v.cdf = [r](double x) { return r->cdf(x); };
  v.density_at_quantile = [r](double u) { return r->density_at_quantile(u); };
  v.lower = 0.0;
  v.upper = r->support_len();
  v.flat = r->has_flat_zone();
  return v;
}

LawView law_of_abs_centered(const Distribution& d) {
  if (!d.symmetric()) {
    fail(ErrorCode::kNotSymmetricUnimodal, "|X - Me| view needs a symmetric law");
  }
  const double me = d.median();
  LawView v;
  v.label = "|X - Me| for " + d.spec_string();
  v.quantile = [d, me](double u) {
    if (!(u > 0.0 && u < 1.0)) fail(ErrorCode::kPOutOfRange, "u must lie in (0, 1)");
    return d.isf(0.5 * (1.0 - u)) - me;
  };
  v.cdf = [d, me](double x) { return x <= 0.0 ? 0.0 : 1.0 - 2.0 * d.sf(me + x); };
  v.density_at_quantile = [d](double u) { return 2.0 * d.pdf(d.isf(0.5 * (1.0 - u))); };
  v.lower = 0.0;
  v.upper = d.support().upper - me;
  v.flat = d.shape() == Shape::kConstant;
  return v;
}

LawView law_of_log(const LawView& src) {
  if (src.lower < 0.0) {
    fail(ErrorCode::kPreconditionViolated, "log view needs a nonnegative support");
  }
  LawView v;
  v.label = "log of " + src.label;
  v.quantile = [q = src.quantile](double p) { return std::log(q(p)); };
  v.cdf = [c = src.cdf](double x) { return c(std::exp(x)); };
  if (src.density_at_quantile) {
    v.density_at_quantile = [q = src.quantile, f = src.density_at_quantile](double p) {
      return f(p) * q(p);
    };
  }
  v.lower = std::log(src.lower);
  v.upper = std::log(src.upper);
  v.flat = src.flat;
  return v;
}

}  // namespace pdfrel
