#include "pdfrel/pdfrel.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "pdfrel/curve.hpp"
#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/info.hpp"
#include "pdfrel/inverses.hpp"
#include "pdfrel/law.hpp"
#include "pdfrel/oracle.hpp"
#include "pdfrel/orders.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/residual.hpp"
#include "pdfrel/selftest.hpp"
#include "pdfrel/theorems.hpp"

struct pdfrel_dist {
  pdfrel::Distribution d;
};

namespace {

using namespace pdfrel;

thread_local std::string g_last_error;

template <typename Fn>
pdfrel_status guarded(Fn fn) {
  try {
    fn();
    g_last_error.clear();
    return PDFREL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<pdfrel_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PDFREL_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PDFREL_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<double> opt_t(double t) {
  if (std::isnan(t)) return std::nullopt;
  return t;
}

double need_t(double t) {
  if (std::isnan(t)) fail(ErrorCode::kInvalidArgument, "an age t is required");
  return t;
}

GridConfig to_grid(const pdfrel_grid* g) {
  GridConfig c;
  if (g != nullptr) {
    c.n_points = g->n_points;
    c.eps_boundary = g->eps_boundary;
    c.tol_mono = g->tol_mono;
    c.tol_eq = g->tol_eq;
  }
  if (c.n_points < 2) fail(ErrorCode::kInvalidArgument, "grid needs at least two points");
  if (!(c.eps_boundary > 0.0 && c.eps_boundary < 0.5)) {
    fail(ErrorCode::kInvalidArgument, "eps_boundary must lie in (0, 0.5)");
  }
  return c;
}

LawView view_of(const Distribution& d, pdfrel_view view) {
  switch (view) {
    case PDFREL_VIEW_X: return law_of(d);
    case PDFREL_VIEW_PDF_RELATED: return law_of_pdf_related(d);
    case PDFREL_VIEW_REARRANGED: return law_of_rearranged(d);
    case PDFREL_VIEW_ABS_CENTERED: return law_of_abs_centered(d);
    case PDFREL_VIEW_LOG: return law_of_log(law_of(d));
  }
  fail(ErrorCode::kInvalidArgument, "unknown view");
}

CurveLaw curve_law(pdfrel_law law) {
  switch (law) {
    case PDFREL_LAW_K: return CurveLaw::kK;
    case PDFREL_LAW_KT: return CurveLaw::kKt;
    case PDFREL_LAW_GT: return CurveLaw::kGt;
    case PDFREL_LAW_GT_PDF: return CurveLaw::kgt;
    case PDFREL_LAW_L: return CurveLaw::kL;
    case PDFREL_LAW_X: break;
  }
  fail(ErrorCode::kInvalidArgument, "no curve for this law");
}

}  // namespace

extern "C" {

const char* pdfrel_status_name(pdfrel_status status) {
  if (status == PDFREL_OK) return "Ok";
  if (status == PDFREL_E_INTERNAL) return "Internal";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* pdfrel_last_error(void) { return g_last_error.c_str(); }

void pdfrel_free_string(char* s) { std::free(s); }

pdfrel_status pdfrel_dist_create(const char* spec, pdfrel_dist** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new pdfrel_dist{Distribution::parse(spec)};
  });
}

void pdfrel_dist_destroy(pdfrel_dist* d) { delete d; }

pdfrel_status pdfrel_dist_spec(const pdfrel_dist* d, char** out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    *out = dup_string(d->d.spec_string());
  });
}

const char* pdfrel_dist_shape(const pdfrel_dist* d) {
  return d == nullptr ? "" : shape_name(d->d.shape());
}

int pdfrel_dist_symmetric(const pdfrel_dist* d) { return d != nullptr && d->d.symmetric(); }

void pdfrel_dist_support(const pdfrel_dist* d, double* lower, double* upper) {
  if (d == nullptr) return;
  if (lower != nullptr) *lower = d->d.support().lower;
  if (upper != nullptr) *upper = d->d.support().upper;
}

double pdfrel_dist_mode(const pdfrel_dist* d) {
  return d == nullptr ? std::nan("") : d->d.mode();
}

pdfrel_status pdfrel_eval(const pdfrel_dist* d, pdfrel_fn fn, double arg, double t,
                          double* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    const Distribution& x = d->d;
    switch (fn) {
      case PDFREL_FN_PDF: *out = x.pdf(arg); return;
      case PDFREL_FN_CDF: *out = x.cdf(arg); return;
      case PDFREL_FN_SF: *out = x.sf(arg); return;
      case PDFREL_FN_QUANTILE: *out = x.quantile(arg); return;
      case PDFREL_FN_ISF: *out = x.isf(arg); return;
      case PDFREL_FN_LOWER_INVERSE: *out = lower_inverse(x, arg); return;
      case PDFREL_FN_UPPER_INVERSE: *out = upper_inverse(x, arg); return;
      case PDFREL_FN_HAZARD: *out = hazard_at(x, arg); return;
      case PDFREL_FN_CUMULATIVE_HAZARD: *out = cumulative_hazard_at(x, arg); return;
      case PDFREL_FN_MEAN_RESIDUAL: *out = mean_residual_at(x, arg); return;
      case PDFREL_FN_RESIDUAL_QUANTILE: *out = residual_quantile(x, need_t(t), arg); return;
      case PDFREL_FN_PDF_RELATED_QUANTILE: *out = PdfRelatedLaw(x).quantile(arg); return;
    }
    fail(ErrorCode::kInvalidArgument, "unknown function");
  });
}

pdfrel_status pdfrel_law_eval(const pdfrel_dist* d, pdfrel_law law, double t, double y,
                              double* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    const Distribution& x = d->d;
    switch (law) {
      case PDFREL_LAW_K: *out = pdf_related_cdf(x, y); return;
      case PDFREL_LAW_KT: *out = residual_pdf_related_cdf(x, need_t(t), y).value; return;
      case PDFREL_LAW_GT: *out = shifted_pdf_related_survival(x, need_t(t), y).survival; return;
      case PDFREL_LAW_GT_PDF: *out = shifted_pdf_related_pdf(x, need_t(t), y); return;
      case PDFREL_LAW_L: *out = ic_cdf(x, y); return;
      case PDFREL_LAW_X: *out = x.cdf(y); return;
    }
    fail(ErrorCode::kInvalidArgument, "unknown law");
  });
}

pdfrel_status pdfrel_gt_case(const pdfrel_dist* d, double t, char* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    *out = gt_case_name(shifted_case(d->d, t))[0];
  });
}

pdfrel_status pdfrel_curve_make(const pdfrel_dist* d, pdfrel_law law, double t, int n,
                                pdfrel_curve* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    const Curve c = make_curve(d->d, curve_law(law), opt_t(t), n);
    const std::size_t bytes = c.x.size() * sizeof(double);
    double* xs = static_cast<double*>(std::malloc(bytes));
    double* vs = static_cast<double*>(std::malloc(bytes));
    if (xs == nullptr || vs == nullptr) {
      std::free(xs);
      std::free(vs);
      throw std::bad_alloc();
    }
    std::memcpy(xs, c.x.data(), bytes);
    std::memcpy(vs, c.value.data(), bytes);
    out->x_name = c.x_name == "x" ? "x" : "y";
    out->value_name = curve_law_name(curve_law(law));
    out->x = xs;
    out->value = vs;
    out->count = c.x.size();
  });
}

void pdfrel_curve_free(pdfrel_curve* c) {
  if (c == nullptr) return;
  std::free(c->x);
  std::free(c->value);
  c->x = nullptr;
  c->value = nullptr;
  c->count = 0;
}

pdfrel_grid pdfrel_grid_default(void) {
  const GridConfig g;
  return {g.n_points, g.eps_boundary, g.tol_mono, g.tol_eq};
}

pdfrel_status pdfrel_check_order(pdfrel_order order, const pdfrel_dist* x,
                                 const pdfrel_dist* y, pdfrel_view view,
                                 const pdfrel_grid* grid, pdfrel_verdict* out) {
  return guarded([&] {
    need(x, "x");
    need(y, "y");
    need(out, "out");
    if (order < PDFREL_ORDER_ST || order > PDFREL_ORDER_KURTOSIS) {
      fail(ErrorCode::kInvalidArgument, "unknown order");
    }
    const OrderVerdict v = check_order(static_cast<OrderKind>(order), view_of(x->d, view),
                                       view_of(y->d, view), to_grid(grid));
    *out = pdfrel_verdict{v.holds, v.first_violation.has_value(), 0.0, 0.0, 0.0, v.margin};
    if (v.first_violation) {
      out->violation_p = v.first_violation->p;
      out->violation_lhs = v.first_violation->lhs;
      out->violation_rhs = v.first_violation->rhs;
    }
  });
}

pdfrel_status pdfrel_mapping_phi(const pdfrel_dist* x, const pdfrel_dist* y, double at,
                                 double* out) {
  return guarded([&] {
    need(x, "x");
    need(y, "y");
    need(out, "out");
    *out = mapping_phi(x->d, y->d, at);
  });
}

pdfrel_status pdfrel_mapping_conditions(const pdfrel_dist* x, const pdfrel_dist* y,
                                        const pdfrel_grid* grid, int* phi_geq_x,
                                        int* phi_slope_geq_1) {
  return guarded([&] {
    need(x, "x");
    need(y, "y");
    const MappingReport r = check_mapping_conditions(x->d, y->d, to_grid(grid));
    if (phi_geq_x != nullptr) *phi_geq_x = r.phi_geq_x;
    if (phi_slope_geq_1 != nullptr) *phi_slope_geq_1 = r.phi_slope_geq_1;
  });
}

size_t pdfrel_theorem_count(void) { return theorem_names().size(); }

const char* pdfrel_theorem_name(size_t i) {
  const auto& names = theorem_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

pdfrel_status pdfrel_verify(const char* theorem, const pdfrel_dist* const* dists,
                            size_t n_dists, double t, double a, double b,
                            const pdfrel_grid* grid, char** json_out) {
  return guarded([&] {
    need(theorem, "theorem");
    need(json_out, "json_out");
    TheoremInputs in;
    for (size_t i = 0; i < n_dists; ++i) {
      need(dists[i], "distribution");
      in.dists.push_back(dists[i]->d);
    }
    in.t = opt_t(t);
    in.a = a;
    in.b = b;
    *json_out = dup_string(verify_theorem(theorem, in, to_grid(grid)).to_json().dump());
  });
}

pdfrel_status pdfrel_info_compute(const pdfrel_dist* d, double t, pdfrel_info* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    const InfoReport r = info_report(d->d);
    *out = pdfrel_info{r.entropy, r.varentropy, r.est_abs_error,
                       r.method == InfoMethod::kClosedForm, 0, t, 0.0, 0.0};
    if (!std::isnan(t)) {
      out->has_residual = 1;
      out->residual_entropy = residual_entropy(d->d, t);
      out->residual_varentropy = residual_varentropy(d->d, t);
    }
  });
}

pdfrel_status pdfrel_residual_entropy(const pdfrel_dist* d, double t, int form, double* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    if (form < 0 || form > 2) fail(ErrorCode::kInvalidArgument, "form must be 0, 1 or 2");
    *out = residual_entropy(d->d, t, static_cast<ResidualEntropyForm>(form));
  });
}

pdfrel_status pdfrel_weibull_ratio(double k, double u, double v, double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = weibull_ratio(k, u, v, p);
  });
}

pdfrel_status pdfrel_oracle(const pdfrel_dist* d, pdfrel_law law, double t, uint64_t n,
                            uint64_t seed, unsigned workers, pdfrel_oracle_result* out) {
  return guarded([&] {
    need(d, "d");
    need(out, "out");
    if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be positive");
    OracleLaw ol = OracleLaw::kX;
    switch (law) {
      case PDFREL_LAW_K: ol = OracleLaw::kK; break;
      case PDFREL_LAW_KT: ol = OracleLaw::kKt; break;
      case PDFREL_LAW_GT: ol = OracleLaw::kGt; break;
      case PDFREL_LAW_L: ol = OracleLaw::kL; break;
      case PDFREL_LAW_X: ol = OracleLaw::kX; break;
      default: fail(ErrorCode::kInvalidArgument, "no oracle for this law");
    }
    const OracleResult r = run_oracle(d->d, ol, opt_t(t), n, seed, workers);
    *out = pdfrel_oracle_result{r.ks, r.band, r.pass, r.n, r.seed};
  });
}

pdfrel_status pdfrel_selftest(const int* only, size_t n_only, uint64_t mc_n, uint64_t seed,
                              pdfrel_criterion_cb cb, void* user, int* failures) {
  return guarded([&] {
    SelftestOptions opt;
    if (only != nullptr) opt.only.assign(only, only + n_only);
    if (mc_n > 0) opt.mc_n = mc_n;
    opt.seed = seed;
    int failed = 0;
    run_selftest(opt, [&](const CriterionResult& r) {
      failed += !r.pass;
      if (cb != nullptr) cb(r.id, r.title.c_str(), r.pass, r.detail.c_str(), r.seconds, user);
    });
    if (failures != nullptr) *failures = failed;
  });
}

}  // extern "C"
