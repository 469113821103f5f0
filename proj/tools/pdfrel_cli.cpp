// Command-line front end over the C API.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdfrel/pdfrel.h"

using nlohmann::json;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct Failure {
  pdfrel_status status;
  std::string message;
};

void check(pdfrel_status s) {
  if (s != PDFREL_OK) throw Failure{s, pdfrel_last_error()};
}

struct DistDeleter {
  void operator()(pdfrel_dist* d) const { pdfrel_dist_destroy(d); }
};
using Dist = std::unique_ptr<pdfrel_dist, DistDeleter>;

Dist make_dist(const std::string& spec) {
  pdfrel_dist* d = nullptr;
  check(pdfrel_dist_create(spec.c_str(), &d));
  return Dist(d);
}

std::string spec_of(const pdfrel_dist* d) {
  char* s = nullptr;
  check(pdfrel_dist_spec(d, &s));
  std::string out(s);
  pdfrel_free_string(s);
  return out;
}

double nan_if_absent(const std::optional<double>& v) { return v ? *v : std::nan(""); }

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

pdfrel_law law_from(const std::string& name) {
  if (name == "K") return PDFREL_LAW_K;
  if (name == "Kt") return PDFREL_LAW_KT;
  if (name == "Gt") return PDFREL_LAW_GT;
  if (name == "gt") return PDFREL_LAW_GT_PDF;
  if (name == "L") return PDFREL_LAW_L;
  if (name == "X") return PDFREL_LAW_X;
  throw Failure{PDFREL_E_INVALID_ARGUMENT, "unknown law: " + name};
}

struct GridFlags {
  std::optional<int> n;
  std::optional<double> eps;

  pdfrel_grid resolve() const {
    pdfrel_grid g = pdfrel_grid_default();
    if (const char* env = std::getenv("PDFREL_GRID_N"); env != nullptr && *env != '\0') {
      try {
        g.n_points = std::stoi(env);
      } catch (const std::exception&) {
        throw Failure{PDFREL_E_INVALID_ARGUMENT, "PDFREL_GRID_N is not an integer"};
      }
    }
    if (n) g.n_points = *n;
    if (eps) g.eps_boundary = *eps;
    return g;
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--grid-n", n, "Grid size (default 999, or PDFREL_GRID_N)");
    cmd->add_option("--eps", eps, "Boundary trim of the probability grid");
  }
};

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure{PDFREL_E_INVALID_ARGUMENT, "cannot open " + out_path};
  f << j.dump() << '\n';
}

json eval_verb(const std::string& dist, std::optional<double> at, std::optional<double> p,
               std::optional<double> y, const std::string& law, std::optional<double> t) {
  const Dist d = make_dist(dist);
  json out = {{"dist", spec_of(d.get())}};
  auto value = [&](pdfrel_fn fn, double arg) {
    double v = 0.0;
    check(pdfrel_eval(d.get(), fn, arg, nan_if_absent(t), &v));
    return number(v);
  };
  if (at) {
    out["x"] = *at;
    out["pdf"] = value(PDFREL_FN_PDF, *at);
    out["cdf"] = value(PDFREL_FN_CDF, *at);
    out["sf"] = value(PDFREL_FN_SF, *at);
  }
  if (p) {
    out["p"] = *p;
    out["quantile"] = value(PDFREL_FN_QUANTILE, *p);
    out["pdf_related_quantile"] = value(PDFREL_FN_PDF_RELATED_QUANTILE, *p);
    if (t) out["residual_quantile"] = value(PDFREL_FN_RESIDUAL_QUANTILE, *p);
  }
  if (t && !p && !y) {
    out["t"] = *t;
    out["hazard"] = value(PDFREL_FN_HAZARD, *t);
    out["cumulative_hazard"] = value(PDFREL_FN_CUMULATIVE_HAZARD, *t);
    double mrl = 0.0;
    const pdfrel_status s = pdfrel_eval(d.get(), PDFREL_FN_MEAN_RESIDUAL, *t, *t, &mrl);
    if (s == PDFREL_OK) {
      out["mean_residual"] = number(mrl);
    } else if (s == PDFREL_E_INTEGRAL_DIVERGED) {
      out["mean_residual"] = "inf";
    } else {
      check(s);
    }
  }
  if (y) {
    out["y"] = *y;
    if (law.empty()) {
      out["lower_inverse"] = value(PDFREL_FN_LOWER_INVERSE, *y);
      double u = 0.0;
      if (pdfrel_eval(d.get(), PDFREL_FN_UPPER_INVERSE, *y, 0.0, &u) == PDFREL_OK) {
        out["upper_inverse"] = number(u);
      }
    } else {
      const pdfrel_law l = law_from(law);
      double v = 0.0;
      check(pdfrel_law_eval(d.get(), l, nan_if_absent(t), *y, &v));
      out["law"] = law;
      out["value"] = number(v);
      if (t) out["t"] = *t;
      if (l == PDFREL_LAW_GT || l == PDFREL_LAW_GT_PDF) {
        char c = '?';
        check(pdfrel_gt_case(d.get(), *t, &c));
        out["case"] = std::string(1, c);
      }
    }
  }
  if (!at && !p && !y && !t) {
    throw Failure{PDFREL_E_INVALID_ARGUMENT, "eval needs --at, --p, --y-value or --t"};
  }
  return out;
}

void curve_verb(const std::string& dist, const std::string& law, std::optional<double> t,
                const GridFlags& grid, const std::string& format, const std::string& out_path) {
  const Dist d = make_dist(dist);
  pdfrel_curve c{};
  check(pdfrel_curve_make(d.get(), law_from(law), nan_if_absent(t), grid.resolve().n_points, &c));
  std::string text;
  if (format == "csv") {
    std::ostringstream os;
    os << c.x_name << ',' << c.value_name << '\n';
    char buf[64];
    for (size_t i = 0; i < c.count; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.x[i], c.value[i]);
      os << buf;
    }
    text = os.str();
  } else {
    json j = {{"dist", spec_of(d.get())}, {"law", law}};
    if (t) j["t"] = *t;
    j[c.x_name] = std::vector<double>(c.x, c.x + c.count);
    j[c.value_name] = std::vector<double>(c.value, c.value + c.count);
    text = j.dump() + '\n';
  }
  pdfrel_curve_free(&c);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Failure{PDFREL_E_INVALID_ARGUMENT, "cannot open " + out_path};
    f << text;
  }
}

json verdict_json(const char* kind, const pdfrel_verdict& v, const pdfrel_grid& g) {
  json j = {{"order", kind},
            {"holds", static_cast<bool>(v.holds)},
            {"margin", number(v.margin)},
            {"first_violation", nullptr},
            {"grid",
             {{"n_points", g.n_points},
              {"eps_boundary", g.eps_boundary},
              {"tol_mono", g.tol_mono},
              {"tol_eq", g.tol_eq}}}};
  if (v.has_violation) {
    j["first_violation"] = {{"p", v.violation_p},
                            {"lhs", number(v.violation_lhs)},
                            {"rhs", number(v.violation_rhs)}};
  }
  return j;
}

json order_verb(const std::string& kind, const std::string& xs, const std::string& ys,
                const std::string& view, const GridFlags& grid, std::optional<double> phi_at) {
  static const std::vector<std::pair<std::string, pdfrel_order>> kinds = {
      {"st", PDFREL_ORDER_ST},
      {"disp", PDFREL_ORDER_DISP},
      {"convex", PDFREL_ORDER_CONVEX},
      {"star", PDFREL_ORDER_STAR},
      {"kurtosis", PDFREL_ORDER_KURTOSIS}};
  static const std::vector<std::pair<std::string, pdfrel_view>> views = {
      {"x", PDFREL_VIEW_X},
      {"pdf", PDFREL_VIEW_PDF_RELATED},
      {"rearranged", PDFREL_VIEW_REARRANGED},
      {"abs", PDFREL_VIEW_ABS_CENTERED},
      {"log", PDFREL_VIEW_LOG}};
  pdfrel_order order = PDFREL_ORDER_ST;
  for (const auto& [n, k] : kinds) {
    if (n == kind) order = k;
  }
  pdfrel_view v = PDFREL_VIEW_X;
  for (const auto& [n, k] : views) {
    if (n == view) v = k;
  }
  const Dist x = make_dist(xs);
  const Dist y = make_dist(ys);
  const pdfrel_grid g = grid.resolve();
  pdfrel_verdict verdict{};
  check(pdfrel_check_order(order, x.get(), y.get(), v, &g, &verdict));
  json out = verdict_json(kind.c_str(), verdict, g);
  out["view"] = view;
  if (v == PDFREL_VIEW_X && (order == PDFREL_ORDER_ST || order == PDFREL_ORDER_DISP)) {
    int geq = 0;
    int slope = 0;
    check(pdfrel_mapping_conditions(x.get(), y.get(), &g, &geq, &slope));
    out["mapping"] = {{"phi_geq_x", static_cast<bool>(geq)},
                      {"phi_slope_geq_1", static_cast<bool>(slope)}};
  }
  if (phi_at) {
    double phi = 0.0;
    check(pdfrel_mapping_phi(x.get(), y.get(), *phi_at, &phi));
    out["phi"] = {{"x", *phi_at}, {"value", number(phi)}};
  }
  return out;
}

json verify_verb(const std::string& theorem, const std::string& dist, const std::string& xs,
                 const std::string& ys, std::optional<double> t, double a, double b,
                 const GridFlags& grid) {
  std::vector<Dist> owned;
  if (!dist.empty()) owned.push_back(make_dist(dist));
  if (!xs.empty()) owned.push_back(make_dist(xs));
  if (!ys.empty()) owned.push_back(make_dist(ys));
  std::vector<const pdfrel_dist*> raw;
  for (const auto& d : owned) raw.push_back(d.get());
  const pdfrel_grid g = grid.resolve();
  char* report = nullptr;
  check(pdfrel_verify(theorem.c_str(), raw.data(), raw.size(), nan_if_absent(t), a, b, &g,
                      &report));
  json out = json::parse(report);
  pdfrel_free_string(report);
  return out;
}

json info_verb(const std::string& dist, std::optional<double> t, std::optional<double> u,
               std::optional<double> v, std::optional<double> p, std::optional<double> k) {
  json out;
  if (!dist.empty()) {
    const Dist d = make_dist(dist);
    pdfrel_info info{};
    check(pdfrel_info_compute(d.get(), nan_if_absent(t), &info));
    out = {{"dist", spec_of(d.get())},
           {"entropy", number(info.entropy)},
           {"varentropy", number(info.varentropy)},
           {"method", info.closed_form ? "closed_form" : "quadrature"},
           {"est_abs_error", number(info.est_abs_error)}};
    if (info.has_residual) {
      out["residual"] = {{"t", info.t},
                         {"H", number(info.residual_entropy)},
                         {"V", number(info.residual_varentropy)}};
    }
  }
  if (u || v || p || k) {
    if (!(u && v && p && k)) {
      throw Failure{PDFREL_E_INVALID_ARGUMENT, "the Weibull ratio needs --k, --u, --v and --p"};
    }
    double r = 0.0;
    check(pdfrel_weibull_ratio(*k, *u, *v, *p, &r));
    out["weibull_ratio"] = {{"k", *k}, {"u", *u}, {"v", *v}, {"p", *p}, {"value", number(r)}};
  }
  if (out.is_null()) throw Failure{PDFREL_E_INVALID_ARGUMENT, "info needs --dist or --k"};
  return out;
}

json oracle_verb(const std::string& dist, const std::string& law, std::optional<double> t,
                 std::uint64_t n, std::uint64_t seed, unsigned workers) {
  const Dist d = make_dist(dist);
  pdfrel_oracle_result r{};
  check(pdfrel_oracle(d.get(), law_from(law), nan_if_absent(t), n, seed, workers, &r));
  return {{"ks", r.ks}, {"band", r.band}, {"pass", static_cast<bool>(r.pass)},
          {"n", r.n},   {"seed", r.seed}, {"law", law}, {"dist", spec_of(d.get())}};
}

struct SelftestSink {
  bool json_lines = false;
  json results = json::array();
};

void on_criterion(int id, const char* title, int pass, const char* detail, double seconds,
                  void* user) {
  auto* sink = static_cast<SelftestSink*>(user);
  if (sink->json_lines) {
    sink->results.push_back({{"id", id},
                             {"title", title},
                             {"pass", static_cast<bool>(pass)},
                             {"detail", detail},
                             {"seconds", seconds}});
    return;
  }
  std::printf("[%s] %2d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, title, detail, seconds);
  std::fflush(stdout);
}

int selftest_verb(const std::vector<int>& only, std::uint64_t n, std::uint64_t seed,
                  const std::string& format) {
  SelftestSink sink;
  sink.json_lines = format == "json";
  int failures = 0;
  check(pdfrel_selftest(only.data(), only.size(), n, seed, on_criterion, &sink, &failures));
  if (sink.json_lines) {
    std::cout << json{{"criteria", sink.results}, {"failures", failures}}.dump() << '\n';
  }
  return failures == 0 ? 0 : kExitNumeric;
}

int report_failure(const Failure& f) {
  const bool numeric = f.status == PDFREL_E_INTEGRAL_DIVERGED || f.status == PDFREL_E_INTERNAL;
  std::cout << json{{"error", {{"code", pdfrel_status_name(f.status)}, {"message", f.message}}}}
                   .dump()
            << '\n';
  return numeric ? kExitNumeric : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pdf-related distributions, residual lifetimes, stochastic orders and "
               "information measures"};
  app.require_subcommand(1);

  std::string dist, xs, ys, law, kind, view = "x", theorem, out_path, format = "json";
  std::optional<double> t, p, y, at, u, v, k, phi_at;
  double a = 1.0, b = 0.0;
  std::uint64_t n = 1000000, seed = 42;
  unsigned workers = 1;
  std::vector<int> only;
  GridFlags grid;

  auto* eval = app.add_subcommand("eval", "Point evaluations of a law");
  eval->add_option("--dist", dist, "Distribution spec")->required();
  eval->add_option("--at", at, "Point x for pdf, cdf and sf");
  eval->add_option("--p", p, "Probability for quantiles");
  eval->add_option("--y-value", y, "Density level y");
  eval->add_option("--law", law, "Law evaluated at --y-value")
      ->check(CLI::IsMember({"K", "Kt", "Gt", "gt", "L"}));
  eval->add_option("--t", t, "Age t");

  auto* curve = app.add_subcommand("curve", "Tabulate a law");
  curve->add_option("--dist", dist, "Distribution spec")->required();
  curve->add_option("--law", law, "Law")->required()->check(
      CLI::IsMember({"K", "Kt", "Gt", "gt", "L"}));
  curve->add_option("--t", t, "Age t");
  curve->add_option("--out", out_path, "Output file (default stdout)");
  curve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  grid.add_to(curve);

  auto* order = app.add_subcommand("order", "Decide a stochastic order");
  order->add_option("--kind", kind, "Order")->required()->check(
      CLI::IsMember({"st", "disp", "convex", "star", "kurtosis"}));
  order->add_option("--x", xs, "Spec of X")->required();
  order->add_option("--y", ys, "Spec of Y")->required();
  order->add_option("--view", view, "Compare X, f(X), X*, |X - Me| or log X")
      ->check(CLI::IsMember({"x", "pdf", "rearranged", "abs", "log"}));
  order->add_option("--phi-at", phi_at, "Also report phi(x) = G^-1(F(x)) at this x");
  grid.add_to(order);

  auto* verify = app.add_subcommand("verify", "Check one theorem instance");
  verify->add_option("--theorem", theorem, "Theorem name")->required();
  verify->add_option("--dist", dist, "Spec of the single input");
  verify->add_option("--x", xs, "Spec of X");
  verify->add_option("--y", ys, "Spec of Y");
  verify->add_option("--t", t, "Age t");
  verify->add_option("--a", a, "Scale of the affine map");
  verify->add_option("--b", b, "Shift of the affine map");
  grid.add_to(verify);

  auto* info = app.add_subcommand("info", "Entropy and varentropy");
  info->add_option("--dist", dist, "Distribution spec");
  info->add_option("--t", t, "Age t for residual values");
  info->add_option("--k", k, "Weibull shape for the ratio");
  info->add_option("--u", u, "Ratio argument u");
  info->add_option("--v", v, "Ratio argument v");
  info->add_option("--p", p, "Ratio argument p");

  auto* oracle = app.add_subcommand("oracle", "Monte Carlo KS check of an analytic law");
  oracle->add_option("--dist", dist, "Distribution spec")->required();
  oracle->add_option("--law", law, "Law")->required()->check(
      CLI::IsMember({"K", "Kt", "Gt", "L", "X"}));
  oracle->add_option("--t", t, "Age t");
  oracle->add_option("--n", n, "Sample size");
  oracle->add_option("--seed", seed, "Seed");
  oracle->add_option("--workers", workers, "Sampling threads");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--only", only, "Criterion ids")->delimiter(',');
  selftest->add_option("--n", n, "Monte Carlo sample size");
  selftest->add_option("--seed", seed, "Seed");
  selftest->add_option("--format", format, "text or json")->check(
      CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_failure({PDFREL_E_INVALID_ARGUMENT, e.what()});
  }

  try {
    if (*eval) emit(eval_verb(dist, at, p, y, law, t), "");
    if (*curve) {
      if (!curve->count("--format") && !out_path.empty() &&
          out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json") {
        format = "json";
      } else if (!curve->count("--format")) {
        format = "csv";
      }
      curve_verb(dist, law, t, grid, format, out_path);
    }
    if (*order) emit(order_verb(kind, xs, ys, view, grid, phi_at), "");
    if (*verify) emit(verify_verb(theorem, dist, xs, ys, t, a, b, grid), "");
    if (*info) emit(info_verb(dist, t, u, v, p, k), "");
    if (*oracle) emit(oracle_verb(dist, law, t, n, seed, workers), "");
    if (*selftest) {
      if (!selftest->count("--format")) format = "text";
      return selftest_verb(only, selftest->count("--n") ? n : 0, seed, format);
    }
  } catch (const Failure& f) {
    return report_failure(f);
  }
  return 0;
}
