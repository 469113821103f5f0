#include "pdfrel/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "pdfrel/error.hpp"
#include "pdfrel/info.hpp"
#include "pdfrel/law.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/residual.hpp"

namespace pdfrel {

using nlohmann::json;

json to_json(const GridConfig& g) {
  return {{"n_points", g.n_points},
          {"eps_boundary", g.eps_boundary},
          {"tol_mono", g.tol_mono},
          {"tol_eq", g.tol_eq}};
}

json to_json(const OrderVerdict& v) {
  json j = {{"order", order_name(v.order)},
            {"holds", v.holds},
            {"margin", v.margin},
            {"first_violation", nullptr},
            {"grid", to_json(v.grid)}};
  if (v.first_violation) {
    j["first_violation"] = {{"p", v.first_violation->p},
                            {"lhs", v.first_violation->lhs},
                            {"rhs", v.first_violation->rhs}};
  }
  return j;
}

json TheoremReport::to_json() const {
  json j = details;
  j["theorem"] = theorem;
  j["kind"] = equivalence ? "equivalence" : "implication";
  j["premise"] = premise;
  j["conclusion"] = conclusion;
  j["implication_respected"] = implication_respected;
  return j;
}

const char* hazard_trend_name(HazardTrend t) noexcept {
  switch (t) {
    case HazardTrend::kIncreasing: return "increasing";
    case HazardTrend::kDecreasing: return "decreasing";
    case HazardTrend::kConstant: return "constant";
    case HazardTrend::kNeither: return "neither";
  }
  return "?";
}

namespace {

HazardTrend classify(const std::vector<double>& v, double tol) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double scale = std::max({1.0, std::abs(v[i]), std::abs(v[i + 1])});
    const double d = v[i + 1] - v[i];
    if (d < -tol * scale) up = false;
    if (d > tol * scale) down = false;
  }
  if (up && down) return HazardTrend::kConstant;
  if (up) return HazardTrend::kIncreasing;
  if (down) return HazardTrend::kDecreasing;
  return HazardTrend::kNeither;
}

// Smallest step in the given direction (+1 increasing, -1 decreasing).
double strict_margin(const std::vector<double>& v, int dir) {
  double m = numerics::kInf;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) m = std::min(m, dir * (v[i + 1] - v[i]));
  return m;
}

bool follows(HazardTrend observed, HazardTrend predicted) {
  switch (predicted) {
    case HazardTrend::kIncreasing:
      return observed == HazardTrend::kIncreasing || observed == HazardTrend::kConstant;
    case HazardTrend::kDecreasing:
      return observed == HazardTrend::kDecreasing || observed == HazardTrend::kConstant;
    case HazardTrend::kConstant:
      return observed == HazardTrend::kConstant;
    case HazardTrend::kNeither:
      return true;
  }
  return true;
}

void need_count(const TheoremInputs& in, std::size_t n, std::string_view name) {
  if (in.dists.size() != n) {
    fail(ErrorCode::kPreconditionViolated,
         std::string(name) + " takes " + std::to_string(n) + " distribution(s)");
  }
}

void need_no_flat(const Distribution& d) {
  if (d.shape() == Shape::kConstant) {
    fail(ErrorCode::kPreconditionViolated, "density has a flat zone: " + d.spec_string());
  }
}

void need_symmetric(const Distribution& d) {
  if (!d.symmetric() || d.shape() != Shape::kUnimodal) {
    fail(ErrorCode::kPreconditionViolated,
         "needs a symmetric unimodal law: " + d.spec_string());
  }
}

TheoremReport finish(TheoremReport r) {
  r.implication_respected = r.equivalence ? r.premise == r.conclusion
                                          : (!r.premise || r.conclusion);
  return r;
}

double info_tol(double a, double b) {
  return 1e-8 * std::max({1.0, std::abs(a), std::abs(b)});
}

// phi(x) / x with phi = S^-1 o K, on x = K^-1(p).
std::vector<double> phi_over_x(const LawView& fx, const LawView& gy,
                               const std::vector<double>& ps) {
  std::vector<double> out;
  for (double p : ps) {
    const double x = fx.quantile(p);
    const double k = fx.cdf(x);
    out.push_back(gy.quantile(k) / x);
  }
  return out;
}

TheoremReport star_comparison(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "star_comparison");
  need_no_flat(in.dists[0]);
  need_no_flat(in.dists[1]);
  const LawView fx = law_of_pdf_related(in.dists[0]);
  const LawView gy = law_of_pdf_related(in.dists[1]);
  const auto ps = numerics::probability_grid(grid.n_points, grid.eps_boundary);
  const auto ratio = phi_over_x(fx, gy, ps);
  const HazardTrend trend = classify(ratio, grid.tol_mono);
  const OrderVerdict star = check_order(OrderKind::kStar, fx, gy, grid);
  TheoremReport r{"star_comparison", true};
  r.premise = trend == HazardTrend::kIncreasing || trend == HazardTrend::kConstant;
  r.conclusion = star.holds;
  r.details = {{"phi_over_x_trend", hazard_trend_name(trend)},
               {"conclusion_verdict", to_json(star)}};
  return finish(r);
}

TheoremReport rearrangement_equivalence(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "rearrangement_equivalence");
  need_no_flat(in.dists[0]);
  need_no_flat(in.dists[1]);
  const OrderVerdict c = check_order(OrderKind::kConvex, law_of_rearranged(in.dists[0]),
                                     law_of_rearranged(in.dists[1]), grid);
  const OrderVerdict s = check_order(OrderKind::kStar, law_of_pdf_related(in.dists[0]),
                                     law_of_pdf_related(in.dists[1]), grid);
  TheoremReport r{"rearrangement_equivalence", true, c.holds, s.holds};
  r.details = {{"premise_verdict", to_json(c)}, {"conclusion_verdict", to_json(s)}};
  return finish(r);
}

TheoremReport kurtosis_star(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "kurtosis_star");
  need_symmetric(in.dists[0]);
  need_symmetric(in.dists[1]);
  const OrderVerdict k = check_order(OrderKind::kKurtosis, in.dists[0], in.dists[1], grid);
  const OrderVerdict s = check_order(OrderKind::kStar, law_of_pdf_related(in.dists[0]),
                                     law_of_pdf_related(in.dists[1]), grid);
  TheoremReport r{"kurtosis_star", true, k.holds, s.holds};
  r.details = {{"premise_verdict", to_json(k)}, {"conclusion_verdict", to_json(s)}};
  return finish(r);
}

TheoremReport oja(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "oja");
  need_symmetric(in.dists[0]);
  need_symmetric(in.dists[1]);
  const OrderVerdict k = check_order(OrderKind::kKurtosis, in.dists[0], in.dists[1], grid);
  const OrderVerdict c = check_order(OrderKind::kConvex, law_of_abs_centered(in.dists[0]),
                                     law_of_abs_centered(in.dists[1]), grid);
  TheoremReport r{"oja", true, k.holds, c.holds};
  r.details = {{"premise_verdict", to_json(k)}, {"conclusion_verdict", to_json(c)}};
  return finish(r);
}

TheoremReport entropy_order(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "entropy_order");
  const OrderVerdict st = check_order(OrderKind::kSt, law_of_pdf_related(in.dists[0]),
                                      law_of_pdf_related(in.dists[1]), grid);
  const double hx = entropy(in.dists[0]);
  const double hy = entropy(in.dists[1]);
  TheoremReport r{"entropy_order", false, st.holds, hx >= hy - info_tol(hx, hy)};
  r.details = {{"premise_verdict", to_json(st)}, {"H_X", hx}, {"H_Y", hy}};
  return finish(r);
}

TheoremReport varentropy_order(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "varentropy_order");
  need_no_flat(in.dists[0]);
  need_no_flat(in.dists[1]);
  const OrderVerdict s = check_order(OrderKind::kStar, law_of_pdf_related(in.dists[0]),
                                     law_of_pdf_related(in.dists[1]), grid);
  const double vx = varentropy(in.dists[0]);
  const double vy = varentropy(in.dists[1]);
  TheoremReport r{"varentropy_order", false, s.holds, vx <= vy + info_tol(vx, vy)};
  r.details = {{"premise_verdict", to_json(s)}, {"V_X", vx}, {"V_Y", vy}};
  return finish(r);
}

TheoremReport kurtosis_varentropy(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 2, "kurtosis_varentropy");
  need_symmetric(in.dists[0]);
  need_symmetric(in.dists[1]);
  const OrderVerdict k = check_order(OrderKind::kKurtosis, in.dists[0], in.dists[1], grid);
  const double vx = varentropy(in.dists[0]);
  const double vy = varentropy(in.dists[1]);
  TheoremReport r{"kurtosis_varentropy", false, k.holds, vx <= vy + info_tol(vx, vy)};
  r.details = {{"premise_verdict", to_json(k)}, {"V_X", vx}, {"V_Y", vy}};
  return finish(r);
}

TheoremReport decreasing_convex_varentropy(const TheoremInputs& in,
                                           const GridConfig& grid) {
  need_count(in, 2, "decreasing_convex_varentropy");
  for (const auto& d : in.dists) {
    if (d.shape() != Shape::kStrictlyDecreasing || std::isfinite(d.support().upper) ||
        !std::isfinite(d.support().lower)) {
      fail(ErrorCode::kPreconditionViolated,
           "needs a strictly decreasing density on (a, inf): " + d.spec_string());
    }
  }
  const Distribution& x = in.dists[0];
  const Distribution& y = in.dists[1];
  const OrderVerdict c =
      check_order(OrderKind::kConvex, x.affine(1.0, -x.support().lower),
                  y.affine(1.0, -y.support().lower), grid);
  const double vx = varentropy(x);
  const double vy = varentropy(y);
  TheoremReport r{"decreasing_convex_varentropy", false, c.holds, vx <= vy + info_tol(vx, vy)};
  r.details = {{"premise_verdict", to_json(c)}, {"V_X", vx}, {"V_Y", vy}};
  return finish(r);
}

TheoremReport ifr_entropy(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 1, "ifr_entropy");
  const Distribution& d = in.dists[0];
  const std::vector<double> ages = in.ages.empty() ? quantile_ages(d) : in.ages;
  const HazardTrend hazard = hazard_trend(d, std::nullopt, grid.tol_mono);
  std::vector<double> h;
  for (double t : ages) h.push_back(residual_entropy(d, t));
  const HazardTrend observed = classify(h, grid.tol_mono);
  // IFR predicts decreasing entropy, DFR increasing.
  HazardTrend predicted = HazardTrend::kNeither;
  if (hazard == HazardTrend::kIncreasing) predicted = HazardTrend::kDecreasing;
  if (hazard == HazardTrend::kDecreasing) predicted = HazardTrend::kIncreasing;
  if (hazard == HazardTrend::kConstant) predicted = HazardTrend::kConstant;
  TheoremReport r{"ifr_entropy", false};
  r.premise = predicted != HazardTrend::kNeither;
  r.conclusion = follows(observed, predicted);
  const int dir = predicted == HazardTrend::kIncreasing ? 1 : -1;
  r.details = {{"hazard", hazard_trend_name(hazard)},
               {"entropy_trend", hazard_trend_name(observed)},
               {"ages", ages},
               {"H_t", h},
               {"margin", strict_margin(h, dir)}};
  return finish(r);
}

HazardTrend ratio_direction(const Distribution& d, double u, double v, double tol) {
  std::vector<double> r;
  for (double p : numerics::probability_grid(99, 0.01)) {
    r.push_back(residual_density_ratio(d, u, v, p));
  }
  return classify(r, tol);
}

double decreasing_from(const Distribution& d) {
  if (d.shape() == Shape::kStrictlyDecreasing) return d.support().lower;
  if (d.shape() == Shape::kUnimodal) return d.mode();
  fail(ErrorCode::kPreconditionViolated,
       "residual density is never strictly decreasing for " + d.spec_string());
}

TheoremReport residual_varentropy_monotonicity(const TheoremInputs& in,
                                               const GridConfig& grid) {
  need_count(in, 1, "residual_varentropy_monotonicity");
  const Distribution& d = in.dists[0];
  const double t0 = decreasing_from(d);
  const std::vector<double> ages = in.ages.empty() ? decreasing_residual_ages(d) : in.ages;
  for (double t : ages) {
    if (t < t0) {
      fail(ErrorCode::kPreconditionViolated, "ages must not precede " + std::to_string(t0));
    }
  }
  if (ages.size() < 3) fail(ErrorCode::kPreconditionViolated, "needs at least three ages");
  const std::size_t mid = ages.size() / 2;
  const std::vector<std::pair<double, double>> uv = {
      {d.sf(ages.front()), d.sf(ages.back())},
      {d.sf(ages.front()), d.sf(ages[mid])},
      {d.sf(ages[mid]), d.sf(ages.back())}};
  std::vector<HazardTrend> dirs;
  for (auto [u, v] : uv) dirs.push_back(ratio_direction(d, u, v, grid.tol_mono));
  HazardTrend ratio = dirs.front();
  for (HazardTrend t : dirs) {
    if (t == ratio || t == HazardTrend::kConstant) continue;
    ratio = ratio == HazardTrend::kConstant ? t : HazardTrend::kNeither;
  }
  std::vector<double> v;
  for (double t : ages) v.push_back(residual_varentropy(d, t));
  HazardTrend observed = classify(v, grid.tol_mono);
  if (ratio == HazardTrend::kConstant) {
    bool flat = true;
    for (double x : v) flat = flat && std::abs(x - v.front()) <= 1e-7;
    observed = flat ? HazardTrend::kConstant : classify(v, 0.0);
  }
  TheoremReport r{"residual_varentropy_monotonicity", false};
  r.premise = ratio != HazardTrend::kNeither;
  r.conclusion = follows(observed, ratio);
  r.details = {{"t0", t0},
               {"ratio_trend", hazard_trend_name(ratio)},
               {"varentropy_trend", hazard_trend_name(observed)},
               {"ages", ages},
               {"V_t", v}};
  return finish(r);
}

TheoremReport ifr_bound(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 1, "ifr_bound");
  if (!in.t) fail(ErrorCode::kPreconditionViolated, "ifr_bound needs an age t");
  const Distribution& d = in.dists[0];
  const double t = *in.t;
  if (t < decreasing_from(d)) {
    fail(ErrorCode::kPreconditionViolated,
         "residual density is not strictly decreasing at t = " + std::to_string(t));
  }
  const HazardTrend hazard = hazard_trend(d, t, grid.tol_mono);
  const double vt = residual_varentropy(d, t);
  TheoremReport r{"ifr_bound", false};
  r.premise = hazard == HazardTrend::kIncreasing || hazard == HazardTrend::kConstant;
  r.conclusion = vt <= 1.0 + 1e-6;
  r.details = {{"t", t}, {"hazard", hazard_trend_name(hazard)}, {"V_t", vt}};
  return finish(r);
}

TheoremReport affine_star_equality(const TheoremInputs& in, const GridConfig& grid) {
  need_count(in, 1, "affine_star_equality");
  need_no_flat(in.dists[0]);
  if (!(in.a > 0.0)) fail(ErrorCode::kPreconditionViolated, "needs a > 0");
  const Distribution& x = in.dists[0];
  const Distribution y = x.affine(in.a, in.b);
  const LawView fx = law_of_pdf_related(x);
  const LawView gy = law_of_pdf_related(y);
  const OrderVerdict fwd = check_order(OrderKind::kStar, fx, gy, grid);
  const OrderVerdict bwd = check_order(OrderKind::kStar, gy, fx, grid);
  const auto ps = numerics::probability_grid(grid.n_points, grid.eps_boundary);
  double dev = 0.0;
  for (double r : phi_over_x(fx, gy, ps)) dev = std::max(dev, std::abs(r * in.a - 1.0));
  TheoremReport r{"affine_star_equality", false, true};
  r.conclusion = fwd.holds && bwd.holds && dev <= 1e-7;
  r.details = {{"a", in.a},
               {"b", in.b},
               {"phi_over_x", 1.0 / in.a},
               {"max_relative_deviation", dev},
               {"forward_verdict", to_json(fwd)},
               {"backward_verdict", to_json(bwd)}};
  return finish(r);
}

using Runner = std::function<TheoremReport(const TheoremInputs&, const GridConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"star_comparison", star_comparison},
      {"rearrangement_equivalence", rearrangement_equivalence},
      {"kurtosis_star", kurtosis_star},
      {"oja", oja},
      {"entropy_order", entropy_order},
      {"varentropy_order", varentropy_order},
      {"kurtosis_varentropy", kurtosis_varentropy},
      {"decreasing_convex_varentropy", decreasing_convex_varentropy},
      {"ifr_entropy", ifr_entropy},
      {"residual_varentropy_monotonicity", residual_varentropy_monotonicity},
      {"ifr_bound", ifr_bound},
      {"affine_star_equality", affine_star_equality},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

TheoremReport verify_theorem(std::string_view name, const TheoremInputs& in,
                             const GridConfig& grid) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(in, grid);
  }
  fail(ErrorCode::kUnknownTheorem, "unknown theorem: " + std::string(name));
}

std::vector<double> decreasing_residual_ages(const Distribution& d, int n) {
  const double t0 = decreasing_from(d);
  const double s0 = d.sf(t0);
  std::vector<double> ages;
  for (int i = 0; i < n; ++i) {
    const double q = 0.98 - 0.78 * i / (n - 1);
    ages.push_back(d.isf(s0 * q));
  }
  return ages;
}

std::vector<double> quantile_ages(const Distribution& d, int n) {
  std::vector<double> ages;
  for (int i = 0; i < n; ++i) ages.push_back(d.quantile(0.05 + 0.75 * i / (n - 1)));
  return ages;
}

HazardTrend hazard_trend(const Distribution& d, std::optional<double> from,
                         double tol_mono) {
  std::vector<double> h;
  for (double p : numerics::probability_grid(512, 1e-3)) {
    const double x = from ? *from + residual_quantile(d, *from, p)
                          : (p <= 0.5 ? d.quantile(p) : d.isf(1.0 - p));
    h.push_back(d.pdf(x) / d.sf(x));
  }
  return classify(h, tol_mono);
}

}  // namespace pdfrel
