#include "pdfrel/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "pdfrel/curve.hpp"
#include "pdfrel/info.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/oracle.hpp"
#include "pdfrel/orders.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/rearrange.hpp"
#include "pdfrel/residual.hpp"
#include "pdfrel/theorems.hpp"

namespace pdfrel {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Distribution D(const char* spec) { return Distribution::parse(spec); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void uniform_characterization(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const auto t0 = Clock::now();
  double worst_uniform = 0.0;
  double least_control = numerics::kInf;
  for (const char* s : {"shifted_exponential:a=0", "shifted_exponential:a=2",
                        "reflected_exponential:b=0", "reflected_exponential:b=-1",
                        "laplace2:m=0", "laplace2:m=5"}) {
    const double dev = check_uniform_characterization(D(s)).max_deviation;
    worst_uniform = std::max(worst_uniform, dev);
    o.check(dev <= 1e-8, std::string(s) + " deviates by " + num(dev));
  }
  for (const char* s : {"normal", "paretotype"}) {
    const double dev = check_uniform_characterization(D(s)).max_deviation;
    least_control = std::min(least_control, dev);
    o.check(dev > 0.01, std::string(s) + " looks uniform (" + num(dev) + ")");
  }
  const double secs = since(t0);
  o.check(secs < 1.0, "took " + num(secs) + " s");
  if (o.pass) {
    o.detail << "max |K(y)-y| " << num(worst_uniform) << ", controls >= "
             << num(least_control) << ", " << num(secs) << " s";
  }
}

void pareto_residual_closed_form(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const Distribution d = D("paretotype");
  double worst = 0.0;
  for (double t : {0.5, 1.0, 3.0}) {
    const double top = 1.0 / (1.0 + t);
    for (int k = 0; k < 200; ++k) {
      const double y = top * (k + 0.5) / 200.0;
      const double err =
          std::abs(residual_pdf_related_cdf(d, t, y).value - std::sqrt(y * (1.0 + t)));
      worst = std::max(worst, err);
    }
  }
  o.check(worst <= 1e-8, "max error " + num(worst));
  if (o.pass) o.detail << "max |K_t - sqrt(y(1+t))| " << num(worst) << " over 600 points";
}

void parabolic_curves(Outcome& o, const SelftestOptions& opt, Clock::time_point) {
  const auto t0 = Clock::now();
  double worst_jump = 0.0;
  double worst_odds = 0.0;
  double worst_ks_ratio = 0.0;
  for (const char* s : {"parabolic:b=0.25", "parabolic:b=0.5", "parabolic:b=0.75"}) {
    const Distribution d = D(s);
    for (double t : {0.25, 0.5}) {
      const std::string tag = std::string(s) + " t=" + num(t);
      const Curve c = make_curve(d, CurveLaw::kKt, t, 999);
      bool monotone = true;
      for (std::size_t i = 0; i + 1 < c.value.size(); ++i) {
        monotone = monotone && c.value[i + 1] >= c.value[i] - 1e-12;
      }
      o.check(monotone, tag + ": curve not monotone");
      o.check(c.value.front() >= 0.0 && std::abs(c.value.back() - 1.0) <= 1e-12,
              tag + ": curve does not run from 0 to 1");
      const double lambda = hazard_at(d, t);
      const double odds = d.cdf(t) / d.sf(t);
      const double at = residual_pdf_related_cdf(d, t, lambda).value;
      const double jump = std::abs(residual_pdf_related_cdf(d, t, lambda * (1 + 1e-10)).value -
                                   residual_pdf_related_cdf(d, t, lambda * (1 - 1e-10)).value);
      worst_odds = std::max(worst_odds, std::abs(at - odds));
      worst_jump = std::max(worst_jump, jump);
      o.check(std::abs(at - odds) <= 1e-8, tag + ": K_t(lambda) differs from the odds");
      o.check(jump <= 1e-8, tag + ": K_t jumps at lambda");
      const OracleResult r = run_oracle(d, OracleLaw::kKt, t, opt.mc_n, opt.seed);
      worst_ks_ratio = std::max(worst_ks_ratio, r.ks / r.band);
      o.check(r.pass, tag + ": KS " + num(r.ks) + " above band " + num(r.band));
    }
  }
  const double secs = since(t0);
  o.check(secs < 30.0, "took " + num(secs) + " s");
  if (o.pass) {
    o.detail << "6 curves monotone, |K_t(lambda)-odds| " << num(worst_odds) << ", jump "
             << num(worst_jump) << ", worst KS/band " << num(worst_ks_ratio) << ", "
             << num(secs) << " s";
  }
}

void exponential_varentropy(Outcome& o, const SelftestOptions&, Clock::time_point) {
  double worst = 0.0;
  for (double rate : {0.5, 1.0, 2.0}) {
    const Distribution d = Distribution(family::Exponential{rate});
    const std::string tag = "rate " + num(rate);
    const double vq = info_by_quadrature(d).varentropy;
    const double vc = varentropy(d);
    worst = std::max({worst, std::abs(vq - 1.0), std::abs(vc - 1.0)});
    o.check(std::abs(vq - 1.0) <= 1e-7 && std::abs(vc - 1.0) <= 1e-7, tag + ": V != 1");
    for (double t : {0.5, 2.0}) {
      const double vt = residual_varentropy(d, t);
      worst = std::max(worst, std::abs(vt - 1.0));
      o.check(std::abs(vt - 1.0) <= 1e-7, tag + ": V(X_t) != 1 at t=" + num(t));
      if (rate == 1.0) {
        const double ht = residual_entropy(d, t);
        worst = std::max(worst, std::abs(ht - 1.0));
        o.check(std::abs(ht - 1.0) <= 1e-7, "H(X_t) != 1 at t=" + num(t));
      }
    }
  }
  if (o.pass) o.detail << "max deviation from 1: " << num(worst);
}

void residual_entropy_forms(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const std::vector<std::pair<const char*, std::vector<double>>> cases = {
      {"weibull:k=2", {0.2, 0.5, 1.0, 1.5, 2.0}},
      {"weibull:k=0.5", {0.1, 0.5, 1.0, 2.0, 4.0}},
      {"paretotype", {0.5, 1.0, 3.0, 10.0, 50.0}},
      {"normal", {-1.0, 0.0, 0.5, 1.0, 2.0}}};
  double worst = 0.0;
  int pairs = 0;
  for (const auto& [s, ages] : cases) {
    const Distribution d = D(s);
    for (double t : ages) {
      const double a = residual_entropy(d, t, ResidualEntropyForm::kDirect);
      const double b = residual_entropy(d, t, ResidualEntropyForm::kLambdaForm);
      const double c = residual_entropy(d, t, ResidualEntropyForm::kHazardForm);
      const double gap = std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
      worst = std::max(worst, gap);
      ++pairs;
      o.check(gap <= 1e-8, std::string(s) + " t=" + num(t) + " forms differ by " + num(gap));
    }
  }
  if (o.pass) o.detail << pairs << " (family, t) pairs, max spread " << num(worst);
}

void kurtosis_chain(Outcome& o, const SelftestOptions& opt, Clock::time_point) {
  const GridConfig grid;
  const Distribution n = D("normal"), l = D("logistic"), c = D("cauchy");
  o.check(check_order(OrderKind::kKurtosis, n, l, grid).holds, "normal <=k logistic fails");
  o.check(check_order(OrderKind::kKurtosis, l, c, grid).holds, "logistic <=k cauchy fails");
  const double vn = varentropy(n), vl = varentropy(l), vc = varentropy(c);
  o.check(vl - vn > 0.05 && vc - vl > 0.05, "quadrature gaps too small");
  const IcMoments mn = ic_moments(n, opt.mc_n, opt.seed);
  const IcMoments ml = ic_moments(l, opt.mc_n, opt.seed);
  const IcMoments mc = ic_moments(c, opt.mc_n, opt.seed);
  o.check(ml.variance - mn.variance > 0.05 && mc.variance - ml.variance > 0.05,
          "Monte Carlo gaps too small");
  for (auto [m, v] : {std::pair{mn, vn}, std::pair{ml, vl}, std::pair{mc, vc}}) {
    o.check(std::abs(m.variance - v) <= 4.0 * m.se_variance,
            "Monte Carlo V " + num(m.variance) + " far from " + num(v));
  }
  if (o.pass) {
    o.detail << "V: " << num(vn) << " < " << num(vl) << " < " << num(vc) << " (MC "
             << num(mn.variance) << ", " << num(ml.variance) << ", " << num(mc.variance)
             << ")";
  }
}

void weibull_monotonicity(Outcome& o, const SelftestOptions&, Clock::time_point) {
  auto vts = [](const Distribution& d) {
    std::vector<double> v;
    for (double t : decreasing_residual_ages(d)) v.push_back(residual_varentropy(d, t));
    return v;
  };
  const auto v2 = vts(D("weibull:k=2"));
  const auto vh = vts(D("weibull:k=0.5"));
  const auto v1 = vts(D("weibull:k=1"));
  for (std::size_t i = 0; i + 1 < v2.size(); ++i) {
    o.check(v2[i + 1] >= v2[i] - 1e-9, "k=2: V(X_t) decreases");
    o.check(vh[i + 1] <= vh[i] + 1e-9, "k=0.5: V(X_t) increases");
  }
  o.check(*std::max_element(v2.begin(), v2.end()) <= 1.0 + 1e-6, "k=2: V(X_t) above 1");
  for (double v : v1) o.check(std::abs(v - 1.0) <= 1e-7, "k=1: V(X_t) != 1");

  double worst = 0.0;
  const double u = 0.8, v = 0.2;
  for (double k : {0.5, 1.0, 2.0}) {
    const Distribution d = Distribution(family::Weibull{k, 1.7});
    std::vector<double> r;
    for (int i = 1; i <= 9; ++i) {
      const double p = 0.1 * i;
      const double closed = weibull_ratio(k, u, v, p);
      const double generic = residual_density_ratio(d, u, v, p);
      worst = std::max(worst, std::abs(closed - generic) / std::max(1.0, std::abs(closed)));
      r.push_back(closed);
    }
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (k > 1) o.check(r[i + 1] > r[i], "k=2: ratio not increasing");
      if (k < 1) o.check(r[i + 1] < r[i], "k=0.5: ratio not decreasing");
      if (k == 1) o.check(std::abs(r[i + 1] - r[i]) <= 1e-12, "k=1: ratio not constant");
    }
  }
  o.check(worst <= 1e-10, "closed ratio differs from generic by " + num(worst));
  if (o.pass) {
    o.detail << "k=2 V in [" << num(v2.front()) << ", " << num(v2.back()) << "], k=0.5 V in ["
             << num(vh.back()) << ", " << num(vh.front()) << "], ratio error " << num(worst);
  }
}

void rearrangement_suite(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const Distribution x = D("triangular_abs:sign=1");
  const Distribution y = D("triangular_abs:sign=-1");
  double worst_f = 0.0;
  for (int i = 1; i < 200; ++i) {
    const double s = 2.0 * i / 200.0;
    const double want = 1.0 - s / 2.0;
    worst_f = std::max({worst_f, std::abs(decreasing_rearrangement(x, s) - want),
                        std::abs(decreasing_rearrangement(y, s) - want)});
  }
  o.check(worst_f <= 1e-12, "f* differs from 1 - x/2 by " + num(worst_f));
  const InfoReport ix = info_by_quadrature(x);
  const InfoReport iy = info_by_quadrature(y);
  const double dh = std::abs(ix.entropy - iy.entropy);
  const double dv = std::abs(ix.varentropy - iy.varentropy);
  o.check(dh <= 1e-7, "|H(X) - H(Y)| = " + num(dh));
  o.check(dv <= 1e-6, "|V(X) - V(Y)| = " + num(dv));
  double worst_q = 0.0;
  for (const char* s : {"normal", "exponential", "triangular_abs"}) {
    const Distribution d = D(s);
    const PdfRelatedLaw k(d);
    for (double p : numerics::probability_grid(99, 0.01)) {
      const double err = std::abs(k.quantile(p) - pdf_related_quantile_via_rearrangement(d, p));
      worst_q = std::max(worst_q, err);
    }
  }
  o.check(worst_q <= 1e-7, "quantile identity off by " + num(worst_q));
  if (o.pass) {
    o.detail << "f* error " << num(worst_f) << ", |dH| " << num(dh) << ", |dV| " << num(dv)
             << ", quantile identity " << num(worst_q);
  }
}

void theorem_matrix(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"exponential", "paretotype"},      {"normal", "logistic"},
      {"normal", "cauchy"},               {"logistic", "cauchy"},
      {"exponential", "weibull:k=2"},     {"weibull:k=2", "normal"},
      {"normal", "normal:mu=3,sigma=2"},  {"exponential", "exponential:rate=2"},
      {"symmetric_triangular", "normal"}, {"paretotype", "cauchy"},
      {"weibull:k=0.5", "exponential"},   {"cauchy", "normal"},
      {"triangular_abs", "laplace2"}};
  const std::vector<std::pair<const char*, const char*>> symmetric = {
      {"normal", "logistic"}, {"logistic", "cauchy"}, {"normal", "cauchy"},
      {"cauchy", "normal"},   {"logistic", "normal"}, {"normal", "normal:mu=3,sigma=2"},
      {"symmetric_triangular", "normal"}, {"laplace2", "cauchy"}};
  int agree = 0, kagree = 0, implications = 0;
  auto run = [&](const char* th, const char* a, const char* b) {
    const TheoremReport r = verify_theorem(th, TheoremInputs::of({D(a), D(b)}));
    o.check(r.implication_respected, std::string(th) + " fails on (" + a + ", " + b + ")");
    return r.implication_respected;
  };
  for (const auto& [a, b] : pairs) {
    agree += run("rearrangement_equivalence", a, b);
    for (const char* th : {"entropy_order", "varentropy_order"}) {
      implications += run(th, a, b);
      implications += run(th, b, a);
    }
  }
  for (const auto& [a, b] : symmetric) kagree += run("kurtosis_star", a, b);
  if (o.pass) {
    o.detail << agree << "/" << pairs.size() << " rearrangement pairs agree, " << kagree << "/"
             << symmetric.size() << " kurtosis-star pairs agree, " << implications
             << " entropy/varentropy instances respected";
  }
}

void ifr_dfr_entropy(Outcome& o, const SelftestOptions&, Clock::time_point) {
  const TheoremReport w = verify_theorem("ifr_entropy", TheoremInputs::of({D("weibull:k=2")}));
  const TheoremReport p = verify_theorem("ifr_entropy", TheoremInputs::of({D("paretotype")}));
  const double mw = w.details["margin"].get<double>();
  const double mp = p.details["margin"].get<double>();
  o.check(w.details["hazard"] == "increasing" && w.details["entropy_trend"] == "decreasing",
          "weibull k=2: entropy not decreasing");
  o.check(p.details["hazard"] == "decreasing" && p.details["entropy_trend"] == "increasing",
          "paretotype: entropy not increasing");
  o.check(mw > 1e-4, "weibull margin " + num(mw));
  o.check(mp > 1e-4, "paretotype margin " + num(mp));
  if (o.pass) o.detail << "margins: weibull " << num(mw) << ", paretotype " << num(mp);
}

void oracle_gate(Outcome& o, const SelftestOptions& opt, Clock::time_point suite_start) {
  struct Case {
    const char* spec;
    OracleLaw law;
    std::optional<double> t;
  };
  const std::vector<Case> cases = {
      {"exponential", OracleLaw::kK, {}},
      {"normal", OracleLaw::kK, {}},
      {"paretotype", OracleLaw::kK, {}},
      {"weibull:k=2", OracleLaw::kK, {}},
      {"logistic", OracleLaw::kK, {}},
      {"parabolic:b=0.5", OracleLaw::kK, {}},
      {"paretotype", OracleLaw::kKt, 1.0},
      {"weibull:k=2", OracleLaw::kKt, 0.3},
      {"normal", OracleLaw::kKt, -0.5},
      {"parabolic:b=0.75", OracleLaw::kKt, 0.5},
      {"normal", OracleLaw::kGt, -1.0},
      {"truncated_normal:lo=-2,hi=1", OracleLaw::kGt, -1.5},
      {"truncated_normal:lo=-2,hi=1", OracleLaw::kGt, -0.5},
      {"normal", OracleLaw::kL, {}},
      {"exponential", OracleLaw::kL, {}},
      {"cauchy", OracleLaw::kL, {}}};
  double worst = 0.0;
  for (const Case& c : cases) {
    const OracleResult r = run_oracle(D(c.spec), c.law, c.t, opt.mc_n, opt.seed);
    worst = std::max(worst, r.ks / r.band);
    o.check(r.pass, std::string(oracle_law_name(c.law)) + " for " + c.spec + ": KS " +
                        num(r.ks) + " above " + num(r.band));
  }
  const double total = since(suite_start);
  o.check(total < 300.0, "suite took " + num(total) + " s");
  if (o.pass) {
    o.detail << cases.size() << " laws within the band (worst KS/band " << num(worst)
             << "), suite so far " << num(total) << " s";
  }
}

using Criterion = void (*)(Outcome&, const SelftestOptions&, Clock::time_point);

struct Entry {
  const char* title;
  Criterion run;
};

const Entry kEntries[kCriterionCount] = {
    {"uniform characterization", uniform_characterization},
    {"pareto-type K_t closed form", pareto_residual_closed_form},
    {"parabolic K_t curves", parabolic_curves},
    {"exponential varentropy", exponential_varentropy},
    {"residual entropy forms", residual_entropy_forms},
    {"kurtosis chain", kurtosis_chain},
    {"weibull residual varentropy", weibull_monotonicity},
    {"rearrangement suite", rearrangement_suite},
    {"theorem matrix", theorem_matrix},
    {"IFR/DFR residual entropy", ifr_dfr_entropy},
    {"Monte Carlo oracle gate", oracle_gate},
};

}  // namespace

const char* criterion_title(int id) noexcept {
  if (id < 1 || id > kCriterionCount) return "?";
  return kEntries[id - 1].title;
}

std::vector<CriterionResult> run_selftest(
    const SelftestOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  const auto start = Clock::now();
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    const auto t0 = Clock::now();
    Outcome o;
    try {
      kEntries[id - 1].run(o, options, start);
    } catch (const std::exception& e) {
      o.check(false, std::string("error: ") + e.what());
    }
    CriterionResult r{id, kEntries[id - 1].title, o.pass, o.detail.str(), since(t0)};
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pdfrel
