#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"
#include "pdfrel/residual.hpp"

namespace pdfrel {
namespace {

Distribution D(const char* s) { return Distribution::parse(s); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

TEST(Residual, FrozenValues) {
  const Distribution p = D("paretotype");
  EXPECT_NEAR(residual_quantile(p, 1.0, 0.5), 2.0, 1e-12);
  EXPECT_NEAR(hazard_at(p, 1.0), 0.5, 1e-15);
  const Distribution e = D("exponential");
  EXPECT_NEAR(cumulative_hazard_at(e, 2.0), 2.0, 1e-14);
  EXPECT_NEAR(mean_residual_at(e, 2.0), 1.0, 1e-10);
  EXPECT_NEAR(hazard_at(e, 5.0), 1.0, 1e-14);
}

TEST(Residual, ErrorPaths) {
  EXPECT_EQ(code_of([] { hazard_at(D("exponential"), -1.0); }), ErrorCode::kTOutOfSupport);
  EXPECT_EQ(code_of([] { hazard_at(D("uniform"), 1.0); }), ErrorCode::kTOutOfSupport);
  EXPECT_EQ(code_of([] { residual_quantile(D("normal"), 0.0, 1.0); }), ErrorCode::kPOutOfRange);
  EXPECT_EQ(code_of([] { mean_residual_at(D("paretotype"), 1.0); }),
            ErrorCode::kIntegralDiverged);
  EXPECT_EQ(code_of([] { mean_residual_at(D("cauchy"), 1.0); }), ErrorCode::kIntegralDiverged);
}

TEST(Residual, ExponentialIsMemoryless) {
  const Distribution e = D("exponential:rate=1.5");
  for (double t : {0.1, 1.0, 4.0}) {
    for (double p : {0.05, 0.5, 0.95}) {
      EXPECT_NEAR(residual_quantile(e, t, p), e.quantile(p), 1e-12);
    }
  }
}

TEST(Residual, SpecIsAProperLaw) {
  for (const char* s : {"normal", "weibull:k=2", "paretotype", "parabolic:b=0.75", "logistic"}) {
    const Distribution d = D(s);
    const double t = d.quantile(0.3);
    const ResidualSpec r(d, t);
    EXPECT_EQ(r.support().lower, 0.0);
    for (double p : {0.01, 0.3, 0.7, 0.99}) {
      const double x = r.quantile(p);
      EXPECT_NEAR(r.cdf(x), p, 1e-10) << s;
      EXPECT_NEAR(r.cdf(x) + r.sf(x), 1.0, 1e-12) << s;
    }
    const double mass =
        numerics::integrate([&](double x) { return r.pdf(x); }, 0.0, r.support().upper, 1e-12, 1e-6)
            .value;
    EXPECT_NEAR(mass, 1.0, 1e-8) << s;
  }
}

TEST(Residual, MeanResidualMatchesDirectIntegral) {
  const Distribution d = D("weibull:k=2");
  const double t = 0.5;
  const double direct =
      numerics::integrate([&](double x) { return d.sf(x); }, t, numerics::kInf).value / d.sf(t);
  EXPECT_NEAR(mean_residual_at(d, t), direct, 1e-9);
}

TEST(ResidualK, ParetoClosedForm) {
  const Distribution p = D("paretotype");
  EXPECT_NEAR(residual_pdf_related_cdf(p, 3.0, 0.16).value, 0.8, 1e-12);
  EXPECT_NEAR(residual_pdf_related_inverse(p, 1.0, 0.5), 0.125, 1e-12);
  for (double y : {0.01, 0.05, 0.2}) {
    EXPECT_NEAR(residual_pdf_related_cdf(p, 3.0, y).value, std::sqrt(4.0 * y), 1e-12);
  }
  EXPECT_EQ(residual_pdf_related_cdf(p, 3.0, 0.1).which, ResidualKCase::kDecreasing);
}

TEST(ResidualK, InverseRoundTrip) {
  const Distribution r = D("reflected_exponential");
  const double y = residual_pdf_related_inverse(r, -1.0, 0.3);
  EXPECT_NEAR(residual_pdf_related_cdf(r, -1.0, y).value, 0.3, 1e-10);
  EXPECT_EQ(code_of([] { residual_pdf_related_inverse(D("normal"), 0.0, 0.3); }),
            ErrorCode::kNotMonotone);
}

// Reference: P(f_t(X_t) <= y) by direct integration over {x > t : f(x) <= y S(t)}.
double k_t_reference(const Distribution& d, double t, double y) {
  const double c = y * d.sf(t);
  const double hi = std::isfinite(d.support().upper) ? d.support().upper : d.isf(1e-14);
  auto ind = [&](double x) { return d.pdf(x) <= c ? d.pdf(x) : 0.0; };
  double sum = 0.0;
  const int n = 200000;
  const double h = (hi - t) / n;
  for (int i = 0; i < n; ++i) sum += ind(t + (i + 0.5) * h);
  return sum * h / d.sf(t);
}

TEST(ResidualK, AgreesWithDirectIntegration) {
  for (const char* s : {"normal", "weibull:k=2", "logistic", "parabolic:b=0.25"}) {
    const Distribution d = D(s);
    for (double pt : {0.2, 0.6}) {
      const double t = d.quantile(pt);
      const ImPlusRange r = residual_im_plus(d, t);
      for (double w : {0.2, 0.5, 0.8}) {
        const double y = r.lo + w * (r.hi - r.lo);
        EXPECT_NEAR(residual_pdf_related_cdf(d, t, y).value, k_t_reference(d, t, y), 2e-4)
            << s << " t=" << t << " y=" << y;
      }
    }
  }
}

TEST(ResidualK, RejectsOutOfRange) {
  EXPECT_EQ(code_of([] { residual_pdf_related_cdf(D("paretotype"), 3.0, 1.0); }),
            ErrorCode::kYOutOfRange);
  EXPECT_EQ(code_of([] { residual_im_plus(D("triangular_abs:sign=-1"), -0.5); }),
            ErrorCode::kCaseUnsupported);
}

TEST(ShiftedLaw, NormalFrozenValues) {
  const Distribution n = D("normal");
  const auto a = shifted_pdf_related_survival(n, -1.0, n.pdf(1.0));
  EXPECT_NEAR(a.survival, (Phi(1) - Phi(-1)) / Phi(1), 1e-10);
  EXPECT_NEAR(a.survival, 0.8114, 5e-5);
  EXPECT_EQ(a.case_tag, GtCase::kC);
  const auto b = shifted_pdf_related_survival(n, 0.0, n.pdf(0.5));
  EXPECT_NEAR(b.survival, (Phi(0.5) - 0.5) / 0.5, 1e-10);
  EXPECT_EQ(b.case_tag, GtCase::kD);
}

TEST(ShiftedLaw, CaseSelection) {
  const Distribution w = D("weibull:k=2");
  EXPECT_EQ(shifted_case(w, 0.2), GtCase::kC);
  EXPECT_EQ(shifted_case(w, 1.0), GtCase::kD);
  EXPECT_EQ(shifted_case(D("paretotype"), 0.5), GtCase::kD);
  const Distribution tn = D("truncated_normal:mu=0.8,lo=0,hi=1");
  const double f0 = tn.pdf(0.0);
  EXPECT_LT(f0, tn.endpoint_density(Endpoint::kUpper));
  EXPECT_EQ(shifted_case(tn, 0.1), GtCase::kB);
  EXPECT_EQ(shifted_case(tn, 0.65), GtCase::kA);
}

TEST(ShiftedLaw, DensityIsMinusSlopeOfSurvival) {
  for (const char* s : {"normal", "weibull:k=2", "truncated_normal:mu=0.8,lo=0,hi=1"}) {
    const Distribution d = D(s);
    for (double t : {d.quantile(0.1), d.quantile(0.3), d.quantile(0.8)}) {
      const auto cuts = shifted_branch_points(d, t);
      const double top = d.max_density();
      for (double w : {0.13, 0.37, 0.61, 0.89}) {
        const double y = w * top;
        bool near_cut = false;
        for (double c : cuts) near_cut |= std::abs(y - c) < 1e-3;
        if (near_cut) continue;
        const double h = 1e-6;
        const double fd = -(shifted_pdf_related_survival(d, t, y + h).survival -
                            shifted_pdf_related_survival(d, t, y - h).survival) /
                          (2 * h);
        EXPECT_NEAR(shifted_pdf_related_pdf(d, t, y), fd, 1e-4 * std::max(1.0, std::abs(fd)))
            << s << " t=" << t << " y=" << y;
      }
    }
  }
}

TEST(ShiftedLaw, StrictModeFlagsBranchBoundary) {
  const Distribution n = D("normal");
  const double y = n.pdf(-1.0);
  EXPECT_EQ(code_of([&] { shifted_pdf_related_pdf(n, -1.0, y, true); }),
            ErrorCode::kAtBranchBoundary);
  EXPECT_NO_THROW(shifted_pdf_related_pdf(n, -1.0, y, false));
}

}  // namespace
}  // namespace pdfrel
