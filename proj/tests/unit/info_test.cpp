#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/info.hpp"

namespace pdfrel {
namespace {

Distribution D(const char* s) { return Distribution::parse(s); }

constexpr double kPi = 3.14159265358979323846;

TEST(Info, ClosedForms) {
  EXPECT_NEAR(entropy(D("exponential:rate=2")), 1.0 - std::log(2.0), 1e-14);
  EXPECT_NEAR(varentropy(D("exponential:rate=2")), 1.0, 1e-14);
  EXPECT_NEAR(entropy(D("normal:sigma=3")), 0.5 * std::log(2 * kPi * std::exp(1.0) * 9), 1e-14);
  EXPECT_NEAR(varentropy(D("normal:sigma=3")), 0.5, 1e-14);
  EXPECT_NEAR(entropy(D("uniform:a=0,b=4")), std::log(4.0), 1e-14);
  EXPECT_EQ(varentropy(D("uniform")), 0.0);
  EXPECT_NEAR(varentropy(D("paretotype")), 4.0, 1e-14);
  EXPECT_NEAR(varentropy(D("logistic")), 4.0 - kPi * kPi / 3.0, 1e-14);
  EXPECT_EQ(info_report(D("exponential")).method, InfoMethod::kClosedForm);
  EXPECT_EQ(info_report(D("weibull:k=2")).method, InfoMethod::kQuadrature);
}

TEST(Info, QuadratureAgreesWithClosedForms) {
  for (const char* s : {"exponential:rate=3", "laplace2:m=1", "normal:mu=2,sigma=0.5",
                        "logistic:s=2", "cauchy", "paretotype", "symmetric_triangular",
                        "triangular_abs:sign=1", "triangular_abs:sign=-1"}) {
    const Distribution d = D(s);
    const InfoReport closed = info_report(d);
    const InfoReport quad = info_by_quadrature(d);
    EXPECT_NEAR(quad.entropy, closed.entropy, 1e-7) << s;
    EXPECT_NEAR(quad.varentropy, closed.varentropy, 1e-6) << s;
  }
}

TEST(Info, WeibullEntropy) {
  // gamma (1 - 1/k) + log(lambda / k) + 1
  const double euler = 0.57721566490153286;
  for (double k : {0.5, 2.0, 3.5}) {
    const Distribution d(family::Weibull{k, 1.0});
    EXPECT_NEAR(entropy(d), euler * (1 - 1 / k) - std::log(k) + 1, 1e-9) << k;
  }
}

TEST(ResidualInfo, ExponentialIsAgeless) {
  const Distribution e = D("exponential");
  for (double t : {0.5, 3.0}) {
    EXPECT_NEAR(residual_entropy(e, t), 1.0, 1e-10);
    EXPECT_NEAR(residual_varentropy(e, t), 1.0, 1e-9);
  }
}

TEST(ResidualInfo, FormsAgree) {
  for (const char* s : {"weibull:k=2", "normal", "paretotype", "parabolic:b=0.25"}) {
    const Distribution d = D(s);
    for (double pt : {0.2, 0.7}) {
      const double t = d.quantile(pt);
      const double h = residual_entropy(d, t, ResidualEntropyForm::kDirect);
      EXPECT_NEAR(residual_entropy(d, t, ResidualEntropyForm::kLambdaForm), h, 1e-7) << s;
      EXPECT_NEAR(residual_entropy(d, t, ResidualEntropyForm::kHazardForm), h, 1e-7) << s;
      const ResidualVarentropy v = residual_varentropy_forms(d, t);
      EXPECT_NEAR(v.moment_form, v.variance_form, 1e-6) << s;
    }
  }
}

TEST(ResidualInfo, RejectsAgeOutsideSupport) {
  try {
    residual_entropy(D("exponential"), -1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTOutOfSupport);
  }
}

TEST(IcCdf, ExponentialIsExponential) {
  const Distribution e = D("exponential");
  for (double x : {0.1, 1.0, 3.0}) EXPECT_NEAR(ic_cdf(e, x), 1.0 - std::exp(-x), 1e-12);
  EXPECT_EQ(ic_cdf(e, -0.5), 0.0);
}

TEST(WeibullRatio, Values) {
  EXPECT_NEAR(weibull_ratio(1.0, 0.6, 0.3, 0.4), 2.0, 1e-14);
  const double u = 0.6, v = 0.3, p = 0.25;
  const Distribution w(family::Weibull{2.5, 1.0});
  EXPECT_NEAR(weibull_ratio(2.5, u, v, p), residual_density_ratio(w, u, v, p), 1e-10);
  try {
    weibull_ratio(2.0, 0.3, 0.6, 0.5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadUVOrder);
  }
}

}  // namespace
}  // namespace pdfrel
