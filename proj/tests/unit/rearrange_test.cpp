#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/rearrange.hpp"

namespace pdfrel {
namespace {

Distribution D(const char* s) { return Distribution::parse(s); }

TEST(LevelMeasure, FrozenValues) {
  EXPECT_NEAR(level_measure(D("triangular_abs:sign=1"), 0.25), 1.5, 1e-12);
  EXPECT_NEAR(level_measure(D("triangular_abs:sign=-1"), 0.25), 1.5, 1e-12);
  EXPECT_NEAR(level_measure(D("exponential"), std::exp(-2.0)), 2.0, 1e-12);
  EXPECT_EQ(level_measure(D("uniform:a=0,b=2"), 0.6), 0.0);
  EXPECT_EQ(level_measure(D("uniform:a=0,b=2"), 0.4), 2.0);
  EXPECT_TRUE(std::isinf(level_measure(D("normal"), 0.0)));
}

TEST(Rearrangement, EquimeasurableWithSource) {
  for (const char* s : {"normal", "weibull:k=2", "triangular_abs:sign=-1", "parabolic:b=0.3",
                        "reflected_exponential", "truncated_normal:mu=0.8,lo=0,hi=1"}) {
    const Distribution d = D(s);
    for (double x : {0.1, 0.5, 1.2}) {
      if (x >= d.support().length()) continue;
      const double c = decreasing_rearrangement(d, x);
      EXPECT_NEAR(level_measure(d, c), x, 1e-8) << s << " x=" << x;
    }
  }
}

TEST(Rearrangement, IsDecreasing) {
  const Distribution d = D("weibull:k=2");
  double prev = numerics::kInf;
  for (int i = 1; i < 60; ++i) {
    const double v = decreasing_rearrangement(d, 0.05 * i);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(RearrangedLaw, NormalFrozenValues) {
  const RearrangedLaw law{D("normal")};
  EXPECT_NEAR(law.cdf(2.0), 0.6826894921370859, 1e-10);
  EXPECT_NEAR(law.cdf_by_quadrature(2.0), 0.6826894921370859, 1e-9);
  EXPECT_NEAR(law.quantile(0.6826894921370859), 2.0, 1e-9);
  EXPECT_NEAR(pdf_related_quantile_via_rearrangement(D("normal"), 0.3173105078629141),
              0.24197072451914337, 1e-9);
}

TEST(RearrangedLaw, CdfFormsAgree) {
  for (const char* s : {"weibull:k=2", "triangular_abs:sign=-1", "parabolic:b=0.75", "logistic"}) {
    const RearrangedLaw law{D(s)};
    for (double u : {0.1, 0.4, 0.8}) {
      const double t = law.quantile(u);
      EXPECT_NEAR(law.cdf_by_pdf_related(t), u, 1e-8) << s;
      EXPECT_NEAR(law.cdf_by_quadrature(t), u, 1e-7) << s;
    }
  }
}

TEST(RearrangedLaw, QuantileOfFXAgreesWithDirectInversion) {
  for (const char* s : {"weibull:k=2", "normal:sigma=2", "paretotype"}) {
    const Distribution d = D(s);
    const PdfRelatedLaw direct{d};
    for (double p : {0.1, 0.5, 0.9}) {
      EXPECT_NEAR(pdf_related_quantile_via_rearrangement(d, p), direct.quantile(p),
                  1e-7 * std::max(1.0, direct.quantile(p)))
          << s << " p=" << p;
    }
  }
}

TEST(RearrangedLaw, FlatZone) {
  const RearrangedLaw law{D("uniform:a=1,b=3")};
  EXPECT_TRUE(law.has_flat_zone());
  EXPECT_NEAR(law.cdf(0.5), 0.25, 1e-15);
  try {
    pdf_related_quantile_via_rearrangement(D("uniform"), 0.5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFlatZone);
  }
}

}  // namespace
}  // namespace pdfrel
