#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/inverses.hpp"
#include "pdfrel/pdf_related.hpp"

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

TEST(PdfRelatedCdf, FrozenValues) {
  EXPECT_NEAR(pdf_related_cdf(D("exponential"), 0.4), 0.4, 1e-12);
  const Distribution n = D("normal");
  EXPECT_NEAR(pdf_related_cdf(n, n.pdf(1.0)), 0.3173105078629141, 1e-9);
  EXPECT_NEAR(pdf_related_cdf(D("laplace2"), 0.7), 0.7, 1e-12);
  EXPECT_NEAR(pdf_related_cdf(D("paretotype"), 0.25), 0.5, 1e-12);
}

TEST(PdfRelatedCdf, OutOfRangeAndDegenerate) {
  EXPECT_EQ(code_of([] { pdf_related_cdf(D("exponential"), 1.5); }), ErrorCode::kYOutOfRange);
  EXPECT_EQ(code_of([] { pdf_related_cdf(D("uniform"), 1.0); }), ErrorCode::kDegenerateLaw);
  const Distribution e = D("exponential");
  EXPECT_EQ(pdf_related_cdf_total(e, -1.0), 0.0);
  EXPECT_EQ(pdf_related_cdf_total(e, 3.0), 1.0);
}

TEST(PdfRelatedCdf, ExponentialFamilyMembersAreUniform) {
  for (const char* s : {"exponential", "shifted_exponential:a=3",
                        "reflected_exponential:b=-2", "laplace2:m=1"}) {
    const UniformityReport r = check_uniform_characterization(D(s));
    EXPECT_TRUE(r.uniform) << s;
    EXPECT_LT(r.max_deviation, 1e-9) << s;
  }
  EXPECT_FALSE(check_uniform_characterization(D("normal")).uniform);
  EXPECT_FALSE(check_uniform_characterization(D("exponential:rate=2")).uniform);
}

TEST(PdfRelatedCdf, MonotoneInverse) {
  const Distribution p = D("paretotype");
  for (double q : {0.1, 0.5, 0.9}) {
    const double y = monotone_pdf_related_inverse(p, q);
    EXPECT_NEAR(pdf_related_cdf(p, y), 1.0 - q, 1e-10);
  }
  const Distribution r = D("reflected_exponential");
  EXPECT_NEAR(pdf_related_cdf(r, monotone_pdf_related_inverse(r, 0.3)), 0.3, 1e-10);
  EXPECT_EQ(code_of([] { monotone_pdf_related_inverse(D("normal"), 0.5); }),
            ErrorCode::kNotMonotone);
}

TEST(PdfRelatedQuantiles, SymmetricTriangularAtHalf) {
  const auto [lo, hi] = pdf_related_quantiles(D("symmetric_triangular"), 0.5);
  EXPECT_NEAR(lo, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(hi, std::sqrt(0.5), 1e-12);
  EXPECT_EQ(code_of([] { pdf_related_quantiles(D("weibull:k=2"), 0.5); }),
            ErrorCode::kNotSymmetricUnimodal);
}

TEST(PdfRelatedQuantiles, InvertTheCdf) {
  const Distribution n = D("normal:sigma=2");
  for (double u : {0.1, 0.3, 0.8}) {
    const auto [lo, hi] = pdf_related_quantiles(n, u);
    EXPECT_NEAR(pdf_related_cdf(n, lo), u, 1e-10);
    EXPECT_NEAR(pdf_related_cdf(n, hi), 1.0 - u, 1e-10);
  }
}

TEST(PdfRelatedLaw, MonotoneAndRoundTrip) {
  for (const char* s : {"normal", "weibull:k=2", "weibull:k=0.7", "paretotype",
                        "parabolic:b=0.3", "cauchy", "logistic:s=2", "triangular_abs:sign=-1"}) {
    const PdfRelatedLaw law{D(s)};
    double prev = -1.0;
    for (int i = 1; i < 100; ++i) {
      const double u = i / 100.0;
      const double y = law.quantile(u);
      EXPECT_GE(y, prev) << s;
      prev = y;
      EXPECT_NEAR(law.cdf(y), u, 1e-8) << s << " u=" << u;
    }
  }
}

TEST(PdfRelatedLaw, AtomForConstantDensity) {
  const PdfRelatedLaw law{D("uniform:a=0,b=4")};
  EXPECT_EQ(law.kind(), PdfRelatedLaw::Kind::kAtom);
  EXPECT_DOUBLE_EQ(law.atom_location(), 0.25);
  EXPECT_EQ(law.cdf(0.2), 0.0);
  EXPECT_EQ(law.cdf(0.25), 1.0);
  EXPECT_DOUBLE_EQ(law.quantile(0.6), 0.25);
}

TEST(PdfRelatedLaw, DensityMatchesFiniteDifference) {
  const PdfRelatedLaw law{D("normal")};
  for (double u : {0.2, 0.5, 0.8}) {
    const double y = law.quantile(u);
    const double h = 1e-6;
    const double fd = (law.cdf(y + h) - law.cdf(y - h)) / (2 * h);
    EXPECT_NEAR(law.density_at_quantile(u), fd, 1e-4 * fd);
  }
}

TEST(PdfRelatedCurve, WritesHeaderAndRows) {
  std::ostringstream os;
  write_pdf_related_curve(os, D("exponential"), 5);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "y,K");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

}  // namespace
}  // namespace pdfrel
