#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/inverses.hpp"

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

TEST(LowerInverse, FrozenValues) {
  EXPECT_NEAR(lower_inverse(D("paretotype"), 0.25), 1.0, 1e-12);
  EXPECT_NEAR(lower_inverse(D("laplace2"), std::exp(-2.0)), -1.0, 1e-12);
  EXPECT_NEAR(lower_inverse(D("exponential"), std::exp(-1.0)), 1.0, 1e-12);
}

TEST(UpperInverse, FrozenValues) {
  const Distribution n = D("normal");
  EXPECT_NEAR(upper_inverse(n, n.pdf(1.0)), 1.0, 1e-10);
  const Distribution p = D("parabolic:b=0.75");
  EXPECT_NEAR(upper_inverse(p, p.pdf(1.0)), 1.0, 1e-10);
  EXPECT_NEAR(upper_inverse(p, 0.75), 1.0, 1e-10);
}

TEST(UpperInverse, RejectsMonotone) {
  EXPECT_EQ(code_of([] { upper_inverse(D("exponential"), 0.5); }), ErrorCode::kNotUnimodal);
}

TEST(Inverses, RejectUnattainedLevels) {
  EXPECT_EQ(code_of([] { lower_inverse(D("normal"), 0.5); }), ErrorCode::kYNotAttained);
  EXPECT_EQ(code_of([] { lower_inverse(D("exponential"), -0.1); }), ErrorCode::kYNotAttained);
  EXPECT_EQ(code_of([] { lower_inverse(D("uniform"), 1.0); }), ErrorCode::kDegenerateLaw);
}

TEST(Inverses, RoundTripOnBothBranches) {
  for (const char* s : {"normal:mu=1,sigma=3", "logistic", "cauchy", "weibull:k=2",
                        "weibull:k=3.5,lambda=2", "parabolic:b=0.25", "laplace2:m=-2",
                        "symmetric_triangular", "truncated_normal:mu=0.3,lo=-1,hi=2"}) {
    const Distribution d = D(s);
    const double m = d.mode();
    for (double p : {0.02, 0.2, 0.45, 0.7, 0.97}) {
      const double x = d.quantile(p);
      const double y = d.pdf(x);
      if (!(y > 0.0) || !im_plus(d).contains(y)) continue;
      if (x < m) {
        const double back = lower_inverse(d, y);
        EXPECT_NEAR(d.pdf(back), y, 1e-9 * y) << s << " p=" << p;
        EXPECT_LE(back, m) << s;
      } else if (x > m) {
        const double back = upper_inverse(d, y);
        EXPECT_NEAR(d.pdf(back), y, 1e-9 * y) << s << " p=" << p;
        EXPECT_GE(back, m) << s;
      }
    }
  }
}

TEST(Inverses, ClampedFormsReturnOuterEndpoint) {
  const Distribution d = D("truncated_normal:mu=0.5,lo=0,hi=1");
  const double low = d.endpoint_density(Endpoint::kLower);
  EXPECT_EQ(clamped_lower_inverse(d, 0.5 * low), 0.0);
  EXPECT_EQ(clamped_upper_inverse(d, 0.5 * low), 1.0);
}

TEST(ImPlus, Ranges) {
  const ImPlusRange e = im_plus(D("exponential:rate=2"));
  EXPECT_EQ(e.lo, 0.0);
  EXPECT_DOUBLE_EQ(e.hi, 2.0);
  EXPECT_TRUE(e.contains(1.0));
  EXPECT_EQ(e.contains(2.0), !e.hi_open);
  EXPECT_FALSE(e.contains(0.0));
  const ImPlusRange u = im_plus(D("uniform:a=0,b=4"));
  EXPECT_TRUE(u.atom);
  EXPECT_TRUE(u.contains(0.25));
}

}  // namespace
}  // namespace pdfrel
