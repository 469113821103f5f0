#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/oracle.hpp"

namespace pdfrel {
namespace {

Distribution D(const char* s) { return Distribution::parse(s); }

TEST(Stream, UniformsAreOpenUnit) {
  const auto u = uniform_stream(200000, 7);
  for (double x : u) {
    ASSERT_GT(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
  const double mean = std::accumulate(u.begin(), u.end(), 0.0) / u.size();
  EXPECT_NEAR(mean, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / u.size()));
}

TEST(Stream, DeterministicAndWorkerIndependent) {
  const auto a = uniform_stream(150000, 11, 1);
  const auto b = uniform_stream(150000, 11, 1);
  const auto c = uniform_stream(150000, 11, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, uniform_stream(150000, 12, 1));
  // A prefix of a longer stream is the shorter stream.
  const auto d = uniform_stream(1000, 11, 1);
  EXPECT_TRUE(std::equal(d.begin(), d.end(), a.begin()));
}

TEST(Sample, ExponentialMean) {
  const std::size_t n = 200000;
  const SampleBatch s = sample(D("exponential"), n, 42);
  ASSERT_EQ(s.values.size(), n);
  const double mean = std::accumulate(s.values.begin(), s.values.end(), 0.0) / n;
  EXPECT_NEAR(mean, 1.0, 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST(Sample, ResidualExceedsNothing) {
  const SampleBatch s = sample_residual(D("normal"), 1.0, 10000, 3);
  for (double x : s.values) ASSERT_GT(x, 0.0);
}

TEST(Ks, DetectsMismatch) {
  const Distribution e = D("exponential");
  const Distribution e2 = D("exponential:rate=2");
  const SampleBatch s = sample(e, 100000, 5);
  EXPECT_LT(ks_distance(s.values, [&](double x) { return e.cdf(x); }), ks_band(100000));
  EXPECT_GT(ks_distance(s.values, [&](double x) { return e2.cdf(x); }), 0.1);
}

TEST(Ks, TiesAreJumps) {
  std::vector<double> v(10, 1.0);
  EXPECT_NEAR(ks_distance(v, [](double x) { return x < 1.0 ? 0.0 : 1.0; }), 0.0, 1e-15);
}

TEST(Oracle, LawsAgreeWithDraws) {
  const std::size_t n = 100000;
  EXPECT_TRUE(run_oracle(D("normal"), OracleLaw::kK, std::nullopt, n).pass);
  EXPECT_TRUE(run_oracle(D("paretotype"), OracleLaw::kKt, 3.0, n).pass);
  EXPECT_TRUE(run_oracle(D("normal"), OracleLaw::kGt, -1.0, n).pass);
  EXPECT_TRUE(run_oracle(D("logistic"), OracleLaw::kL, std::nullopt, n).pass);
  EXPECT_TRUE(run_oracle(D("uniform"), OracleLaw::kL, std::nullopt, n).pass);
  const OracleResult r = run_oracle(D("exponential"), OracleLaw::kX, std::nullopt, n, 9);
  EXPECT_EQ(r.n, n);
  EXPECT_EQ(r.seed, 9u);
  EXPECT_DOUBLE_EQ(r.band, ks_band(n));
}

TEST(Oracle, NeedsAgeForResidualLaws) {
  try {
    run_oracle(D("normal"), OracleLaw::kKt, std::nullopt, 1000);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Oracle, IcMoments) {
  const IcMoments m = ic_moments(D("normal"), 400000, 1);
  EXPECT_NEAR(m.mean, 0.5 * std::log(2 * 3.14159265358979 * std::exp(1.0)), 5 * m.se_mean);
  EXPECT_NEAR(m.variance, 0.5, 5 * m.se_variance);
}

TEST(Oracle, LawNames) {
  for (OracleLaw l : {OracleLaw::kX, OracleLaw::kK, OracleLaw::kKt, OracleLaw::kGt,
                      OracleLaw::kL}) {
    EXPECT_EQ(parse_oracle_law(oracle_law_name(l)), l);
  }
}

}  // namespace
}  // namespace pdfrel
