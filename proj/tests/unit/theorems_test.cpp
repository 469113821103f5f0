#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/theorems.hpp"

namespace pdfrel {
namespace {

Distribution D(const char* s) { return Distribution::parse(s); }

GridConfig small_grid() {
  GridConfig g;
  g.n_points = 199;
  return g;
}

TheoremReport run(const char* name, std::vector<const char*> specs,
                  std::optional<double> t = std::nullopt) {
  std::vector<Distribution> ds;
  for (const char* s : specs) ds.push_back(D(s));
  TheoremInputs in = TheoremInputs::of(std::move(ds));
  in.t = t;
  return verify_theorem(name, in, small_grid());
}

ErrorCode code_of(const char* name, std::vector<const char*> specs,
                  std::optional<double> t = std::nullopt) {
  try {
    run(name, std::move(specs), t);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Theorems, NamesAreUniqueAndKnown) {
  const auto& names = theorem_names();
  EXPECT_EQ(names.size(), 12u);
  EXPECT_EQ(code_of("no_such_theorem", {"exponential"}), ErrorCode::kUnknownTheorem);
}

const char* const kPairs[][2] = {
    {"exponential", "exponential:rate=0.5"},
    {"weibull:k=2", "exponential"},
    {"exponential", "weibull:k=2"},
    {"weibull:k=3", "weibull:k=0.8"},
    {"exponential", "paretotype"},
    {"paretotype", "weibull:k=0.5"},
};

TEST(Theorems, PairwiseImplicationsRespected) {
  for (const char* name : {"star_comparison", "rearrangement_equivalence", "entropy_order",
                           "varentropy_order", "decreasing_convex_varentropy"}) {
    for (const auto& pair : kPairs) {
      try {
        const TheoremReport r = run(name, {pair[0], pair[1]});
        EXPECT_TRUE(r.implication_respected) << name << " " << pair[0] << " vs " << pair[1];
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated) << name;
      }
    }
  }
}

TEST(Theorems, SymmetricPairs) {
  for (const char* name : {"kurtosis_star", "oja", "kurtosis_varentropy"}) {
    for (auto [a, b] : {std::pair{"normal", "logistic"}, std::pair{"logistic", "cauchy"},
                        std::pair{"cauchy", "normal"}}) {
      const TheoremReport r = run(name, {a, b});
      EXPECT_TRUE(r.implication_respected) << name << " " << a << " vs " << b;
    }
  }
  EXPECT_TRUE(run("kurtosis_star", {"normal", "logistic"}).premise);
  EXPECT_FALSE(run("kurtosis_star", {"cauchy", "normal"}).premise);
}

TEST(Theorems, ReportJsonShape) {
  const TheoremReport r = run("star_comparison", {"weibull:k=3", "weibull:k=1"});
  const auto j = r.to_json();
  EXPECT_EQ(j.at("theorem"), "star_comparison");
  EXPECT_TRUE(j.at("premise").get<bool>());
  EXPECT_TRUE(j.at("conclusion").get<bool>());
  EXPECT_TRUE(j.at("implication_respected").get<bool>());
  EXPECT_TRUE(j.contains("kind"));
}

TEST(Theorems, IfrEntropy) {
  const TheoremReport w = run("ifr_entropy", {"weibull:k=2"});
  EXPECT_TRUE(w.premise);
  EXPECT_TRUE(w.conclusion);
  const TheoremReport p = run("ifr_entropy", {"paretotype"});
  EXPECT_EQ(p.details.at("hazard"), "decreasing");
  EXPECT_TRUE(p.implication_respected);
}

TEST(Theorems, IfrBoundNeedsAgeBeyondMode) {
  const TheoremReport r = run("ifr_bound", {"weibull:k=2"}, 1.2);
  EXPECT_TRUE(r.premise);
  EXPECT_TRUE(r.conclusion);
  EXPECT_NEAR(r.details.at("V_t").get<double>(), 0.6947, 5e-4);
  EXPECT_EQ(code_of("ifr_bound", {"weibull:k=2"}, 0.1), ErrorCode::kPreconditionViolated);
}

TEST(Theorems, ResidualVarentropyMonotonicity) {
  for (const char* s : {"weibull:k=2", "weibull:k=0.5", "exponential"}) {
    EXPECT_TRUE(run("residual_varentropy_monotonicity", {s}).implication_respected) << s;
  }
}

TEST(Theorems, AffineStarEquality) {
  TheoremInputs in = TheoremInputs::of({D("weibull:k=2")});
  in.a = 3.0;
  in.b = 0.5;
  const TheoremReport r = verify_theorem("affine_star_equality", in, small_grid());
  EXPECT_TRUE(r.implication_respected);
  EXPECT_LT(r.details.at("max_relative_deviation").get<double>(), 1e-7);
}

TEST(Ages, Grids) {
  const Distribution w = D("weibull:k=2");
  const auto a = decreasing_residual_ages(w);
  ASSERT_EQ(a.size(), 12u);
  for (double t : a) EXPECT_GE(t, w.mode());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_GT(a[i], a[i - 1]);
  const auto q = quantile_ages(w);
  EXPECT_EQ(q.size(), 12u);
  EXPECT_NEAR(w.cdf(q.front()), 0.05, 1e-12);
}

TEST(Hazard, Trends) {
  EXPECT_EQ(hazard_trend(D("weibull:k=2"), std::nullopt), HazardTrend::kIncreasing);
  EXPECT_EQ(hazard_trend(D("weibull:k=0.5"), std::nullopt), HazardTrend::kDecreasing);
  EXPECT_EQ(hazard_trend(D("exponential"), std::nullopt), HazardTrend::kConstant);
  EXPECT_EQ(hazard_trend(D("paretotype"), std::nullopt), HazardTrend::kDecreasing);
}

}  // namespace
}  // namespace pdfrel
