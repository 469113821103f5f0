#include <gtest/gtest.h>

#include <cmath>

#include "pdfrel/distribution.hpp"
#include "pdfrel/error.hpp"
#include "pdfrel/law.hpp"
#include "pdfrel/orders.hpp"

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

GridConfig small_grid() {
  GridConfig g;
  g.n_points = 199;
  return g;
}

const char* const kPositive[] = {"exponential", "exponential:rate=0.5", "weibull:k=2",
                                 "weibull:k=0.7,lambda=2", "paretotype", "parabolic:b=0.25"};

TEST(Orders, Names) {
  for (OrderKind k : {OrderKind::kSt, OrderKind::kDisp, OrderKind::kConvex, OrderKind::kStar,
                      OrderKind::kKurtosis}) {
    EXPECT_EQ(parse_order(order_name(k)), k);
  }
  EXPECT_EQ(code_of([] { parse_order("lr"); }), ErrorCode::kInvalidArgument);
}

TEST(Orders, Reflexive) {
  for (const char* s : kPositive) {
    const Distribution d = D(s);
    for (OrderKind k : {OrderKind::kSt, OrderKind::kDisp, OrderKind::kConvex, OrderKind::kStar}) {
      EXPECT_TRUE(check_order(k, d, d, small_grid()).holds) << s << " " << order_name(k);
    }
  }
  const Distribution n = D("normal");
  EXPECT_TRUE(check_order(OrderKind::kKurtosis, n, n, small_grid()).holds);
}

TEST(Orders, ScaleFamilies) {
  const Distribution e1 = D("exponential");
  const Distribution e2 = D("exponential:rate=0.5");
  auto st = check_order(OrderKind::kSt, e1, e2, small_grid());
  EXPECT_TRUE(st.holds);
  EXPECT_FALSE(st.first_violation);
  auto back = check_order(OrderKind::kSt, e2, e1, small_grid());
  EXPECT_FALSE(back.holds);
  ASSERT_TRUE(back.first_violation);
  EXPECT_GT(back.first_violation->lhs, back.first_violation->rhs);
  EXPECT_LT(back.margin, 0.0);
  EXPECT_TRUE(check_order(OrderKind::kDisp, e1, e2, small_grid()).holds);
  EXPECT_FALSE(check_order(OrderKind::kDisp, e2, e1, small_grid()).holds);
  // Scale changes are star- and convex-equivalent.
  EXPECT_TRUE(check_order(OrderKind::kStar, e2, e1, small_grid()).holds);
  EXPECT_TRUE(check_order(OrderKind::kConvex, e2, e1, small_grid()).holds);
}

TEST(Orders, WeibullShapeChain) {
  const Distribution w1 = D("weibull:k=3");
  const Distribution w2 = D("weibull:k=1");
  EXPECT_TRUE(check_order(OrderKind::kConvex, w1, w2, small_grid()).holds);
  EXPECT_TRUE(check_order(OrderKind::kStar, w1, w2, small_grid()).holds);
  EXPECT_FALSE(check_order(OrderKind::kConvex, w2, w1, small_grid()).holds);
}

TEST(Orders, Kurtosis) {
  const Distribution n = D("normal");
  const Distribution l = D("logistic");
  const Distribution c = D("cauchy");
  EXPECT_TRUE(check_order(OrderKind::kKurtosis, n, l, small_grid()).holds);
  EXPECT_TRUE(check_order(OrderKind::kKurtosis, l, c, small_grid()).holds);
  EXPECT_FALSE(check_order(OrderKind::kKurtosis, c, n, small_grid()).holds);
  EXPECT_EQ(code_of([&] { check_order(OrderKind::kKurtosis, D("weibull:k=2"), n); }),
            ErrorCode::kPreconditionViolated);
}

TEST(Orders, Preconditions) {
  EXPECT_EQ(code_of([] { check_order(OrderKind::kStar, D("normal"), D("exponential")); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([] { check_order(OrderKind::kConvex, D("uniform"), D("exponential")); }),
            ErrorCode::kPreconditionViolated);
}

TEST(Orders, StochasticMatchesPhiAboveDiagonal) {
  for (const char* a : kPositive) {
    for (const char* b : kPositive) {
      const Distribution x = D(a);
      const Distribution y = D(b);
      const bool st = check_order(OrderKind::kSt, x, y, small_grid()).holds;
      const MappingReport m = check_mapping_conditions(x, y, small_grid());
      EXPECT_EQ(st, m.phi_geq_x) << a << " vs " << b;
      const bool disp = check_order(OrderKind::kDisp, x, y, small_grid()).holds;
      EXPECT_EQ(disp, m.phi_slope_geq_1) << a << " vs " << b;
    }
  }
}

TEST(Orders, StarIsDispersiveOnLogScale) {
  for (const char* a : kPositive) {
    for (const char* b : kPositive) {
      const Distribution x = D(a);
      const Distribution y = D(b);
      const bool star = check_order(OrderKind::kStar, x, y, small_grid()).holds;
      const bool log_disp = check_order(OrderKind::kDisp, law_of_log(law_of(x)),
                                        law_of_log(law_of(y)), small_grid())
                                .holds;
      EXPECT_EQ(star, log_disp) << a << " vs " << b;
    }
  }
}

TEST(Orders, DispersiveImpliesReversedStochasticOnDensity) {
  for (const char* a : kPositive) {
    for (const char* b : kPositive) {
      const Distribution x = D(a);
      const Distribution y = D(b);
      if (!check_order(OrderKind::kDisp, x, y, small_grid()).holds) continue;
      EXPECT_TRUE(check_order(OrderKind::kSt, law_of_pdf_related(y), law_of_pdf_related(x),
                              small_grid())
                      .holds)
          << a << " vs " << b;
    }
  }
}

TEST(Mapping, Phi) {
  EXPECT_NEAR(mapping_phi(D("exponential"), D("exponential:rate=2"), 1.0), 0.5, 1e-12);
  EXPECT_NEAR(mapping_phi(D("exponential"), D("paretotype"), std::log(2.0)), 1.0, 1e-12);
  EXPECT_EQ(code_of([] { mapping_phi(D("exponential"), D("paretotype"), -1.0); }),
            ErrorCode::kXOutOfSupport);
}

TEST(Mapping, Conditions) {
  const MappingReport a = check_mapping_conditions(D("exponential"), D("exponential:rate=0.5"));
  EXPECT_TRUE(a.phi_geq_x);
  EXPECT_TRUE(a.phi_slope_geq_1);
  const MappingReport b = check_mapping_conditions(D("exponential:rate=0.5"), D("exponential"));
  EXPECT_FALSE(b.phi_geq_x);
  EXPECT_FALSE(b.phi_slope_geq_1);
  EXPECT_TRUE(b.first_phi_violation);
  EXPECT_TRUE(b.first_slope_violation);
}

TEST(Views, AbsCenteredAndRearranged) {
  const LawView a = law_of_abs_centered(D("normal"));
  EXPECT_NEAR(a.quantile(0.6826894921370859), 1.0, 1e-9);
  const LawView r = law_of_rearranged(D("normal"));
  EXPECT_NEAR(r.quantile(0.6826894921370859), 2.0, 1e-9);
  EXPECT_NEAR(r.cdf(2.0), 0.6826894921370859, 1e-10);
}

}  // namespace
}  // namespace pdfrel
