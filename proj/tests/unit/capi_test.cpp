#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "pdfrel/pdfrel.h"

namespace {

struct Dist {
  explicit Dist(const char* spec) { EXPECT_EQ(pdfrel_dist_create(spec, &d), PDFREL_OK); }
  ~Dist() { pdfrel_dist_destroy(d); }
  pdfrel_dist* d = nullptr;
};

TEST(CApi, CreateAndDescribe) {
  Dist e("exponential:rate=2");
  ASSERT_NE(e.d, nullptr);
  EXPECT_STREQ(pdfrel_dist_shape(e.d), "StrictlyDecreasing");
  EXPECT_EQ(pdfrel_dist_symmetric(e.d), 0);
  double lo = 1, hi = 0;
  pdfrel_dist_support(e.d, &lo, &hi);
  EXPECT_EQ(lo, 0.0);
  EXPECT_TRUE(std::isinf(hi));
  char* spec = nullptr;
  ASSERT_EQ(pdfrel_dist_spec(e.d, &spec), PDFREL_OK);
  EXPECT_EQ(std::string(spec).rfind("exponential", 0), 0u);
  pdfrel_free_string(spec);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  pdfrel_dist* d = nullptr;
  EXPECT_EQ(pdfrel_dist_create("parabolic:b=0.9", &d), PDFREL_E_PARAM_OUT_OF_RANGE);
  EXPECT_EQ(d, nullptr);
  EXPECT_STRNE(pdfrel_last_error(), "");
  EXPECT_STREQ(pdfrel_status_name(PDFREL_E_PARAM_OUT_OF_RANGE), "ParamOutOfRange");
  EXPECT_EQ(pdfrel_dist_create("nope", &d), PDFREL_E_UNKNOWN_FAMILY);
  EXPECT_EQ(pdfrel_dist_create(nullptr, &d), PDFREL_E_INVALID_ARGUMENT);
}

TEST(CApi, Eval) {
  Dist p("paretotype");
  double v = 0;
  ASSERT_EQ(pdfrel_eval(p.d, PDFREL_FN_PDF, 1.0, NAN, &v), PDFREL_OK);
  EXPECT_DOUBLE_EQ(v, 0.25);
  ASSERT_EQ(pdfrel_eval(p.d, PDFREL_FN_LOWER_INVERSE, 0.25, NAN, &v), PDFREL_OK);
  EXPECT_NEAR(v, 1.0, 1e-12);
  ASSERT_EQ(pdfrel_eval(p.d, PDFREL_FN_RESIDUAL_QUANTILE, 0.5, 1.0, &v), PDFREL_OK);
  EXPECT_NEAR(v, 2.0, 1e-12);
  EXPECT_EQ(pdfrel_eval(p.d, PDFREL_FN_QUANTILE, 1.5, NAN, &v), PDFREL_E_P_OUT_OF_RANGE);
  EXPECT_EQ(pdfrel_eval(p.d, PDFREL_FN_UPPER_INVERSE, 0.1, NAN, &v), PDFREL_E_NOT_UNIMODAL);
  EXPECT_EQ(pdfrel_eval(p.d, PDFREL_FN_MEAN_RESIDUAL, 1.0, 1.0, &v),
            PDFREL_E_INTEGRAL_DIVERGED);
}

TEST(CApi, Laws) {
  Dist n("normal");
  Dist p("paretotype");
  double v = 0;
  ASSERT_EQ(pdfrel_law_eval(p.d, PDFREL_LAW_KT, 3.0, 0.16, &v), PDFREL_OK);
  EXPECT_NEAR(v, 0.8, 1e-12);
  ASSERT_EQ(pdfrel_law_eval(n.d, PDFREL_LAW_GT, 0.0, 0.3520653267642995, &v), PDFREL_OK);
  EXPECT_NEAR(v, 0.3829249225480262, 1e-9);
  EXPECT_EQ(pdfrel_law_eval(n.d, PDFREL_LAW_K, NAN, 0.9, &v), PDFREL_E_Y_OUT_OF_RANGE);
  char c = 0;
  ASSERT_EQ(pdfrel_gt_case(n.d, -1.0, &c), PDFREL_OK);
  EXPECT_EQ(c, 'c');
}

TEST(CApi, Curve) {
  Dist p("parabolic:b=0.75");
  pdfrel_curve c{};
  ASSERT_EQ(pdfrel_curve_make(p.d, PDFREL_LAW_KT, 0.5, 50, &c), PDFREL_OK);
  EXPECT_EQ(c.count, 50u);
  EXPECT_STREQ(c.value_name, "Kt");
  for (size_t i = 1; i < c.count; ++i) EXPECT_GE(c.value[i], c.value[i - 1]);
  pdfrel_curve_free(&c);
}

TEST(CApi, Orders) {
  Dist a("exponential");
  Dist b("exponential:rate=0.5");
  pdfrel_grid g = pdfrel_grid_default();
  EXPECT_EQ(g.n_points, 999);
  g.n_points = 199;
  pdfrel_verdict v{};
  ASSERT_EQ(pdfrel_check_order(PDFREL_ORDER_ST, a.d, b.d, PDFREL_VIEW_X, &g, &v), PDFREL_OK);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(pdfrel_check_order(PDFREL_ORDER_ST, b.d, a.d, PDFREL_VIEW_X, nullptr, &v),
            PDFREL_OK);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(v.has_violation);
  double phi = 0;
  ASSERT_EQ(pdfrel_mapping_phi(a.d, b.d, 1.0, &phi), PDFREL_OK);
  EXPECT_NEAR(phi, 2.0, 1e-12);
  int geq = 0, slope = 0;
  ASSERT_EQ(pdfrel_mapping_conditions(a.d, b.d, &g, &geq, &slope), PDFREL_OK);
  EXPECT_TRUE(geq);
  EXPECT_TRUE(slope);
  Dist n("normal");
  EXPECT_EQ(pdfrel_check_order(PDFREL_ORDER_STAR, n.d, a.d, PDFREL_VIEW_X, &g, &v),
            PDFREL_E_PRECONDITION_VIOLATED);
}

TEST(CApi, Verify) {
  EXPECT_EQ(pdfrel_theorem_count(), 12u);
  Dist w("weibull:k=2");
  const pdfrel_dist* ds[] = {w.d};
  char* json = nullptr;
  ASSERT_EQ(pdfrel_verify("ifr_bound", ds, 1, 1.2, 1.0, 0.0, nullptr, &json), PDFREL_OK);
  const std::string s(json);
  pdfrel_free_string(json);
  EXPECT_NE(s.find("\"implication_respected\":true"), std::string::npos) << s;
  EXPECT_EQ(pdfrel_verify("bogus", ds, 1, NAN, 1.0, 0.0, nullptr, &json),
            PDFREL_E_UNKNOWN_THEOREM);
}

TEST(CApi, Info) {
  Dist e("exponential");
  pdfrel_info info{};
  ASSERT_EQ(pdfrel_info_compute(e.d, 2.0, &info), PDFREL_OK);
  EXPECT_NEAR(info.entropy, 1.0, 1e-14);
  EXPECT_NEAR(info.varentropy, 1.0, 1e-14);
  EXPECT_TRUE(info.closed_form);
  EXPECT_TRUE(info.has_residual);
  EXPECT_NEAR(info.residual_entropy, 1.0, 1e-9);
  double r = 0;
  ASSERT_EQ(pdfrel_weibull_ratio(1.0, 0.6, 0.3, 0.5, &r), PDFREL_OK);
  EXPECT_NEAR(r, 2.0, 1e-14);
  EXPECT_EQ(pdfrel_weibull_ratio(1.0, 0.3, 0.6, 0.5, &r), PDFREL_E_BAD_UV_ORDER);
}

TEST(CApi, Oracle) {
  Dist n("normal");
  pdfrel_oracle_result r{};
  ASSERT_EQ(pdfrel_oracle(n.d, PDFREL_LAW_K, NAN, 50000, 42, 2, &r), PDFREL_OK);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.n, 50000u);
  EXPECT_LT(r.ks, r.band);
}

void count_cb(int, const char*, int pass, const char*, double, void* user) {
  *static_cast<int*>(user) += pass ? 1 : 0;
}

TEST(CApi, SelftestSubset) {
  const int only[] = {4};
  int passed = 0, failures = -1;
  ASSERT_EQ(pdfrel_selftest(only, 1, 1000, 42, count_cb, &passed, &failures), PDFREL_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(failures, 0);
}

}  // namespace
