#include <gtest/gtest.h>

#include "hecke/delta_series.hpp"
#include "hecke/json_io.hpp"
#include "hecke/parse.hpp"
#include "hecke/series.hpp"
#include "hecke/spherical.hpp"

using namespace hecke;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
RationalFn F(const char* s) { return parse_rf(s); }
Monomial M(const char* s) { return P(s).leading().m; }
} // namespace

TEST(PartialFractions, TwoPoles)
{
    RationalFn f = F("1/((1 - x1 X)(1 - x2 X))");
    DeltaSeries d = partial_fractions(f, "X");
    ASSERT_EQ(d.size(), 2u);
    ASSERT_NE(d.coefficient(M("x1")), nullptr);
    EXPECT_TRUE(rf_equal(*d.coefficient(M("x1")), F("x1/(x1 - x2)")));
    EXPECT_TRUE(rf_equal(*d.coefficient(M("x2")), F("-x2/(x1 - x2)")));
    // first ten coefficients, two independent ways
    auto s = series_expand(f, "X", 9);
    for (int k = 0; k <= 9; ++k) EXPECT_TRUE(rf_equal(delta_eval(d, k), RationalFn(s[static_cast<std::size_t>(k)]))) << k;
}

TEST(PartialFractions, SinglePole)
{
    DeltaSeries d = partial_fractions(F("1/(1 - x1 X)"), "X");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_TRUE(rf_equal(*d.coefficient(M("x1")), RationalFn(1)));
    EXPECT_TRUE(rf_equal(resum(d, "X"), F("1/(1 - x1 X)")));
}

TEST(PartialFractions, GenusTwoBases)
{
    auto ctx = make_context(2, 'x');
    DeltaSeries d = genus2_delta_form(ctx);
    ASSERT_EQ(d.size(), 4u);
    for (const char* b : {"x0", "x0 x1", "x0 x2", "x0 x1 x2"}) EXPECT_NE(d.coefficient(M(b)), nullptr) << b;
    EXPECT_TRUE(rf_equal(*d.coefficient(M("x0")), F("(p - x1 x2)/(p (1 - x1)(1 - x2)(1 - x1 x2))")));
    EXPECT_TRUE(rf_equal(resum(d, "X"), andrianov_series_genus2(ctx)));
}

TEST(PartialFractions, RepeatedPoleRejected)
{
    try {
        partial_fractions(F("1/((1 - x1 X)(1 - x1 X))"), "X");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::repeated_base);
    }
}

TEST(DeltaProduct, Bases)
{
    DeltaSeries a = partial_fractions(F("1/(1 - x1 X)"), "X");
    DeltaSeries b = partial_fractions(F("1/(1 - y1 X)"), "X");
    DeltaSeries ab = delta_product(a, b);
    ASSERT_EQ(ab.size(), 1u);
    EXPECT_NE(ab.coefficient(M("x1 y1")), nullptr);

    auto cx = make_context(1, 'x'), cy = make_context(1, 'y');
    DeltaSeries g = delta_product(genus1_delta_form(cx), genus1_delta_form(cy));
    ASSERT_EQ(g.size(), 4u);
    for (const char* s : {"x0 y0", "x0 y0 x1", "x0 y0 y1", "x0 y0 x1 y1"}) EXPECT_NE(g.coefficient(M(s)), nullptr) << s;
}

TEST(DeltaProduct, TermwiseEvaluation)
{
    auto cx = make_context(2, 'x'), cy = make_context(2, 'y');
    DeltaSeries dx = genus2_delta_form(cx), dy = genus2_delta_form(cy);
    DeltaSeries d = delta_product(dx, dy);
    EXPECT_EQ(d.size(), 16u);
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(rf_equal(delta_eval(d, k), delta_eval(dx, k) * delta_eval(dy, k)));
}

TEST(DeltaPower, IdentityAndSquare)
{
    auto ctx = make_context(2, 'x');
    DeltaSeries d = genus2_delta_form(ctx);
    EXPECT_TRUE(rf_equal(resum(delta_power_substitute(d, 1), "X"), resum(d, "X")));
    DeltaSeries d2 = delta_power_substitute(d, 2);
    for (int k = 0; k <= 4; ++k) EXPECT_TRUE(rf_equal(delta_eval(d2, k), delta_eval(d, 2 * k)));
}

TEST(DeltaEval, LowOrders)
{
    auto ctx = make_context(2, 'x');
    DeltaSeries d = genus2_delta_form(ctx);
    EXPECT_TRUE(rf_equal(delta_eval(d, 0), RationalFn(1)));
    EXPECT_TRUE(rf_equal(delta_eval(d, 1), F("x0 (1 + x1)(1 + x2)")));
    auto s = series_expand(andrianov_series_genus2(ctx), "X", 8);
    for (int k = 2; k <= 8; ++k) EXPECT_TRUE(rf_equal(delta_eval(d, k), RationalFn(s[static_cast<std::size_t>(k)]))) << k;
    EXPECT_THROW(delta_eval(d, -1), Error);
}

TEST(DeltaSeries, JsonInBaseOrder)
{
    auto ctx = make_context(1, 'x');
    json j = to_json(genus1_delta_form(ctx));
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["base"], json::parse(R"({"x0":1,"x1":1})"));
    EXPECT_EQ(j["terms"][1]["base"], json::parse(R"({"x0":1})"));
}
