#include <random>

#include <gtest/gtest.h>

#include "hecke/json_io.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/parse.hpp"
#include "hecke/rational_fn.hpp"
#include "hecke/series.hpp"
#include "hecke/spherical.hpp"

using namespace hecke;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
RationalFn F(const char* s) { return parse_rf(s); }

MultiPoly random_poly(std::mt19937& rng, int nterms)
{
    const char* names[] = {"x1", "x2", "p", "X"};
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5), v(0, 3);
    std::vector<Term> ts;
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        for (int k = 0; k < 2; ++k) {
            std::size_t idx = VarTable::canonical().index(names[v(rng)]);
            m.set(idx, m[idx] + e(rng));
        }
        int cc = c(rng);
        ts.push_back({m, Rational(cc == 0 ? 1 : cc)});
    }
    return MultiPoly::from_terms(ts);
}
} // namespace

TEST(Rational, Normalization)
{
    Rational a(6, -4);
    EXPECT_EQ(a.num_str(), "-3");
    EXPECT_EQ(a.den_str(), "2");
    EXPECT_TRUE(Rational(0, 7).is_zero());
    EXPECT_EQ(Rational(0, -7).den_str(), "1");
    EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, PromotesToBigWithoutLoss)
{
    Rational x(std::int64_t(1) << 62);
    Rational y = x * x * x;
    EXPECT_EQ(y.to_string(), "98079714615416886934934209737619787751599303819750539264");
    EXPECT_EQ(y / x / x, x);
    EXPECT_EQ(Rational::parse("-12/18"), Rational(-2, 3));
}

TEST(MultiPoly, AddCancels)
{
    EXPECT_TRUE((P("1 - x1") + P("x1")).is_one());
    EXPECT_EQ(MultiPoly() + P("x1 p"), P("p x1"));
    EXPECT_EQ(P("p x1") + P("x1"), P("(p + 1) x1"));
}

TEST(MultiPoly, Multiply)
{
    EXPECT_EQ(P("(1 - x1)(1 + x1)"), P("1 - x1^2"));
    EXPECT_TRUE((P("x1^-1") * P("x1")).is_one());
    MultiPoly d = P("(1 - x0 X)(1 - x0 x1 X)(1 - x0 x2 X)(1 - x0 x1 x2 X)");
    EXPECT_EQ(d.coeff_in("X", 1), -P("x0 (1 + x1)(1 + x2)"));
    EXPECT_EQ(d.degree_in("X"), 4);
}

TEST(MultiPoly, ExactDivision)
{
    EXPECT_EQ(P("1 - x1^2 x2^2").exact_div(P("1 - x1 x2")), P("1 + x1 x2"));
    EXPECT_FALSE(P("1 - x1^2").try_exact_div(P("1 - x2")).has_value());
    try {
        P("1 - x1^2").exact_div(P("1 - x2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_divisible);
    }
}

TEST(MultiPoly, DivisionRoundTrip)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(rng, 5), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).exact_div(b), a);
    }
}

TEST(MultiPoly, RingAxiomsOnRandomInput)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(MultiPoly, Substitute)
{
    EXPECT_EQ(P("x0^2 x1").substitute({{"x0", P("x0 y0")}}), P("x0^2 y0^2 x1"));
    MultiPoly f = P("1 + x1 x2^3");
    EXPECT_EQ(f.substitute({{"x1", P("x1")}}), f);
    EXPECT_EQ(P("x1^-2").substitute({{"x1", P("2 x2")}}), P("x2^-2 / 4"));
}

TEST(MultiPoly, CanonicalOrderIndependentOfConstruction)
{
    MultiPoly a = P("x1 + x2^2 + 3 p");
    MultiPoly b = P("3 p") + P("x2^2") + P("x1");
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(MultiPoly, JsonShape)
{
    json j = to_json(P("3 x1^2 / p"));
    EXPECT_EQ(j["vars"], json::parse(R"(["p","x1"])"));
    EXPECT_EQ(j["terms"][0]["m"], json::parse(R"({"p":-1,"x1":2})"));
    EXPECT_EQ(j["terms"][0]["n"], "3");
    EXPECT_EQ(j["terms"][0]["d"], "1");
}

TEST(RationalFn, Arithmetic)
{
    EXPECT_TRUE(rf_equal(F("1/(1 - x1)") + F("-x1/(1 - x1)"), RationalFn(1)));
    RationalFn a = F("(1 + x2)/(1 - x1)");
    EXPECT_TRUE(rf_equal(a * (RationalFn(1) / a), RationalFn(1)));
}

TEST(RationalFn, Equality)
{
    EXPECT_TRUE(rf_equal(F("1/(1 - x1)"), F("(1 + x1)/(1 - x1^2)")));
    EXPECT_FALSE(rf_equal(F("1/(1 - x1)"), F("1/(1 - x2)")));
}

TEST(RationalFn, DenominatorSign)
{
    RationalFn f = F("1/(x1 - 1)");
    EXPECT_GT(f.den().leading().c.sign(), 0);
    EXPECT_TRUE(rf_equal(f, F("-1/(1 - x1)")));
    EXPECT_THROW(RationalFn(P("1"), MultiPoly()), Error);
}

TEST(RationalFn, ReduceKnownFactors)
{
    RationalFn f = F("((1 - x1)(1 - x0 X)) / ((1 - x1)(1 - x0 x1 X))");
    RationalFn r = f.reduce_known_factors({P("1 - x1")});
    EXPECT_EQ(r.den_factor_count(), 1);
    EXPECT_TRUE(rf_equal(r, F("(1 - x0 X)/(1 - x0 x1 X)")));
    RationalFn g = F("(1 - x0 X)/(1 - x0 x1 X)");
    EXPECT_EQ(g.reduce_known_factors({P("1 - x1")}).to_string(), g.to_string());
}

TEST(Series, Geometric)
{
    auto s = series_expand(F("1/(1 - x0 X)"), "X", 3);
    ASSERT_EQ(s.size(), 4u);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(s[static_cast<std::size_t>(i)], P("x0").pow(i));
}

TEST(Series, GenusTwoLinearCoefficient)
{
    auto ctx = make_context(2, 'x');
    auto s = series_expand(andrianov_series_genus2(ctx), "X", 1);
    EXPECT_EQ(s[1], P("x0 (1 + x1 + x2 + x1 x2)"));
}

TEST(Series, RejectsNonUnitOrigin)
{
    try {
        series_expand(F("1/(1 + x1 - X)"), "X", 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::denominator_not_unit_at_origin);
    }
}

TEST(Parse, RejectsGarbage)
{
    EXPECT_THROW(P("x1 +"), Error);
    EXPECT_THROW(P("zz"), Error);
}
