#include <gtest/gtest.h>

#include "hecke/identities.hpp"
#include "hecke/parse.hpp"
#include "hecke/spherical.hpp"

using namespace hecke;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
RationalFn F(const char* s) { return parse_rf(s); }
} // namespace

TEST(GeneratorImages, GenusTwo)
{
    auto ctx = make_context(2, 'x');
    auto im = omega_generator_images(ctx);
    EXPECT_TRUE(rf_equal(im.at("T"), F("x0 (1 + x1)(1 + x2)")));
    EXPECT_TRUE(rf_equal(im.at("P"), F("x0^2 x1 x2 / p^3")));
    EXPECT_TRUE(rf_equal(im.at("T1"), F("x0^2 ((x1^2 x2 + x1 x2^2) p^2 + x1 x2 p^2 - x1 x2 + (x1 + x2) p^2) / p^3")));
}

TEST(GeneratorImages, GenusOne)
{
    auto ctx = make_context(1, 'x');
    auto im = omega_generator_images(ctx);
    EXPECT_TRUE(rf_equal(im.at("T"), F("x0 (1 + x1)")));
    EXPECT_TRUE(rf_equal(im.at("P"), F("x0^2 x1 / p")));
}

TEST(GeneratorImages, AllInvariant)
{
    for (int g : {1, 2}) {
        auto ctx = make_context(g, 'x');
        for (const auto& [name, f] : omega_images(ctx)) EXPECT_TRUE(weyl_invariant(ctx, f)) << name;
    }
}

TEST(Andrianov, LowCoefficients)
{
    auto ctx = make_context(2, 'x');
    auto s = series_expand(andrianov_series_genus2(ctx), "X", 2);
    EXPECT_TRUE(s[0].is_one());
    EXPECT_EQ(s[1], P("x0 (1 + x1)(1 + x2)"));
    // h2 of the four spinor roots minus x0^2 x1 x2 / p
    std::vector<MultiPoly> r{P("x0"), P("x0 x1"), P("x0 x2"), P("x0 x1 x2")};
    MultiPoly h2;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i; j < r.size(); ++j) h2 += r[i] * r[j];
    EXPECT_EQ(s[2], h2 - P("x0^2 x1 x2 / p"));
}

TEST(Andrianov, PrintedForm)
{
    auto ctx = make_context(2, 'x');
    EXPECT_TRUE(rf_equal(andrianov_series_genus2(ctx), parse_rf(printed::andrianov_genus2(), ctx.vars)));
}

TEST(DeltaForm, NumeratorGroups)
{
    auto ctx = make_context(2, 'x');
    DeltaSeries d = genus2_delta_form(ctx);
    const char* den = " / (p (1 - x1)(1 - x2)(1 - x1 x2)(x1 - x2))";
    std::vector<std::pair<const char*, std::string>> groups{
        {"x0 x1", "-(1 - x1 x2)(p x1 - x2) x1"},
        {"x0 x2", "-(1 - x1 x2)(x1 - p x2) x2"},
        {"x0 x1 x2", "(1 - p x1 x2)(x1 - x2) x1 x2"},
        {"x0", "(p - x1 x2)(x1 - x2)"},
    };
    for (const auto& [base, num] : groups) {
        const RationalFn* c = d.coefficient(P(base).leading().m);
        ASSERT_NE(c, nullptr) << base;
        EXPECT_TRUE(rf_equal(*c, parse_rf("(" + num + ")" + den))) << base;
    }
}

TEST(GenusOne, DeltaForm)
{
    auto ctx = make_context(1, 'x');
    DeltaSeries d = genus1_delta_form(ctx);
    EXPECT_TRUE(rf_equal(delta_eval(d, 0), RationalFn(1)));
    EXPECT_TRUE(rf_equal(delta_eval(d, 1), F("x0 (1 + x1)")));
    EXPECT_TRUE(rf_equal(resum(d, "X"), F("1/((1 - x0 X)(1 - x0 x1 X))")));
}

TEST(PowerSeries, MatchesEvaluation)
{
    auto ctx = make_context(2, 'x');
    EXPECT_TRUE(rf_equal(power_series_closed_form(ctx, 1), andrianov_series_genus2(ctx)));
    RationalFn sq = power_series_closed_form(ctx, 2);
    EXPECT_TRUE(rf_equal(sq, F("(1 + x0^2 x1 X + x0^2 x2 X + 2 x0^2 x1 x2 X + x0^2 x1 x2^2 X + x0^2 x1^2 x2 X + x0^4 x1^2 x2^2 X^2)"
                               "(1 - x0^2 x1 x2 X / p) / ((1 - x0^2 x1^2 x2^2 X)(1 - x0^2 x1^2 X)(1 - x0^2 x2^2 X)(1 - x0^2 X))")));
    RationalFn cube = power_series_closed_form(ctx, 3);
    FactorList want;
    for (const char* f : {"1 - x0^3 X", "1 - x0^3 x1^3 X", "1 - x0^3 x2^3 X", "1 - x0^3 x1^3 x2^3 X"})
        detail::insert_factor(want, normalize_factor(P(f)).poly, 1);
    EXPECT_EQ(cube.den_factors(), want);
}

TEST(Weyl, Action)
{
    auto ctx = make_context(2, 'x');
    RationalFn t = F("x0 (1 + x1)(1 + x2)");
    EXPECT_TRUE(rf_equal(weyl_apply(ctx, WeylElement::inversion(1), t), t));
    RationalFn t1 = omega_generator_images(ctx).at("T1");
    EXPECT_TRUE(rf_equal(weyl_apply(ctx, WeylElement::transposition(1, 2), t1), t1));
    RationalFn bad = F("x0 x1");
    EXPECT_TRUE(rf_equal(weyl_apply(ctx, WeylElement::inversion(1), bad), F("x0")));
    EXPECT_FALSE(weyl_invariant(ctx, P("x0 x1")));
}

TEST(SpinorDenominator, Genus1And2)
{
    auto f1 = spinor_denominator(1, 'x');
    ASSERT_EQ(f1.size(), 2u);
    EXPECT_EQ(f1[0] * f1[1], P("(1 - x0 X)(1 - x0 x1 X)"));
    auto f2 = spinor_denominator(2, 'x');
    MultiPoly prod(VarTable::canonical(), Rational(1));
    for (const auto& f : f2) prod *= f;
    EXPECT_EQ(prod, andrianov_series_genus2(make_context(2, 'x')).den());
}

TEST(SpinorDenominator, GenusFourSubstitution)
{
    auto cx = make_context(2, 'x');
    auto rep = verify_conjecture_denominator(cx);
    EXPECT_TRUE(rep.equal);
    EXPECT_EQ(rep.lhs_factors, 16u);
    EXPECT_EQ(rep.rhs_factors, 16u);
    auto neg = verify_conjecture_denominator(cx, {{"u0", "x0 y0"}, {"u1", "x1"}, {"u2", "x2"}, {"u3", "x1"}, {"u4", "y2"}});
    EXPECT_FALSE(neg.equal);
}

TEST(Context, UnsupportedGenus)
{
    try {
        andrianov_series_genus2(make_context(1, 'x'));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unsupported_genus);
    }
}

TEST(Identities, HeckeShimura)
{
    auto rep = verify_shimura(make_context(2, 'x'), make_context(1, 'x'));
    EXPECT_TRUE(rep.genus2_identity);
    EXPECT_TRUE(rep.genus2_denominator_expands);
    EXPECT_TRUE(rep.genus2_numerator_maps);
    EXPECT_TRUE(rep.genus1_identity);
}

TEST(Identities, TotalHeckeFormula)
{
    auto rep = verify_total_hecke_formula(make_context(2, 'x'), 20);
    EXPECT_TRUE(rep.eval_matches_series);
    EXPECT_EQ(rep.checked_to, 20);
    EXPECT_TRUE(rep.first_form_equal);
    EXPECT_TRUE(rep.second_form_equal);
}

TEST(NumericMode, AgreesWithSymbolic)
{
    auto sym = make_context(2, 'x');
    auto num = make_context(2, 'x', Rational(5));
    RationalFn a = specialize(andrianov_series_genus2(sym), num);
    EXPECT_TRUE(rf_equal(a, andrianov_series_genus2(num)));
    EXPECT_FALSE(andrianov_series_genus2(num).num().involves("p"));
}
