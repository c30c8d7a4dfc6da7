#include <algorithm>

#include <gtest/gtest.h>

#include "hecke/json_io.hpp"
#include "hecke/lfactor.hpp"
#include "hecke/spherical.hpp"
#include "hecke/parse.hpp"

using namespace hecke;

namespace {
LinExpr L(const char* s) { return LinExpr::parse(s); }
PMono M(const char* s) { return PMono::parse(s); }

SatakeParams params(int genus, const char* weight, std::vector<const char*> a)
{
    SatakeParams s;
    s.genus = genus;
    s.weight = L(weight);
    for (const char* x : a) s.alphas.push_back(M(x));
    return s;
}

std::vector<std::string> strs(const std::vector<PMono>& v)
{
    std::vector<std::string> out;
    for (const auto& m : v) out.push_back(m.to_string());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}
} // namespace

TEST(LinExpr, ParseAndPrint)
{
    EXPECT_EQ(L("2k - 3 + l").to_string(), "2k+l-3");
    EXPECT_EQ(L("(k-1)/2").to_string(), "k/2-1/2");
    EXPECT_EQ(L("k") - L("k"), LinExpr());
    EXPECT_THROW(L("k +"), Error);
}

TEST(SatakeConstraint, Examples)
{
    EXPECT_TRUE(check_satake_constraint(params(2, "k", {"1", "p^{k-2}", "p^{k-1}"})));
    EXPECT_TRUE(check_satake_constraint(params(1, "k", {"p^{(k-1)/2} sigma", "sigma^-2"})));
    EXPECT_FALSE(check_satake_constraint(params(2, "k", {"p", "p^{k-2}", "p^{k-1}"})));
    try {
        check_satake_constraint(params(1, "k", {"sigma", "p^{k-1}"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unsupported_symbolic_form);
    }
}

TEST(Spin, SubsetProducts)
{
    auto s1 = spin_polynomial(params(1, "k", {"a0", "a1"}));
    EXPECT_EQ(strs(s1), (std::vector<std::string>{"a0", "a0 a1"}));
    auto s2 = spin_polynomial(params(2, "k", {"a0", "a1", "a2"}));
    EXPECT_EQ(strs(s2), (std::vector<std::string>{"a0", "a0 a1", "a0 a2", "a0 a1 a2"}));
    EXPECT_EQ(spin_polynomial(params(3, "k", {"a0", "a1", "a2", "a3"})).size(), 8u);
}

TEST(Spin, MatchesSpinorDenominator)
{
    // alpha_i -> x_i reproduces the genus-2 spinor denominator
    auto roots = spin_polynomial(params(2, "k", {"x0", "x1", "x2"}));
    std::vector<std::string> got, want;
    for (const auto& r : roots) got.push_back(parse_poly("1 - " + r.to_string() + " X").to_string());
    for (const auto& f : spinor_denominator(2, 'x')) want.push_back(f.to_string());
    EXPECT_EQ(sorted(got), sorted(want));
}

TEST(Spin, PermutationStable)
{
    auto a = spin_polynomial(params(3, "k", {"a0", "a1", "a2", "a3"}));
    auto b = spin_polynomial(params(3, "k", {"a0", "a3", "a1", "a2"}));
    EXPECT_EQ(sorted(strs(a)), sorted(strs(b)));
}

TEST(Standard, RootsAndSymmetry)
{
    auto r = standard_polynomial(params(1, "k", {"a0", "a1"}));
    EXPECT_EQ(strs(r), (std::vector<std::string>{"1", "a1^-1", "a1"}));
    for (int n = 1; n <= 4; ++n) {
        SatakeParams s;
        s.genus = n;
        s.alphas.push_back(M("a0"));
        for (int i = 1; i <= n; ++i) s.alphas.push_back(PMono::power("a" + std::to_string(i), LinExpr(1)));
        EXPECT_EQ(standard_polynomial(s).size(), static_cast<std::size_t>(2 * n + 1));
        // inverting a1 permutes the roots
        SatakeParams t = s;
        t.alphas[1] = t.alphas[1].inverse();
        EXPECT_EQ(sorted(strs(standard_polynomial(s))), sorted(strs(standard_polynomial(t))));
    }
    EXPECT_THROW(standard_polynomial(params(1, "k", {"1", "0"})), Error);
}

TEST(Hodge, Spinor)
{
    LinExpr k = L("k");
    auto h2 = hodge_spinor(2, k);
    std::vector<std::string> got;
    for (const auto& p : h2.pairs) got.push_back(p.p.to_string() + "," + p.q.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"0,2k-3", "k-2,k-1", "k-1,k-2", "2k-3,0"}));
    auto h1 = hodge_spinor(1, k);
    ASSERT_EQ(h1.pairs.size(), 2u);
    EXPECT_EQ(h1.pairs[0].q, k - LinExpr(1));
    for (int n = 1; n <= 6; ++n) {
        auto h = hodge_spinor(n, k);
        EXPECT_EQ(h.pairs.size(), std::size_t(1) << n);
        for (const auto& p : h.pairs) EXPECT_EQ(p.p + p.q, k * Rational(n) - LinExpr(n * (n + 1) / 2));
    }
}

TEST(Hodge, Tensor)
{
    LinExpr k = L("k"), l = L("l");
    auto t = hodge_tensor(hodge_spinor(2, k), hodge_spinor(2, k));
    ASSERT_EQ(t.pairs.size(), 16u);
    int plus = 0, minus = 0;
    for (const auto& p : t.pairs) {
        EXPECT_EQ(p.p + p.q, L("4k - 6"));
        if (p.tag == '+') ++plus;
        if (p.tag == '-') ++minus;
    }
    EXPECT_EQ(plus, 2);
    EXPECT_EQ(minus, 2);
    // distinct weights: only the middle pairs meet the diagonal
    std::vector<std::string> tagged;
    for (const auto& p : hodge_tensor(hodge_spinor(2, k), hodge_spinor(2, l)).pairs)
        if (p.tag) tagged.push_back(p.p.to_string() + p.tag);
    EXPECT_EQ(tagged, (std::vector<std::string>{"k+l-3+", "k+l-3-"}));
    HodgeType unit;
    unit.pairs.push_back({LinExpr(), LinExpr(), 0});
    auto h = hodge_spinor(2, k);
    EXPECT_EQ(hodge_tensor(h, unit).pairs, h.pairs);
    EXPECT_EQ(hodge_tensor(hodge_spinor(3, k), h).pairs.size(), 32u);
}

TEST(Merge, GenericSymbols)
{
    auto f = params(2, "k", {"a0", "a1", "a2"});
    auto g = params(2, "k-2", {"b0", "b1", "b2"});
    auto r = lift_merge_params(f, g).params;
    EXPECT_EQ(r.genus, 4);
    EXPECT_EQ(strs(r.alphas), (std::vector<std::string>{"a0 b0", "a1", "a2", "b1", "b2"}));
}

TEST(Merge, Errors)
{
    auto f = params(2, "k", {"a0", "a1", "a2"});
    try {
        lift_merge_params(f, params(2, "k", {"b0", "b1", "b2"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::weight_mismatch);
    }
    EXPECT_TRUE(lift_merge_params(f, params(2, "k", {"b0", "b1", "b2"}), true).weight_override);
    try {
        lift_merge_params(f, params(1, "k-2", {"b0", "b1"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::genus_mismatch);
    }
}

TEST(Eisenstein, Parameters)
{
    LinExpr k = L("k");
    EXPECT_EQ(strs(eisenstein_params(k, 2).alphas), (std::vector<std::string>{"1", "p^{k-2}", "p^{k-1}"}));
    EXPECT_EQ(strs(eisenstein_params(k, 4).alphas),
              (std::vector<std::string>{"1", "p^{k-4}", "p^{k-3}", "p^{k-2}", "p^{k-1}"}));
    EXPECT_TRUE(check_satake_constraint(eisenstein_params(k, 2)));
}

TEST(Eisenstein, MergedConstraint)
{
    for (int m = 1; m <= 3; ++m) {
        for (const char* kk : {"k", "20", "4m+1"}) {
            LinExpr k = std::string(kk) == "4m+1" ? LinExpr(4 * m + 1) : L(kk);
            auto r = lift_merge_params(eisenstein_params(k, 2 * m), eisenstein_params(k - LinExpr(2 * m), 2 * m)).params;
            EXPECT_TRUE(check_satake_constraint(r)) << m << " " << kk;
        }
    }
    auto r = lift_merge_params(eisenstein_params(L("k"), 2), eisenstein_params(L("k-2"), 2)).params;
    EXPECT_EQ(sorted(strs({r.alphas.begin() + 1, r.alphas.end()})),
              sorted({"p^{k-4}", "p^{k-3}", "p^{k-2}", "p^{k-1}"}));
}

TEST(Ikeda, Parameters)
{
    auto s = ikeda_params(L("k"), 1);
    EXPECT_EQ(strs(s.alphas), (std::vector<std::string>{"p^{k-1}", "alpha p^{1/2}", "alpha^-1 p^{1/2}"}));
    EXPECT_TRUE(check_satake_constraint(s));
    EXPECT_TRUE(check_satake_constraint(ikeda_params(L("k"), 2)));
}

TEST(Ikeda, DefiningRelation)
{
    // (1 - a p^{k-1/2} X)(1 - a^-1 p^{k-1/2} X) = 1 - (a + 1/a) p^{k-1/2} X + p^{2k-1} X^2
    PMono a = M("alpha"), c = PMono::p_power(L("k") - LinExpr(Rational(1, 2)));
    XPoly lhs = expand_linear_factors({a * c, a.inverse() * c});
    ASSERT_EQ(lhs.size(), 3u);
    EXPECT_EQ(lhs[1], -((LSum(a) + LSum(a.inverse())) * LSum(c)));
    EXPECT_EQ(lhs[2], LSum(PMono::p_power(L("2k - 1"))));
}

TEST(Ikeda, StandardFactor)
{
    for (int m = 1; m <= 2; ++m) {
        auto rep = verify_ikeda_standard_factor(L("k"), m);
        EXPECT_TRUE(rep.factorization_holds) << m;
        EXPECT_TRUE(rep.alpha_symmetric) << m;
        EXPECT_EQ(rep.degree, 4 * m + 1);
        EXPECT_TRUE(rep.pairing_complete);
        EXPECT_TRUE(rep.shifts_match_template);
    }
}

TEST(Json, RoundTrip)
{
    auto s = eisenstein_params(L("k"), 2);
    json j = to_json(s);
    EXPECT_EQ(j.dump(), R"({"genus":2,"weight":"k","alphas":["1","p^{k-2}","p^{k-1}"]})");
    auto back = satake_from_json(j);
    EXPECT_EQ(strs(back.alphas), strs(s.alphas));
    EXPECT_EQ(back.weight, s.weight);
    EXPECT_THROW(satake_from_json(json::parse(R"({"genus":2})")), Error);
    json h = to_json(hodge_spinor(2, L("k")));
    EXPECT_EQ(h["pairs"][0], json::parse(R"(["0","2k-3"])"));
}
