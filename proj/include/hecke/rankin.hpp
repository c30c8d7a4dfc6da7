#ifndef HECKE_RANKIN_HPP
#define HECKE_RANKIN_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hecke/delta_series.hpp"
#include "hecke/parse.hpp"
#include "hecke/series.hpp"
#include "hecke/spherical.hpp"
#include "hecke/transcribed.hpp"

namespace hecke {

namespace detail {
inline RationalFn parse_rf_in(const std::string& s, const SphericalContext& ctx)
{
    return specialize(parse_rf(s, ctx.vars), ctx);
}
inline MultiPoly parse_poly_in(const std::string& s, const SphericalContext& ctx)
{
    return specialize(parse_poly(s, ctx.vars), ctx);
}
} // namespace detail

inline DeltaSeries rankin_delta_form(const SphericalContext& cx, const SphericalContext& cy)
{
    if (cx.genus == 1) return delta_product(genus1_delta_form(cx), genus1_delta_form(cy));
    return delta_product(genus2_delta_form(cx), genus2_delta_form(cy));
}

inline RationalFn rankin_closed_form(const SphericalContext& cx, const SphericalContext& cy)
{
    return resum(rankin_delta_form(cx, cy), cx.series_var);
}

/// The X-free factors that appear in the unreduced sum, plus p.
inline std::vector<MultiPoly> rankin_cancel_candidates(const SphericalContext& cx, const SphericalContext& cy)
{
    std::vector<MultiPoly> out;
    const MultiPoly one = cx.one();
    for (const auto* c : {&cx, &cy}) {
        out.push_back(one - c->z(1));
        if (c->genus == 2) {
            out.push_back(one - c->z(2));
            out.push_back(c->z(1) - c->z(2));
            out.push_back(one - c->z(1) * c->z(2));
        }
    }
    out.push_back(cx.p());
    return out;
}

/// prod (1 - x0 y0 a b X), a and b running over the subset products.
inline std::vector<MultiPoly> rankin_pole_factors(const SphericalContext& cx, const SphericalContext& cy)
{
    std::vector<MultiPoly> out;
    for (const auto& fx : spinor_denominator(cx.genus, cx.family, cx.series_var, cx.vars)) {
        MultiPoly ax = (cx.one() - fx);  // z0 * subset * X
        for (const auto& fy : spinor_denominator(cy.genus, cy.family, cy.series_var, cy.vars)) {
            MultiPoly ay = (cy.one() - fy);
            // x0 a X * y0 b X / X
            out.push_back(cx.one() - (ax * ay).mul_term(Monomial::var(cx.vars.index(cx.series_var), -1), 1));
        }
    }
    return out;
}

inline FactorList normalized_factor_multiset(const std::vector<MultiPoly>& fs)
{
    FactorList l;
    for (const auto& f : fs) {
        auto n = normalize_factor(f);
        if (!n.poly.is_one()) detail::insert_factor(l, n.poly, 1);
    }
    return l;
}

struct PoleComparison {
    std::string pole;
    bool equal = false;
    bool negated = false;  // transcribed = -derived
};

struct RankinReport {
    bool identity_holds = false;
    bool transcribed_equal = false;      // corrected transcription, whole sum
    bool raw_transcription_ok = false;   // as printed
    std::string raw_transcription_detail;
    std::vector<PoleComparison> poles;
    bool prefix_ok = false;
    int series_prefix_checked_to = -1;
    int first_prefix_mismatch = -1;
    bool denominator_is_16_product = false;
    bool quadratic_factor_divides = false;
    struct {
        bool degree_is_12 = false;
        bool constant_is_one = false;
        bool deg1_zero = false;
        bool deg11_zero = false;
        bool leading_term_matches = false;
    } degree12;
};

/// The sum reduced against the known X-free factors, with numerator N over
/// D = prod (1 - m X).
struct RankinReduced {
    RationalFn reduced;
    MultiPoly numerator;
    std::vector<MultiPoly> poles;
};

inline RankinReduced rankin_reduce(const RationalFn& closed, const SphericalContext& cx, const SphericalContext& cy)
{
    RankinReduced out;
    out.reduced = closed.reduce_known_factors(rankin_cancel_candidates(cx, cy));
    out.poles = rankin_pole_factors(cx, cy);
    // normalized factors are (m X - 1); flip to prod (1 - m X)
    int sign = out.reduced.den_factor_count() % 2 ? -1 : 1;
    out.numerator = out.reduced.num().scaled(Rational(sign));
    return out;
}

inline RankinReport verify_theorem21(const SphericalContext& cx, const SphericalContext& cy, int prefix_order = 12)
{
    RankinReport rep;
    const VarTable& vars = cx.vars;
    const std::size_t xi = vars.index(cx.series_var);
    DeltaSeries d = rankin_delta_form(cx, cy);
    RationalFn closed = resum(d, cx.series_var);

    // as printed
    try {
        std::vector<RationalFn> raw;
        for (const auto& s : printed::rankin_terms_raw()) raw.push_back(detail::parse_rf_in(s, cx));
        rep.raw_transcription_ok = rf_equal(rf_sum(raw), closed);
        rep.raw_transcription_detail = rep.raw_transcription_ok ? "equal" : "differs";
    } catch (const Error& e) {
        rep.raw_transcription_detail = e.what();
    }

    // corrected, pole by pole and as a whole
    std::vector<RationalFn> terms;
    for (const auto& s : printed::rankin_terms_corrected()) terms.push_back(detail::parse_rf_in(s, cx));
    for (const auto& t : terms) {
        DeltaSeries td = partial_fractions(t, cx.series_var);
        for (const auto& [c, base] : td.terms()) {
            PoleComparison pc;
            pc.pole = "1 - " + base.to_string(vars) + " " + cx.series_var;
            if (const RationalFn* dc = d.coefficient(base)) {
                pc.equal = rf_equal(*dc, c);
                pc.negated = !pc.equal && rf_equal(*dc, c * RationalFn(MultiPoly(vars, Rational(-1))));
            }
            rep.poles.push_back(pc);
        }
    }
    rep.transcribed_equal = rf_equal(rf_sum(terms), closed);

    // reduction
    RankinReduced red = rankin_reduce(closed, cx, cy);
    rep.denominator_is_16_product =
        red.reduced.den_factors() == normalized_factor_multiset([&] {
            std::vector<MultiPoly> v;
            for (const auto& s : printed::rankin_denominator_factors()) v.push_back(detail::parse_poly_in(s, cx));
            return v;
        }());

    // termwise products of the two delta forms
    DeltaSeries dx = genus2_delta_form(cx), dy = genus2_delta_form(cy);
    auto lhs = series_expand(red.reduced, cx.series_var, prefix_order);
    rep.prefix_ok = true;
    for (int k = 0; k <= prefix_order; ++k) {
        if (!rf_equal(RationalFn(lhs[static_cast<std::size_t>(k)]), delta_eval(dx, k) * delta_eval(dy, k))) {
            rep.prefix_ok = false;
            rep.first_prefix_mismatch = k;
            break;
        }
        rep.series_prefix_checked_to = k;
    }

    // quadratic factor and the degree-12 quotient
    MultiPoly quad = detail::parse_poly_in(printed::rankin_quadratic_factor(), cx);
    auto q12 = red.numerator.try_exact_div(quad);
    rep.quadratic_factor_divides = q12.has_value();
    if (q12) {
        rep.degree12.degree_is_12 = q12->degree_in(xi) == 12 && q12->min_degree_in(xi) == 0;
        rep.degree12.constant_is_one = q12->coeff_in(xi, 0).is_one();
        rep.degree12.deg1_zero = q12->coeff_in(xi, 1).is_zero();
        rep.degree12.deg11_zero = q12->coeff_in(xi, 11).is_zero();
        MultiPoly lead = detail::parse_poly_in(printed::rankin_leading_term(), cx);
        rep.degree12.leading_term_matches =
            q12->coeff_in(xi, 12) == lead.coeff_in(xi, 12) && q12->degree_in(xi) == 12;
    }
    rep.identity_holds = rep.transcribed_equal && rep.prefix_ok && rep.series_prefix_checked_to >= 12;
    return rep;
}

struct Genus1RankinReport {
    bool closed_form_equal = false;
    bool four_term_equal = false;
    bool numerator_matches = false;
    bool base_coefficient_matches = false;
    bool constant_is_one = false;
};

inline Genus1RankinReport verify_genus1_rankin(const SphericalContext& cx, const SphericalContext& cy)
{
    Genus1RankinReport rep;
    const VarTable& vars = cx.vars;
    DeltaSeries d = rankin_delta_form(cx, cy);
    RationalFn closed = resum(d, cx.series_var);
    rep.closed_form_equal = rf_equal(closed, detail::parse_rf_in(printed::genus1_rankin_closed(), cx));
    std::vector<RationalFn> four;
    for (const auto& s : printed::genus1_rankin_terms()) four.push_back(detail::parse_rf_in(s, cx));
    rep.four_term_equal = rf_equal(rf_sum(four), closed);
    RankinReduced red = rankin_reduce(closed, cx, cy);
    rep.numerator_matches = red.numerator == detail::parse_poly_in("1 - x0^2 y0^2 x1 y1 X^2", cx) &&
                            red.reduced.den_factors() == normalized_factor_multiset(red.poles);
    Monomial b = Monomial::var(vars.index("x0")) * Monomial::var(vars.index("y0"));
    const RationalFn* c = d.coefficient(b);
    rep.base_coefficient_matches = c && rf_equal(*c, parse_rf("1 / ((1 - x1)(1 - y1))", vars));
    rep.constant_is_one = series_expand(red.reduced, cx.series_var, 0)[0].is_one();
    return rep;
}

struct PowerSeriesReport {
    int m = 0;
    bool literal_equal = false;
    std::optional<bool> repaired_equal;  // cubic only
    bool prefix_ok = false;
};

inline PowerSeriesReport verify_power_series(const SphericalContext& ctx, int m, int prefix = 6)
{
    if (m != 2 && m != 3) throw Error(Errc::invalid_argument, "power must be 2 or 3");
    PowerSeriesReport rep;
    rep.m = m;
    RationalFn f = power_series_closed_form(ctx, m);
    if (m == 2) {
        rep.literal_equal = rf_equal(f, detail::parse_rf_in(printed::symmetric_square(), ctx));
    } else {
        rep.literal_equal = rf_equal(f, detail::parse_rf_in(printed::cubic_literal(), ctx));
        rep.repaired_equal = rf_equal(f, detail::parse_rf_in(printed::cubic_repaired(), ctx));
    }
    auto lhs = series_expand(f, ctx.series_var, prefix);
    DeltaSeries d = genus2_delta_form(ctx);
    rep.prefix_ok = true;
    for (int k = 0; k <= prefix; ++k)
        if (!rf_equal(RationalFn(lhs[static_cast<std::size_t>(k)]), delta_eval(d, m * k))) rep.prefix_ok = false;
    return rep;
}

} // namespace hecke

#endif
