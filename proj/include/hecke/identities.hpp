#ifndef HECKE_IDENTITIES_HPP
#define HECKE_IDENTITIES_HPP

#include <map>
#include <string>
#include <vector>

#include "hecke/delta_series.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/hecke_parse.hpp"
#include "hecke/rankin.hpp"
#include "hecke/series.hpp"
#include "hecke/spherical.hpp"
#include "hecke/transcribed.hpp"

namespace hecke {

inline HeckeSeriesPoly hecke_series_from_strings(const std::vector<std::string>& coeffs, Alphabet a)
{
    HeckeSeriesPoly s;
    s.alphabet = a;
    for (const auto& c : coeffs) s.coeffs.push_back(parse_hecke(c, a));
    s.trim();
    return s;
}

inline RationalFn omega_series_rf(const HeckeSeriesPoly& s, const SphericalContext& ctx)
{
    return RationalFn(omega_apply_series(s, ctx));
}

struct ShimuraReport {
    bool genus2_identity = false;       // Omega(num)/Omega(den) = Andrianov's series
    bool genus2_denominator_expands = false;
    bool genus2_numerator_maps = false;
    bool genus1_identity = false;       // resummed genus-1 delta form = 1/Omega(den)
};

inline ShimuraReport verify_shimura(const SphericalContext& g2, const SphericalContext& g1)
{
    ShimuraReport rep;
    auto num = hecke_series_from_strings(printed::shimura_g2_numerator(), Alphabet::genus2);
    auto den = hecke_series_from_strings(printed::shimura_g2_denominator(), Alphabet::genus2);
    MultiPoly on = omega_apply_series(num, g2), od = omega_apply_series(den, g2);
    RationalFn a = andrianov_series_genus2(g2);
    rep.genus2_identity = rf_equal(RationalFn(on) / RationalFn(od), a);
    MultiPoly expanded = g2.one();
    for (const auto& f : spinor_denominator(2, g2.family, g2.series_var, g2.vars)) expanded = expanded * f;
    rep.genus2_denominator_expands = od == specialize(expanded, g2);
    rep.genus2_numerator_maps = on == specialize(detail::parse_poly_in("1 - x0^2 x1 x2 X^2 / p", g2), g2);

    auto d1 = hecke_series_from_strings(printed::shimura_g1_denominator(), Alphabet::genus1);
    RationalFn lhs = resum(genus1_delta_form(g1), g1.series_var);
    rep.genus1_identity = rf_equal(lhs, RationalFn(g1.one()) / omega_series_rf(d1, g1));
    return rep;
}

struct TotalHeckeReport {
    int checked_to = -1;
    int first_mismatch = -1;
    bool eval_matches_series = false;
    bool first_form_equal = false;
    bool second_form_equal = false;
};

/// The delta form with each base x0^a x1^b x2^c replaced by u0^a u1^b u2^c,
/// u_i standing for x_i^delta.
inline RationalFn delta_form_in_u(const DeltaSeries& d, const SphericalContext& ctx)
{
    const VarTable& vars = ctx.vars;
    std::vector<RationalFn> parts;
    for (const auto& t : d.terms()) {
        Monomial u;
        for (int i = 0; i <= ctx.genus; ++i) {
            int e = t.base[vars.index(ctx.zname(i))];
            if (e) u.set(vars.index("u" + std::to_string(i)), e);
        }
        parts.push_back(t.coef * RationalFn(MultiPoly::monomial(u, 1, vars)));
    }
    return rf_sum(parts);
}

inline TotalHeckeReport verify_total_hecke_formula(const SphericalContext& ctx, int max_delta = 20)
{
    detail::require_genus(ctx, {2});
    if (ctx.family != 'x') throw Error(Errc::invalid_argument, "the printed formula is in the x-group");
    TotalHeckeReport rep;
    DeltaSeries d = genus2_delta_form(ctx);
    auto ser = series_expand(andrianov_series_genus2(ctx), ctx.series_var, max_delta);
    rep.eval_matches_series = true;
    for (int k = 0; k <= max_delta; ++k) {
        if (!rf_equal(delta_eval(d, k), RationalFn(ser[static_cast<std::size_t>(k)]))) {
            rep.eval_matches_series = false;
            rep.first_mismatch = k;
            break;
        }
        rep.checked_to = k;
    }
    RationalFn u = delta_form_in_u(d, ctx);
    rep.first_form_equal = rf_equal(u, detail::parse_rf_in(printed::total_hecke_first_form(), ctx));
    rep.second_form_equal = rf_equal(u, detail::parse_rf_in(printed::total_hecke_second_form(), ctx));
    return rep;
}

struct ConjectureDenominatorReport {
    bool equal = false;
    std::size_t lhs_factors = 0;
    std::size_t rhs_factors = 0;
};

/// Genus-4 spinor denominator in u, under the given substitution, against
/// the 16-factor Rankin denominator.
inline ConjectureDenominatorReport verify_conjecture_denominator(
    const SphericalContext& cx, const std::map<std::string, std::string>& subst = {
                                    {"u0", "x0 y0"}, {"u1", "x1"}, {"u2", "x2"}, {"u3", "y1"}, {"u4", "y2"}})
{
    ConjectureDenominatorReport rep;
    const VarTable& vars = cx.vars;
    std::map<std::string, MultiPoly> b;
    for (const auto& [k, v] : subst) b.emplace(k, parse_poly(v, vars));
    std::vector<MultiPoly> lhs, rhs;
    for (const auto& f : spinor_denominator(4, 'u', cx.series_var, vars)) lhs.push_back(f.substitute(b));
    for (const auto& s : printed::rankin_denominator_factors()) rhs.push_back(parse_poly(s, vars));
    FactorList l = normalized_factor_multiset(lhs), r = normalized_factor_multiset(rhs);
    rep.lhs_factors = lhs.size();
    rep.rhs_factors = rhs.size();
    rep.equal = l == r;
    return rep;
}

} // namespace hecke

#endif
