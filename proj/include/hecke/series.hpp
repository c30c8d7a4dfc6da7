#ifndef HECKE_SERIES_HPP
#define HECKE_SERIES_HPP

#include <string_view>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"

namespace hecke {

namespace detail {

struct SeriesSplit {
    FactorList with_var;  // factors involving the series variable
    FactorList without;   // factors free of it; they stay as a common denominator
};

inline SeriesSplit split_factors(const RationalFn& f, std::size_t v)
{
    SeriesSplit s;
    for (const auto& [g, m] : f.den_factors()) (g.involves(v) ? s.with_var : s.without).emplace_back(g, m);
    return s;
}

// Truncated power-series quotient t / g, g with unit constant term.
inline void divide_series(std::vector<MultiPoly>& t, const MultiPoly& g, std::size_t v)
{
    auto parts = g.split_by(v);
    if (parts.begin()->first < 0) throw Error(Errc::denominator_not_unit_at_origin, "negative power in " + g.to_string());
    auto c0 = parts.find(0);
    if (c0 == parts.end() || !c0->second.is_monomial())
        throw Error(Errc::denominator_not_unit_at_origin, "constant term of " + g.to_string() + " is not a unit");
    const Term& u = c0->second.leading();
    Monomial um = u.m.inverse();
    Rational uc = u.c.inverse();
    for (std::size_t k = 0; k < t.size(); ++k) {
        MultiPoly acc = t[k];
        for (const auto& [j, gj] : parts) {
            if (j == 0 || static_cast<std::size_t>(j) > k) continue;
            acc -= gj * t[k - static_cast<std::size_t>(j)];
        }
        t[k] = acc.mul_term(um, uc);
    }
}

inline std::vector<MultiPoly> numerator_series(const MultiPoly& num, std::size_t v, int order)
{
    std::vector<MultiPoly> t(static_cast<std::size_t>(order) + 1, MultiPoly(num.vars()));
    if (num.is_zero()) return t;
    auto parts = num.split_by(v);
    if (parts.begin()->first < 0)
        throw Error(Errc::invalid_argument, "numerator has negative powers of the series variable");
    for (auto& [k, c] : parts)
        if (k <= order) t[static_cast<std::size_t>(k)] = std::move(c);
    return t;
}

} // namespace detail

/// Power-series coefficients c_0..c_order of f in `series_var`. The part of
/// the denominator at series_var = 0 must be a unit (single term).
inline std::vector<MultiPoly> series_expand(const RationalFn& f, std::string_view series_var, int order)
{
    std::size_t v = f.vars().index(series_var);
    auto split = detail::split_factors(f, v);
    if (!split.without.empty())
        throw Error(Errc::denominator_not_unit_at_origin,
                    "denominator factor " + split.without.front().first.to_string() + " is free of " +
                        std::string(series_var) + " and not a unit");
    auto t = detail::numerator_series(f.num(), v, order);
    for (const auto& [g, m] : split.with_var)
        for (int i = 0; i < m; ++i) detail::divide_series(t, g, v);
    return t;
}

/// As series_expand, but factors free of the series variable are kept as a
/// denominator of every coefficient.
inline std::vector<RationalFn> series_expand_rf(const RationalFn& f, std::string_view series_var, int order)
{
    std::size_t v = f.vars().index(series_var);
    auto split = detail::split_factors(f, v);
    auto t = detail::numerator_series(f.num(), v, order);
    for (const auto& [g, m] : split.with_var)
        for (int i = 0; i < m; ++i) detail::divide_series(t, g, v);
    std::vector<RationalFn> out;
    out.reserve(t.size());
    for (auto& c : t) {
        RationalFn r(std::move(c));
        for (const auto& [g, m] : split.without) r.divide_by_factor(g, m);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hecke

#endif
