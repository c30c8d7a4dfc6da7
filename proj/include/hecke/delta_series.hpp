#ifndef HECKE_DELTA_SERIES_HPP
#define HECKE_DELTA_SERIES_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"

namespace hecke {

struct DeltaTerm {
    RationalFn coef;
    Monomial base;
};

/// The family delta -> sum_j coef_j * base_j^delta, kept with pairwise
/// distinct bases in descending graded-lex order.
class DeltaSeries {
public:
    DeltaSeries() = default;
    explicit DeltaSeries(VarTable vars) : vars_(std::move(vars)) {}

    const std::vector<DeltaTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const VarTable& vars() const noexcept { return vars_; }

    /// Adds coef * base^delta; a repeated base merges by coefficient addition.
    void add(const RationalFn& coef, const Monomial& base)
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), base, [](const DeltaTerm& t, const Monomial& b) {
            return Monomial::compare(t.base, b) > 0;
        });
        if (it != terms_.end() && it->base == base) {
            it->coef += coef;
            if (it->coef.is_zero()) terms_.erase(it);
        } else if (!coef.is_zero()) {
            terms_.insert(it, {coef, base});
        }
    }

    const RationalFn* coefficient(const Monomial& base) const
    {
        for (const auto& t : terms_)
            if (t.base == base) return &t.coef;
        return nullptr;
    }

private:
    VarTable vars_;
    std::vector<DeltaTerm> terms_;
};

/// Splits f = num / (F * prod_i (1 - m_i X)) into sum_i c_i / (1 - m_i X),
/// with c_i = num(X = 1/m_i) * m_i^(n-1) / (F * prod_{j != i} (m_i - m_j)).
inline DeltaSeries partial_fractions(const RationalFn& f, std::string_view series_var)
{
    const VarTable& vars = f.vars();
    std::size_t v = vars.index(series_var);
    struct Pole {
        Monomial base;
        Term unit;  // the factor equals unit * (1 - base X)
    };
    std::vector<Pole> poles;
    FactorList rest;
    for (const auto& [g, mult] : f.den_factors()) {
        if (!g.involves(v)) {
            rest.emplace_back(g, mult);
            continue;
        }
        auto parts = g.split_by(v);
        if (parts.size() != 2 || !parts.count(0) || !parts.count(1) || !parts.at(0).is_monomial() ||
            !parts.at(1).is_monomial())
            throw Error(Errc::not_linear_factor_form, g.to_string() + " is not of the form u(1 - mX)");
        const Term& t0 = parts.at(0).leading();
        const Term& t1 = parts.at(1).leading();
        Rational ratio = -t1.c / t0.c;
        if (!ratio.is_one())
            throw Error(Errc::not_linear_factor_form, g.to_string() + " has a non-monomial base");
        Monomial base = t1.m / t0.m;
        if (mult > 1) throw Error(Errc::repeated_base, "factor " + g.to_string() + " is repeated");
        for (const auto& p : poles)
            if (p.base == base) throw Error(Errc::repeated_base, "base " + base.to_string(vars) + " occurs twice");
        poles.push_back({base, t0});
    }
    const int n = static_cast<int>(poles.size());
    if (!f.num().is_zero() && (f.num().degree_in(v) >= n || f.num().min_degree_in(v) < 0))
        throw Error(Errc::not_linear_factor_form,
                    "numerator degree in " + std::string(series_var) + " must be below the pole count");

    Monomial units;
    Rational unit_c = 1;
    for (const auto& p : poles) {
        units = units * p.unit.m;
        unit_c *= p.unit.c;
    }
    DeltaSeries out(vars);
    for (int i = 0; i < n; ++i) {
        const Monomial& mi = poles[static_cast<std::size_t>(i)].base;
        Monomial inv = mi.inverse();
        MultiPoly at_pole = f.num().substitute({{std::string(series_var), MultiPoly::monomial(inv, 1, vars)}});
        MultiPoly num = at_pole.mul_term(mi.pow(n - 1) / units, unit_c.inverse());
        RationalFn c(std::move(num));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            c.divide_by_factor(MultiPoly::monomial(mi, 1, vars) -
                                   MultiPoly::monomial(poles[static_cast<std::size_t>(j)].base, 1, vars),
                               1);
        }
        for (const auto& [g, m] : rest) c.divide_by_factor(g, m);
        out.add(c, mi);
    }
    return out;
}

/// sum_j coef_j / (1 - base_j X), assembled exactly over one LCM.
inline RationalFn resum(const DeltaSeries& d, std::string_view series_var)
{
    const VarTable& vars = d.vars();
    std::size_t v = vars.index(series_var);
    std::vector<RationalFn> parts;
    parts.reserve(d.size());
    for (const auto& t : d.terms()) {
        Monomial mx = t.base;
        mx.set(v, mx[v] + 1);
        RationalFn term = t.coef;
        term.divide_by_factor(MultiPoly(vars, Rational(1)) - MultiPoly::monomial(mx, 1, vars), 1);
        parts.push_back(std::move(term));
    }
    if (parts.empty()) return RationalFn(MultiPoly(vars));
    return rf_sum(parts);
}

inline DeltaSeries delta_product(const DeltaSeries& a, const DeltaSeries& b)
{
    require_same_table(a.vars(), b.vars());
    DeltaSeries out(a.vars());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) out.add(s.coef * t.coef, s.base * t.base);
    return out;
}

inline DeltaSeries delta_power_substitute(const DeltaSeries& d, int m)
{
    if (m < 1) throw Error(Errc::invalid_argument, "power must be positive");
    DeltaSeries out(d.vars());
    for (const auto& t : d.terms()) out.add(t.coef, t.base.pow(m));
    return out;
}

inline RationalFn delta_eval(const DeltaSeries& d, int delta)
{
    if (delta < 0) throw Error(Errc::invalid_argument, "delta must be nonnegative");
    std::vector<RationalFn> parts;
    for (const auto& t : d.terms()) {
        RationalFn c = t.coef;
        RationalFn scaled(c.num().mul_term(t.base.pow(delta), 1));
        for (const auto& [g, m] : c.den_factors()) scaled.divide_by_factor(g, m);
        parts.push_back(std::move(scaled));
    }
    if (parts.empty()) return RationalFn(MultiPoly(d.vars()));
    return rf_sum(parts);
}

} // namespace hecke

#endif
