#ifndef HECKE_RATIONAL_FN_HPP
#define HECKE_RATIONAL_FN_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"

namespace hecke {

/// A denominator factor brought to canonical shape: no monomial content,
/// leading coefficient 1. The stripped unit goes back to the caller.
struct NormalizedFactor {
    MultiPoly poly;  // monic, content-free; 1 if the input was a unit
    MultiPoly unit;  // single term with input = unit * poly
};

inline NormalizedFactor normalize_factor(const MultiPoly& f)
{
    if (f.is_zero()) throw Error(Errc::division_by_zero, "zero denominator factor");
    Monomial content = f.monomial_content();
    MultiPoly shifted = f.mul_term(content.inverse(), 1);
    Rational lc = shifted.leading().c;
    MultiPoly monic = shifted.scaled(lc.inverse());
    return {std::move(monic), MultiPoly::monomial(content, lc, f.vars())};
}

using FactorList = std::vector<std::pair<MultiPoly, int>>;

namespace detail {

inline void insert_factor(FactorList& list, MultiPoly f, int mult)
{
    auto it = std::lower_bound(list.begin(), list.end(), f,
                               [](const auto& e, const MultiPoly& g) { return MultiPoly::compare(e.first, g) < 0; });
    if (it != list.end() && it->first == f) {
        it->second += mult;
        if (it->second == 0) list.erase(it);
    } else {
        list.insert(it, {std::move(f), mult});
    }
}

inline int multiplicity(const FactorList& list, const MultiPoly& f)
{
    for (const auto& [g, m] : list)
        if (g == f) return m;
    return 0;
}

inline FactorList lcm(const FactorList& a, const FactorList& b)
{
    FactorList out = a;
    for (const auto& [f, m] : b) {
        int have = multiplicity(out, f);
        if (m > have) insert_factor(out, f, m - have);
    }
    return out;
}

inline MultiPoly expand(const FactorList& list, const VarTable& vars)
{
    MultiPoly r(vars, Rational(1));
    for (const auto& [f, m] : list)
        for (int i = 0; i < m; ++i) r *= f;
    return r;
}

/// Product of the factors in `big` not accounted for by `part`.
inline MultiPoly cofactor(const FactorList& big, const FactorList& part, const VarTable& vars)
{
    MultiPoly r(vars, Rational(1));
    for (const auto& [f, m] : big) {
        int left = m - multiplicity(part, f);
        for (int i = 0; i < left; ++i) r *= f;
    }
    return r;
}

} // namespace detail

/// Quotient num/den with the denominator held as a multiset of normalized
/// factors. Arithmetic never reduces; addition works over the factor LCM,
/// which is a purely syntactic (GCD-free) operation.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(MultiPoly num) : num_(std::move(num)) {}
    RationalFn(int c) : num_(c) {}
    RationalFn(const Rational& c) : num_(c) {}

    RationalFn(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) { divide_by_factor(den, 1); }

    static RationalFn from_factors(MultiPoly num, const std::vector<MultiPoly>& den_factors)
    {
        RationalFn r(std::move(num));
        for (const auto& f : den_factors) r.divide_by_factor(f, 1);
        return r;
    }

    const MultiPoly& num() const noexcept { return num_; }
    const FactorList& den_factors() const noexcept { return den_; }
    const VarTable& vars() const noexcept { return num_.vars(); }

    /// Expanded denominator; monic, hence sign-normalized.
    MultiPoly den() const { return detail::expand(den_, num_.vars()); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }

    int den_factor_count() const
    {
        int n = 0;
        for (const auto& f : den_) n += f.second;
        return n;
    }

    /// In-place num / f^mult with f normalized into the factor list.
    void divide_by_factor(const MultiPoly& f, int mult)
    {
        require_same_table(num_.vars(), f.vars());
        auto nf = normalize_factor(f);
        MultiPoly u = nf.unit.pow(-mult);
        num_ = num_.mul_term(u.leading().m, u.leading().c);
        if (!nf.poly.is_one()) detail::insert_factor(den_, std::move(nf.poly), mult);
    }

    RationalFn operator-() const
    {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b)
    {
        require_same_table(a.vars(), b.vars());
        if (a.den_ == b.den_) {
            RationalFn r;
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            return r;
        }
        FactorList l = detail::lcm(a.den_, b.den_);
        RationalFn r;
        r.num_ = a.num_ * detail::cofactor(l, a.den_, a.vars()) + b.num_ * detail::cofactor(l, b.den_, b.vars());
        r.den_ = std::move(l);
        return r;
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b)
    {
        require_same_table(a.vars(), b.vars());
        RationalFn r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [f, m] : b.den_) detail::insert_factor(r.den_, f, m);
        return r;
    }

    friend RationalFn operator/(const RationalFn& a, const RationalFn& b)
    {
        if (b.is_zero()) throw Error(Errc::division_by_zero, "rational function division by zero");
        RationalFn r = a;
        r.num_ = r.num_ * detail::expand(b.den_, b.vars());
        r.divide_by_factor(b.num_, 1);
        return r;
    }

    RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
    RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
    RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }
    RationalFn& operator/=(const RationalFn& b) { return *this = *this / b; }

    RationalFn pow(int k) const
    {
        if (k < 0) return RationalFn(MultiPoly(vars(), Rational(1))) / pow(-k);
        RationalFn r;
        r.num_ = num_.pow(k);
        for (const auto& [f, m] : den_) r.den_.emplace_back(f, m * k);
        if (k == 0) r.den_.clear();
        return r;
    }

    /// Cross-multiplied equality over the factor LCM; exact, no GCD.
    friend bool rf_equal(const RationalFn& a, const RationalFn& b)
    {
        require_same_table(a.vars(), b.vars());
        if (a.den_ == b.den_) return a.num_ == b.num_;
        FactorList l = detail::lcm(a.den_, b.den_);
        return a.num_ * detail::cofactor(l, a.den_, a.vars()) == b.num_ * detail::cofactor(l, b.den_, b.vars());
    }
    friend bool operator==(const RationalFn& a, const RationalFn& b) { return rf_equal(a, b); }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !rf_equal(a, b); }

    /// Trial division of numerator and denominator by caller-supplied
    /// candidates until none divides both.
    RationalFn reduce_known_factors(const std::vector<MultiPoly>& candidates) const
    {
        RationalFn r = *this;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cand : candidates) {
                auto nc = normalize_factor(cand);
                if (nc.poly.is_one()) continue;
                for (std::size_t i = 0; i < r.den_.size(); ++i) {
                    auto fq = r.den_[i].first.try_exact_div(nc.poly);
                    if (!fq) continue;
                    auto nq = r.num_.try_exact_div(nc.poly);
                    if (!nq) continue;
                    r.num_ = std::move(*nq);
                    MultiPoly rest = std::move(*fq);
                    if (--r.den_[i].second == 0) r.den_.erase(r.den_.begin() + static_cast<long>(i));
                    if (!rest.is_constant()) {
                        r.divide_by_factor(rest, 1);
                    } else {
                        r.num_ = r.num_.scaled(rest.leading().c.inverse());
                    }
                    changed = true;
                    break;
                }
            }
        }
        return r;
    }

    /// Cancels every denominator factor against the numerator; throws
    /// NotDivisible if some factor does not divide.
    MultiPoly to_polynomial() const
    {
        MultiPoly n = num_;
        for (const auto& [f, m] : den_)
            for (int i = 0; i < m; ++i) n = n.exact_div(f);
        return n;
    }

    RationalFn substitute(const std::map<std::string, MultiPoly>& bindings) const
    {
        RationalFn r(num_.substitute(bindings));
        for (const auto& [f, m] : den_) {
            MultiPoly g = f.substitute(bindings);
            if (g.is_zero()) throw Error(Errc::division_by_zero, "substitution annihilates factor " + f.to_string());
            r.divide_by_factor(g, m);
        }
        return r;
    }

    std::string to_string() const
    {
        if (den_.empty()) return num_.to_string();
        std::string d;
        for (const auto& [f, m] : den_) {
            d += "(" + f.to_string() + ")";
            if (m != 1) d += "^" + std::to_string(m);
        }
        return "(" + num_.to_string() + ")/" + d;
    }

private:
    MultiPoly num_;
    FactorList den_;
};

/// n-ary sum over a single LCM; avoids re-multiplying partial sums.
inline RationalFn rf_sum(const std::vector<RationalFn>& parts)
{
    if (parts.empty()) return RationalFn();
    FactorList l;
    for (const auto& p : parts) l = detail::lcm(l, p.den_factors());
    const VarTable& vars = parts.front().vars();
    MultiPoly num(vars);
    for (const auto& p : parts) {
        require_same_table(vars, p.vars());
        num += p.num() * detail::cofactor(l, p.den_factors(), vars);
    }
    RationalFn r(std::move(num));
    for (const auto& [f, m] : l) r.divide_by_factor(f, m);
    return r;
}

} // namespace hecke

#endif
