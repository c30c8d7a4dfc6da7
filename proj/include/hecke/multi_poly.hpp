#ifndef HECKE_MULTI_POLY_HPP
#define HECKE_MULTI_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/monomial.hpp"
#include "hecke/rational.hpp"
#include "hecke/var_table.hpp"

namespace hecke {

struct Term {
    Monomial m;
    Rational c;
};

/// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
/// in descending graded-lex order with no zero coefficients, so equality is
/// plain vector comparison.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarTable vars) : vars_(std::move(vars)) {}
    MultiPoly(const Rational& c) { if (!c.is_zero()) terms_.push_back({Monomial(), c}); }
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(VarTable vars, const Rational& c) : vars_(std::move(vars))
    {
        if (!c.is_zero()) terms_.push_back({Monomial(), c});
    }

    static MultiPoly var(std::string_view name, const VarTable& vars = VarTable::canonical())
    {
        MultiPoly r(vars);
        r.terms_.push_back({Monomial::var(vars.index(name)), Rational(1)});
        return r;
    }

    static MultiPoly monomial(const Monomial& m, const Rational& c = 1, const VarTable& vars = VarTable::canonical())
    {
        MultiPoly r(vars);
        if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms, const VarTable& vars = VarTable::canonical())
    {
        MultiPoly r(vars);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return Monomial::compare(a.m, b.m) > 0; });
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().m == t.m) {
                r.terms_.back().c += t.c;
                if (r.terms_.back().c.is_zero()) r.terms_.pop_back();
            } else if (!t.c.is_zero()) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    const VarTable& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
    const Term& leading() const { return terms_.front(); }

    Rational constant_term() const
    {
        if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
        return Rational(0);
    }

    Rational coefficient(const Monomial& m) const
    {
        for (const auto& t : terms_)
            if (t.m == m) return t.c;
        return Rational(0);
    }

    MultiPoly operator-() const
    {
        MultiPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        const VarTable& vars = pick_table(a, b);
        if (a.is_zero() || b.is_zero()) return MultiPoly(vars);
        const MultiPoly& small = a.size() <= b.size() ? a : b;
        const MultiPoly& big = a.size() <= b.size() ? b : a;
        if (small.size() == 1) return big.mul_term(small.terms_[0].m, small.terms_[0].c);
        if (small.size() <= 6) {
            MultiPoly acc = big.mul_term(small.terms_[0].m, small.terms_[0].c);
            for (std::size_t i = 1; i < small.size(); ++i)
                acc = acc + big.mul_term(small.terms_[i].m, small.terms_[i].c);
            return acc;
        }
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(std::min<std::size_t>(small.size() * big.size(), std::size_t(1) << 22));
        for (const auto& s : small.terms_) {
            for (const auto& t : big.terms_) {
                auto [it, fresh] = acc.try_emplace(s.m * t.m, s.c * t.c);
                if (!fresh) it->second += s.c * t.c;
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.push_back({m, std::move(c)});
        std::sort(out.begin(), out.end(),
                  [](const Term& x, const Term& y) { return Monomial::compare(x.m, y.m) > 0; });
        MultiPoly r(vars);
        r.terms_ = std::move(out);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    /// Multiplication by a single term keeps the order, so no re-sort.
    MultiPoly mul_term(const Monomial& m, const Rational& c) const
    {
        MultiPoly r(vars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        bool unit = c.is_one();
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, unit ? t.c : t.c * c});
        return r;
    }

    MultiPoly scaled(const Rational& c) const { return mul_term(Monomial(), c); }

    /// Negative powers are allowed only for single-term (unit) polynomials.
    MultiPoly pow(int k) const
    {
        if (k < 0) {
            if (!is_monomial()) throw Error(Errc::not_divisible, "negative power of a non-monomial");
            return monomial(terms_[0].m.pow(k), terms_[0].c.pow(k), vars_);
        }
        if (is_monomial()) return monomial(terms_[0].m.pow(k), terms_[0].c.pow(k), vars_);
        MultiPoly result(vars_, Rational(1)), base(*this);
        while (k) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        require_same_table(a.vars_, b.vars_);
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Total order used to sort factor lists: term by term, then by length.
    static int compare(const MultiPoly& a, const MultiPoly& b)
    {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = Monomial::compare(a.terms_[i].m, b.terms_[i].m);
            if (c) return c;
            if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
        }
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        return 0;
    }

    int degree_in(std::size_t v) const
    {
        if (terms_.empty()) throw Error(Errc::invalid_argument, "degree of zero polynomial");
        int d = terms_[0].m[v];
        for (const auto& t : terms_) d = std::max(d, t.m[v]);
        return d;
    }
    int degree_in(std::string_view v) const { return degree_in(vars_.index(v)); }

    int min_degree_in(std::size_t v) const
    {
        if (terms_.empty()) throw Error(Errc::invalid_argument, "degree of zero polynomial");
        int d = terms_[0].m[v];
        for (const auto& t : terms_) d = std::min(d, t.m[v]);
        return d;
    }
    int min_degree_in(std::string_view v) const { return min_degree_in(vars_.index(v)); }

    bool involves(std::size_t v) const
    {
        for (const auto& t : terms_)
            if (t.m[v]) return true;
        return false;
    }
    bool involves(std::string_view v) const { return involves(vars_.index(v)); }

    /// Coefficient of v^k, with v removed.
    MultiPoly coeff_in(std::size_t v, int k) const
    {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.m[v] != k) continue;
            Monomial m = t.m;
            m.set(v, 0);
            out.push_back({m, t.c});
        }
        return from_sorted(std::move(out));
    }
    MultiPoly coeff_in(std::string_view v, int k) const { return coeff_in(vars_.index(v), k); }

    /// All coefficients in v, keyed by exponent.
    std::map<int, MultiPoly> split_by(std::size_t v) const
    {
        std::map<int, std::vector<Term>> buckets;
        for (const auto& t : terms_) {
            Monomial m = t.m;
            int k = m[v];
            m.set(v, 0);
            buckets[k].push_back({m, t.c});
        }
        std::map<int, MultiPoly> out;
        for (auto& [k, ts] : buckets) out.emplace(k, from_sorted(std::move(ts)));
        return out;
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    Monomial monomial_content() const
    {
        if (terms_.empty()) return Monomial();
        Monomial g = terms_[0].m;
        for (const auto& t : terms_) g = Monomial::min(g, t.m);
        return g;
    }

    /// Substitution homomorphism. Variables with a negative exponent somewhere
    /// in the input need a unit (single-term) binding.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const
    {
        std::vector<std::optional<MultiPoly>> by_index(kMaxVars);
        for (const auto& [name, value] : bindings) {
            require_same_table(vars_, value.vars_);
            by_index[vars_.index(name)] = value;
        }
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            if (!by_index[v]) continue;
            if (!by_index[v]->is_monomial() && !terms_.empty() && min_degree_in(v) < 0)
                throw Error(Errc::non_unit_binding,
                            "variable '" + vars_.name(v) + "' appears inverted and is bound to " +
                                by_index[v]->to_string());
        }
        bool all_monomial = std::all_of(by_index.begin(), by_index.end(),
                                        [](const auto& b) { return !b || b->is_monomial(); });
        if (all_monomial) {
            std::vector<Term> out;
            out.reserve(terms_.size());
            for (const auto& t : terms_) {
                Monomial m = t.m;
                Rational c = t.c;
                for (std::size_t v = 0; v < kMaxVars; ++v) {
                    if (!by_index[v] || !t.m[v]) continue;
                    const Term& b = by_index[v]->terms_[0];
                    int e = t.m[v];
                    m.set(v, m[v] - e);
                    m = m * b.m.pow(e);
                    if (!b.c.is_one()) c *= b.c.pow(e);
                }
                out.push_back({m, std::move(c)});
            }
            return from_terms(std::move(out), vars_);
        }
        std::map<std::pair<std::size_t, int>, MultiPoly> powers;
        auto power = [&](std::size_t v, int e) -> const MultiPoly& {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, by_index[v]->pow(e)).first;
            return it->second;
        };
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : terms_) {
            Monomial rest = t.m;
            MultiPoly piece(vars_, t.c);
            for (std::size_t v = 0; v < kMaxVars; ++v) {
                if (!by_index[v] || !t.m[v]) continue;
                rest.set(v, 0);
                piece *= power(v, t.m[v]);
            }
            for (const auto& pt : piece.terms_) {
                auto [it, fresh] = acc.try_emplace(pt.m * rest, pt.c);
                if (!fresh) it->second += pt.c;
            }
        }
        std::vector<Term> out;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.push_back({m, std::move(c)});
        return from_terms(std::move(out), vars_);
    }

    /// Exact quotient in the Laurent ring; throws NotDivisible otherwise.
    MultiPoly exact_div(const MultiPoly& b) const
    {
        auto q = try_exact_div(b);
        if (!q) throw Error(Errc::not_divisible, "(" + to_string() + ") / (" + b.to_string() + ")");
        return std::move(*q);
    }

    std::optional<MultiPoly> try_exact_div(const MultiPoly& b) const
    {
        require_same_table(vars_, b.vars_);
        if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
        if (is_zero()) return MultiPoly(vars_);
        if (b.is_monomial()) return mul_term(b.terms_[0].m.inverse(), b.terms_[0].c.inverse());
        // shift both operands into the polynomial ring; b loses its monomial content
        Monomial bc = b.monomial_content();
        Monomial ac = monomial_content();
        MultiPoly bp = b.mul_term(bc.inverse(), 1);
        MultiPoly ap = mul_term(ac.inverse(), 1);
        // quick rejections: every variable degree of b must fit in a
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            if (bp.degree_in(v) > ap.degree_in(v)) return std::nullopt;
        }
        const Term& lb = bp.terms_[0];
        Rational lb_inv = lb.c.inverse();
        std::map<Monomial, Rational, MonomialGreater> rem;
        for (const auto& t : ap.terms_) rem.emplace_hint(rem.end(), t.m, t.c);
        std::vector<Term> quot;
        while (!rem.empty()) {
            auto it = rem.begin();
            if (!lb.m.divides(it->first)) return std::nullopt;
            Monomial qm = it->first / lb.m;
            Rational qc = it->second * lb_inv;
            rem.erase(it);
            for (std::size_t i = 1; i < bp.terms_.size(); ++i) {
                const Term& bt = bp.terms_[i];
                Monomial m = qm * bt.m;
                Rational c = qc * bt.c;
                auto [jt, fresh] = rem.try_emplace(m, -c);
                if (!fresh) {
                    jt->second -= c;
                    if (jt->second.is_zero()) rem.erase(jt);
                }
            }
            quot.push_back({qm, std::move(qc)});
        }
        MultiPoly q(vars_);
        q.terms_ = std::move(quot);
        return q.mul_term(ac / bc, 1);
    }

    bool divisible_by(const MultiPoly& b) const { return try_exact_div(b).has_value(); }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            bool neg = t.c.sign() < 0;
            Rational a = neg ? -t.c : t.c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            bool unit_mono = t.m.is_one();
            if (unit_mono) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + "*";
                out += t.m.to_string(vars_);
            }
        }
        return out;
    }

private:
    static const VarTable& pick_table(const MultiPoly& a, const MultiPoly& b)
    {
        require_same_table(a.vars_, b.vars_);
        return a.vars_;
    }

    // Dropping a variable that has the same exponent in every term keeps the order.
    MultiPoly from_sorted(std::vector<Term> ts) const
    {
        MultiPoly r(vars_);
        r.terms_ = std::move(ts);
        return r;
    }

    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract)
    {
        MultiPoly r(pick_table(a, b));
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = Monomial::compare(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const Term& t = b.terms_[j++];
                r.terms_.push_back({t.m, subtract ? -t.c : t.c});
            } else {
                Rational s = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.size(); ++j) {
            const Term& t = b.terms_[j];
            r.terms_.push_back({t.m, subtract ? -t.c : t.c});
        }
        return r;
    }

    VarTable vars_;
    std::vector<Term> terms_;
};

/// Shorthand for a variable over the canonical table.
inline MultiPoly var(std::string_view name) { return MultiPoly::var(name); }

/// Single-term polynomial from name/exponent pairs, e.g. mono({{"x0",2},{"p",-1}}).
inline MultiPoly mono(std::initializer_list<std::pair<std::string_view, int>> exps, const Rational& c = 1,
                      const VarTable& vars = VarTable::canonical())
{
    Monomial m;
    for (const auto& [n, e] : exps) m.set(vars.index(n), m[vars.index(n)] + e);
    return MultiPoly::monomial(m, c, vars);
}

} // namespace hecke

#endif
