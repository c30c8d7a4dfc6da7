#ifndef HECKE_HECKE_ELEMENT_HPP
#define HECKE_HECKE_ELEMENT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

enum class Alphabet { genus1, genus2, genus1_tensor, genus2_tensor };

inline std::string alphabet_name(Alphabet a)
{
    switch (a) {
    case Alphabet::genus1: return "genus1";
    case Alphabet::genus2: return "genus2";
    case Alphabet::genus1_tensor: return "genus1-tensor";
    case Alphabet::genus2_tensor: return "genus2-tensor";
    }
    return "?";
}

inline int alphabet_genus(Alphabet a) { return a == Alphabet::genus1 || a == Alphabet::genus1_tensor ? 1 : 2; }
inline bool alphabet_is_tensor(Alphabet a) { return a == Alphabet::genus1_tensor || a == Alphabet::genus2_tensor; }
inline Alphabet tensor_of(int genus) { return genus == 1 ? Alphabet::genus1_tensor : Alphabet::genus2_tensor; }
inline Alphabet plain_of(int genus) { return genus == 1 ? Alphabet::genus1 : Alphabet::genus2; }

/// Generator symbols in exponent-vector order.
inline const std::vector<std::string>& generator_names(Alphabet a)
{
    static const std::vector<std::string> g1{"T", "P"};
    static const std::vector<std::string> g2{"T", "T1", "P"};
    static const std::vector<std::string> t1{"T⊗1", "P⊗1", "1⊗T", "1⊗P"};
    static const std::vector<std::string> t2{"T⊗1", "T1⊗1", "P⊗1", "1⊗T", "1⊗T1", "1⊗P"};
    switch (a) {
    case Alphabet::genus1: return g1;
    case Alphabet::genus2: return g2;
    case Alphabet::genus1_tensor: return t1;
    case Alphabet::genus2_tensor: return t2;
    }
    return g2;
}

/// z0-weight of each plain generator: T -> 1, T1 and P -> 2.
inline int generator_weight(int genus, std::size_t slot)
{
    if (genus == 1) return slot == 0 ? 1 : 2;
    return slot == 0 ? 1 : 2;
}

using GenExp = std::array<int, 6>;

struct GenExpGreater {
    bool operator()(const GenExp& a, const GenExp& b) const
    {
        int da = 0, db = 0;
        for (int i = 0; i < 6; ++i) {
            da += a[static_cast<std::size_t>(i)];
            db += b[static_cast<std::size_t>(i)];
        }
        if (da != db) return da > db;
        return a > b;
    }
};

/// Element of the free commutative algebra on an alphabet's generators,
/// coefficients Laurent polynomials in p.
class HeckeElement {
public:
    explicit HeckeElement(Alphabet a = Alphabet::genus2) : alpha_(a) {}

    static HeckeElement constant(Alphabet a, const MultiPoly& c)
    {
        HeckeElement e(a);
        if (!c.is_zero()) e.terms_.emplace(GenExp{}, c);
        return e;
    }

    static HeckeElement gen(Alphabet a, const std::string& name, int power = 1)
    {
        const auto& names = generator_names(a);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) {
                GenExp g{};
                g[i] = power;
                HeckeElement e(a);
                e.terms_.emplace(g, MultiPoly(Rational(1)));
                return e;
            }
        }
        throw Error(Errc::alphabet_mismatch, "no generator '" + name + "' in " + alphabet_name(a));
    }

    static HeckeElement monomial(Alphabet a, const GenExp& g, const MultiPoly& c)
    {
        HeckeElement e(a);
        if (!c.is_zero()) e.terms_.emplace(g, c);
        return e;
    }

    Alphabet alphabet() const noexcept { return alpha_; }
    const std::map<GenExp, MultiPoly, GenExpGreater>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    MultiPoly coefficient(const GenExp& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? MultiPoly() : it->second;
    }

    void add_term(const GenExp& g, const MultiPoly& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(g, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b)
    {
        check(a, b);
        HeckeElement r = a;
        for (const auto& [g, c] : b.terms_) r.add_term(g, c);
        return r;
    }
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }
    HeckeElement operator-() const
    {
        HeckeElement r(alpha_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b)
    {
        check(a, b);
        HeckeElement r(a.alpha_);
        for (const auto& [ga, ca] : a.terms_) {
            for (const auto& [gb, cb] : b.terms_) {
                GenExp g;
                for (std::size_t i = 0; i < 6; ++i) g[i] = ga[i] + gb[i];
                r.add_term(g, ca * cb);
            }
        }
        return r;
    }

    HeckeElement scaled(const MultiPoly& c) const
    {
        HeckeElement r(alpha_);
        for (const auto& [g, k] : terms_) r.add_term(g, k * c);
        return r;
    }

    HeckeElement pow(int k) const
    {
        HeckeElement r = constant(alpha_, MultiPoly(Rational(1)));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    HeckeElement& operator+=(const HeckeElement& b) { return *this = *this + b; }
    HeckeElement& operator-=(const HeckeElement& b) { return *this = *this - b; }
    HeckeElement& operator*=(const HeckeElement& b) { return *this = *this * b; }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b)
    {
        if (a.alpha_ != b.alpha_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [g, c] : a.terms_) {
            if (it->first != g || it->second != c) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    /// a (x) b for plain elements of the same genus.
    static HeckeElement tensor(const HeckeElement& a, const HeckeElement& b)
    {
        if (alphabet_is_tensor(a.alpha_) || a.alpha_ != b.alpha_)
            throw Error(Errc::alphabet_mismatch, "tensor needs two plain elements of one genus");
        int g = alphabet_genus(a.alpha_);
        std::size_t n = g == 1 ? 2 : 3;
        HeckeElement r(tensor_of(g));
        for (const auto& [ga, ca] : a.terms_) {
            for (const auto& [gb, cb] : b.terms_) {
                GenExp e{};
                for (std::size_t i = 0; i < n; ++i) {
                    e[i] = ga[i];
                    e[n + i] = gb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    std::string monomial_string(const GenExp& g) const
    {
        auto part = [&](std::size_t from, std::size_t to, const std::vector<std::string>& names) {
            std::string s;
            for (std::size_t i = from; i < to; ++i) {
                if (!g[i]) continue;
                if (!s.empty()) s += "*";
                s += names[i - from];
                if (g[i] != 1) s += "^" + std::to_string(g[i]);
            }
            return s.empty() ? std::string("1") : s;
        };
        if (!alphabet_is_tensor(alpha_)) return part(0, generator_names(alpha_).size(), generator_names(alpha_));
        const auto& plain = generator_names(plain_of(alphabet_genus(alpha_)));
        std::size_t n = plain.size();
        return part(0, n, plain) + "⊗" + part(n, 2 * n, plain);
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [g, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (c.is_one()) {
                out += monomial_string(g);
            } else {
                out += "(" + c.to_string() + ")*" + monomial_string(g);
            }
        }
        return out;
    }

private:
    static void check(const HeckeElement& a, const HeckeElement& b)
    {
        if (a.alpha_ != b.alpha_)
            throw Error(Errc::alphabet_mismatch, alphabet_name(a.alpha_) + " vs " + alphabet_name(b.alpha_));
    }

    Alphabet alpha_;
    std::map<GenExp, MultiPoly, GenExpGreater> terms_;
};

/// sum_i c_i X^i with Hecke-element coefficients.
struct HeckeSeriesPoly {
    Alphabet alphabet = Alphabet::genus2_tensor;
    std::vector<HeckeElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const HeckeElement& operator[](std::size_t i) const { return coeffs[i]; }

    HeckeElement at(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs.size())) return HeckeElement(alphabet);
        return coeffs[static_cast<std::size_t>(i)];
    }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
};

namespace detail {

// Powers of the generator images, cached per exponent.
class ImagePowers {
public:
    ImagePowers(const SphericalContext& ctx, Alphabet plain) : ctx_(ctx)
    {
        auto imgs = omega_images(ctx);
        for (const auto& n : generator_names(plain)) base_.push_back(imgs.at(n));
        cache_.resize(base_.size());
    }

    const MultiPoly& power(std::size_t slot, int e)
    {
        auto& c = cache_[slot];
        if (c.empty()) c.push_back(ctx_.one());
        while (static_cast<int>(c.size()) <= e) c.push_back(c.back() * base_[slot]);
        return c[static_cast<std::size_t>(e)];
    }

    MultiPoly monomial_image(const GenExp& g, std::size_t offset)
    {
        MultiPoly r = ctx_.one();
        for (std::size_t i = 0; i < base_.size(); ++i)
            if (g[offset + i]) r *= power(i, g[offset + i]);
        return r;
    }

    const SphericalContext& context() const { return ctx_; }

private:
    SphericalContext ctx_;
    std::vector<MultiPoly> base_;
    std::vector<std::vector<MultiPoly>> cache_;
};

inline MultiPoly coefficient_image(const MultiPoly& c, const SphericalContext& ctx)
{
    if (!ctx.p_value) return c;
    return c.substitute({{"p", ctx.p()}});
}

} // namespace detail

/// Coefficients with the numeric prime substituted, if the context has one.
inline HeckeElement specialize(const HeckeElement& e, const SphericalContext& ctx)
{
    if (!ctx.p_value) return e;
    HeckeElement out(e.alphabet());
    for (const auto& [g, c] : e.terms()) out.add_term(g, detail::coefficient_image(c, ctx));
    return out;
}

/// Omega on a plain element: the ring homomorphism fixed by the generator images.
inline MultiPoly omega_apply(const HeckeElement& e, const SphericalContext& ctx)
{
    if (alphabet_is_tensor(e.alphabet())) throw Error(Errc::alphabet_mismatch, "tensor element needs two contexts");
    if (alphabet_genus(e.alphabet()) != ctx.genus)
        throw Error(Errc::alphabet_mismatch, alphabet_name(e.alphabet()) + " with genus " + std::to_string(ctx.genus));
    detail::ImagePowers pw(ctx, e.alphabet());
    MultiPoly r(ctx.vars);
    for (const auto& [g, c] : e.terms()) r += detail::coefficient_image(c, ctx) * pw.monomial_image(g, 0);
    return r;
}

/// Omega_x (x) Omega_y on a tensor element.
inline MultiPoly omega_apply(const HeckeElement& e, const SphericalContext& cx, const SphericalContext& cy)
{
    if (!alphabet_is_tensor(e.alphabet())) throw Error(Errc::alphabet_mismatch, "plain element given two contexts");
    int g = alphabet_genus(e.alphabet());
    if (cx.genus != g || cy.genus != g || cx.family == cy.family)
        throw Error(Errc::alphabet_mismatch, "contexts must have the element's genus and disjoint variables");
    Alphabet plain = plain_of(g);
    std::size_t n = generator_names(plain).size();
    detail::ImagePowers px(cx, plain), py(cy, plain);
    MultiPoly r(cx.vars);
    for (const auto& [gexp, c] : e.terms())
        r += detail::coefficient_image(c, cx) * px.monomial_image(gexp, 0) * py.monomial_image(gexp, n);
    return r;
}

inline RationalFn omega_apply_rf(const HeckeElement& e, const SphericalContext& ctx)
{
    return RationalFn(omega_apply(e, ctx));
}

/// Coefficientwise Omega of a series polynomial, as a polynomial in X.
inline MultiPoly omega_apply_series(const HeckeSeriesPoly& s, const SphericalContext& cx, const SphericalContext& cy)
{
    MultiPoly r(cx.vars);
    MultiPoly Xk = cx.one();
    for (const auto& c : s.coeffs) {
        r += omega_apply(c, cx, cy) * Xk;
        Xk *= cx.X();
    }
    return r;
}

inline MultiPoly omega_apply_series(const HeckeSeriesPoly& s, const SphericalContext& ctx)
{
    MultiPoly r(ctx.vars);
    MultiPoly Xk = ctx.one();
    for (const auto& c : s.coeffs) {
        r += omega_apply(c, ctx) * Xk;
        Xk *= ctx.X();
    }
    return r;
}

} // namespace hecke

#endif
