#ifndef HECKE_SPHERICAL_HPP
#define HECKE_SPHERICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/delta_series.hpp"
#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"

namespace hecke {

/// Which spherical variables (z0, z1, ..., zg) a map lands in, and whether p
/// stays symbolic or is pinned to a number (the fast numeric mode).
struct SphericalContext {
    int genus = 2;
    char family = 'x';
    std::optional<Rational> p_value;
    VarTable vars = VarTable::canonical();
    std::string series_var = "X";

    std::string zname(int i) const { return std::string(1, family) + std::to_string(i); }
    MultiPoly z(int i) const { return MultiPoly::var(zname(i), vars); }
    MultiPoly p() const { return p_value ? MultiPoly(vars, *p_value) : MultiPoly::var("p", vars); }
    MultiPoly X() const { return MultiPoly::var(series_var, vars); }
    MultiPoly one() const { return MultiPoly(vars, Rational(1)); }
};

inline SphericalContext make_context(int genus, char family, std::optional<Rational> p_value = std::nullopt)
{
    SphericalContext ctx;
    ctx.genus = genus;
    ctx.family = family;
    ctx.p_value = std::move(p_value);
    return ctx;
}

/// Substitutes the numeric prime, if the context has one.
inline MultiPoly specialize(const MultiPoly& f, const SphericalContext& ctx)
{
    if (!ctx.p_value) return f;
    return f.substitute({{"p", ctx.p()}});
}

inline RationalFn specialize(const RationalFn& f, const SphericalContext& ctx)
{
    if (!ctx.p_value) return f;
    return f.substitute({{"p", ctx.p()}});
}

namespace detail {
inline void require_genus(const SphericalContext& ctx, std::initializer_list<int> allowed)
{
    for (int g : allowed)
        if (ctx.genus == g) return;
    throw Error(Errc::unsupported_genus, "genus " + std::to_string(ctx.genus));
}
} // namespace detail

/// Generator images as Laurent polynomials (p may appear inverted).
/// genus 2: "T" = T(p), "T1" = T_1(p^2), "P" = T_2(p^2) = [p]_2; genus 1: "T", "P" = [p]_1.
inline std::map<std::string, MultiPoly> omega_images(const SphericalContext& ctx)
{
    detail::require_genus(ctx, {1, 2});
    const MultiPoly p = ctx.p(), z0 = ctx.z(0), z1 = ctx.z(1), one = ctx.one();
    std::map<std::string, MultiPoly> out;
    if (ctx.genus == 1) {
        out.emplace("T", z0 * (one + z1));
        // fixed by the g = 1 Hecke-Shimura series under the map
        out.emplace("P", z0 * z0 * z1 * p.pow(-1));
        return out;
    }
    const MultiPoly z2 = ctx.z(2);
    const MultiPoly p2 = p * p;
    out.emplace("T", z0 * (one + z1) * (one + z2));
    out.emplace("T1", z0 * z0 * ((z1 * z1 * z2 + z1 * z2 * z2) * p2 + z1 * z2 * p2 - z1 * z2 + (z1 + z2) * p2) *
                          p.pow(-3));
    out.emplace("P", z0 * z0 * z1 * z2 * p.pow(-3));
    return out;
}

inline std::map<std::string, RationalFn> omega_generator_images(const SphericalContext& ctx)
{
    std::map<std::string, RationalFn> out;
    for (auto& [k, v] : omega_images(ctx)) out.emplace(k, RationalFn(std::move(v)));
    return out;
}

/// The 2^g factors (1 - z0 prod_{i in S} z_i X), S running over subsets of {1..g}
/// in binary order.
inline std::vector<MultiPoly> spinor_denominator(int genus, char family, const std::string& series_var = "X",
                                                 const VarTable& vars = VarTable::canonical())
{
    if (genus < 1) throw Error(Errc::unsupported_genus, "genus " + std::to_string(genus));
    std::vector<MultiPoly> out;
    for (unsigned s = 0; s < (1u << genus); ++s) {
        Monomial m = Monomial::var(vars.index(std::string(1, family) + "0"));
        for (int i = 1; i <= genus; ++i)
            if (s & (1u << (i - 1))) m = m * Monomial::var(vars.index(std::string(1, family) + std::to_string(i)));
        m = m * Monomial::var(vars.index(series_var));
        out.push_back(MultiPoly(vars, Rational(1)) - MultiPoly::monomial(m, 1, vars));
    }
    return out;
}

/// (1 - z0^2 z1 z2 X^2 / p) / prod (1 - z0 z_S X).
inline RationalFn andrianov_series_genus2(const SphericalContext& ctx)
{
    detail::require_genus(ctx, {2});
    MultiPoly z0 = ctx.z(0), X = ctx.X();
    MultiPoly num = ctx.one() - z0 * z0 * ctx.z(1) * ctx.z(2) * ctx.p().pow(-1) * X * X;
    return RationalFn::from_factors(num, spinor_denominator(2, ctx.family, ctx.series_var, ctx.vars));
}

inline DeltaSeries genus2_delta_form(const SphericalContext& ctx)
{
    return partial_fractions(andrianov_series_genus2(ctx), ctx.series_var);
}

/// z0^delta (1 - z1^(delta+1)) / (1 - z1) as two geometric families.
inline DeltaSeries genus1_delta_form(const SphericalContext& ctx)
{
    detail::require_genus(ctx, {1});
    const MultiPoly one = ctx.one(), z1 = ctx.z(1);
    DeltaSeries d(ctx.vars);
    Monomial b0 = Monomial::var(ctx.vars.index(ctx.zname(0)));
    Monomial b1 = b0 * Monomial::var(ctx.vars.index(ctx.zname(1)));
    d.add(RationalFn(one, one - z1), b0);
    d.add(RationalFn(-z1, one - z1), b1);
    return d;
}

/// sum_delta Omega(T(p^{m delta})) X^delta in closed form.
inline RationalFn power_series_closed_form(const SphericalContext& ctx, int m)
{
    MultiPoly one = ctx.one();
    return resum(delta_power_substitute(genus2_delta_form(ctx), m), ctx.series_var)
        .reduce_known_factors({one - ctx.z(1), one - ctx.z(2), ctx.z(1) - ctx.z(2), one - ctx.z(1) * ctx.z(2), ctx.p()});
}

/// A Weyl group generator: a transposition z_i <-> z_j, or the inversion
/// sigma_i: z_i -> 1/z_i, z0 -> z0 z_i.
struct WeylElement {
    enum class Kind { swap, invert } kind;
    int i = 1;
    int j = 2;

    static WeylElement transposition(int i, int j) { return {Kind::swap, i, j}; }
    static WeylElement inversion(int i) { return {Kind::invert, i, 0}; }
};

inline std::map<std::string, MultiPoly> weyl_bindings(const SphericalContext& ctx, const WeylElement& w)
{
    detail::require_genus(ctx, {1, 2});
    auto check = [&](int i) {
        if (i < 1 || i > ctx.genus) throw Error(Errc::invalid_argument, "Weyl index " + std::to_string(i));
    };
    if (w.kind == WeylElement::Kind::swap) {
        check(w.i);
        check(w.j);
        return {{ctx.zname(w.i), ctx.z(w.j)}, {ctx.zname(w.j), ctx.z(w.i)}};
    }
    check(w.i);
    return {{ctx.zname(w.i), ctx.z(w.i).pow(-1)}, {ctx.zname(0), ctx.z(0) * ctx.z(w.i)}};
}

inline RationalFn weyl_apply(const SphericalContext& ctx, const WeylElement& w, const RationalFn& f)
{
    return f.substitute(weyl_bindings(ctx, w));
}

inline MultiPoly weyl_apply(const SphericalContext& ctx, const WeylElement& w, const MultiPoly& f)
{
    return f.substitute(weyl_bindings(ctx, w));
}

/// Generators of the full Weyl group for the context's genus.
inline std::vector<WeylElement> weyl_generators(const SphericalContext& ctx)
{
    std::vector<WeylElement> out;
    for (int i = 1; i <= ctx.genus; ++i) out.push_back(WeylElement::inversion(i));
    if (ctx.genus == 2) out.push_back(WeylElement::transposition(1, 2));
    return out;
}

inline bool weyl_invariant(const SphericalContext& ctx, const MultiPoly& f)
{
    for (const auto& w : weyl_generators(ctx))
        if (weyl_apply(ctx, w, f) != f) return false;
    return true;
}

} // namespace hecke

#endif
