#ifndef HECKE_INVERSE_SATAKE_HPP
#define HECKE_INVERSE_SATAKE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

enum class SolveMethod { triangular, bareiss };

/// Generator monomials T^a T1^b P^c (genus 2) or T^a P^c (genus 1) of
/// z0-weight w, in descending generator order.
inline std::vector<GenExp> weight_basis(int genus, int w)
{
    std::vector<GenExp> out;
    if (w < 0) return out;
    if (genus == 1) {
        for (int c = 0; 2 * c <= w; ++c) out.push_back(GenExp{w - 2 * c, c, 0, 0, 0, 0});
    } else if (genus == 2) {
        for (int b = 0; 2 * b <= w; ++b)
            for (int c = 0; 2 * (b + c) <= w; ++c) out.push_back(GenExp{w - 2 * b - 2 * c, b, c, 0, 0, 0});
    } else {
        throw Error(Errc::unsupported_genus, "genus " + std::to_string(genus));
    }
    std::sort(out.begin(), out.end(), GenExpGreater());
    return out;
}

namespace detail {

using ZKey = std::pair<int, int>;  // (z1, z2) exponents
using ZGrouped = std::map<ZKey, MultiPoly, std::greater<ZKey>>;

// f = z0^w * sum_key z1^e1 z2^e2 * C_key, with C_key free of the z-group.
inline ZGrouped group_by_z(const MultiPoly& f, const SphericalContext& ctx, int w)
{
    const auto& vars = f.vars();
    std::size_t i0 = vars.index(ctx.zname(0)), i1 = vars.index(ctx.zname(1));
    std::size_t i2 = ctx.genus == 2 ? vars.index(ctx.zname(2)) : i1;
    std::map<ZKey, std::vector<Term>, std::greater<ZKey>> buckets;
    for (const auto& t : f.terms()) {
        if (t.m[i0] != w)
            throw Error(Errc::not_homogeneous, "term " + t.m.to_string(vars) + " has " + ctx.zname(0) + "-degree " +
                                                   std::to_string(t.m[i0]) + ", expected " + std::to_string(w));
        ZKey k{t.m[i1], ctx.genus == 2 ? t.m[i2] : 0};
        Monomial rest = t.m;
        rest.set(i0, 0);
        rest.set(i1, 0);
        if (ctx.genus == 2) rest.set(i2, 0);
        buckets[k].push_back({rest, t.c});
    }
    ZGrouped out;
    for (auto& [k, ts] : buckets) out.emplace(k, MultiPoly::from_terms(std::move(ts), vars));
    return out;
}

inline bool only_p(const MultiPoly& c)
{
    std::size_t ip = c.vars().index("p");
    for (const auto& t : c.terms()) {
        Monomial m = t.m;
        m.set(ip, 0);
        if (!m.is_one()) return false;
    }
    return true;
}

// Leading-term elimination under lex order on (z1, z2). Coefficients may
// involve any variable outside ctx's z-group.
inline std::vector<std::pair<GenExp, MultiPoly>> triangular_solve(const MultiPoly& f, const SphericalContext& ctx,
                                                                  int w)
{
    std::vector<std::pair<GenExp, MultiPoly>> out;
    if (f.is_zero()) return out;
    ZGrouped rem = group_by_z(f, ctx, w);
    ImagePowers pw(ctx, plain_of(ctx.genus));
    while (!rem.empty()) {
        auto [key, C] = *rem.begin();
        auto [e1, e2] = key;
        GenExp g{};
        if (ctx.genus == 2) {
            g = GenExp{2 * e2 - w, e1 - e2, w - e1, 0, 0, 0};
        } else {
            g = GenExp{2 * e1 - w, w - e1, 0, 0, 0, 0};
        }
        for (int x : g)
            if (x < 0)
                throw Error(Errc::not_in_image, "leading exponent (" + std::to_string(e1) + "," + std::to_string(e2) +
                                                    ") at weight " + std::to_string(w) + " matches no generator monomial");
        ZGrouped img = group_by_z(pw.monomial_image(g, 0), ctx, w);
        const MultiPoly& lc = img.begin()->second;
        if (img.begin()->first != key || !lc.is_monomial())
            throw Error(Errc::not_in_image, "unexpected leading term of a basis image");
        MultiPoly K = C * lc.pow(-1);
        for (const auto& [k, c] : img) {
            MultiPoly d = K * c;
            auto it = rem.find(k);
            if (it == rem.end()) {
                rem.emplace(k, -d);
            } else {
                it->second -= d;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        if (rem.count(key)) throw Error(Errc::not_in_image, "elimination did not clear the leading term");
        out.emplace_back(g, std::move(K));
        if (out.size() > 10000) throw Error(Errc::not_in_image, "elimination does not terminate");
    }
    return out;
}

inline MultiPoly as_polynomial(const RationalFn& f)
{
    try {
        return f.to_polynomial();
    } catch (const Error&) {
        throw Error(Errc::not_in_image, "not a Laurent polynomial: " + f.to_string());
    }
}

inline MultiPoly clear_p_denominators(std::vector<MultiPoly>& row, const VarTable& vars)
{
    std::size_t ip = vars.index("p");
    int lo = 0;
    for (const auto& e : row)
        if (!e.is_zero()) lo = std::min(lo, e.min_degree_in(ip));
    MultiPoly shift = MultiPoly::monomial(Monomial::var(ip, -lo), 1, vars);
    for (auto& e : row) e = e * shift;
    return shift;
}

} // namespace detail

/// Fraction-free elimination over Q[p] on the basis images; only for plain
/// (non-tensor) targets whose coefficients lie in Q[p^{+-1}].
inline HeckeElement bareiss_inverse_satake(const MultiPoly& f, int w, const SphericalContext& ctx)
{
    const VarTable& vars = ctx.vars;
    auto basis = weight_basis(ctx.genus, w);
    detail::ImagePowers pw(ctx, plain_of(ctx.genus));
    std::vector<detail::ZGrouped> cols;
    for (const auto& g : basis) cols.push_back(detail::group_by_z(pw.monomial_image(g, 0), ctx, w));
    detail::ZGrouped target = detail::group_by_z(f, ctx, w);
    std::map<detail::ZKey, int, std::greater<detail::ZKey>> rows;
    for (const auto& c : cols)
        for (const auto& kv : c) rows.emplace(kv.first, 0);
    for (const auto& kv : target) {
        if (!rows.count(kv.first))
            throw Error(Errc::not_in_image, "target monomial outside the span of the weight-" + std::to_string(w) +
                                                " basis");
        if (!detail::only_p(kv.second)) throw Error(Errc::not_in_image, "coefficient outside Q[p^{+-1}]");
    }
    const std::size_t n = basis.size();
    std::vector<std::vector<MultiPoly>> A;
    for (const auto& [key, unused] : rows) {
        std::vector<MultiPoly> row;
        for (const auto& c : cols) {
            auto it = c.find(key);
            row.push_back(it == c.end() ? MultiPoly(vars) : it->second);
        }
        auto it = target.find(key);
        row.push_back(it == target.end() ? MultiPoly(vars) : it->second);
        detail::clear_p_denominators(row, vars);
        A.push_back(std::move(row));
    }
    const std::size_t m = A.size();
    MultiPoly prev(vars, Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < m && A[piv][k].is_zero()) ++piv;
        if (piv == m) throw Error(Errc::invalid_argument, "basis images are linearly dependent");
        std::swap(A[k], A[piv]);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).exact_div(prev);
            A[i][k] = MultiPoly(vars);
        }
        prev = A[k][k];
    }
    for (std::size_t i = n; i < m; ++i)
        if (!A[i][n].is_zero()) throw Error(Errc::not_in_image, "inconsistent linear system");
    std::vector<MultiPoly> x(n, MultiPoly(vars));
    for (std::size_t i = n; i-- > 0;) {
        MultiPoly r = A[i][n];
        for (std::size_t j = i + 1; j < n; ++j) r -= A[i][j] * x[j];
        auto q = r.try_exact_div(A[i][i]);
        if (!q) throw Error(Errc::not_in_image, "solution has a non-polynomial coefficient in p");
        x[i] = std::move(*q);
    }
    HeckeElement out(plain_of(ctx.genus));
    for (std::size_t i = 0; i < n; ++i) out.add_term(basis[i], x[i]);
    return out;
}

/// The Hecke element of weight w whose Omega-image is f.
inline HeckeElement inverse_satake(const RationalFn& f, int w, const SphericalContext& ctx,
                                   SolveMethod method = SolveMethod::triangular)
{
    detail::require_genus(ctx, {1, 2});
    MultiPoly g = detail::as_polynomial(f);
    detail::group_by_z(g, ctx, w);  // homogeneity first
    if (!weyl_invariant(ctx, g)) throw Error(Errc::not_invariant, "input is not Weyl-invariant");
    if (method == SolveMethod::bareiss) return bareiss_inverse_satake(g, w, ctx);
    HeckeElement out(plain_of(ctx.genus));
    for (auto& [gexp, K] : detail::triangular_solve(g, ctx, w)) {
        if (!detail::only_p(K)) throw Error(Errc::not_in_image, "coefficient outside Q[p^{+-1}]");
        out.add_term(gexp, K);
    }
    return out;
}

/// Tensor version: y-side first with coefficients in the x-group, then x-side.
inline HeckeElement inverse_satake_tensor(const MultiPoly& f, int wx, int wy, const SphericalContext& cx,
                                          const SphericalContext& cy, bool check_invariance = true)
{
    detail::require_genus(cx, {1, 2});
    if (cx.genus != cy.genus || cx.family == cy.family)
        throw Error(Errc::alphabet_mismatch, "tensor solve needs two contexts of one genus over disjoint groups");
    detail::group_by_z(f, cx, wx);
    detail::group_by_z(f, cy, wy);
    if (check_invariance && !(weyl_invariant(cx, f) && weyl_invariant(cy, f)))
        throw Error(Errc::not_invariant, "input is not invariant under both Weyl groups");
    std::size_t n = cx.genus == 1 ? 2 : 3;
    HeckeElement out(tensor_of(cx.genus));
    for (auto& [gy, Ky] : detail::triangular_solve(f, cy, wy)) {
        for (auto& [gx, K] : detail::triangular_solve(Ky, cx, wx)) {
            if (!detail::only_p(K)) throw Error(Errc::not_in_image, "coefficient outside Q[p^{+-1}]");
            GenExp e{};
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = gx[i];
                e[n + i] = gy[i];
            }
            out.add_term(e, K);
        }
    }
    return out;
}

inline HeckeElement inverse_satake_tensor(const RationalFn& f, int wx, int wy, const SphericalContext& cx,
                                          const SphericalContext& cy, bool check_invariance = true)
{
    return inverse_satake_tensor(detail::as_polynomial(f), wx, wy, cx, cy, check_invariance);
}

} // namespace hecke

#endif
