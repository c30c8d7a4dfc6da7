#ifndef HECKE_NEWTON_HPP
#define HECKE_NEWTON_HPP

#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/rational.hpp"

namespace hecke {

struct NewtonPolygon {
    std::vector<std::pair<int, int>> points;    // (i, v(c_i)), nonzero c_i
    std::vector<std::pair<int, int>> vertices;  // lower hull
    std::vector<Rational> slopes;

    bool slopes_integral() const
    {
        for (const auto& s : slopes)
            if (!s.is_integer()) return false;
        return true;
    }
    std::pair<int, int> terminal() const { return vertices.back(); }
};

namespace detail {
// Exponent of the prime in a nonzero rational.
inline int padic_valuation(const Rational& r, unsigned long prime)
{
    auto v = [&](mpz_class z) {
        int k = 0;
        z = abs(z);
        while (z != 0 && mpz_divisible_ui_p(z.get_mpz_t(), prime)) {
            z /= prime;
            ++k;
        }
        return k;
    };
    return v(r.numerator()) - v(r.denominator());
}
} // namespace detail

/// Smallest exponent of p over all terms of all coefficients; with a numeric
/// prime the p-adic valuation of the integer coefficients instead.
inline int min_p_valuation(const HeckeElement& e, std::optional<unsigned long> prime = std::nullopt)
{
    if (e.is_zero()) throw Error(Errc::invalid_argument, "valuation of zero");
    int v = INT_MAX;
    for (const auto& [g, c] : e.terms()) {
        std::size_t ip = c.vars().index("p");
        for (const auto& t : c.terms()) {
            int w = t.m[ip];
            if (prime) w += detail::padic_valuation(t.c, *prime);
            v = std::min(v, w);
        }
    }
    return v;
}

inline NewtonPolygon newton_polygon(const HeckeSeriesPoly& poly, std::optional<unsigned long> prime = std::nullopt)
{
    NewtonPolygon np;
    for (int i = 0; i <= poly.degree(); ++i) {
        HeckeElement c = poly.at(i);
        if (!c.is_zero()) np.points.emplace_back(i, min_p_valuation(c, prime));
    }
    if (np.points.empty()) throw Error(Errc::invalid_argument, "Newton polygon of the zero polynomial");
    // monotone chain, lower part
    auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
        return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
               static_cast<long long>(a.second - o.second) * (b.first - o.first);
    };
    for (const auto& pt : np.points) {
        while (np.vertices.size() >= 2 && cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0)
            np.vertices.pop_back();
        np.vertices.push_back(pt);
    }
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        auto [i0, v0] = np.vertices[k - 1];
        auto [i1, v1] = np.vertices[k];
        np.slopes.push_back(Rational(v1 - v0) / Rational(i1 - i0));
    }
    return np;
}

} // namespace hecke

#endif
