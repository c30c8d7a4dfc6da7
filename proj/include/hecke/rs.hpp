#ifndef HECKE_RS_HPP
#define HECKE_RS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hecke/appendix.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/hecke_parse.hpp"
#include "hecke/identities.hpp"
#include "hecke/inverse_satake.hpp"
#include "hecke/parallel.hpp"
#include "hecke/rankin.hpp"

namespace hecke {

struct DerivedRS {
    HeckeSeriesPoly R;
    HeckeSeriesPoly S;
    MultiPoly D;    // Omega(S), the expanded 16-factor product
    MultiPoly N;    // closed form times D
    MultiPoly Q12;  // N / (1 - x0^2 y0^2 x1 y1 x2 y2 X^2)
    bool s_image_matches = false;   // Omega(S) == D
    bool r_image_matches = false;   // Omega((1 - p^6 P(x)P X^2) R) == N
    bool identity_holds = false;    // Omega(...)R / Omega(S) == closed form
};

namespace detail {
inline HeckeSeriesPoly solve_coefficients(const MultiPoly& f, const SphericalContext& cx, const SphericalContext& cy)
{
    const std::size_t xi = cx.vars.index(cx.series_var);
    int d = f.degree_in(xi);
    HeckeSeriesPoly out;
    out.alphabet = tensor_of(cx.genus);
    out.coeffs.assign(static_cast<std::size_t>(d + 1), HeckeElement(out.alphabet));
    parallel_for(static_cast<std::size_t>(d + 1), [&](std::size_t i) {
        out.coeffs[i] = inverse_satake_tensor(f.coeff_in(xi, static_cast<int>(i)), static_cast<int>(i),
                                              static_cast<int>(i), cx, cy);
    });
    out.trim();
    return out;
}
} // namespace detail

/// R and S by inverse Satake on the X-coefficients of the 16-factor product
/// and of the reduced numerator.
inline DerivedRS derive_RS(const SphericalContext& cx, const SphericalContext& cy)
{
    detail::require_genus(cx, {2});
    DerivedRS out;
    RationalFn closed = rankin_closed_form(cx, cy);
    RankinReduced red = rankin_reduce(closed, cx, cy);
    MultiPoly D = cx.one();
    for (const auto& f : red.poles) D = D * f;
    out.D = D;
    out.N = (closed * RationalFn(D)).to_polynomial();
    MultiPoly Q = detail::parse_poly_in(printed::rankin_quadratic_factor(), cx);
    out.Q12 = out.N.exact_div(Q);

    out.S = detail::solve_coefficients(D, cx, cy);
    out.R = detail::solve_coefficients(out.Q12, cx, cy);

    const Alphabet a = Alphabet::genus2_tensor;
    HeckeSeriesPoly qs;
    qs.alphabet = a;
    qs.coeffs = {HeckeElement::constant(a, MultiPoly(cx.vars, Rational(1))), HeckeElement(a), -specialize(pp6(), cx)};
    MultiPoly oq = omega_apply_series(qs, cx, cy);
    MultiPoly oS = omega_apply_series(out.S, cx, cy);
    MultiPoly oR = omega_apply_series(out.R, cx, cy);
    out.s_image_matches = oS == D;
    out.r_image_matches = oq * oR == out.N;
    out.identity_holds = rf_equal(RationalFn(oq * oR) / RationalFn(oS), closed);
    return out;
}

struct FunctionalEquationReport {
    std::vector<bool> holds;  // i = 0..8
    bool all() const
    {
        for (bool b : holds)
            if (!b) return false;
        return holds.size() == 9;
    }
};

inline FunctionalEquationReport functional_equation_check(const HeckeSeriesPoly& S,
                                                          const SphericalContext& ctx = make_context(2, 'x'))
{
    if (S.degree() != 16) throw Error(Errc::invalid_argument, "S must have degree 16");
    FunctionalEquationReport rep;
    HeckeElement m = specialize(pp6(), ctx);
    for (int i = 0; i <= 8; ++i) rep.holds.push_back(S.at(16 - i) == m.pow(8 - i) * S.at(i));
    return rep;
}

struct DiffEntry {
    char series = 'r';
    int index = 0;
    std::string derived;
    std::string transcribed;
    bool equal = false;
    std::string difference;           // transcribed - derived, when unequal
    std::string note;                 // suspect label, empty if none
    std::optional<int> alternative;   // index of a matching alternative reading
    bool generated = false;           // s_9..s_16, from the functional equation
};

inline std::vector<DiffEntry> appendix_diff(const DerivedRS& d, const SphericalContext& ctx = make_context(2, 'x'))
{
    std::vector<DiffEntry> out;
    AppendixRS t = appendix_RS_transcribed();
    const Alphabet a = Alphabet::genus2_tensor;
    auto add = [&](char series, int i, const HeckeElement& der, const HeckeElement& tr) {
        DiffEntry e;
        e.series = series;
        e.index = i;
        HeckeElement trs = specialize(tr, ctx);
        e.derived = der.to_string();
        e.transcribed = trs.to_string();
        e.equal = der == trs;
        if (!e.equal) e.difference = (trs - der).to_string();
        if (const TranscribedCoeff* c = appendix_entry(series, i)) {
            e.note = c->note;
            for (std::size_t k = 0; k < c->alternatives.size() && !e.equal; ++k)
                if (specialize(parse_hecke(c->alternatives[k], a), ctx) == der) e.alternative = static_cast<int>(k);
        }
        e.generated = series == 's' && i > 8;
        if (e.generated && e.note.empty()) e.note = "generated from s" + std::to_string(16 - i);
        out.push_back(std::move(e));
    };
    for (int i = 1; i <= 12; ++i) add('r', i, d.R.at(i), t.R.at(i));
    for (int i = 1; i <= 16; ++i) add('s', i, d.S.at(i), t.S.at(i));
    return out;
}

/// Remark-style genus-1 statement: the tensor series built from the genus-1
/// forms against the printed numerator and denominator.
struct Genus1TensorReport {
    bool identity_holds = false;
    bool numerator_matches = false;
    bool denominator_matches = false;
    HeckeSeriesPoly derived_numerator;
    HeckeSeriesPoly derived_denominator;
};

inline Genus1TensorReport genus1_tensor_identity_check(const SphericalContext& cx, const SphericalContext& cy)
{
    Genus1TensorReport rep;
    RationalFn closed = rankin_closed_form(cx, cy);
    RankinReduced red = rankin_reduce(closed, cx, cy);
    MultiPoly D = cx.one();
    for (const auto& f : red.poles) D = D * f;
    MultiPoly N = (closed * RationalFn(D)).to_polynomial();
    rep.derived_numerator = detail::solve_coefficients(N, cx, cy);
    rep.derived_denominator = detail::solve_coefficients(D, cx, cy);
    auto num = hecke_series_from_strings(printed::genus1_tensor_numerator(), Alphabet::genus1_tensor);
    auto den = hecke_series_from_strings(printed::genus1_tensor_denominator(), Alphabet::genus1_tensor);
    auto same = [&](const HeckeSeriesPoly& a, const HeckeSeriesPoly& b) {
        if (a.degree() != b.degree()) return false;
        for (int i = 0; i <= a.degree(); ++i)
            if (!(a.at(i) == specialize(b.at(i), cx))) return false;
        return true;
    };
    rep.numerator_matches = same(rep.derived_numerator, num);
    rep.denominator_matches = same(rep.derived_denominator, den);
    rep.identity_holds = rf_equal(RationalFn(omega_apply_series(num, cx, cy)) /
                                      RationalFn(omega_apply_series(den, cx, cy)),
                                  closed);
    return rep;
}

} // namespace hecke

#endif
