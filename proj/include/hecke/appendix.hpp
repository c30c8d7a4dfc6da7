#ifndef HECKE_APPENDIX_HPP
#define HECKE_APPENDIX_HPP

#include <string>
#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/hecke_parse.hpp"

namespace hecke {

/// One printed coefficient r_i or s_i. `text` is the reading used for the
/// transcribed series; `alternatives` are other readings of the same print.
struct TranscribedCoeff {
    char series;  // 'r' or 's'
    int index;
    std::string text;
    std::string note;  // suspect label or the reason for a repair, empty if clean
    std::vector<std::string> alternatives;
};

// [A|B] is A (x) B; T = T(p), T1 = T_1(p^2), P = [p].
inline const std::vector<TranscribedCoeff>& appendix_table()
{
    static const std::vector<TranscribedCoeff> table{
        {'r', 2,
         "p^2((2p-1)(p^2+1)[P|P] - (p^2-p+1)([T1|P] + [P|T1])) - ([T1|T1] + [T^2|P] + [P|T^2])",
         "suspect (a): unbalanced; closed before \"- (T1(x)T1 + ...)\"",
         {"p^2((2p-1)(p^2+1)[P|P] - (p^2-p+1)([T1|P] + [P|T1]) - ([T1|T1] + [T^2|P] + [P|T^2]))"}},
        {'r', 3, "p^3(p+1)(2[P|P] + [T1|P] + [P|T1])[T|T]", "", {}},
        {'r', 4,
         "-p^5((p^7+2p^6-2p^5+6p^4+p^3+6p^2+p+2)[P^2|P^2]"
         " - (p^2+1)(p^3-3p^2-p-3)([T1|P] + [P|T1])[P|P]"
         " + (p+4)(p^2+1)[T1 P|T1 P] - (p^3-p^2-1)([T1^2|P^2] + [P^2|T1^2])"
         " + ([T1|P] + [P|T1])[T1|T1] - p(p^3+2p^2-p+2)([T^2|P] + [P|T^2])[P|P]"
         " - 2p([T^2|T1] + [T1|T^2])[P|P]"
         " + p^2([T^2 T1|P^2] + [P^2|T^2 T1]) + (p+2)[T^2 P|T^2 P])",
         "",
         {}},
        {'r', 5,
         "-p^7(2(p+1)(2p^4-p^3+p^2-1)[P|P] + (p+1)(p-2)([T1|P] + [P|T1])"
         " - 2[T1|T1] - p(p+1)([T^2|P] + [P|T^2]))[T P|T P]",
         "unbalanced; closed before the trailing T[p](x)T[p] (the only homogeneous reading)",
         {}},
        {'r', 6,
         "-p^10(p(p^2+1)(p^5-2p^3-8p^2-p-4)[P^3|P^3]"
         " - p(p^5+4p^4+2p^3+12p^2+p+6)([T1|P] + [P|T1])[P^2|P^2]"
         " + p(p-4)(p^2+1)[T1 P^2|T1 P^2]"
         " - p(p+4)(p^2+1)([T1^2|P^2] + [P^2|T1^2])[P|P]"
         " - p([T1|P] + [P|T1])[T1 P|T1 P]"
         " - p([T1^3|P^3] + [P^3|T1^3])"
         " - (p^5-4p^2-p-2)([T^2|P] + [P|T^2])[P^2|P^2]"
         " + (p^2+3)([T^2|T1] + [T1|T^2])[P^2|P^2]"
         " + ([T^2 P|T1^2] + [T1^2|T^2 P])[P|P]"
         " + (p^3+3p^2+p+1)([T^2 T1|P^2] + [P^2|T^2 T1])[P|P]"
         " + ([T^2|P] + [P|T^2])[T1 P|T1 P]"
         " + (p^2+1)[T^2 P^2|T^2 P^2])",
         "",
         {}},
        {'r', 7,
         "-p^13(2(p+1)(p^3+p-1)[P|P] - (p+1)(p^2-2p+2)([T1|P] + [P|T1])"
         " - 2[T1|T1] - (p+1)([T^2|P] + [P|T^2]))[T P^2|T P^2]",
         "closing parenthesis moved before the trailing T[p]^2(x)T[p]^2 (the only homogeneous reading)",
         {}},
        {'r', 8,
         "-p^16(p(2p^6+3p^5+6p^4-p^3+6p^2-p+2)[P^2|P^2]"
         " + p(p^2+1)(p^3+3p^2-p+3)([T1|P] + [P|T1])[P|P]"
         " + p(p+4)(p^2+1)[T1 P|T1 P]"
         " + p(p^2-p+1)([T1^2|P^2] + [P^2|T1^2])"
         " + p([T1|P] + [P|T1])[T1|T1]"
         " - p(2p^3+p^2+2p-1)([T^2|P] + [P|T^2])[P|P]"
         " - 2p^2([T^2|T1] + [T1|T^2])[P|P]"
         " + p([T^2 T1|P^2] + [P^2|T^2 T1])"
         " + (2p+1)[T^2 P|T^2 P])[P^2|P^2]",
         "suspect (c): final \"T^2[p](x)T^2[p][p]^2(x)[p]^2\" read as a common factor [p]^2(x)[p]^2",
         {}},
        {'r', 9, "p^20(p+1)(2[P|P] + [T1|P] + [P|T1])[T P^3|T P^3]", "", {}},
        {'r', 10,
         "p^24((p^2+1)(p^4+2p^3-p^2-1)[P|P] + (p^3-p^2-1)([T1|P] + [P|T1])"
         " - [T1|T1] - p^2([T^2|P] + [P|T^2]))[P^4|P^4]",
         "",
         {}},
        {'r', 11, "0", "", {}},
        {'r', 12, "p^34[P^6|P^6]", "", {}},
        {'s', 1, "-[T|T]", "", {}},
        {'s', 2,
         "-p(2p(p^2+1)^2[P|P] + 2p(p^2+1)([T1|P] + [P|T1]) + 2p[T1|T1]"
         " - (p^2+1)([T^2|P] + [P|T^2]) - ([T^2|T1] + [T1|T^2]))",
         "suspect (d): unbalanced; closed at the end",
         {"-p(2p(p^2+1)^2[P|P] + 2p(p^2+1)([T1|P] + [P|T1]) + 2p[T1|T1]"
          " - (p^2+1)([T^2|P] + [P|T^2])) - ([T^2|T1] + [T1|T^2])"}},
        {'s', 3,
         "p^2((2p^4+4p^2-1)[P|P] + (2p^2-1)([T1|P] + [P|T1]) - [T1|T1]"
         " - p([T^2|P] + [P|T^2]))[T|T]",
         "closing parenthesis moved before the trailing T(x)T (the only homogeneous reading)",
         {}},
        {'s', 4,
         "p^4((p^8+12p^6+10p^4+4p^2+1)[P^2|P^2]"
         " + 2(3p^6+5p^4+3p^2+1)([T1|P] + [P|T1])[P|P]"
         " + 4(p^2+1)^2[T1 P|T1 P]"
         " + (3p^4+2p^2+1)([T1^2|P^2] + [P^2|T1^2])"
         " + 2(p^2+1)([T1|P] + [P|T1])[T1|T1]"
         " + [T1^2|T1^2]"
         " - 2p(p^4+4p^2+1)([T^2|P] + [P|T^2])[P|P]"
         " - 4p(p^2+1)([T^2|T1] + [T1|T^2])[P|P]"
         " - 2p([T^2 P|T1^2] + [T1^2|T^2 P])"
         " - 4p^3([T^2 T1|P^2] + [P^2|T^2 T1])"
         " + (p^2+2)[T^2 P|T^2 P]"
         " + ([T1|P] + [P|T1])[T^2|T^2]"
         " + p^2([T^4|P^2] + [P^2|T^4]))",
         "",
         {}},
        {'s', 5,
         "-p^6((6p^6+2p^4-p^2+2)[P^2|P^2]"
         " + (p^4-p^2+3)([T1|P] + [P|T1])[P|P]"
         " + (3p^2+4)[T1 P|T1 P]"
         " - (2p^2-1)([T1^2|P^2] + [P^2|T1^2])"
         " + ([T1|P] + [P|T1])[T1|T1]"
         " - p(2p^2+1)([T^2|P] + [P|T^2])[P|P]"
         " - 2p([T^2|T1] + [T1|T^2])[P|P]"
         " + p([T^2 T1|P^2] + [P^2|T^2 T1])"
         " + [T^2 P|T^2 P])[T|T]",
         "closing parenthesis moved before the trailing T(x)T (the only homogeneous reading)",
         {}},
        {'s', 6,
         "-p^8(2p^2(p^8+6p^6+11p^4+8p^2+2)[P^3|P^3]"
         " + 2p^2(5p^4+12p^2+6)[T1 P^2|T1 P^2]"
         " + (3p^4+10p^2-1)[T^2 P^2|T^2 P^2] - [T^2 T1 P|T^2 T1 P]"
         " + 2p^2(3p^6+11p^4+12p^2+4)([T1|P] + [P|T1])[P^2|P^2]"
         " + 6p^2(p^2+1)^2([T1^2|P^2] + [P^2|T1^2])[P|P]"
         " + 6p^2(p^2+1)([T1|P] + [P|T1])[T1 P|T1 P]"
         " + 2p^2(p^2+1)([T1^3|P^3] + [P^3|T1^3])"
         " + 2p^2([T1^2|P^2] + [P^2|T1^2])[T1|T1]"
         " - p(5p^6+13p^4+10p^2+2)([T^2|P] + [P|T^2])[P^2|P^2]"
         " - p(7p^4+12p^2+4)([T^2|T1] + [T1|T^2])[P^2|P^2]"
         " - 3p(p^2+1)([T^2 P|T1^2] + [T1^2|T^2 P])[P|P]"
         " - p([T^2 P^2|T1^3] + [T1^3|T^2 P^2])"
         " - 2p(3p^4+4p^2+1)([T^2 T1|P^2] + [P^2|T^2 T1])[P|P]"
         " - 2p(3p^2+1)([T^2|P] + [P|T^2])[T1 P|T1 P]"
         " - p(p^2+1)([T^2 T1^2|P^3] + [P^3|T^2 T1^2])"
         " - p([T^2 T1|P^2] + [P^2|T^2 T1])[T1|T1]"
         " + (5p^2-1)([T1|P] + [P|T1])[T^2 P|T^2 P]"
         " + 2p^2(p^2+1)([T^4|P^2] + [P^2|T^4])[P|P]"
         " + 2p^2([T^4|T1 P] + [T1 P|T^4])[P|P]"
         " - p([T^4|T^4 P] + [T^4 P|T^4])[P|P])",
         "unbalanced; closed at the end. Last line has weights (6,8) and (8,6)",
         {"-p^8(2p^2(p^8+6p^6+11p^4+8p^2+2)[P^3|P^3]"
          " + 2p^2(5p^4+12p^2+6)[T1 P^2|T1 P^2]"
          " + (3p^4+10p^2-1)[T^2 P^2|T^2 P^2] - [T^2 T1 P|T^2 T1 P]"
          " + 2p^2(3p^6+11p^4+12p^2+4)([T1|P] + [P|T1])[P^2|P^2]"
          " + 6p^2(p^2+1)^2([T1^2|P^2] + [P^2|T1^2])[P|P]"
          " + 6p^2(p^2+1)([T1|P] + [P|T1])[T1 P|T1 P]"
          " + 2p^2(p^2+1)([T1^3|P^3] + [P^3|T1^3])"
          " + 2p^2([T1^2|P^2] + [P^2|T1^2])[T1|T1]"
          " - p(5p^6+13p^4+10p^2+2)([T^2|P] + [P|T^2])[P^2|P^2]"
          " - p(7p^4+12p^2+4)([T^2|T1] + [T1|T^2])[P^2|P^2]"
          " - 3p(p^2+1)([T^2 P|T1^2] + [T1^2|T^2 P])[P|P]"
          " - p([T^2 P^2|T1^3] + [T1^3|T^2 P^2])"
          " - 2p(3p^4+4p^2+1)([T^2 T1|P^2] + [P^2|T^2 T1])[P|P]"
          " - 2p(3p^2+1)([T^2|P] + [P|T^2])[T1 P|T1 P]"
          " - p(p^2+1)([T^2 T1^2|P^3] + [P^3|T^2 T1^2])"
          " - p([T^2 T1|P^2] + [P^2|T^2 T1])[T1|T1]"
          " + (5p^2-1)([T1|P] + [P|T1])[T^2 P|T^2 P]"
          " + 2p^2(p^2+1)([T^4|P^2] + [P^2|T^4])[P|P]"
          " + 2p^2([T^4|T1 P] + [T1 P|T^4])[P|P]"
          " - p([T^4|T^2 P] + [T^2 P|T^4])[P|P])"}},
        {'s', 7,
         "p^11(p(5p^6-2p^4+2)[T P^3|T P^3]"
         " + 8p[T T1 P^2|T T1 P^2]"
         " + p[T^3 P^2|T^3 P^2]"
         " - p(p^4-3)([T1|P] + [P|T1])[T P^2|T P^2]"
         " - p([T1^2|P^2] + [P^2|T1^2])[T P|T P]"
         " + 2p([T1|P] + [P|T1])[T T1 P|T T1 P]"
         " - p([T1^3|P^3] + [P^3|T1^3])[T|T]"
         " - (3p^4-3p^2+2)([T^2|P] + [P|T^2])[T P^2|T P^2]"
         " + (p^2-3)([T^2|T1] + [T1|T^2])[T P^2|T P^2]"
         " - ([T^2 P|T1^2] + [T1^2|T^2 P])[T P|T P]"
         " + (2p^2-1)([T^2 T1|P^2] + [P^2|T^2 T1])[T P|T P]"
         " - ([T^2|P] + [P|T^2])[T T1 P|T T1 P])",
         "unbalanced; closed at the end",
         {}},
        {'s', 8,
         "p^14(2p^2(2p^8+4p^6+14p^4+12p^2+3)[P^4|P^4]"
         " + 4p^2(p^6+7p^4+9p^2+3)([T1|P] + [P|T1])[P^3|P^3]"
         " + 16p^2(p^2+1)^2[T1 P^3|T1 P^3]"
         " + 2p^2(3p^4+10p^2+5)([T1^2|P^2] + [P^2|T1^2])[P^2|P^2]"
         " + 8p^2(p^2+1)([T1|P] + [P|T1])[T1 P^2|T1 P^2]"
         " + 4p^2[T1^2 P^2|T1^2 P^2]"
         " + 4p^2(p^2+1)([T1^3|P^3] + [P^3|T1^3])[P|P]"
         " + p^2([T1^4|P^4] + [P^4|T1^4])"
         " - 4p(2p^6+3p^4+4p^2+1)([T^2|P] + [P|T^2])[P^3|P^3]"
         " - 8p(p^2+1)^2([T^2|T1] + [T1|T^2])[P^3|P^3]"
         " - 4p(p^2+1)([T^2 P|T1^2] + [T1^2|T^2 P])[P^2|P^2]"
         " - 4p(p^4+4p^2+1)([T^2 T1|P^2] + [P^2|T^2 T1])[P^2|P^2]"
         " - 8p(p^2+1)([T^2|P] + [P|T^2])[T1 P^2|T1 P^2]"
         " - 4p([T^2|T1] + [T1|T^2])[T1 P^2|T1 P^2]"
         " - 4p^3([T^2 T1^2|P^3] + [P^3|T^2 T1^2]) + [P|P]"
         " + 2(5p^4+2p^2+2)[T^2 P^3|T^2 P^3]"
         " + 2(p^2+2)([T1|P] + [P|T1])[T^2 P^2|T^2 P^2]"
         " + 2[T^2 T1 P^2|T^2 T1 P^2]"
         " + ([T1^2|P^2] + [P^2|T1^2])[T^2 P|T^2 P]"
         " + (3p^4+2p^2+1)([T^4|P^2] + [P^2|T^4])[P^2|P^2]"
         " + 2(p^2+1)([T^4|T1 P] + [T1 P|T^4])[P^2|P^2]"
         " + ([T^4|T1^2] + [T1^2|T^4])[P^2|P^2]"
         " - 2p([T^2|P] + [P|T^2])[T^2 P^2|T^2 P^2])",
         "suspect (b): stranded \"+ [p](x)[p]\" kept as printed",
         {"p^14(2p^2(2p^8+4p^6+14p^4+12p^2+3)[P^4|P^4]"
          " + 4p^2(p^6+7p^4+9p^2+3)([T1|P] + [P|T1])[P^3|P^3]"
          " + 16p^2(p^2+1)^2[T1 P^3|T1 P^3]"
          " + 2p^2(3p^4+10p^2+5)([T1^2|P^2] + [P^2|T1^2])[P^2|P^2]"
          " + 8p^2(p^2+1)([T1|P] + [P|T1])[T1 P^2|T1 P^2]"
          " + 4p^2[T1^2 P^2|T1^2 P^2]"
          " + 4p^2(p^2+1)([T1^3|P^3] + [P^3|T1^3])[P|P]"
          " + p^2([T1^4|P^4] + [P^4|T1^4])"
          " - 4p(2p^6+3p^4+4p^2+1)([T^2|P] + [P|T^2])[P^3|P^3]"
          " - 8p(p^2+1)^2([T^2|T1] + [T1|T^2])[P^3|P^3]"
          " - 4p(p^2+1)([T^2 P|T1^2] + [T1^2|T^2 P])[P^2|P^2]"
          " - 4p(p^4+4p^2+1)([T^2 T1|P^2] + [P^2|T^2 T1])[P^2|P^2]"
          " - 8p(p^2+1)([T^2|P] + [P|T^2])[T1 P^2|T1 P^2]"
          " - 4p([T^2|T1] + [T1|T^2])[T1 P^2|T1 P^2]"
          " - 4p^3([T^2 T1^2|P^3] + [P^3|T^2 T1^2])[P|P]"
          " + 2(5p^4+2p^2+2)[T^2 P^3|T^2 P^3]"
          " + 2(p^2+2)([T1|P] + [P|T1])[T^2 P^2|T^2 P^2]"
          " + 2[T^2 T1 P^2|T^2 T1 P^2]"
          " + ([T1^2|P^2] + [P^2|T1^2])[T^2 P|T^2 P]"
          " + (3p^4+2p^2+1)([T^4|P^2] + [P^2|T^4])[P^2|P^2]"
          " + 2(p^2+1)([T^4|T1 P] + [T1 P|T^4])[P^2|P^2]"
          " + ([T^4|T1^2] + [T1^2|T^4])[P^2|P^2]"
          " - 2p([T^2|P] + [P|T^2])[T^2 P^2|T^2 P^2])"}},
    };
    return table;
}

/// p^6 [p] (x) [p], the functional-equation multiplier.
inline HeckeElement pp6()
{
    return parse_hecke("p^6[P|P]", Alphabet::genus2_tensor);
}

/// s_{16-i} = (p^6 P(x)P)^{8-i} s_i for i = 0..7.
inline void apply_functional_equation(HeckeSeriesPoly& S)
{
    S.coeffs.resize(17, HeckeElement(Alphabet::genus2_tensor));
    HeckeElement m = pp6();
    for (int i = 0; i < 8; ++i) S.coeffs[static_cast<std::size_t>(16 - i)] = m.pow(8 - i) * S.coeffs[static_cast<std::size_t>(i)];
}

struct AppendixRS {
    HeckeSeriesPoly R;
    HeckeSeriesPoly S;
};

inline AppendixRS appendix_RS_transcribed()
{
    const Alphabet a = Alphabet::genus2_tensor;
    HeckeElement one = HeckeElement::constant(a, MultiPoly(Rational(1)));
    AppendixRS out;
    out.R.alphabet = out.S.alphabet = a;
    out.R.coeffs.assign(13, HeckeElement(a));
    out.S.coeffs.assign(17, HeckeElement(a));
    out.R.coeffs[0] = one;
    out.S.coeffs[0] = one;
    for (const auto& c : appendix_table()) {
        auto& v = c.series == 'r' ? out.R.coeffs : out.S.coeffs;
        v[static_cast<std::size_t>(c.index)] = parse_hecke(c.text, a);
    }
    apply_functional_equation(out.S);
    out.R.trim();
    out.S.trim();
    return out;
}

inline const TranscribedCoeff* appendix_entry(char series, int index)
{
    for (const auto& c : appendix_table())
        if (c.series == series && c.index == index) return &c;
    return nullptr;
}

} // namespace hecke

#endif
