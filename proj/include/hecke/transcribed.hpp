#ifndef HECKE_TRANSCRIBED_HPP
#define HECKE_TRANSCRIBED_HPP

#include <string>
#include <vector>

namespace hecke::printed {

// Displayed formulas, copied term for term into parse_rf / parse_hecke
// syntax. u0, u1, u2 stand for x0^d, x1^d, x2^d in the d-indexed formulas.

inline const std::string& total_hecke_first_form()
{
    static const std::string s =
        "u0 (p x1^3 u1 x2 - p x1^2 u1 - p x1^3 u1 x2^2 u2 + p x1^2 u1 x2^3 u2"
        " - p x1 x2^3 u2 + p x2^2 u2 + p x1 - p x2 - x1^2 u1 x2^2 + x1 u1 x2"
        " + x1^2 u1 x2 u2 - x1 u1 x2^2 u2 + x1^2 x2^2 u2 - x1 x2 u2 - x1^2 x2 + x1 x2^2)"
        " / (p (1 - x1)(1 - x2)(1 - x1 x2)(x1 - x2))";
    return s;
}

inline const std::string& total_hecke_second_form()
{
    static const std::string s =
        "-u0 ((1 - x1 x2)(p x1 - x2) x1 u1 + (1 - x1 x2)(x1 - p x2) x2 u2"
        " - (1 - p x1 x2)(x1 - x2) x1 x2 u1 u2 - (p - x1 x2)(x1 - x2))"
        " / (p (1 - x1)(1 - x2)(1 - x1 x2)(x1 - x2))";
    return s;
}

inline const std::string& andrianov_genus2()
{
    static const std::string s = "(1 - x0^2 x1 x2 X^2 / p) / ((1 - x0 X)(1 - x0 x1 X)(1 - x0 x2 X)(1 - x0 x1 x2 X))";
    return s;
}

/// The 16 terms of the Rankin identity in printed order. The third carries
/// the printed factor (x1 - x1).
inline const std::vector<std::string>& rankin_terms_raw()
{
    static const std::vector<std::string> t{
        "-(p x1 - x2)(1 - p y1 y2) x1 y1 y2 / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x1 y0 y1 y2 X))",
        "x2 y1 (x1 - p x2)(p y1 - y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 x2 y0 y1 X))",
        "x2 y2 (x1 - p x2)(y1 - p y2) / (p^2 (1 - x1)(1 - x2)(x1 - x1)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 y0 x2 y2 X))",
        "-x2 y1 y2 (x1 - p x2)(1 - p y1 y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x2 y0 y1 y2 X))",
        "-x1 (p x1 - x2)(p - y1 y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x1 y0 X))",
        "-x1 x2 y1 (1 - p x1 x2)(p y1 - y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 x1 x2 y0 y1 X))",
        "-x1 x2 y2 (1 - p x1 x2)(y1 - p y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 x1 x2 y0 y2 X))",
        "y1 y2 (p - x1 x2)(1 - p y1 y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 y0 y1 y2 X))",
        "x1 x2 (1 - p x1 x2)(p - y1 y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x1 x2 y0 X))",
        "-x1 y1 (p x1 - x2)(p y1 - y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 x1 y0 y1 X))",
        "x1 y2 (p x1 - x2)(y1 - p y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 x1 y0 y2 X))",
        "-x2 (x1 - p x2)(p - y1 y2) / (p^2 (1 - x1)(1 - x2)(x1 - x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x2 y0 X))",
        "x1 x2 y1 y2 (1 - p x1 x2)(1 - p y1 y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 x1 x2 y0 y1 y2 X))",
        "(p - x1 x2)(p - y1 y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(1 - y1 y2)(1 - x0 y0 X))",
        "-y1 (p - x1 x2)(p y1 - y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 y0 y1 X))",
        "-y2 (p - x1 x2)(y1 - p y2) / (p^2 (1 - x1)(1 - x2)(1 - x1 x2)(1 - y1)(1 - y2)(y1 - y2)(1 - x0 y0 y2 X))",
    };
    return t;
}

/// Same list with (x1 - x1) read as (x1 - x2).
inline std::vector<std::string> rankin_terms_corrected()
{
    auto t = rankin_terms_raw();
    auto& s = t[2];
    s.replace(s.find("(x1 - x1)"), 9, "(x1 - x2)");
    return t;
}

inline const std::vector<std::string>& rankin_denominator_factors()
{
    static const std::vector<std::string> f{
        "1 - x0 y0 X",       "1 - x0 y0 x1 X",       "1 - x0 y0 y1 X",       "1 - x0 y0 x2 X",
        "1 - x0 y0 y2 X",    "1 - x0 y0 x1 y1 X",    "1 - x0 y0 x1 x2 X",    "1 - x0 y0 x1 y2 X",
        "1 - x0 y0 y1 x2 X", "1 - x0 y0 y1 y2 X",    "1 - x0 y0 x2 y2 X",    "1 - x0 y0 x1 y1 x2 X",
        "1 - x0 y0 x1 y1 y2 X", "1 - x0 y0 x1 x2 y2 X", "1 - x0 y0 y1 x2 y2 X", "1 - x0 y0 x1 y1 x2 y2 X",
    };
    return f;
}

inline const std::string& rankin_quadratic_factor()
{
    static const std::string s = "1 - x0^2 y0^2 x1 y1 x2 y2 X^2";
    return s;
}

inline const std::string& rankin_leading_term()
{
    static const std::string s = "x0^12 y0^12 x1^6 x2^6 y1^6 y2^6 X^12 / p^2";
    return s;
}

inline const std::vector<std::string>& genus1_rankin_terms()
{
    static const std::vector<std::string> t{
        "1 / ((1 - x1)(1 - y1)(1 - x0 y0 X))",
        "-y1 / ((1 - x1)(1 - y1)(1 - x0 y0 y1 X))",
        "-x1 / ((1 - x1)(1 - y1)(1 - x0 y0 x1 X))",
        "x1 y1 / ((1 - x1)(1 - y1)(1 - x0 y0 x1 y1 X))",
    };
    return t;
}

inline const std::string& genus1_rankin_closed()
{
    static const std::string s =
        "(1 - x0^2 y0^2 x1 y1 X^2) / ((1 - x0 y0 x1 y1 X)(1 - x0 y0 x1 X)(1 - x0 y0 y1 X)(1 - x0 y0 X))";
    return s;
}

inline const std::string& symmetric_square()
{
    static const std::string s =
        "(1 + x0^2 x1 X + x0^2 x2 X + 2 x0^2 x1 x2 X + x0^2 x1 x2^2 X + x0^2 x1^2 x2 X + x0^4 x1^2 x2^2 X^2)"
        "(1 - x0^2 x1 x2 X / p)"
        " / ((1 - x0^2 x1^2 x2^2 X)(1 - x0^2 x1^2 X)(1 - x0^2 x2^2 X)(1 - x0^2 X))";
    return s;
}

inline const std::string& cubic_numerator_literal()
{
    static const std::string s =
        "-p + x0^6 x1^4 x2^2 X^2 + x0^6 x1^2 x2^4 X^2 + 2 x0^6 x1^2 x2^3 X^2"
        " - p x0^6 x1^4 x2^4 X^2 - p x0^6 x1^2 x2^4 X^2 - 2 p x0^3 x1^2 x2 X + x0^6 x1 x2^3 X^2"
        " + x0^6 x1^3 x2 X^2 + x0^6 x1^3 x2^5 X^2 + x0^6 x1^5 x2^3 X^2 + 3 x0^6 x1^3 x2^3 X^2"
        " + x0^6 x1^2 x2^2 X^2 + 2 x0^6 x1^3 x2^2 X^2 - p x0^3 x1^2 X - p x0^3 x2^2 X - p x0^6 x1^4 x2^2 X^2"
        " - 2 p x0^3 x1 x2^2 X - p x0^6 x1^2 x2^2 X^2 + x0^3 x1^2 x2 X + x0^3 x1 x2 X"
        " - p x0^6 x1^2 x2^3 X^2 - p x0^6 x1^3 x2^2 X^2 - p x0^3 x1^2 x2^3 X - p x0^3 x1^3 x2^2 X"
        " - 2 p x0^3 x1^2 x2^2 X - p x0^3 x1^3 x2 X + x0^3 x1^2 x2 X + x0^9 x1^4 x2^4 X^3"
        " - 2 p x0^6 x1^3 x2^3 X^2 - 2 p x0^3 x1 x2 X + x0^9 x1^4 x2^5 X^3 + x0^9 x1^5 x2^4 X^3"
        " - p x0^6 x1^3 x2^4 X^2 + x0^3 x1 x2^2 X + x0^9 x1^5 x2^5 X^3 + x0^6 x1^4 x2^4 X^2"
        " - p x0^6 x1^4 x2^3 X^2 - p x0^3 x1 x2^3 X - p x0^3 x2 X - p x0^3 x1 X + 2 x0^6 x1^4 x2^3 X^2"
        " + 2 x0^6 x1^3 x2^4 X^2";
    return s;
}

inline const std::string& cubic_denominator()
{
    static const std::string s = "((1 - x0^3 X)(1 - x0^3 x1^3 X)(1 - x0^3 x2^3 X)(1 - x0^3 x1^3 x2^3 X))";
    return s;
}

inline std::string cubic_literal()
{
    return "p^-1 (" + cubic_numerator_literal() + ") / " + cubic_denominator();
}

/// Overall sign flipped, and the second "+ x0^3 x1^2 x2 X" read as
/// "+ x0^3 x1^2 x2^2 X".
inline std::string cubic_repaired()
{
    std::string n = cubic_numerator_literal();
    const std::string dup = "+ x0^3 x1^2 x2 X";
    std::size_t first = n.find(dup);
    std::size_t second = n.find(dup, first + 1);
    n.replace(second, dup.size(), "+ x0^3 x1^2 x2^2 X");
    return "-p^-1 (" + n + ") / " + cubic_denominator();
}

// Hecke-Shimura series, coefficients of X^0.. as Hecke expressions.
inline const std::vector<std::string>& shimura_g1_denominator()
{
    static const std::vector<std::string> d{"1", "-T", "p P"};
    return d;
}

inline const std::vector<std::string>& shimura_g2_numerator()
{
    static const std::vector<std::string> n{"1", "0", "-p^2 P"};
    return n;
}

inline const std::vector<std::string>& shimura_g2_denominator()
{
    static const std::vector<std::string> d{"1", "-T", "p T1 + p(p^2+1) P", "-p^3 P T", "p^6 P^2"};
    return d;
}

// Genus-1 tensor form, [A|B] = A (x) B.
inline const std::vector<std::string>& genus1_tensor_numerator()
{
    static const std::vector<std::string> n{"1", "0", "-p^2 [P|P]"};
    return n;
}

inline const std::vector<std::string>& genus1_tensor_denominator()
{
    static const std::vector<std::string> d{"1", "-[T|T]", "p([T^2|P] + [P|T^2]) - 2p^2[P|P]", "-p^2[T P|T P]",
                                            "p^4[P^2|P^2]"};
    return d;
}

// Hodge type of the tensor of two genus-2 spinor motives, row by row;
// "+" / "-" mark the two tagged middle entries.
inline const std::vector<std::string>& hodge_tensor_array()
{
    static const std::vector<std::string> h{
        "0,2k+2l-6",   "l-2,2k+l-4",  "l-1,2k+l-5",    "2l-3,2k-3",
        "k-2,k+2l-4",  "k+l-4,k+l-2", "k+l-3,k+l-3,+", "k+2l-5,k-1",
        "k-1,k+2l-5",  "k+l-3,k+l-3,-", "k+l-2,k+l-4", "k+2l-4,k-2",
        "2k-3,2l-3",   "2k+l-5,l-1",  "2k+l-4,l-2",    "2k+2l-6,0",
    };
    return h;
}

inline const std::vector<std::string>& hodge_spinor_genus2()
{
    static const std::vector<std::string> h{"0,2k-3", "k-2,k-1", "k-1,k-2", "2k-3,0"};
    return h;
}

} // namespace hecke::printed

#endif
