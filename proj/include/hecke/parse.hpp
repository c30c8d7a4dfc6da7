#ifndef HECKE_PARSE_HPP
#define HECKE_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/rational_fn.hpp"

namespace hecke {

namespace detail {

// Recursive-descent reader for expressions such as
//   "-(p*x1 - x2)*(1 - p*y1*y2)*x1*y1*y2 / (p^2*(1-x1))"
// Juxtaposition multiplies ("2 x1 x2"), '^' takes an integer exponent that
// may be negative ("x1^-1", "p^{-3}"). T is MultiPoly or RationalFn; for
// MultiPoly, '/' only accepts single-term divisors.
template <class T>
class ExprParser {
public:
    ExprParser(std::string_view src, const VarTable& vars) : s_(src), vars_(vars) {}

    T parse()
    {
        T v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    T expr()
    {
        skip();
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        T v = term();
        if (neg) v = -v;
        for (;;) {
            skip();
            if (peek('+')) {
                ++pos_;
                v = v + term();
            } else if (peek('-')) {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    T term()
    {
        T v = factor();
        for (;;) {
            skip();
            if (peek('*')) {
                ++pos_;
                v = v * factor();
            } else if (peek('/')) {
                ++pos_;
                for (const T& d : divisor_factors()) v = divide(v, d);
            } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                            s_[pos_] == '_')) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    // "/ (a (b) c^2)" divides by each factor in turn so that a RationalFn
    // keeps them apart; anything else is one factor.
    std::vector<T> divisor_factors()
    {
        skip();
        std::vector<T> out;
        if constexpr (std::is_same_v<T, RationalFn>) {
            if (peek('(')) {
                std::size_t save = pos_;
                ++pos_;
                out.push_back(factor());
                for (;;) {
                    skip();
                    if (peek('*')) ++pos_;
                    skip();
                    if (peek(')')) break;
                    if (pos_ >= s_.size() || peek('+') || peek('-') || peek('/')) {
                        out.clear();
                        break;
                    }
                    out.push_back(factor());
                }
                if (!out.empty()) {
                    ++pos_;
                    skip();
                    if (!peek('^')) return out;
                }
                out.clear();
                pos_ = save;
            }
        }
        out.push_back(factor());
        return out;
    }

    T factor()
    {
        T base = primary();
        skip();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        char close = 0;
        if (peek('(')) close = ')';
        if (peek('{')) close = '}';
        if (close) ++pos_;
        skip();
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (close) {
            skip();
            if (!peek(close)) fail("unbalanced exponent bracket");
            ++pos_;
        }
        return base.pow(neg ? -e : e);
    }

    T primary()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            T v = expr();
            skip();
            if (!peek(')')) fail("')' expected");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return T(MultiPoly(vars_, Rational::parse(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (!vars_.find(name)) throw Error(Errc::unknown_variable, "'" + name + "' in expression");
            return T(MultiPoly::var(name, vars_));
        }
        fail("unexpected '" + std::string(1, c) + "'");
        return T();
    }

    static T divide(const T& a, const T& b)
    {
        if constexpr (std::is_same_v<T, MultiPoly>) {
            if (!b.is_monomial()) throw Error(Errc::parse_error, "polynomial division by non-monomial " + b.to_string());
            return a * b.pow(-1);
        } else {
            return a / b;
        }
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(Errc::parse_error, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    const VarTable& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline MultiPoly parse_poly(std::string_view src, const VarTable& vars = VarTable::canonical())
{
    return detail::ExprParser<MultiPoly>(src, vars).parse();
}

inline RationalFn parse_rf(std::string_view src, const VarTable& vars = VarTable::canonical())
{
    return detail::ExprParser<RationalFn>(src, vars).parse();
}

} // namespace hecke

#endif
