#ifndef HECKE_HECKE_PARSE_HPP
#define HECKE_HECKE_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "hecke/error.hpp"
#include "hecke/hecke_element.hpp"

namespace hecke {

namespace detail {

// Hecke expressions in ASCII: generators T, T1, P; the scalar p; integers;
// A (x) B written [A|B] with plain A, B. Juxtaposition multiplies.
//   "p^3(p+1)(2[P|P] + [T1|P] + [P|T1])[T|T]"
class HeckeParser {
public:
    HeckeParser(std::string_view src, Alphabet a) : s_(src), alpha_(a) {}

    HeckeElement parse()
    {
        HeckeElement v = expr(alpha_);
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    HeckeElement expr(Alphabet a)
    {
        skip();
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        HeckeElement v = term(a);
        if (neg) v = -v;
        for (;;) {
            skip();
            if (peek('+')) {
                ++pos_;
                v += term(a);
            } else if (peek('-')) {
                ++pos_;
                v -= term(a);
            } else {
                return v;
            }
        }
    }

    HeckeElement term(Alphabet a)
    {
        HeckeElement v = factor(a);
        for (;;) {
            skip();
            if (peek('*')) {
                ++pos_;
                v *= factor(a);
            } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || peek('(') ||
                                            peek('['))) {
                v *= factor(a);
            } else {
                return v;
            }
        }
    }

    HeckeElement factor(Alphabet a)
    {
        HeckeElement b = primary(a);
        skip();
        if (!peek('^')) return b;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        return b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }

    HeckeElement primary(Alphabet a)
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            HeckeElement v = expr(a);
            skip();
            if (!peek(')')) fail("')' expected");
            ++pos_;
            return v;
        }
        if (c == '[') {
            if (!alphabet_is_tensor(a)) fail("tensor bracket in a plain expression");
            ++pos_;
            Alphabet plain = plain_of(alphabet_genus(a));
            HeckeElement l = expr(plain);
            skip();
            if (!peek('|')) fail("'|' expected");
            ++pos_;
            HeckeElement r = expr(plain);
            skip();
            if (!peek(']')) fail("']' expected");
            ++pos_;
            return HeckeElement::tensor(l, r);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return HeckeElement::constant(a, MultiPoly(Rational::parse(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "p") return HeckeElement::constant(a, MultiPoly::var("p"));
            if (alphabet_is_tensor(a)) fail("bare generator '" + name + "' in a tensor expression");
            return HeckeElement::gen(a, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(Errc::parse_error, msg + " at offset " + std::to_string(pos_));
    }

    std::string_view s_;
    Alphabet alpha_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline HeckeElement parse_hecke(std::string_view src, Alphabet a)
{
    return detail::HeckeParser(src, a).parse();
}

} // namespace hecke

#endif
