#ifndef HECKE_RATIONAL_HPP
#define HECKE_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "hecke/error.hpp"

namespace hecke {

// Exact rational number. Values that fit in int64 numerator/denominator stay
// in an inline fast path; everything else lives in a GMP mpq. The
// representation is canonical: a value is big only when it cannot be small,
// so equality never needs to compare across representations.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int n) noexcept : n_(n) {}
    Rational(long n) noexcept : n_(n) {}
    Rational(long long n) noexcept : n_(n) {}
    Rational(long long n, long long d) { *this = from_i128(n, d); }
    explicit Rational(const mpq_class& q) { set_big(q); }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_)
    {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "n", "-n" or "n/d" with arbitrary-size decimal integers.
    static Rational parse(std::string_view s)
    {
        std::string str(s);
        mpq_class q;
        if (str.empty() || q.set_str(str, 10) != 0)
            throw Error(Errc::parse_error, "bad rational literal '" + str + "'");
        if (q.get_den() == 0) throw Error(Errc::division_by_zero, "rational literal " + str);
        q.canonicalize();
        Rational r;
        r.set_big(q);
        return r;
    }

    bool is_big() const noexcept { return big_ != nullptr; }
    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : d_ == 1; }
    int sign() const noexcept { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }

    mpq_class to_mpq() const
    {
        if (big_) return *big_;
        mpq_class q(mpz_from_i64(n_), mpz_from_i64(d_));
        return q;
    }

    mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(n_); }
    mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(d_); }

    std::string num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(n_); }
    std::string den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(d_); }
    std::string to_string() const { return is_integer() ? num_str() : num_str() + "/" + den_str(); }

    Rational operator-() const
    {
        if (!big_ && n_ != INT64_MIN) {
            Rational r;
            r.n_ = -n_;
            r.d_ = d_;
            return r;
        }
        return from_mpq(-to_mpq());
    }

    Rational inverse() const
    {
        if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        if (!big_) return from_i128(d_, n_);
        return from_mpq(1 / *big_);
    }

    Rational pow(int e) const
    {
        if (e < 0) return inverse().pow(-e);
        Rational result(1), base(*this);
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) {
                long long s;
                if (!__builtin_add_overflow(a.n_, b.n_, &s)) return Rational(s);
                return from_i128(static_cast<__int128>(a.n_) + b.n_, 1);
            }
            __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
            __int128 d = static_cast<__int128>(a.d_) * b.d_;
            return from_i128(n, d);
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) {
                long long s;
                if (!__builtin_mul_overflow(a.n_, b.n_, &s)) return Rational(s);
                return from_i128(static_cast<__int128>(a.n_) * b.n_, 1);
            }
            return from_i128(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_)
            return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    /// gcd of numerators over lcm of denominators; gcd(0, x) = |x|.
    static Rational gcd(const Rational& a, const Rational& b)
    {
        if (a.is_zero()) return b.sign() < 0 ? -b : b;
        if (b.is_zero()) return a.sign() < 0 ? -a : a;
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
        return from_mpq(mpq_class(n, d));
    }

private:
    static mpz_class mpz_from_i64(std::int64_t v)
    {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        return z;
    }

    static mpz_class mpz_from_i128(__int128 v)
    {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        mpz_class hi, lo;
        mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
        mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xffffffffffffffffULL));
        mpz_class z = (hi << 64) + lo;
        return neg ? mpz_class(-z) : z;
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b)
    {
        while (b) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(__int128 n, __int128 d)
    {
        if (d == 0) throw Error(Errc::division_by_zero, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        if (d != 1) {
            unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
            unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
            if (g != 1) {
                n /= static_cast<__int128>(g);
                d /= static_cast<__int128>(g);
            }
        }
        if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
            Rational r;
            r.n_ = static_cast<std::int64_t>(n);
            r.d_ = static_cast<std::int64_t>(d);
            return r;
        }
        Rational r;
        r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
        return r;
    }

    static Rational from_mpq(const mpq_class& q)
    {
        Rational r;
        r.set_big(q);
        return r;
    }

    void set_big(const mpq_class& q)
    {
        if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
            n_ = mpz_get_si(q.get_num_mpz_t());
            d_ = mpz_get_si(q.get_den_mpz_t());
            big_.reset();
        } else {
            n_ = 0;
            d_ = 1;
            big_ = std::make_unique<mpq_class>(q);
        }
    }

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace hecke

#endif
