#ifndef HECKE_MONOMIAL_HPP
#define HECKE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string>

#include "hecke/error.hpp"
#include "hecke/var_table.hpp"

namespace hecke {

/// Laurent monomial: a dense exponent vector indexed by VarTable position.
/// Zero entries are the "not stored" exponents of the abstract map form.
class Monomial {
public:
    using Exp = std::int16_t;

    Monomial() noexcept { e_.fill(0); }

    static Monomial var(std::size_t i, int power = 1)
    {
        Monomial m;
        m.set(i, power);
        return m;
    }

    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int degree() const noexcept { return deg_; }
    bool is_one() const noexcept
    {
        for (auto v : e_)
            if (v) return false;
        return true;
    }

    void set(std::size_t i, int v)
    {
        check_range(v);
        deg_ += v - e_[i];
        e_[i] = static_cast<Exp>(v);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            int v = a.e_[i] + b.e_[i];
            check_range(v);
            r.e_[i] = static_cast<Exp>(v);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            int v = a.e_[i] - b.e_[i];
            check_range(v);
            r.e_[i] = static_cast<Exp>(v);
        }
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    Monomial pow(int k) const
    {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            int v = e_[i] * k;
            check_range(v);
            r.e_[i] = static_cast<Exp>(v);
        }
        r.deg_ = deg_ * k;
        return r;
    }

    Monomial inverse() const { return pow(-1); }

    /// True when b/a has no negative exponent.
    bool divides(const Monomial& b) const noexcept
    {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    static Monomial min(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
        return r;
    }

    /// Graded lex: total degree first, then earlier variables dominate.
    static int compare(const Monomial& a, const Monomial& b) noexcept
    {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return compare(a, b) < 0; }

    std::size_t hash() const noexcept
    {
        std::uint64_t w[4];
        std::memcpy(w, e_.data(), sizeof w);
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }

    std::string to_string(const VarTable& vars) const
    {
        std::string out;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!e_[i]) continue;
            if (!out.empty()) out += '*';
            out += vars.name(i);
            if (e_[i] != 1) {
                out += '^';
                out += e_[i] < 0 ? "(" + std::to_string(e_[i]) + ")" : std::to_string(e_[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

private:
    static void check_range(int v)
    {
        if (v > INT16_MAX || v < INT16_MIN)
            throw Error(Errc::invalid_argument, "exponent out of range: " + std::to_string(v));
    }

    std::array<Exp, kMaxVars> e_;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Descending graded-lex, the canonical iteration order.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return Monomial::compare(a, b) > 0; }
};

} // namespace hecke

#endif
