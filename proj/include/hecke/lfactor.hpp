#ifndef HECKE_LFACTOR_HPP
#define HECKE_LFACTOR_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// c + sum a_s * s over integer symbols s (k, l, m, ...), exact rational
/// coefficients.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(long c) : c_(Rational(c)) {}
    LinExpr(Rational c) : c_(std::move(c)) {}
    static LinExpr sym(const std::string& s, Rational a = Rational(1))
    {
        LinExpr e;
        if (!a.is_zero()) e.a_[s] = std::move(a);
        return e;
    }
    static LinExpr parse(std::string_view src);

    const Rational& constant() const { return c_; }
    const std::map<std::string, Rational>& coefficients() const { return a_; }
    bool is_constant() const { return a_.empty(); }
    Rational coefficient(const std::string& s) const
    {
        auto it = a_.find(s);
        return it == a_.end() ? Rational(0) : it->second;
    }
    bool integral() const
    {
        if (!c_.is_integer()) return false;
        for (const auto& kv : a_)
            if (!kv.second.is_integer()) return false;
        return true;
    }

    friend LinExpr operator+(LinExpr a, const LinExpr& b)
    {
        a.c_ = a.c_ + b.c_;
        for (const auto& [s, v] : b.a_) {
            Rational t = a.coefficient(s) + v;
            if (t.is_zero()) a.a_.erase(s);
            else a.a_[s] = t;
        }
        return a;
    }
    LinExpr operator-() const { return *this * Rational(-1); }
    friend LinExpr operator-(const LinExpr& a, const LinExpr& b) { return a + (-b); }
    friend LinExpr operator*(LinExpr a, const Rational& r)
    {
        if (r.is_zero()) return LinExpr();
        a.c_ = a.c_ * r;
        for (auto& kv : a.a_) kv.second = kv.second * r;
        return a;
    }
    LinExpr& operator+=(const LinExpr& b) { return *this = *this + b; }
    friend bool operator==(const LinExpr& a, const LinExpr& b) { return a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const LinExpr& a, const LinExpr& b) { return !(a == b); }
    friend bool operator<(const LinExpr& a, const LinExpr& b)
    {
        if (a.a_ != b.a_) return a.a_ < b.a_;
        return a.c_ < b.c_;
    }

    /// Sign for large symbols: symbolic part first, then the constant.
    int generic_sign() const
    {
        Rational s(0);
        for (const auto& kv : a_) s = s + kv.second;
        if (!s.is_zero()) return s.sign();
        return c_.sign();
    }

    std::string to_string() const
    {
        std::string out;
        auto put = [&](const Rational& v, const std::string& body) {
            bool neg = v.sign() < 0;
            if (out.empty()) out = neg ? "-" : "";
            else out += neg ? "-" : "+";
            out += body;
        };
        for (const auto& [s, v] : a_) {
            Rational m = v.sign() < 0 ? -v : v;
            std::string body = m.is_integer() ? (m.is_one() ? s : m.num_str() + s)
                                              : (m.num_str() == "1" ? s : m.num_str() + s) + "/" + m.den_str();
            put(v, body);
        }
        if (!c_.is_zero()) put(c_, (c_.sign() < 0 ? -c_ : c_).to_string());
        return out.empty() ? "0" : out;
    }

private:
    std::map<std::string, Rational> a_;
    Rational c_{0};
};

namespace detail {
// expr := term {(+|-) term}; term := factor {[*|/] factor}; factor := n | sym | (expr)
class LinParser {
public:
    explicit LinParser(std::string_view s) : s_(s) {}
    LinExpr parse()
    {
        LinExpr e = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    LinExpr expr()
    {
        skip();
        if (i_ >= s_.size()) fail("empty expression");
        LinExpr e;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[i_++] == '-' ? -1 : 1;
            } else if (!first) {
                return e;
            }
            first = false;
            e += term() * Rational(sign);
        }
    }
    LinExpr term()
    {
        LinExpr v = factor();
        for (;;) {
            skip();
            if (peek('/')) {
                ++i_;
                LinExpr d = factor();
                if (!d.is_constant() || d.constant().is_zero()) fail("division by a non-constant");
                v = v * d.constant().inverse();
            } else if (peek('*') || (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || peek('(')))) {
                if (peek('*')) ++i_;
                v = mul(v, factor());
            } else {
                return v;
            }
        }
    }
    LinExpr factor()
    {
        skip();
        if (peek('(')) {
            ++i_;
            LinExpr e = expr();
            skip();
            if (!peek(')')) fail("')' expected");
            ++i_;
            return e;
        }
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ > st) return LinExpr(Rational::parse(s_.substr(st, i_ - st)));
        while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (i_ > st) return LinExpr::sym(std::string(s_.substr(st, i_ - st)));
        fail("term expected");
    }
    LinExpr mul(const LinExpr& a, const LinExpr& b)
    {
        if (a.is_constant()) return b * a.constant();
        if (b.is_constant()) return a * b.constant();
        fail("nonlinear product");
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
    [[noreturn]] void fail(const std::string& m) const
    {
        throw Error(Errc::parse_error, m + " in exponent \"" + std::string(s_) + "\"");
    }
    std::string_view s_;
    std::size_t i_ = 0;
};
} // namespace detail

inline LinExpr LinExpr::parse(std::string_view src)
{
    return detail::LinParser(src).parse();
}

/// coef * prod s^e_s, exponents LinExpr. The prime is stored as q = p^{1/2}
/// with doubled exponent, so half-integral powers stay exact.
class PMono {
public:
    PMono() = default;
    explicit PMono(Rational c) : coef_(std::move(c)) {}
    static PMono one() { return PMono(Rational(1)); }
    static PMono power(const std::string& s, const LinExpr& e)
    {
        PMono m = one();
        m.mul_sym(s == "p" ? "q" : s, s == "p" ? e * Rational(2) : e);
        return m;
    }
    static PMono p_power(const LinExpr& e) { return power("p", e); }
    static PMono parse(std::string_view src);

    const Rational& coef() const { return coef_; }
    const std::map<std::string, LinExpr>& exps() const { return e_; }
    bool is_zero() const { return coef_.is_zero(); }
    LinExpr exponent(const std::string& s) const
    {
        auto it = e_.find(s);
        return it == e_.end() ? LinExpr() : it->second;
    }
    /// The p-exponent (half the q-exponent).
    LinExpr p_exponent() const { return exponent("q") * Rational(1, 2); }
    bool only_p() const { return e_.empty() || (e_.size() == 1 && e_.count("q")); }
    PMono unit() const
    {
        PMono m = *this;
        m.coef_ = Rational(1);
        return m;
    }

    friend PMono operator*(const PMono& a, const PMono& b)
    {
        PMono r = a;
        r.coef_ = a.coef_ * b.coef_;
        for (const auto& [s, e] : b.e_) r.mul_sym(s, e);
        if (r.coef_.is_zero()) r.e_.clear();
        return r;
    }
    PMono inverse() const
    {
        if (is_zero()) throw Error(Errc::non_invertible_parameter, "zero parameter");
        PMono r(coef_.inverse());
        for (const auto& [s, e] : e_) r.e_[s] = -e;
        return r;
    }
    PMono pow(int k) const
    {
        if (k < 0) return inverse().pow(-k);
        PMono r(coef_.pow(k));
        if (k == 0) return r;
        for (const auto& [s, e] : e_) r.e_[s] = e * Rational(k);
        return r;
    }
    friend bool operator==(const PMono& a, const PMono& b) { return a.coef_ == b.coef_ && a.e_ == b.e_; }
    friend bool operator!=(const PMono& a, const PMono& b) { return !(a == b); }
    friend bool operator<(const PMono& a, const PMono& b)
    {
        if (a.e_ != b.e_) return a.e_ < b.e_;
        return a.coef_ < b.coef_;
    }

    std::string to_string() const
    {
        if (coef_.is_zero()) return "0";
        std::vector<std::string> parts;
        auto pw = [](const std::string& s, const LinExpr& e) {
            if (e == LinExpr(1)) return s;
            if (e.is_constant() && e.constant().is_integer()) return s + "^" + e.to_string();
            return s + "^{" + e.to_string() + "}";
        };
        for (const auto& [s, e] : e_)
            if (s != "q") parts.push_back(pw(s, e));
        if (e_.count("q")) parts.push_back(pw("p", p_exponent()));
        std::string out;
        if (!coef_.is_one() || parts.empty()) {
            if (coef_ == Rational(-1) && !parts.empty()) out = "-";
            else out = coef_.to_string();
        }
        for (const auto& s : parts) {
            if (!out.empty() && out != "-") out += " ";
            out += s;
        }
        return out;
    }

private:
    void mul_sym(const std::string& s, const LinExpr& e)
    {
        LinExpr t = exponent(s) + e;
        if (t == LinExpr()) e_.erase(s);
        else e_[s] = t;
    }

    Rational coef_{1};
    std::map<std::string, LinExpr> e_;
};

inline PMono PMono::parse(std::string_view src)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto fail = [&](const std::string& m) { throw Error(Errc::parse_error, m + " in \"" + std::string(src) + "\""); };
    PMono out = one();
    skip();
    if (i < src.size() && src[i] == '-') {
        out.coef_ = Rational(-1);
        ++i;
    }
    bool any = false;
    while (true) {
        skip();
        if (i >= src.size()) break;
        if (src[i] == '*') {
            ++i;
            continue;
        }
        any = true;
        if (std::isdigit(static_cast<unsigned char>(src[i]))) {
            std::size_t s = i;
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '/')) ++i;
            out = out * PMono(Rational::parse(src.substr(s, i - s)));
            continue;
        }
        std::size_t s = i;
        while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
        if (s == i) fail("unexpected '" + std::string(1, src[i]) + "'");
        std::string name(src.substr(s, i - s));
        LinExpr e(1);
        skip();
        if (i < src.size() && src[i] == '^') {
            ++i;
            skip();
            if (i < src.size() && (src[i] == '{' || src[i] == '(')) {
                char open = src[i], close = open == '{' ? '}' : ')';
                std::size_t c = i;
                for (int depth = 0; c < src.size(); ++c) {
                    if (src[c] == open) ++depth;
                    if (src[c] == close && --depth == 0) break;
                }
                if (c >= src.size()) fail("unbalanced exponent");
                e = LinExpr::parse(src.substr(i + 1, c - i - 1));
                i = c + 1;
            } else {
                std::size_t t = i;
                if (i < src.size() && src[i] == '-') ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                if (t == i) fail("exponent expected");
                e = LinExpr(std::stol(std::string(src.substr(t, i - t))));
            }
        }
        if (name == "q") out = out * power("q", e);
        else out = out * power(name, e);
    }
    if (!any) fail("empty parameter");
    return out;
}

/// Finite sum of PMono units with rational coefficients.
class LSum {
public:
    LSum() = default;
    LSum(const PMono& m)
    {
        if (!m.is_zero()) t_[m.unit()] = m.coef();
    }
    const std::map<PMono, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    friend LSum operator+(LSum a, const LSum& b)
    {
        for (const auto& [m, c] : b.t_) {
            Rational s = a.coef(m) + c;
            if (s.is_zero()) a.t_.erase(m);
            else a.t_[m] = s;
        }
        return a;
    }
    LSum operator-() const
    {
        LSum r = *this;
        for (auto& kv : r.t_) kv.second = -kv.second;
        return r;
    }
    friend LSum operator-(const LSum& a, const LSum& b) { return a + (-b); }
    friend LSum operator*(const LSum& a, const LSum& b)
    {
        LSum r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r = r + LSum(ma * mb * PMono(ca * cb));
        return r;
    }
    friend bool operator==(const LSum& a, const LSum& b) { return a.t_ == b.t_; }
    Rational coef(const PMono& unit) const
    {
        auto it = t_.find(unit);
        return it == t_.end() ? Rational(0) : it->second;
    }
    LSum map_symbols(const std::function<PMono(const PMono&)>& f) const
    {
        LSum r;
        for (const auto& [m, c] : t_) r = r + LSum(f(m) * PMono(c));
        return r;
    }
    std::string to_string() const
    {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : t_) {
            std::string s = (m * PMono(c)).to_string();
            if (!out.empty()) out += s[0] == '-' ? " - " + s.substr(1) : " + " + s;
            else out = s;
        }
        return out;
    }

private:
    std::map<PMono, Rational> t_;
};

/// Polynomial in X with LSum coefficients.
using XPoly = std::vector<LSum>;

inline XPoly xpoly_mul(const XPoly& a, const XPoly& b)
{
    XPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

/// prod (1 - r X) over the roots.
inline XPoly expand_linear_factors(const std::vector<PMono>& roots)
{
    XPoly r{LSum(PMono::one())};
    for (const auto& c : roots) r = xpoly_mul(r, XPoly{LSum(PMono::one()), -LSum(c)});
    return r;
}

inline std::string factors_to_string(const std::vector<PMono>& roots, const std::string& var = "X")
{
    std::string out;
    for (const auto& c : roots) {
        std::string s = c.to_string();
        if (s == "1") out += "(1 - " + var + ")";
        else if (s[0] == '-') out += "(1 + " + s.substr(1) + " " + var + ")";
        else out += "(1 - " + s + " " + var + ")";
    }
    return out;
}

struct SatakeParams {
    int genus = 0;
    LinExpr weight;
    std::vector<PMono> alphas;  // alpha_0 .. alpha_n
};

/// alpha_0^2 alpha_1 ... alpha_n = p^{kn - n(n+1)/2}.
inline bool check_satake_constraint(const SatakeParams& s)
{
    if (static_cast<int>(s.alphas.size()) != s.genus + 1)
        throw Error(Errc::invalid_argument, "expected " + std::to_string(s.genus + 1) + " parameters");
    PMono prod = s.alphas[0].pow(2);
    for (std::size_t i = 1; i < s.alphas.size(); ++i) prod = prod * s.alphas[i];
    if (!prod.only_p() || !prod.coef().is_one())
        throw Error(Errc::unsupported_symbolic_form, "product " + prod.to_string() + " is not a power of p");
    const long n = s.genus;
    return prod.p_exponent() == s.weight * Rational(n) - LinExpr(n * (n + 1) / 2);
}

/// Roots of the spinor factor: alpha_0 times every subset product.
inline std::vector<PMono> spin_polynomial(const SatakeParams& s)
{
    const int n = s.genus;
    if (n < 1 || n > 20 || static_cast<int>(s.alphas.size()) != n + 1)
        throw Error(Errc::invalid_argument, "bad parameter count");
    std::vector<PMono> roots;
    // subsets by size, then lexicographically
    for (int r = 0; r <= n; ++r) {
        std::vector<int> pick(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            PMono c = s.alphas[0];
            for (int i : pick) c = c * s.alphas[static_cast<std::size_t>(i)];
            roots.push_back(c);
            int j = r - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - r + j + 1) --j;
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < r; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return roots;
}

/// Roots of the standard factor: 1, then alpha_i^{-1}, alpha_i.
inline std::vector<PMono> standard_polynomial(const SatakeParams& s)
{
    if (static_cast<int>(s.alphas.size()) != s.genus + 1) throw Error(Errc::invalid_argument, "bad parameter count");
    std::vector<PMono> roots{PMono::one()};
    for (int i = 1; i <= s.genus; ++i) {
        const PMono& a = s.alphas[static_cast<std::size_t>(i)];
        if (a.is_zero()) throw Error(Errc::non_invertible_parameter, "alpha_" + std::to_string(i) + " is zero");
        roots.push_back(a.inverse());
        roots.push_back(a);
    }
    return roots;
}

inline SatakeParams eisenstein_params(const LinExpr& k, int genus)
{
    if (genus < 2 || genus % 2) throw Error(Errc::invalid_argument, "genus must be even and positive");
    const long m = genus / 2;
    SatakeParams s;
    s.genus = genus;
    s.weight = k;
    s.alphas.push_back(PMono::one());
    for (long i = 1; i <= genus; ++i) s.alphas.push_back(PMono::p_power(k - LinExpr(2 * m - i + 1)));
    return s;
}

struct MergeResult {
    SatakeParams params;
    bool weight_override = false;  // the l = k - 2m check was skipped
};

inline MergeResult lift_merge_params(const SatakeParams& f, const SatakeParams& g, bool allow_weight_mismatch = false)
{
    if (f.genus != g.genus) throw Error(Errc::genus_mismatch, "genera " + std::to_string(f.genus) + " and " + std::to_string(g.genus));
    if (f.genus % 2 || f.genus < 2) throw Error(Errc::genus_mismatch, "genus must be 2m");
    if (f.alphas.size() != static_cast<std::size_t>(f.genus + 1) || g.alphas.size() != f.alphas.size())
        throw Error(Errc::invalid_argument, "bad parameter count");
    MergeResult out;
    if (g.weight != f.weight - LinExpr(f.genus)) {
        if (!allow_weight_mismatch)
            throw Error(Errc::weight_mismatch, "weights " + f.weight.to_string() + " and " + g.weight.to_string() +
                                                   ", expected l = k - " + std::to_string(f.genus));
        out.weight_override = true;
    }
    SatakeParams& s = out.params;
    s.genus = 2 * f.genus;
    s.weight = f.weight;
    s.alphas.push_back(f.alphas[0] * g.alphas[0]);
    for (int i = 1; i <= f.genus; ++i) s.alphas.push_back(f.alphas[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= g.genus; ++i) s.alphas.push_back(g.alphas[static_cast<std::size_t>(i)]);
    return out;
}

/// Genus 2m, weight k + m: beta_0 = p^{mk - m(m+1)/2}, beta_i = a p^{i-1/2},
/// beta_{m+i} = a^{-1} p^{i-1/2}.
inline SatakeParams ikeda_params(const LinExpr& k, int m, const std::string& alpha = "alpha")
{
    if (m < 1) throw Error(Errc::invalid_argument, "m must be positive");
    SatakeParams s;
    s.genus = 2 * m;
    s.weight = k + LinExpr(m);
    s.alphas.push_back(PMono::p_power(k * Rational(m) - LinExpr(m * (m + 1) / 2)));
    PMono a = PMono::power(alpha, LinExpr(1));
    for (int i = 1; i <= m; ++i) s.alphas.push_back(a * PMono::p_power(LinExpr(Rational(2 * i - 1, 2))));
    for (int i = 1; i <= m; ++i) s.alphas.push_back(a.inverse() * PMono::p_power(LinExpr(Rational(2 * i - 1, 2))));
    return s;
}

struct IkedaReport {
    int m = 0;
    bool factorization_holds = false;  // standard factor = (1-X) prod of quadratics
    bool alpha_symmetric = false;
    int degree = 0;
    std::vector<LinExpr> shifts;       // c_j, derived by pairing factors
    bool shifts_match_template = false;  // c_j = j - k - m
    bool pairing_complete = false;
};

inline IkedaReport verify_ikeda_standard_factor(const LinExpr& k, int m, const std::string& alpha = "alpha")
{
    IkedaReport rep;
    rep.m = m;
    SatakeParams s = ikeda_params(k, m, alpha);
    std::vector<PMono> roots = standard_polynomial(s);
    XPoly lhs = expand_linear_factors(roots);
    rep.degree = static_cast<int>(lhs.size()) - 1;

    PMono a = PMono::power(alpha, LinExpr(1));
    LSum ap = (LSum(a) + LSum(a.inverse())) * LSum(PMono::p_power(k - LinExpr(Rational(1, 2))));

    // pair each root r with the root whose alpha-exponent is opposite and
    // p-exponent equal; r * r' = p^{2k-1+2c}, r + r' = a(p) p^c
    std::vector<bool> used(roots.size(), false);
    used[0] = true;
    rep.pairing_complete = true;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (roots[i].exponent(alpha) == -roots[j].exponent(alpha) &&
                roots[i].p_exponent() == roots[j].p_exponent() && roots[i].exponent(alpha) != LinExpr()) {
                used[i] = used[j] = true;
                rep.shifts.push_back(roots[i].p_exponent() - k + LinExpr(Rational(1, 2)));
                found = true;
                break;
            }
        }
        if (!found) rep.pairing_complete = false;
    }
    std::sort(rep.shifts.begin(), rep.shifts.end(),
              [](const LinExpr& x, const LinExpr& y) { return x.constant() < y.constant(); });

    std::vector<LinExpr> tmpl;
    for (int j = 1; j <= 2 * m; ++j) tmpl.push_back(LinExpr(j) - k - LinExpr(m));
    rep.shifts_match_template = rep.shifts == tmpl;

    XPoly rhs{LSum(PMono::one()), -LSum(PMono::one())};
    for (const auto& c : tmpl) {
        XPoly q{LSum(PMono::one()), -(ap * LSum(PMono::p_power(c))),
                LSum(PMono::p_power(k * Rational(2) - LinExpr(1) + c * Rational(2)))};
        rhs = xpoly_mul(rhs, q);
    }
    rep.factorization_holds = lhs == rhs;

    auto swap_alpha = [&](const PMono& u) {
        PMono r = PMono::one();
        for (const auto& [sym, e] : u.exps())
            r = r * (sym == alpha ? PMono::power(alpha, -e) : (sym == "q" ? PMono::power("q", e) : PMono::power(sym, e)));
        return r;
    };
    rep.alpha_symmetric = true;
    for (const auto& c : lhs)
        if (!(c.map_symbols(swap_alpha) == c)) rep.alpha_symmetric = false;
    return rep;
}

struct HodgePair {
    LinExpr p;
    LinExpr q;
    char tag = 0;  // '+' or '-' on tagged diagonal entries
    friend bool operator==(const HodgePair& a, const HodgePair& b)
    {
        return a.p == b.p && a.q == b.q && a.tag == b.tag;
    }
};

struct HodgeType {
    std::vector<HodgePair> pairs;
};

/// One pair per split of {1..n} into an i-set and a j-set:
/// (sum (k - i), sum (k - j)).
inline HodgeType hodge_spinor(int n, const LinExpr& k)
{
    if (n < 1 || n > 20) throw Error(Errc::invalid_argument, "n out of range");
    HodgeType h;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        HodgePair hp;
        for (int b = 0; b < n; ++b) {
            int idx = n - b;  // bit b selects index n - b
            if (mask & (1u << b)) hp.p += k - LinExpr(idx);
            else hp.q += k - LinExpr(idx);
        }
        h.pairs.push_back(hp);
    }
    return h;
}

/// Pairwise sums, row-major in a. A diagonal sum of two off-diagonal pairs
/// gets '+' when a's pair has p < q, else '-'.
inline HodgeType hodge_tensor(const HodgeType& a, const HodgeType& b)
{
    HodgeType h;
    for (const auto& x : a.pairs)
        for (const auto& y : b.pairs) {
            HodgePair hp{x.p + y.p, x.q + y.q, 0};
            if (hp.p == hp.q && x.p != x.q) hp.tag = (x.q - x.p).generic_sign() > 0 ? '+' : '-';
            h.pairs.push_back(hp);
        }
    return h;
}

} // namespace hecke

#endif
