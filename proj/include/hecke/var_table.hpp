#ifndef HECKE_VAR_TABLE_HPP
#define HECKE_VAR_TABLE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

inline constexpr std::size_t kMaxVars = 16;

/// Ordered variable alphabet shared by every polynomial built over it.
/// Position in the table is the lexicographic rank: earlier names compare
/// larger in the graded-lex order.
class VarTable {
public:
    VarTable() : names_(canonical().names_) {}

    explicit VarTable(std::vector<std::string> names)
    {
        if (names.size() > kMaxVars)
            throw Error(Errc::too_many_variables,
                        std::to_string(names.size()) + " names, limit " + std::to_string(kMaxVars));
        std::unordered_set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty() || !seen.insert(n).second)
                throw Error(Errc::invalid_argument, "duplicate or empty variable name '" + n + "'");
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    /// p, x0..x2, y0..y2, X, u0..u4, alpha, q (q stands for p^{1/2}).
    static const VarTable& canonical()
    {
        static const VarTable table(std::vector<std::string>{
            "p", "x0", "x1", "x2", "y0", "y1", "y2", "X", "u0", "u1", "u2", "u3", "u4", "alpha", "q"});
        return table;
    }

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }

    std::optional<std::size_t> find(std::string_view n) const
    {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == n) return i;
        return std::nullopt;
    }

    std::size_t index(std::string_view n) const
    {
        if (auto i = find(n)) return *i;
        throw Error(Errc::unknown_variable, "'" + std::string(n) + "'");
    }

    friend bool operator==(const VarTable& a, const VarTable& b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_table(const VarTable& a, const VarTable& b)
{
    if (a != b) throw Error(Errc::mismatched_var_table, "operands built over different variable tables");
}

} // namespace hecke

#endif
