#ifndef HECKE_ERROR_HPP
#define HECKE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

/// Failure classes surfaced by the library. Several of these (NotDivisible,
/// NotInImage) are verification outcomes rather than programming errors.
enum class Errc {
    mismatched_var_table,
    unknown_variable,
    too_many_variables,
    division_by_zero,
    not_divisible,
    non_unit_binding,
    denominator_not_unit_at_origin,
    repeated_base,
    not_linear_factor_form,
    unsupported_genus,
    alphabet_mismatch,
    not_invariant,
    not_homogeneous,
    not_in_image,
    unsupported_symbolic_form,
    non_invertible_parameter,
    genus_mismatch,
    weight_mismatch,
    parse_error,
    invalid_argument,
};

constexpr std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::mismatched_var_table: return "MismatchedVarTable";
    case Errc::unknown_variable: return "UnknownVariable";
    case Errc::too_many_variables: return "TooManyVariables";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::non_unit_binding: return "NonUnitBindingForInvertedVariable";
    case Errc::denominator_not_unit_at_origin: return "DenominatorNotUnitAtOrigin";
    case Errc::repeated_base: return "RepeatedBase";
    case Errc::not_linear_factor_form: return "NotLinearFactorForm";
    case Errc::unsupported_genus: return "UnsupportedGenus";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::not_in_image: return "NotInImage";
    case Errc::unsupported_symbolic_form: return "UnsupportedSymbolicForm";
    case Errc::non_invertible_parameter: return "NonInvertibleParameter";
    case Errc::genus_mismatch: return "GenusMismatch";
    case Errc::weight_mismatch: return "WeightMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hecke

#endif
