#pragma once

#include <stdexcept>
#include <string>

namespace tropigusa {

// Domain errors carry a stable machine-readable code alongside the message.
// The CLI maps codes 1:1 into its error JSON; tests match on code().
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TROPIGUSA_ERROR(NAME, CODE)                                   \
    class NAME : public domain_error {                                \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : domain_error(CODE, message) {}                          \
    }

TROPIGUSA_ERROR(zero_leading_coefficient, "ZeroLeadingCoefficient");
TROPIGUSA_ERROR(degenerate_curve, "DegenerateCurve");
TROPIGUSA_ERROR(not_a_root, "NotARoot");
TROPIGUSA_ERROR(root_not_simple, "RootNotSimple");
TROPIGUSA_ERROR(non_commensurable_lengths, "NonCommensurableLengths");
TROPIGUSA_ERROR(unknown_vertex, "UnknownVertex");
TROPIGUSA_ERROR(non_zero_degree, "NonZeroDegree");
TROPIGUSA_ERROR(not_principal, "NotPrincipal");
TROPIGUSA_ERROR(non_positive_thickness, "NonPositiveThickness");
TROPIGUSA_ERROR(invalid_config, "InvalidConfig");
TROPIGUSA_ERROR(no_case_matches, "NoCaseMatches");
TROPIGUSA_ERROR(ambiguous_verdict, "AmbiguousVerdict");
TROPIGUSA_ERROR(parse_error, "ParseError");

#undef TROPIGUSA_ERROR

} // namespace tropigusa
