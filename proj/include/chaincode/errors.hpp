#pragma once

#include <stdexcept>
#include <string>

namespace chaincode {

enum class errc {
    not_prime,
    reducible_modulus,
    degree_mismatch,
    field_mismatch,
    division_by_zero,
    zero_polynomial,
    not_coprime,
    unsupported_field_size,
    no_subgroup_generator,
    not_divisor,
    chain_violation,
    torsion_violation,
    degree_violation,
    coprime_case_nonzero_p,
    budget_exceeded,
    non_canonical,
    out_of_paper_scope,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_coprime: return "NotCoprime";
    case errc::unsupported_field_size: return "UnsupportedFieldSize";
    case errc::no_subgroup_generator: return "NoSubgroupGenerator";
    case errc::not_divisor: return "NotDivisor";
    case errc::chain_violation: return "ChainViolation";
    case errc::torsion_violation: return "TorsionViolation";
    case errc::degree_violation: return "DegreeViolation";
    case errc::coprime_case_nonzero_p: return "CoprimeCaseNonzeroP";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::non_canonical: return "NonCanonical";
    case errc::out_of_paper_scope: return "OutOfPaperScope";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace chaincode
