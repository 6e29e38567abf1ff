#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sepdiff/diffpoly.hpp"

namespace sepdiff {

// Certificate for the division identity
//   i_f^m * s_f^n * g = i_f^m * sum_j cofactor[j] * delta^j(f) + quotient * f
//                       + remainder
// with order(remainder) <= order(f) and rank(remainder) < rank(f) or
// remainder = 0. The exponents are whatever the elimination produces; no
// minimality is claimed.
struct ReductionCertificate {
    std::uint32_t separant_exp = 0;  // n
    std::uint32_t initial_exp = 0;   // m
    std::map<std::uint32_t, DiffPoly> cofactors;
    DiffPoly quotient;
    DiffPoly remainder;
};

struct PartialRemainderResult {
    std::uint32_t separant_exp = 0;
    DiffPoly remainder;  // order <= order(f)
    std::map<std::uint32_t, DiffPoly> cofactors;
};

struct PseudoRemainderResult {
    std::uint32_t initial_exp = 0;
    DiffPoly quotient;
    DiffPoly remainder;  // rank < rank(f) or zero
};

// s_f^n * g = sum_j h_j delta^j f + remainder.
// Errors: ZeroSeparant, MultivariateInput, ElementOfK.
PartialRemainderResult partial_remainder(const DiffPoly& g, const DiffPoly& f);

// i_f^m * h = q * f + remainder. Errors: OrderTooHigh, ElementOfK.
PseudoRemainderResult pseudo_remainder(const DiffPoly& h, const DiffPoly& f);

ReductionCertificate full_reduce(const DiffPoly& g, const DiffPoly& f);

// Exact expansion check of the certificate identity. Independent of the
// elimination loops above.
bool verify_certificate(const ReductionCertificate& cert, const DiffPoly& g,
                        const DiffPoly& f);

enum class IrreducibilityStatus { Irreducible, Reducible, Unknown };

struct IrreducibilityResult {
    IrreducibilityStatus status = IrreducibilityStatus::Unknown;
    std::optional<DiffPoly> factor;  // witness when Reducible
};

// Sound sufficient criteria only: linear polynomials, degree one in a
// variable with unit coefficient; reducibility witnesses from monomial
// content, repeated factors, and perfect p-th powers.
IrreducibilityResult check_irreducible_heuristic(const DiffPoly& f);

enum class IrreducibilityProvenance { VerifiedHeuristic, AssertedByCaller };

const char* provenance_name(IrreducibilityProvenance p);

// P = [f] : s_f^infty for irreducible f with nonzero separant. The stored
// separant/initial are audited by separating_basis_check.
struct SatIdeal {
    DiffPoly generator;
    DiffPoly separant;
    DiffPoly initial;
    IrreducibilityProvenance provenance = IrreducibilityProvenance::VerifiedHeuristic;
};

// Errors: ZeroSeparant, ElementOfK, Reducible, IrreducibilityUnknown,
// MultivariateInput.
SatIdeal make_satideal(const DiffPoly& f, bool assert_irreducible = false);

// Membership decision: remainder of full_reduce is zero. Sound and complete
// for irreducible f with nonzero separant.
bool member(const DiffPoly& g, const SatIdeal& P);

std::string certificate_record(const ReductionCertificate& cert,
                               std::span<const std::string> var_names);

}  // namespace sepdiff
