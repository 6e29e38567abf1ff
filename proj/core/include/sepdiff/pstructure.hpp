#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdiff/pcoordinates.hpp"
#include "sepdiff/rational.hpp"

namespace sepdiff {

// The p^n products a1^i1 ... an^in with 0 <= i_k < p, in ascending
// lexicographic exponent order (first index most significant), so the first
// element is always 1.
struct PMonomialSet {
    std::vector<RationalFunction> source;
    std::vector<RationalFunction> monomials;
};

PMonomialSet p_monomials(const FieldPresentation& K, std::span<const RationalFunction> A);

// p-monomials of A linearly independent over K^p.
bool is_p_independent(const FieldPresentation& K, std::span<const RationalFunction> A);

// Every entry constant and the tuple p-independent.
bool is_diff_p_independent(const FieldPresentation& K,
                           std::span<const RationalFunction> A);

struct ImperfectionDegrees {
    std::uint32_t epsilon = 0;  // [C_K : K^p] = p^epsilon
    std::uint32_t e = 0;        // [K : K^p] = p^e
};

ImperfectionDegrees degree_of_imperfection(const FieldPresentation& K);

// The constant generators for t-presentations, every generator otherwise.
std::vector<RationalFunction> differential_p_basis(const FieldPresentation& K);

enum class LambdaCase { NonConstant, Dependent, Independent, Solved };

const char* lambda_case_name(LambdaCase c);

struct LambdaResult {
    std::vector<RationalFunction> values;
    LambdaCase tag = LambdaCase::NonConstant;
};

// Finite-epsilon lambda functions over the presentation's differential
// p-basis: zero on non-constants, otherwise the unique values with
// b = sum_i values[i]^p * m_i(basis).
LambdaResult lambda_finite(const RationalFunction& b);

// Infinite-form lambda functions: zero when an entry is not constant, when
// the tuple is differentially p-dependent, or when (a;b) is differentially
// p-independent; otherwise the unique reconstruction over m(a).
LambdaResult lambda_infinite(std::span<const RationalFunction> a,
                             const RationalFunction& b);

// New presentation with fresh constant generators appended. Elements embed
// verbatim via RationalFunction::embedded_into.
FieldPresentation extend_with_constants(const FieldPresentation& K,
                                        std::vector<std::string> names);

// Rewrite map attached to a p-th root adjunction: the target constant
// generator c becomes r^p over the new presentation.
struct PthRootRewrite {
    FieldPresentation from;
    FieldPresentation to;
    std::string target;
    std::string root_name;
    RationalFunction apply(const RationalFunction& a) const;
};

// Replaces the constant generator `target` by a fresh p-th root (named
// root_name, or the first free name among r, r1, r2, ...).
// Errors: NotAConstantGenerator, DuplicateGeneratorName.
std::pair<FieldPresentation, PthRootRewrite> adjoin_pth_root(
    const FieldPresentation& K, const std::string& target, std::string root_name = "");

}  // namespace sepdiff
