#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepdiff/rational.hpp"

namespace sepdiff {

// Coordinates of an element of K over K^p with respect to the standard
// monomial basis {c1^e1 ... cm^em * t^j : 0 <= e_i, j < p} (the t part is
// omitted for trivial-derivation presentations). Every entry lies in K^p and
// the reconstruction identity sum(entry_b * b) == a holds exactly.
struct PCoordinates {
    FieldPresentation field;
    std::vector<RationalFunction> entries;
};

// p^e where e is the number of field generators (m, or m+1 with t).
std::uint64_t standard_basis_size(const FieldPresentation& K);

// Basis elements in ascending lexicographic exponent order, first index most
// significant: index = ((e1*p + e2)*p + ...)*p + j.
RationalFunction standard_basis_element(const FieldPresentation& K, std::uint64_t index);

PCoordinates p_coordinates(const RationalFunction& a);

struct PthPowerSolution {
    // Coefficients (in K^p) expressing target over the given vectors, or
    // nullopt when the target lies outside the span.
    std::optional<std::vector<RationalFunction>> coefficients;
    std::size_t rank = 0;
};

PthPowerSolution solve_over_pth_powers(const std::vector<PCoordinates>& vectors,
                                       const PCoordinates& target);

std::size_t pth_power_rank(const std::vector<PCoordinates>& vectors);

}  // namespace sepdiff
