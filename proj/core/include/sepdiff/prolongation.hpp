#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdiff/diffpoly.hpp"

namespace sepdiff {

// Purely algebraic system: polynomials in x_1..x_n with every derivative
// order zero.
struct AlgebraicSystem {
    std::uint32_t arity = 0;
    std::vector<DiffPoly> polys;
};

// Errors: DerivativeVariablePresent.
AlgebraicSystem make_algebraic_system(std::uint32_t arity, std::vector<DiffPoly> polys);

// Pairs (f, Df) over the 2n-variable ring with variables x_1..x_n,y_1..y_n,
// where Df = sum_i (df/dx_i) y_i + f^delta. Each Df has y-degree <= 1 and
// substituting y_i -> x_i' recovers delta(f).
struct ProlongedSystem {
    std::uint32_t arity = 0;  // n
    std::vector<std::pair<DiffPoly, DiffPoly>> pairs;
};

ProlongedSystem prolong(const AlgebraicSystem& sys);

// (a_1,...,a_n) -> (a_1,...,a_n, delta a_1,..., delta a_n).
std::vector<RationalFunction> lift_point(std::span<const RationalFunction> a);

// All equations of the prolonged system vanish at the 2n-point.
// Errors: ArityMismatch.
bool check_membership(std::span<const RationalFunction> point,
                      const ProlongedSystem& tau);

// y_i -> x_i' back-substitution, for the compatibility identity with delta.
DiffPoly substitute_y_with_derivatives(const DiffPoly& df, std::uint32_t n);

// Variable names for printing: the system's own names then y1..yn.
std::vector<std::string> prolonged_var_names(std::span<const std::string> base_names);

}  // namespace sepdiff
