#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sepdiff/reduction.hpp"

namespace sepdiff {

// Element of L = Frac(K{x}/P) for P = [f]:s_f^infty, kept as a raw fraction
// of differential polynomials. Equality is semantic: (n1,d1) == (n2,d2) iff
// n1*d2 - n2*d1 lies in P. Denominators stay outside P, which is legal to
// require because P is prime.
class QuotientElement {
public:
    QuotientElement() = default;
    QuotientElement(std::shared_ptr<const SatIdeal> ideal, DiffPoly num, DiffPoly den);

    const std::shared_ptr<const SatIdeal>& ideal() const { return ideal_; }
    const DiffPoly& num() const { return num_; }
    const DiffPoly& den() const { return den_; }

    // Remainder-form representative, for printing only.
    std::string to_string(std::span<const std::string> var_names) const;

private:
    std::shared_ptr<const SatIdeal> ideal_;
    DiffPoly num_;
    DiffPoly den_;
};

QuotientElement generic_point(std::shared_ptr<const SatIdeal> P);
QuotientElement image(const DiffPoly& g, std::shared_ptr<const SatIdeal> P);

QuotientElement q_add(const QuotientElement& a, const QuotientElement& b);
QuotientElement q_sub(const QuotientElement& a, const QuotientElement& b);
QuotientElement q_mul(const QuotientElement& a, const QuotientElement& b);
QuotientElement q_neg(const QuotientElement& a);
QuotientElement q_inv(const QuotientElement& a);  // errors: DivisionByZeroClass
bool q_is_zero(const QuotientElement& a);
bool q_eq(const QuotientElement& a, const QuotientElement& b);

// delta(num/den) = (delta(num) den - num delta(den)) / den^2.
QuotientElement q_delta(const QuotientElement& a);

// Always true for honestly constructed ideals; false flags a corrupted
// SatIdeal whose stored separant fell into P.
bool separating_basis_check(const SatIdeal& P);

struct WitnessReport {
    std::shared_ptr<const SatIdeal> ideal;
    QuotientElement generic_point;
    bool f_value_zero = false;
    bool g_value_nonzero = false;
    bool separability_flag = false;
    std::vector<std::string> precondition_log;
};

// Witness for the solvability axiom instance f(x)=0, g(x)!=0 built inside
// L = Frac(K{x}/P). Requires nonzero f,g, nonzero separant, order(g) <
// order(f), and irreducibility evidence (heuristic or asserted).
// Errors: ZeroInput, ZeroSeparant, OrderNotLower, IrreducibilityUnknown,
// Reducible.
WitnessReport sdcf_witness(const DiffPoly& f, const DiffPoly& g,
                           bool assert_irreducible = false);

std::string witness_record(const WitnessReport& report,
                           std::span<const std::string> var_names);

}  // namespace sepdiff
