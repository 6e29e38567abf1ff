#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdiff/gfp.hpp"

namespace sepdiff {

// Exponent vector of a monomial; one slot per field generator.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order. Total degree first; ties compared from the
// last slot down, so with layout (c1,...,cm,t) the generator order is
// c1 < ... < cm < t. Returns <0, 0, >0.
int compare_monomials(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over GF(p). Terms are kept in descending
// monomial order with nonzero coefficients; this makes representations
// canonical and equality structural.
class GfPoly {
public:
    struct Term {
        Exponents mono;
        fp_t coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    GfPoly() = default;
    GfPoly(fp_t p, std::uint32_t nvars) : p_(p), nvars_(nvars) {}

    static GfPoly constant(fp_t p, std::uint32_t nvars, fp_t value);
    static GfPoly variable(fp_t p, std::uint32_t nvars, std::uint32_t slot,
                           std::uint32_t exp = 1);
    static GfPoly from_terms(fp_t p, std::uint32_t nvars, std::vector<Term> terms);

    fp_t characteristic() const { return p_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_value() == 1; }
    fp_t constant_value() const;  // requires is_constant()
    const Term& leading_term() const;

    static std::uint64_t degree_total(const Exponents& e);
    std::uint64_t total_degree() const;  // max over terms, 0 for the zero poly
    std::uint32_t degree_in(std::uint32_t slot) const;
    bool uses(std::uint32_t slot) const;
    std::int64_t max_used_slot() const;  // -1 when no variable appears

    friend bool operator==(const GfPoly&, const GfPoly&) = default;

    GfPoly operator-() const;
    friend GfPoly operator+(const GfPoly& a, const GfPoly& b);
    friend GfPoly operator-(const GfPoly& a, const GfPoly& b);
    friend GfPoly operator*(const GfPoly& a, const GfPoly& b);

    GfPoly scaled(fp_t c) const;
    GfPoly mul_monomial(const Exponents& mono, fp_t coef) const;
    GfPoly pow(std::uint32_t e) const;

    GfPoly derivative(std::uint32_t slot) const;

    // Coefficient of slot^k, with the slot exponent removed.
    GfPoly coefficient_of(std::uint32_t slot, std::uint32_t k) const;

    GfPoly monic() const;  // leading coefficient scaled to 1

    // Quotient a/b when it is exact, nullopt otherwise.
    static std::optional<GfPoly> try_divide_exact(const GfPoly& a, const GfPoly& b);

    // Monic gcd; gcd(0,0) = 0.
    static GfPoly gcd(const GfPoly& a, const GfPoly& b);

    // Frobenius support: x -> x^p multiplies every exponent by p and fixes
    // GF(p) coefficients, so p-th powers are recognized by exponent
    // divisibility alone.
    bool exponents_divisible_by(std::uint32_t k) const;
    GfPoly exponents_scaled(std::uint32_t k) const;
    GfPoly exponents_divided(std::uint32_t k) const;

    // Transport into another variable layout: slot i maps to slot_map[i]
    // and its exponent is multiplied by exp_mult[i].
    GfPoly remapped(std::uint32_t new_nvars, std::span<const std::uint32_t> slot_map,
                    std::span<const std::uint32_t> exp_mult) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    void normalize();

    fp_t p_ = 0;
    std::uint32_t nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace sepdiff
