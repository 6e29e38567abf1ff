#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepdiff/rational.hpp"

namespace sepdiff {

// The derivative variable delta^order(x_var). Ordered by (order, var), so the
// leader of a differential polynomial is its largest variable.
struct DerivVar {
    std::uint32_t var = 0;
    std::uint32_t order = 0;

    friend auto operator<=>(const DerivVar& a, const DerivVar& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.var <=> b.var;
    }
    friend bool operator==(const DerivVar&, const DerivVar&) = default;
};

// Monomial in derivative variables: (var, exponent) pairs sorted ascending by
// variable, exponents positive.
using DPMonomial = std::vector<std::pair<DerivVar, std::uint32_t>>;

// Pure lex order with larger derivative variables more significant.
int compare_dp_monomials(const DPMonomial& a, const DPMonomial& b);

struct Rank {
    std::uint32_t order = 0;
    std::uint32_t degree = 0;
    friend auto operator<=>(const Rank&, const Rank&) = default;
};

// Sparse element of K{x_1,...,x_n}. Terms are held in descending monomial
// order with nonzero coefficients in K.
class DiffPoly {
public:
    struct Term {
        DPMonomial mono;
        RationalFunction coef;
    };

    DiffPoly() = default;

    static DiffPoly zero(const FieldPresentation& K, std::uint32_t arity);
    static DiffPoly constant(const FieldPresentation& K, std::uint32_t arity,
                             RationalFunction value);
    static DiffPoly scalar(const FieldPresentation& K, std::uint32_t arity, fp_t value);
    static DiffPoly var(const FieldPresentation& K, std::uint32_t arity, DerivVar v,
                        std::uint32_t exp = 1);
    static DiffPoly from_terms(const FieldPresentation& K, std::uint32_t arity,
                               std::vector<Term> terms);

    const FieldPresentation& field() const { return K_; }
    std::uint32_t arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // true for elements of K, including zero
    bool in_coefficient_field() const;
    RationalFunction coefficient_value() const;  // requires in_coefficient_field

    friend bool operator==(const DiffPoly&, const DiffPoly&);
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

    DiffPoly operator-() const;
    friend DiffPoly operator+(const DiffPoly&, const DiffPoly&);
    friend DiffPoly operator-(const DiffPoly&, const DiffPoly&);
    friend DiffPoly operator*(const DiffPoly&, const DiffPoly&);
    DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
    DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }

    DiffPoly scaled(const RationalFunction& c) const;
    DiffPoly mul_var(DerivVar v, std::uint32_t exp) const;
    DiffPoly pow(std::uint32_t e) const;

    // Total derivative: delta(f) = f^delta + sum_j (df/dx_j) x_{j+1}.
    DiffPoly delta() const;
    DiffPoly delta(std::uint32_t times) const;
    // Coefficientwise derivation only (f^delta).
    DiffPoly coef_delta() const;

    // Formal partial derivative with respect to one derivative variable.
    DiffPoly partial(DerivVar v) const;

    // Rank calculus. order() is 0 for nonzero elements of K; the remaining
    // accessors require f outside K.
    std::uint32_t order() const;          // errors: ZeroPolynomial
    DerivVar leader() const;              // errors: ZeroPolynomial, ElementOfK
    std::uint32_t degree() const;         // degree of the leader
    Rank rank() const;
    DiffPoly separant() const;
    DiffPoly initial() const;

    std::uint32_t degree_in(DerivVar v) const;
    DiffPoly coefficient_of(DerivVar v, std::uint32_t k) const;
    std::uint64_t total_var_degree() const;
    std::vector<DerivVar> used_vars() const;  // ascending

    RationalFunction evaluate(std::span<const RationalFunction> point) const;

    static std::optional<DiffPoly> try_divide_exact(const DiffPoly& a, const DiffPoly& b);

    std::string to_string(std::span<const std::string> var_names) const;

private:
    void normalize();

    FieldPresentation K_;
    std::uint32_t arity_ = 0;
    std::vector<Term> terms_;
};

std::string deriv_var_to_string(DerivVar v, std::span<const std::string> var_names);

// Deterministic search for a in K with g(a) != 0: scalars of GF(p), then
// polynomials in t by degree and coefficient order, then products with
// constant-generator monomials. Returns nullopt when the budget (or the
// whole enumeration) is exhausted.
std::optional<RationalFunction> nonvanishing_witness(const DiffPoly& g,
                                                     std::uint64_t budget = 10000);

// The candidate enumeration itself, exposed for tests and the CLI.
class WitnessEnumerator {
public:
    explicit WitnessEnumerator(FieldPresentation K);
    // nullopt when the enumeration space is finite and exhausted
    std::optional<RationalFunction> next();

private:
    void refill();

    FieldPresentation K_;
    std::vector<RationalFunction> pending_;  // reversed chunk, consumed from back
    std::uint64_t round_ = 0;
    bool scalars_done_ = false;
    bool exhausted_ = false;
};

}  // namespace sepdiff
