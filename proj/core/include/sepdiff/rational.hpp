#pragma once

#include <optional>
#include <string>

#include "sepdiff/gfp_poly.hpp"
#include "sepdiff/presentation.hpp"

namespace sepdiff {

// Element of K as a reduced fraction of sparse polynomials over GF(p).
// Canonical form: gcd(num,den) = 1, den monic under the graded-lex order,
// zero stored as 0/1. Two arithmetic routes to the same field element
// produce identical representations, so equality is structural.
class RationalFunction {
public:
    RationalFunction() = default;

    static RationalFunction zero(const FieldPresentation& K);
    static RationalFunction one(const FieldPresentation& K);
    static RationalFunction scalar(const FieldPresentation& K, fp_t value);
    static RationalFunction generator(const FieldPresentation& K, std::uint32_t slot);
    static RationalFunction diff_gen(const FieldPresentation& K);  // t
    static RationalFunction from_fraction(const FieldPresentation& K, GfPoly num,
                                          GfPoly den);
    static RationalFunction from_poly(const FieldPresentation& K, GfPoly num);

    const FieldPresentation& field() const { return K_; }
    const GfPoly& num() const { return num_; }
    const GfPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    friend bool operator==(const RationalFunction&, const RationalFunction&);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction inverse() const;
    RationalFunction pow(std::uint32_t e) const;

    // delta on K: quotient rule over the presentation derivation.
    RationalFunction derive() const;
    bool is_constant() const;  // delta(a) == 0

    RationalFunction frobenius() const;  // a^p
    bool is_pth_power() const;
    std::optional<RationalFunction> pth_root() const;

    // Transports this element verbatim into a presentation that extends the
    // current one by extra constant generators.
    RationalFunction embedded_into(const FieldPresentation& larger) const;

    std::string to_string() const;

private:
    RationalFunction(FieldPresentation K, GfPoly num, GfPoly den)
        : K_(std::move(K)), num_(std::move(num)), den_(std::move(den)) {}

    FieldPresentation K_;
    GfPoly num_;
    GfPoly den_;
};

// Total deterministic order on canonical forms (used for sorting only).
int compare_values(const RationalFunction& a, const RationalFunction& b);

}  // namespace sepdiff
