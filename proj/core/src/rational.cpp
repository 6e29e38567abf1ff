#include "sepdiff/rational.hpp"

#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

void check_same_field(const RationalFunction& a, const RationalFunction& b) {
    if (!(a.field() == b.field()))
        fail(Errc::Internal, "mixed field presentations in K-arithmetic");
}

}  // namespace

RationalFunction RationalFunction::zero(const FieldPresentation& K) {
    return {K, GfPoly(K.characteristic(), K.num_vars()),
            GfPoly::constant(K.characteristic(), K.num_vars(), 1)};
}

RationalFunction RationalFunction::one(const FieldPresentation& K) {
    return scalar(K, 1);
}

RationalFunction RationalFunction::scalar(const FieldPresentation& K, fp_t value) {
    return {K, GfPoly::constant(K.characteristic(), K.num_vars(), value),
            GfPoly::constant(K.characteristic(), K.num_vars(), 1)};
}

RationalFunction RationalFunction::generator(const FieldPresentation& K,
                                             std::uint32_t slot) {
    return {K, GfPoly::variable(K.characteristic(), K.num_vars(), slot),
            GfPoly::constant(K.characteristic(), K.num_vars(), 1)};
}

RationalFunction RationalFunction::diff_gen(const FieldPresentation& K) {
    auto slot = K.t_slot();
    if (!slot) fail(Errc::Internal, "presentation has no differential generator");
    return generator(K, *slot);
}

RationalFunction RationalFunction::from_poly(const FieldPresentation& K, GfPoly num) {
    return {K, std::move(num), GfPoly::constant(K.characteristic(), K.num_vars(), 1)};
}

RationalFunction RationalFunction::from_fraction(const FieldPresentation& K, GfPoly num,
                                                 GfPoly den) {
    if (den.is_zero()) fail(Errc::Internal, "zero denominator");
    if (num.is_zero()) return zero(K);
    GfPoly g = GfPoly::gcd(num, den);
    if (!g.is_one()) {
        num = *GfPoly::try_divide_exact(num, g);
        den = *GfPoly::try_divide_exact(den, g);
    }
    fp_t lc = den.leading_term().coef;
    if (lc != 1) {
        fp_t inv = fp_inv(lc, K.characteristic());
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return {K, std::move(num), std::move(den)};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.K_ == b.K_ && a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::operator-() const {
    return {K_, -num_, den_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    check_same_field(a, b);
    return RationalFunction::from_fraction(a.K_, a.num_ * b.den_ + b.num_ * a.den_,
                                           a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    check_same_field(a, b);
    return RationalFunction::from_fraction(a.K_, a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(Errc::Internal, "inverse of zero in K");
    return from_fraction(K_, den_, num_);
}

RationalFunction RationalFunction::pow(std::uint32_t e) const {
    RationalFunction r = one(K_);
    RationalFunction base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::derive() const {
    auto slot = K_.t_slot();
    if (!slot) return zero(K_);
    // delta restricted to polynomials is d/dt: GF(p) coefficients and the
    // constant generators are killed by the derivation.
    GfPoly dn = num_.derivative(*slot);
    GfPoly dd = den_.derivative(*slot);
    return from_fraction(K_, dn * den_ - num_ * dd, den_ * den_);
}

bool RationalFunction::is_constant() const { return derive().is_zero(); }

RationalFunction RationalFunction::frobenius() const {
    std::uint32_t p = std::uint32_t(K_.characteristic());
    return {K_, num_.exponents_scaled(p), den_.exponents_scaled(p)};
}

bool RationalFunction::is_pth_power() const {
    std::uint32_t p = std::uint32_t(K_.characteristic());
    return num_.exponents_divisible_by(p) && den_.exponents_divisible_by(p);
}

std::optional<RationalFunction> RationalFunction::pth_root() const {
    if (!is_pth_power()) return std::nullopt;
    std::uint32_t p = std::uint32_t(K_.characteristic());
    return RationalFunction{K_, num_.exponents_divided(p), den_.exponents_divided(p)};
}

RationalFunction RationalFunction::embedded_into(const FieldPresentation& larger) const {
    if (larger.characteristic() != K_.characteristic())
        fail(Errc::Internal, "embedding changes characteristic");
    std::vector<std::uint32_t> slot_map(K_.num_vars());
    std::vector<std::uint32_t> exp_mult(K_.num_vars(), 1);
    for (std::uint32_t i = 0; i < K_.num_constant_gens(); ++i) {
        auto s = larger.slot_of(K_.var_name(i));
        if (!s) fail(Errc::Internal, "target presentation is not an extension");
        slot_map[i] = *s;
    }
    if (K_.has_diff_gen()) {
        if (!larger.has_diff_gen())
            fail(Errc::Internal, "target presentation drops the differential generator");
        slot_map[*K_.t_slot()] = *larger.t_slot();
    }
    return {larger, num_.remapped(larger.num_vars(), slot_map, exp_mult),
            den_.remapped(larger.num_vars(), slot_map, exp_mult)};
}

std::string RationalFunction::to_string() const {
    const auto& names = K_.all_var_names();
    if (is_zero()) return "0";
    std::string ns = num_.to_string(names);
    if (den_.is_one()) return ns;
    std::string ds = den_.to_string(names);
    std::ostringstream os;
    if (num_.terms().size() > 1)
        os << "(" << ns << ")";
    else
        os << ns;
    os << "/";
    bool den_simple = den_.terms().size() == 1 && den_.leading_term().coef == 1 &&
                      den_.max_used_slot() >= 0 &&
                      [&] {
                          int used = 0;
                          for (auto e : den_.leading_term().mono)
                              if (e > 0) ++used;
                          return used == 1;
                      }();
    if (den_simple)
        os << ds;
    else
        os << "(" << ds << ")";
    return os.str();
}

int compare_values(const RationalFunction& a, const RationalFunction& b) {
    auto cmp_poly = [](const GfPoly& x, const GfPoly& y) -> int {
        const auto& tx = x.terms();
        const auto& ty = y.terms();
        for (std::size_t i = 0; i < std::min(tx.size(), ty.size()); ++i) {
            int c = compare_monomials(tx[i].mono, ty[i].mono);
            if (c != 0) return c;
            if (tx[i].coef != ty[i].coef) return tx[i].coef < ty[i].coef ? -1 : 1;
        }
        if (tx.size() != ty.size()) return tx.size() < ty.size() ? -1 : 1;
        return 0;
    };
    int c = cmp_poly(a.num(), b.num());
    if (c != 0) return c;
    return cmp_poly(a.den(), b.den());
}

}  // namespace sepdiff
