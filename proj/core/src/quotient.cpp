#include "sepdiff/quotient.hpp"

#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

const SatIdeal& deref(const std::shared_ptr<const SatIdeal>& p) {
    if (!p) fail(Errc::Internal, "quotient element without an ideal");
    return *p;
}

void check_same_ideal(const QuotientElement& a, const QuotientElement& b) {
    if (!(deref(a.ideal()).generator == deref(b.ideal()).generator))
        fail(Errc::MixedIdeals, "operands live over different saturated ideals");
}

}  // namespace

QuotientElement::QuotientElement(std::shared_ptr<const SatIdeal> ideal, DiffPoly num,
                                 DiffPoly den)
    : ideal_(std::move(ideal)), num_(std::move(num)), den_(std::move(den)) {
    if (member(den_, deref(ideal_)))
        fail(Errc::DivisionByZeroClass, "denominator lies in the ideal");
}

std::string QuotientElement::to_string(std::span<const std::string> var_names) const {
    const SatIdeal& P = deref(ideal_);
    DiffPoly n = full_reduce(num_, P.generator).remainder;
    DiffPoly d = full_reduce(den_, P.generator).remainder;
    std::string ns = n.to_string(var_names);
    if (d.in_coefficient_field() && !d.is_zero() && d.coefficient_value().is_one())
        return ns;
    return "(" + ns + ")/(" + d.to_string(var_names) + ")";
}

QuotientElement generic_point(std::shared_ptr<const SatIdeal> P) {
    const SatIdeal& ideal = deref(P);
    const FieldPresentation& K = ideal.generator.field();
    DiffPoly x0 = DiffPoly::var(K, ideal.generator.arity(), DerivVar{0, 0});
    DiffPoly one = DiffPoly::scalar(K, ideal.generator.arity(), 1);
    return QuotientElement(std::move(P), std::move(x0), std::move(one));
}

QuotientElement image(const DiffPoly& g, std::shared_ptr<const SatIdeal> P) {
    const SatIdeal& ideal = deref(P);
    DiffPoly one = DiffPoly::scalar(ideal.generator.field(), ideal.generator.arity(), 1);
    return QuotientElement(std::move(P), g, std::move(one));
}

QuotientElement q_add(const QuotientElement& a, const QuotientElement& b) {
    check_same_ideal(a, b);
    return QuotientElement(a.ideal(), a.num() * b.den() + b.num() * a.den(),
                           a.den() * b.den());
}

QuotientElement q_sub(const QuotientElement& a, const QuotientElement& b) {
    return q_add(a, q_neg(b));
}

QuotientElement q_mul(const QuotientElement& a, const QuotientElement& b) {
    check_same_ideal(a, b);
    return QuotientElement(a.ideal(), a.num() * b.num(), a.den() * b.den());
}

QuotientElement q_neg(const QuotientElement& a) {
    return QuotientElement(a.ideal(), -a.num(), a.den());
}

QuotientElement q_inv(const QuotientElement& a) {
    if (q_is_zero(a)) fail(Errc::DivisionByZeroClass, "inverse of the zero class");
    return QuotientElement(a.ideal(), a.den(), a.num());
}

bool q_is_zero(const QuotientElement& a) { return member(a.num(), deref(a.ideal())); }

bool q_eq(const QuotientElement& a, const QuotientElement& b) {
    check_same_ideal(a, b);
    return member(a.num() * b.den() - b.num() * a.den(), deref(a.ideal()));
}

QuotientElement q_delta(const QuotientElement& a) {
    DiffPoly dn = a.num().delta();
    DiffPoly dd = a.den().delta();
    return QuotientElement(a.ideal(), dn * a.den() - a.num() * dd, a.den() * a.den());
}

bool separating_basis_check(const SatIdeal& P) { return !member(P.separant, P); }

WitnessReport sdcf_witness(const DiffPoly& f, const DiffPoly& g, bool assert_irreducible) {
    if (f.is_zero() || g.is_zero())
        fail(Errc::ZeroInput, "witness construction needs nonzero f and g");
    if (f.arity() != 1 || g.arity() != 1)
        fail(Errc::MultivariateInput, "witness construction is one-variable");

    WitnessReport rep;
    if (f.in_coefficient_field())
        fail(Errc::ElementOfK, "f must involve the differential variable");
    DiffPoly s = f.separant();
    if (s.is_zero()) fail(Errc::ZeroSeparant, "separant of f vanishes");
    rep.precondition_log.push_back("separant_nonzero");

    // Minimal rank of f in P (Theorem 3.1-style) excludes any nonzero g with
    // rank(g) < rank(f); nonzero elements of K are excluded because P is a
    // proper ideal. Both generalize the order-based side condition.
    std::uint32_t ord_f = f.order();
    if (g.in_coefficient_field()) {
        if (ord_f == 0)
            fail(Errc::OrderNotLower,
                 "g lies in K but order(f) = 0; need order(g) < order(f)");
        rep.precondition_log.push_back("order(g) = 0 < order(f) = " +
                                       std::to_string(ord_f));
    } else {
        std::uint32_t ord_g = g.order();
        if (ord_g >= ord_f && !(g.rank() < f.rank()))
            fail(Errc::OrderNotLower,
                 "rank(g) must drop below rank(f): order(g) = " + std::to_string(ord_g) +
                     ", order(f) = " + std::to_string(ord_f));
        rep.precondition_log.push_back("rank(g) < rank(f)");
    }

    auto P = std::make_shared<const SatIdeal>(make_satideal(f, assert_irreducible));
    rep.precondition_log.push_back(std::string("irreducibility = ") +
                                   provenance_name(P->provenance));

    rep.ideal = P;
    rep.generic_point = generic_point(P);
    rep.f_value_zero = q_is_zero(image(f, P));
    rep.g_value_nonzero = !q_is_zero(image(g, P));
    rep.separability_flag = separating_basis_check(*P);
    return rep;
}

std::string witness_record(const WitnessReport& report,
                           std::span<const std::string> var_names) {
    std::ostringstream os;
    os << "ideal.f = " << report.ideal->generator.to_string(var_names) << "\n";
    os << (report.f_value_zero ? "f_at_a = 0\n" : "f_at_a != 0\n");
    os << (report.g_value_nonzero ? "g_at_a != 0\n" : "g_at_a = 0\n");
    os << "separant_nonzero = " << (report.separability_flag ? "true" : "false") << "\n";
    os << "irreducibility = " << provenance_name(report.ideal->provenance) << "\n";
    return os.str();
}

}  // namespace sepdiff
