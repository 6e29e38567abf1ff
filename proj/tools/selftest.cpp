#include "selftest.hpp"

#include <functional>

#include "sepdiff/parser.hpp"
#include "sepdiff/prolongation.hpp"
#include "sepdiff/pstructure.hpp"
#include "sepdiff/quotient.hpp"
#include "sepdiff/reduction.hpp"
#include "sepdiff/sampling.hpp"

namespace sepdiff::selftest {

namespace {

using Case = std::function<bool(Sampler&)>;

SuiteResult run_suite(const std::string& name, const FieldPresentation& K,
                      std::uint64_t seed, std::uint32_t cases, const Case& one) {
    Sampler s(K, seed);
    SuiteResult r{name, cases, 0};
    for (std::uint32_t i = 0; i < cases; ++i)
        if (!one(s)) ++r.failed;
    return r;
}

bool field_leibniz(Sampler& s) {
    RationalFunction a = s.element(), b = s.element();
    bool ok = (a * b).derive() == a * b.derive() + b * a.derive();
    ok = ok && (a + b).derive() == a.derive() + b.derive();
    RationalFunction c = s.constant_element();
    ok = ok && c.is_constant() && c.derive().is_zero();
    return ok;
}

bool frobenius_roundtrip(Sampler& s) {
    RationalFunction a = s.element();
    RationalFunction fa = a.frobenius();
    auto root = fa.pth_root();
    bool ok = fa.is_pth_power() && root && *root == a;
    PCoordinates pc = p_coordinates(a);
    RationalFunction acc = RationalFunction::zero(s.field());
    for (std::size_t i = 0; i < pc.entries.size(); ++i) {
        if (pc.entries[i].is_zero()) continue;
        ok = ok && pc.entries[i].is_pth_power();
        acc += pc.entries[i] * standard_basis_element(s.field(), i);
    }
    return ok && acc == a;
}

bool dp_derivation(Sampler& s) {
    DiffPoly f = s.dpoly(1, 2, 2, 3);
    DiffPoly g = s.dpoly(1, 2, 2, 3);
    bool ok = (f * g).delta() == f * g.delta() + g * f.delta();
    ok = ok && (f + g).delta() == f.delta() + g.delta();
    return ok;
}

bool partial_delta_identity(Sampler& s) {
    DiffPoly f = s.nonzero_dpoly(1, 3, 3, 4);
    std::uint32_t top = f.in_coefficient_field() ? 1 : f.order() + 1;
    for (std::uint32_t i = 0; i <= top; ++i) {
        DiffPoly lhs = f.delta().partial(DerivVar{0, i});
        DiffPoly rhs = f.partial(DerivVar{0, i}).delta();
        if (i > 0) rhs += f.partial(DerivVar{0, i - 1});
        if (lhs != rhs) return false;
    }
    return true;
}

bool certificates(Sampler& s) {
    DiffPoly f = s.nonzero_dpoly(1, 3, 3, 3);
    for (std::uint32_t tries = 0;
         (f.in_coefficient_field() || f.separant().is_zero()) && tries < 64; ++tries)
        f = s.nonzero_dpoly(1, 3, 3, 3);
    if (f.in_coefficient_field() || f.separant().is_zero()) return true;
    DiffPoly g = s.dpoly(1, 3, 3, 3);
    ReductionCertificate cert = full_reduce(g, f);
    if (!verify_certificate(cert, g, f)) return false;
    if (cert.remainder.is_zero()) return true;
    if (cert.remainder.in_coefficient_field()) return true;
    return cert.remainder.rank() < f.rank();
}

bool member_closure(Sampler& s) {
    const FieldPresentation& K = s.field();
    DiffPoly f = parse_dpoly("x'^2 - x", K, std::vector<std::string>{"x"});
    SatIdeal P = make_satideal(f);
    DiffPoly a = s.dpoly(1, 2, 2, 2);
    DiffPoly b = s.dpoly(1, 2, 2, 2);
    DiffPoly m1 = a * f + b * f.delta();
    if (!member(m1, P)) return false;
    if (!member(m1.delta(), P)) return false;
    if (!member(s.dpoly(1, 2, 2, 2) * m1, P)) return false;
    DiffPoly low = s.dpoly(1, 0, 1, 2);
    if (!low.is_zero() && member(low, P)) return false;
    return true;
}

bool lambda_reconstruction(Sampler& s) {
    const FieldPresentation& K = s.field();
    RationalFunction c = s.constant_element();
    LambdaResult lam = lambda_finite(c);
    if (lam.tag != LambdaCase::Solved) return false;
    PMonomialSet basis = p_monomials(K, differential_p_basis(K));
    RationalFunction acc = RationalFunction::zero(K);
    for (std::size_t i = 0; i < lam.values.size(); ++i)
        acc += lam.values[i].frobenius() * basis.monomials[i];
    if (acc != c) return false;
    if (K.has_diff_gen()) {
        RationalFunction nc = s.nonconstant_element();
        LambdaResult zero = lambda_finite(nc);
        if (zero.tag != LambdaCase::NonConstant) return false;
        for (const auto& v : zero.values)
            if (!v.is_zero()) return false;
    }
    return true;
}

bool prolong_compat(Sampler& s) {
    const FieldPresentation& K = s.field();
    std::uint32_t n = 1 + s.below(2);
    std::vector<DiffPoly> polys;
    for (std::uint32_t i = 0; i < 1 + s.below(2); ++i)
        polys.push_back(s.dpoly(n, 0, 2, 3));
    AlgebraicSystem sys = make_algebraic_system(n, polys);
    ProlongedSystem tau = prolong(sys);
    for (std::size_t i = 0; i < sys.polys.size(); ++i)
        if (substitute_y_with_derivatives(tau.pairs[i].second, n) != sys.polys[i].delta())
            return false;
    // point-on-variety: pick a first, then make every generator vanish there
    std::vector<RationalFunction> a;
    for (std::uint32_t i = 0; i < n; ++i) a.push_back(s.element(1, 2));
    std::vector<DiffPoly> vanishing;
    for (std::uint32_t r = 0; r < 2; ++r) {
        DiffPoly g = DiffPoly::zero(K, n);
        for (std::uint32_t i = 0; i < n; ++i) {
            DiffPoly xi = DiffPoly::var(K, n, DerivVar{i, 0});
            DiffPoly ai = DiffPoly::constant(K, n, a[i]);
            g += s.dpoly(n, 0, 1, 2) * (xi - ai);
        }
        vanishing.push_back(std::move(g));
    }
    ProlongedSystem tv = prolong(make_algebraic_system(n, vanishing));
    return check_membership(lift_point(a), tv);
}

bool parse_roundtrip(Sampler& s) {
    const FieldPresentation& K = s.field();
    std::vector<std::string> vars{"x"};
    DiffPoly f = s.dpoly(1, 3, 3, 4);
    if (parse_dpoly(f.to_string(vars), K, vars) != f) return false;
    RationalFunction a = s.element();
    return parse_element(a.to_string(), K) == a;
}

}  // namespace

std::vector<SuiteResult> run_all(std::uint64_t seed, std::uint32_t cases) {
    FieldPresentation gf5t = make_presentation(5, {}, true);
    FieldPresentation gf3ct = make_presentation(3, {"c"}, true);
    FieldPresentation gf2ab = make_presentation(2, {"a", "b"}, false);

    std::vector<SuiteResult> out;
    out.push_back(run_suite("field_leibniz", gf3ct, seed, cases, field_leibniz));
    out.push_back(run_suite("frobenius_roundtrip", gf3ct, seed + 1, cases, frobenius_roundtrip));
    out.push_back(run_suite("frobenius_trivial", gf2ab, seed + 2, cases, frobenius_roundtrip));
    out.push_back(run_suite("dp_derivation", gf5t, seed + 3, cases, dp_derivation));
    out.push_back(run_suite("partial_delta_identity", gf5t, seed + 4, cases,
                            partial_delta_identity));
    out.push_back(run_suite("certificates", gf5t, seed + 5, cases, certificates));
    out.push_back(run_suite("member_closure", gf5t, seed + 6, cases, member_closure));
    out.push_back(run_suite("lambda_reconstruction", gf3ct, seed + 7, cases,
                            lambda_reconstruction));
    out.push_back(run_suite("prolong_compat", gf5t, seed + 8, cases, prolong_compat));
    out.push_back(run_suite("parse_roundtrip", gf3ct, seed + 9, cases, parse_roundtrip));
    return out;
}

}  // namespace sepdiff::selftest
