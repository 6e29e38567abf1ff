#include "sepdiff/reduction.hpp"

#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

void check_reduction_inputs(const DiffPoly& f) {
    if (f.arity() != 1)
        fail(Errc::MultivariateInput, "reduction is defined in one differential variable");
    if (f.is_zero() || f.in_coefficient_field())
        fail(Errc::ElementOfK, "cannot reduce modulo an element of K");
}

}  // namespace

PartialRemainderResult partial_remainder(const DiffPoly& g, const DiffPoly& f) {
    check_reduction_inputs(f);
    if (g.arity() != 1)
        fail(Errc::MultivariateInput, "reduction is defined in one differential variable");
    DiffPoly s = f.separant();
    if (s.is_zero()) fail(Errc::ZeroSeparant, "separant vanishes");

    std::uint32_t n = f.order();
    PartialRemainderResult res;
    res.remainder = g;
    std::vector<DiffPoly> delta_f = {f};  // delta_f[j] = delta^j f

    // Invariant: s^separant_exp * g = sum_j cofactors[j] * delta^j f + remainder.
    while (!res.remainder.is_zero() && !res.remainder.in_coefficient_field() &&
           res.remainder.order() > n) {
        std::uint32_t e = res.remainder.order();
        std::uint32_t k = e - n;
        while (delta_f.size() <= k) delta_f.push_back(delta_f.back().delta());
        DerivVar top{0, e};
        std::uint32_t d = res.remainder.degree_in(top);
        DiffPoly lead = res.remainder.coefficient_of(top, d);
        DiffPoly shift = lead.mul_var(top, d - 1);
        res.remainder = s * res.remainder - shift * delta_f[k];
        res.separant_exp += 1;
        for (auto& [j, h] : res.cofactors) h = s * h;
        auto [it, fresh] = res.cofactors.try_emplace(k, shift);
        if (!fresh) it->second += shift;
    }
    return res;
}

PseudoRemainderResult pseudo_remainder(const DiffPoly& h, const DiffPoly& f) {
    check_reduction_inputs(f);
    DerivVar lead = f.leader();
    std::uint32_t df = f.degree_in(lead);
    DiffPoly init = f.initial();

    PseudoRemainderResult res;
    res.quotient = DiffPoly::zero(f.field(), f.arity());
    res.remainder = h;
    if (h.is_zero()) return res;
    if (!h.in_coefficient_field() && h.order() > f.order())
        fail(Errc::OrderTooHigh, "pseudo-division needs order(h) <= order(f)");

    // Invariant: i_f^initial_exp * h = quotient * f + remainder.
    while (!res.remainder.is_zero() && res.remainder.degree_in(lead) >= df) {
        std::uint32_t dh = res.remainder.degree_in(lead);
        DiffPoly lc = res.remainder.coefficient_of(lead, dh);
        if (auto w = DiffPoly::try_divide_exact(lc, init)) {
            DiffPoly step = w->mul_var(lead, dh - df);
            res.quotient += step;
            res.remainder = res.remainder - step * f;
        } else {
            DiffPoly step = lc.mul_var(lead, dh - df);
            res.quotient = init * res.quotient + step;
            res.remainder = init * res.remainder - step * f;
            res.initial_exp += 1;
        }
    }
    return res;
}

ReductionCertificate full_reduce(const DiffPoly& g, const DiffPoly& f) {
    PartialRemainderResult part = partial_remainder(g, f);
    PseudoRemainderResult alg = pseudo_remainder(part.remainder, f);
    ReductionCertificate cert;
    cert.separant_exp = part.separant_exp;
    cert.initial_exp = alg.initial_exp;
    cert.cofactors = std::move(part.cofactors);
    cert.quotient = std::move(alg.quotient);
    cert.remainder = std::move(alg.remainder);
    return cert;
}

bool verify_certificate(const ReductionCertificate& cert, const DiffPoly& g,
                        const DiffPoly& f) {
    if (f.is_zero() || f.in_coefficient_field()) return false;
    DiffPoly s = f.separant();
    DiffPoly init = f.initial();
    DiffPoly lhs = init.pow(cert.initial_exp) * s.pow(cert.separant_exp) * g;
    DiffPoly acc = DiffPoly::zero(f.field(), f.arity());
    std::uint32_t max_j = 0;
    for (const auto& [j, h] : cert.cofactors) max_j = std::max(max_j, j);
    std::vector<DiffPoly> delta_f = {f};
    for (std::uint32_t j = 1; j <= max_j; ++j) delta_f.push_back(delta_f.back().delta());
    for (const auto& [j, h] : cert.cofactors) {
        if (j == 0) return false;
        acc += h * delta_f[j];
    }
    DiffPoly rhs = init.pow(cert.initial_exp) * acc + cert.quotient * f + cert.remainder;
    return lhs == rhs;
}

namespace {

// Reducibility witness from a repeated factor: gcd of f and one of its
// nonzero partials, computed over GF(p) in the combined variable space after
// clearing coefficient denominators.
std::optional<DiffPoly> repeated_factor(const DiffPoly& f) {
    const FieldPresentation& K = f.field();
    fp_t p = K.characteristic();
    std::uint32_t nk = K.num_vars();
    std::vector<DerivVar> vars = f.used_vars();
    std::uint32_t total = nk + std::uint32_t(vars.size());

    auto slot_of = [&](DerivVar v) {
        for (std::uint32_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return nk + i;
        fail(Errc::Internal, "unmapped derivative variable");
    };

    // common denominator of the coefficients
    GfPoly den = GfPoly::constant(p, nk, 1);
    for (const auto& t : f.terms()) {
        GfPoly g = GfPoly::gcd(den, t.coef.den());
        den = *GfPoly::try_divide_exact(den * t.coef.den(), g);
    }
    std::vector<GfPoly::Term> terms;
    for (const auto& t : f.terms()) {
        GfPoly c = t.coef.num() * *GfPoly::try_divide_exact(den, t.coef.den());
        for (const auto& ct : c.terms()) {
            Exponents e(total, 0);
            for (std::uint32_t i = 0; i < nk; ++i) e[i] = ct.mono[i];
            for (const auto& [v, ex] : t.mono) e[slot_of(v)] = ex;
            terms.push_back({std::move(e), ct.coef});
        }
    }
    GfPoly F = GfPoly::from_terms(p, total, std::move(terms));

    // strip monomial content in the field generators
    {
        GfPoly cont(p, total);
        for (const auto& t : F.terms()) {
            Exponents e = t.mono;
            for (std::uint32_t i = nk; i < total; ++i) e[i] = 0;
            cont = GfPoly::gcd(cont, GfPoly::from_terms(p, total, {{e, t.coef}}));
            if (cont.is_constant()) break;
        }
        if (!cont.is_constant()) F = *GfPoly::try_divide_exact(F, cont);
    }

    for (std::uint32_t i = 0; i < vars.size(); ++i) {
        GfPoly d = F.derivative(nk + i);
        if (d.is_zero()) continue;
        GfPoly g = GfPoly::gcd(F, d);
        bool positive = false;
        for (std::uint32_t j = nk; j < total; ++j) positive = positive || g.uses(j);
        if (!positive) continue;
        // back to K{x}
        std::vector<DiffPoly::Term> out;
        for (const auto& t : g.terms()) {
            Exponents e(nk, 0);
            for (std::uint32_t k = 0; k < nk; ++k) e[k] = t.mono[k];
            DPMonomial m;
            for (std::uint32_t k = 0; k < vars.size(); ++k)
                if (t.mono[nk + k] > 0) m.push_back({vars[k], t.mono[nk + k]});
            RationalFunction c = RationalFunction::from_poly(
                K, GfPoly::from_terms(p, nk, {{std::move(e), t.coef}}));
            out.push_back({std::move(m), std::move(c)});
        }
        DiffPoly witness = DiffPoly::from_terms(K, f.arity(), std::move(out));
        if (DiffPoly::try_divide_exact(f, witness)) return witness;
    }
    return std::nullopt;
}

}  // namespace

IrreducibilityResult check_irreducible_heuristic(const DiffPoly& f) {
    if (f.is_zero() || f.in_coefficient_field())
        fail(Errc::ElementOfK, "irreducibility applies to elements outside K");

    IrreducibilityResult res;

    // monomial content: a variable dividing every term gives a proper factor
    // unless f is a unit multiple of that variable
    for (DerivVar v : f.used_vars()) {
        bool divides_all = true;
        for (const auto& t : f.terms()) {
            bool has = false;
            for (const auto& [w, e] : t.mono) has = has || w == v;
            divides_all = divides_all && has;
        }
        if (divides_all) {
            DiffPoly var_poly = DiffPoly::var(f.field(), f.arity(), v);
            DiffPoly q = *DiffPoly::try_divide_exact(f, var_poly);
            if (q.in_coefficient_field()) {
                res.status = IrreducibilityStatus::Irreducible;
                return res;
            }
            res.status = IrreducibilityStatus::Reducible;
            res.factor = var_poly;
            return res;
        }
    }

    // affine polynomials are irreducible
    if (f.total_var_degree() == 1) {
        res.status = IrreducibilityStatus::Irreducible;
        return res;
    }

    // degree one in some variable whose coefficient is a unit of K
    for (DerivVar v : f.used_vars()) {
        if (f.degree_in(v) != 1) continue;
        DiffPoly c = f.coefficient_of(v, 1);
        if (c.in_coefficient_field() && !c.is_zero()) {
            res.status = IrreducibilityStatus::Irreducible;
            return res;
        }
    }

    // perfect p-th power
    {
        fp_t p = f.field().characteristic();
        bool pow_shape = true;
        for (const auto& t : f.terms()) {
            for (const auto& [v, e] : t.mono) pow_shape = pow_shape && e % p == 0;
            pow_shape = pow_shape && t.coef.is_pth_power();
        }
        if (pow_shape) {
            std::vector<DiffPoly::Term> root;
            for (const auto& t : f.terms()) {
                DPMonomial m = t.mono;
                for (auto& [v, e] : m) e /= std::uint32_t(p);
                root.push_back({std::move(m), *t.coef.pth_root()});
            }
            res.status = IrreducibilityStatus::Reducible;
            res.factor = DiffPoly::from_terms(f.field(), f.arity(), std::move(root));
            return res;
        }
    }

    if (auto w = repeated_factor(f)) {
        res.status = IrreducibilityStatus::Reducible;
        res.factor = std::move(w);
        return res;
    }

    res.status = IrreducibilityStatus::Unknown;
    return res;
}

const char* provenance_name(IrreducibilityProvenance p) {
    switch (p) {
        case IrreducibilityProvenance::VerifiedHeuristic: return "verified-heuristic";
        case IrreducibilityProvenance::AssertedByCaller: return "asserted";
    }
    return "unknown";
}

SatIdeal make_satideal(const DiffPoly& f, bool assert_irreducible) {
    check_reduction_inputs(f);
    DiffPoly s = f.separant();
    if (s.is_zero())
        fail(Errc::ZeroSeparant, "separant of the generator vanishes; [f]:s_f^inf needs s_f != 0");
    IrreducibilityResult ir = check_irreducible_heuristic(f);
    SatIdeal P;
    P.generator = f;
    P.separant = std::move(s);
    P.initial = f.initial();
    switch (ir.status) {
        case IrreducibilityStatus::Irreducible:
            P.provenance = IrreducibilityProvenance::VerifiedHeuristic;
            break;
        case IrreducibilityStatus::Reducible: {
            std::string w = ir.factor ? ir.factor->to_string(std::vector<std::string>{"x"})
                                      : std::string("?");
            fail(Errc::Reducible, "generator is reducible; factor " + w);
        }
        case IrreducibilityStatus::Unknown:
            if (!assert_irreducible)
                fail(Errc::IrreducibilityUnknown,
                     "irreducibility could not be verified; pass an explicit assertion");
            P.provenance = IrreducibilityProvenance::AssertedByCaller;
            break;
    }
    return P;
}

bool member(const DiffPoly& g, const SatIdeal& P) {
    if (g.is_zero()) return true;
    if (g.arity() != 1)
        fail(Errc::MultivariateInput, "membership is defined in one differential variable");
    return full_reduce(g, P.generator).remainder.is_zero();
}

std::string certificate_record(const ReductionCertificate& cert,
                               std::span<const std::string> var_names) {
    std::ostringstream os;
    os << "n = " << cert.separant_exp << "\n";
    os << "m = " << cert.initial_exp << "\n";
    for (const auto& [j, h] : cert.cofactors)
        os << "cofactor[" << j << "] = " << h.to_string(var_names) << "\n";
    os << "quotient = " << cert.quotient.to_string(var_names) << "\n";
    os << "remainder = " << cert.remainder.to_string(var_names) << "\n";
    return os.str();
}

}  // namespace sepdiff
