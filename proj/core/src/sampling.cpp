#include "sepdiff/sampling.hpp"

#include "sepdiff/error.hpp"

namespace sepdiff {

fp_t Sampler::scalar() {
    return std::uniform_int_distribution<fp_t>(0, K_.characteristic() - 1)(rng_);
}

std::uint32_t Sampler::below(std::uint32_t bound) {
    return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng_);
}

GfPoly Sampler::poly(std::uint32_t max_deg, std::uint32_t max_terms) {
    std::uint32_t nv = K_.num_vars();
    std::vector<GfPoly::Term> terms;
    std::uint32_t count = 1 + below(max_terms);
    for (std::uint32_t i = 0; i < count; ++i) {
        Exponents e(nv, 0);
        for (std::uint32_t k = 0; k < nv; ++k) e[k] = below(max_deg + 1);
        terms.push_back({std::move(e), scalar()});
    }
    return GfPoly::from_terms(K_.characteristic(), nv, std::move(terms));
}

RationalFunction Sampler::element(std::uint32_t max_deg, std::uint32_t max_terms) {
    GfPoly num = poly(max_deg, max_terms);
    GfPoly den = poly(max_deg, max_terms);
    for (std::uint32_t tries = 0; den.is_zero() && tries < 64; ++tries)
        den = poly(max_deg, max_terms);
    if (den.is_zero()) den = GfPoly::constant(K_.characteristic(), K_.num_vars(), 1);
    return RationalFunction::from_fraction(K_, std::move(num), std::move(den));
}

RationalFunction Sampler::nonzero_element(std::uint32_t max_deg, std::uint32_t max_terms) {
    for (std::uint32_t tries = 0; tries < 256; ++tries) {
        RationalFunction a = element(max_deg, max_terms);
        if (!a.is_zero()) return a;
    }
    return RationalFunction::one(K_);
}

RationalFunction Sampler::constant_element(std::uint32_t max_deg, std::uint32_t max_terms) {
    RationalFunction a = element(max_deg, max_terms);
    auto ts = K_.t_slot();
    if (!ts) return a;  // trivial derivation: everything is constant
    std::uint32_t nv = K_.num_vars();
    std::vector<std::uint32_t> slot_map(nv), exp_mult(nv, 1);
    for (std::uint32_t i = 0; i < nv; ++i) slot_map[i] = i;
    exp_mult[*ts] = std::uint32_t(K_.characteristic());
    return RationalFunction::from_fraction(K_, a.num().remapped(nv, slot_map, exp_mult),
                                           a.den().remapped(nv, slot_map, exp_mult));
}

RationalFunction Sampler::nonconstant_element(std::uint32_t max_deg,
                                              std::uint32_t max_terms) {
    if (!K_.has_diff_gen())
        fail(Errc::Internal, "no nonconstant elements under the trivial derivation");
    for (std::uint32_t tries = 0; tries < 256; ++tries) {
        RationalFunction a = element(max_deg, max_terms);
        if (!a.is_constant()) return a;
    }
    return RationalFunction::diff_gen(K_);
}

DiffPoly Sampler::dpoly(std::uint32_t arity, std::uint32_t max_order,
                        std::uint32_t max_deg, std::uint32_t max_terms,
                        std::uint32_t coef_deg) {
    std::vector<DiffPoly::Term> terms;
    std::uint32_t count = 1 + below(max_terms);
    for (std::uint32_t i = 0; i < count; ++i) {
        DPMonomial m;
        std::uint32_t factors = below(3);
        for (std::uint32_t k = 0; k < factors; ++k) {
            DerivVar v{below(arity), below(max_order + 1)};
            m.push_back({v, 1 + below(max_deg)});
        }
        RationalFunction c = element(coef_deg, 2);
        terms.push_back({std::move(m), std::move(c)});
    }
    return DiffPoly::from_terms(K_, arity, std::move(terms));
}

DiffPoly Sampler::nonzero_dpoly(std::uint32_t arity, std::uint32_t max_order,
                                std::uint32_t max_deg, std::uint32_t max_terms,
                                std::uint32_t coef_deg) {
    for (std::uint32_t tries = 0; tries < 256; ++tries) {
        DiffPoly f = dpoly(arity, max_order, max_deg, max_terms, coef_deg);
        if (!f.is_zero()) return f;
    }
    return DiffPoly::scalar(K_, arity, 1);
}

}  // namespace sepdiff
