#include "sepdiff/pstructure.hpp"

#include <algorithm>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 22))
            fail(Errc::Internal, "p-monomial set too large to enumerate");
        r *= base;
    }
    return r;
}

}  // namespace

PMonomialSet p_monomials(const FieldPresentation& K, std::span<const RationalFunction> A) {
    fp_t p = K.characteristic();
    std::uint64_t count = checked_pow(p, A.size());
    PMonomialSet set;
    set.source.assign(A.begin(), A.end());
    set.monomials.reserve(count);
    for (std::uint64_t index = 0; index < count; ++index) {
        RationalFunction m = RationalFunction::one(K);
        std::uint64_t rest = index;
        // first index most significant
        for (std::size_t k = A.size(); k-- > 0;) {
            std::uint32_t exp = std::uint32_t(rest % p);
            rest /= p;
            if (exp) m *= A[k].pow(exp);
        }
        set.monomials.push_back(std::move(m));
    }
    return set;
}

bool is_p_independent(const FieldPresentation& K, std::span<const RationalFunction> A) {
    PMonomialSet set = p_monomials(K, A);
    std::vector<PCoordinates> coords;
    coords.reserve(set.monomials.size());
    for (const auto& m : set.monomials) coords.push_back(p_coordinates(m));
    return pth_power_rank(coords) == coords.size();
}

bool is_diff_p_independent(const FieldPresentation& K,
                           std::span<const RationalFunction> A) {
    for (const auto& a : A)
        if (!a.is_constant()) return false;
    return is_p_independent(K, A);
}

ImperfectionDegrees degree_of_imperfection(const FieldPresentation& K) {
    // C_K = GF(p)(c1,...,cm)(t^p) for t-presentations, C_K = K otherwise;
    // in both cases the constant generators are a differential p-basis.
    ImperfectionDegrees d;
    d.epsilon = K.num_constant_gens();
    d.e = K.num_vars();
    return d;
}

std::vector<RationalFunction> differential_p_basis(const FieldPresentation& K) {
    std::vector<RationalFunction> basis;
    basis.reserve(K.num_constant_gens());
    for (std::uint32_t i = 0; i < K.num_constant_gens(); ++i)
        basis.push_back(RationalFunction::generator(K, i));
    return basis;
}

const char* lambda_case_name(LambdaCase c) {
    switch (c) {
        case LambdaCase::NonConstant: return "non-constant";
        case LambdaCase::Dependent: return "dependent";
        case LambdaCase::Independent: return "independent";
        case LambdaCase::Solved: return "solved";
    }
    return "unknown";
}

LambdaResult lambda_finite(const RationalFunction& b) {
    const FieldPresentation& K = b.field();
    fp_t p = K.characteristic();
    std::uint64_t count = checked_pow(p, K.num_constant_gens());

    LambdaResult res;
    res.values.assign(count, RationalFunction::zero(K));
    if (!b.is_constant()) {
        res.tag = LambdaCase::NonConstant;
        return res;
    }
    PCoordinates coords = p_coordinates(b);
    // With layout (e1,...,em,j), the p-monomials of the basis are the j = 0
    // slice of the standard basis; constants have no mass elsewhere.
    std::uint64_t stride = K.has_diff_gen() ? p : 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        for (std::uint64_t j = 1; j < stride; ++j)
            if (!coords.entries[i * stride + j].is_zero())
                fail(Errc::Internal, "constant with mass outside the constant slice");
        auto root = coords.entries[i * stride].pth_root();
        if (!root) fail(Errc::Internal, "p-coordinate outside K^p");
        res.values[i] = std::move(*root);
    }
    res.tag = LambdaCase::Solved;
    return res;
}

LambdaResult lambda_infinite(std::span<const RationalFunction> a,
                             const RationalFunction& b) {
    const FieldPresentation& K = b.field();
    fp_t p = K.characteristic();
    std::uint64_t count = checked_pow(p, a.size());

    LambdaResult res;
    res.values.assign(count, RationalFunction::zero(K));

    for (const auto& x : a)
        if (!x.is_constant()) {
            res.tag = LambdaCase::NonConstant;
            return res;
        }
    if (!b.is_constant()) {
        res.tag = LambdaCase::NonConstant;
        return res;
    }
    if (!is_p_independent(K, a)) {
        res.tag = LambdaCase::Dependent;
        return res;
    }
    std::vector<RationalFunction> extended(a.begin(), a.end());
    extended.push_back(b);
    if (is_p_independent(K, extended)) {
        res.tag = LambdaCase::Independent;
        return res;
    }

    PMonomialSet set = p_monomials(K, a);
    std::vector<PCoordinates> vectors;
    vectors.reserve(set.monomials.size());
    for (const auto& m : set.monomials) vectors.push_back(p_coordinates(m));
    PthPowerSolution sol = solve_over_pth_powers(vectors, p_coordinates(b));
    if (!sol.coefficients)
        fail(Errc::Internal, "dependent tuple without a reconstruction");
    for (std::uint64_t i = 0; i < count; ++i) {
        auto root = (*sol.coefficients)[i].pth_root();
        if (!root) fail(Errc::Internal, "reconstruction coefficient outside K^p");
        res.values[i] = std::move(*root);
    }
    res.tag = LambdaCase::Solved;
    return res;
}

FieldPresentation extend_with_constants(const FieldPresentation& K,
                                        std::vector<std::string> names) {
    std::vector<std::string> gens = K.constant_gens();
    for (auto& n : names) gens.push_back(std::move(n));
    return make_presentation(K.characteristic(), std::move(gens), K.has_diff_gen());
}

RationalFunction PthRootRewrite::apply(const RationalFunction& a) const {
    if (!(a.field() == from))
        fail(Errc::Internal, "rewrite applied to an element of another presentation");
    std::uint32_t nv = from.num_vars();
    std::vector<std::uint32_t> slot_map(nv), exp_mult(nv, 1);
    for (std::uint32_t i = 0; i < nv; ++i) slot_map[i] = i;
    exp_mult[*from.slot_of(target)] = std::uint32_t(from.characteristic());
    return RationalFunction::from_fraction(to,
                                           a.num().remapped(to.num_vars(), slot_map, exp_mult),
                                           a.den().remapped(to.num_vars(), slot_map, exp_mult));
}

std::pair<FieldPresentation, PthRootRewrite> adjoin_pth_root(const FieldPresentation& K,
                                                             const std::string& target,
                                                             std::string root_name) {
    auto slot = K.slot_of(target);
    if (!slot || (K.t_slot() && *slot == *K.t_slot()))
        fail(Errc::NotAConstantGenerator,
             "'" + target + "' is not a constant generator of " + K.to_string());
    if (root_name.empty()) {
        for (std::uint64_t i = 0;; ++i) {
            std::string cand = i == 0 ? "r" : "r" + std::to_string(i);
            if (!K.slot_of(cand)) {
                root_name = cand;
                break;
            }
        }
    }
    std::vector<std::string> gens = K.constant_gens();
    gens[*slot] = root_name;
    FieldPresentation next = make_presentation(K.characteristic(), std::move(gens),
                                               K.has_diff_gen());
    PthRootRewrite rw{K, next, target, root_name};
    return {std::move(next), std::move(rw)};
}

}  // namespace sepdiff
