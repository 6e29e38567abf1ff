#include "sepdiff/pcoordinates.hpp"

#include <map>

#include "sepdiff/error.hpp"

namespace sepdiff {

std::uint64_t standard_basis_size(const FieldPresentation& K) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < K.num_vars(); ++i) n *= K.characteristic();
    return n;
}

RationalFunction standard_basis_element(const FieldPresentation& K, std::uint64_t index) {
    fp_t p = K.characteristic();
    std::uint32_t nv = K.num_vars();
    Exponents e(nv, 0);
    for (std::uint32_t i = nv; i-- > 0;) {
        e[i] = std::uint32_t(index % p);
        index /= p;
    }
    if (index != 0) fail(Errc::Internal, "basis index out of range");
    GfPoly mono = GfPoly::from_terms(p, nv, {{e, 1}});
    return RationalFunction::from_poly(K, mono);
}

PCoordinates p_coordinates(const RationalFunction& a) {
    const FieldPresentation& K = a.field();
    fp_t p = K.characteristic();
    std::uint32_t nv = K.num_vars();
    std::uint64_t size = standard_basis_size(K);

    PCoordinates out{K, std::vector<RationalFunction>(size, RationalFunction::zero(K))};
    if (a.is_zero()) return out;

    // a = num/den = (num * den^{p-1}) / den^p; the denominator is now in K^p
    // and the numerator splits by exponent residues mod p.
    GfPoly den_p = a.den().pow(std::uint32_t(p));
    GfPoly w = a.num() * a.den().pow(std::uint32_t(p - 1));

    std::map<std::uint64_t, std::vector<GfPoly::Term>> buckets;
    for (const auto& t : w.terms()) {
        std::uint64_t index = 0;
        Exponents q(nv, 0);
        for (std::uint32_t i = 0; i < nv; ++i) {
            index = index * p + t.mono[i] % p;
            q[i] = t.mono[i] - t.mono[i] % p;
        }
        buckets[index].push_back({std::move(q), t.coef});
    }
    for (auto& [index, terms] : buckets) {
        GfPoly part = GfPoly::from_terms(p, nv, std::move(terms));
        out.entries[index] = RationalFunction::from_fraction(K, std::move(part), den_p);
    }
    return out;
}

namespace {

void check_compatible(const std::vector<PCoordinates>& vectors, const PCoordinates* target) {
    const FieldPresentation* K = nullptr;
    auto visit = [&](const PCoordinates& c) {
        if (!K)
            K = &c.field;
        else if (!(*K == c.field))
            fail(Errc::Internal, "p-coordinates over mixed presentations");
    };
    for (const auto& v : vectors) visit(v);
    if (target) visit(*target);
}

}  // namespace

PthPowerSolution solve_over_pth_powers(const std::vector<PCoordinates>& vectors,
                                       const PCoordinates& target) {
    check_compatible(vectors, &target);
    const FieldPresentation& K = target.field;
    std::size_t rows = target.entries.size();
    std::size_t cols = vectors.size();

    // Augmented matrix [A | target]; entries all lie in K^p, and row
    // reduction stays inside that subfield.
    std::vector<std::vector<RationalFunction>> m(
        rows, std::vector<RationalFunction>(cols + 1, RationalFunction::zero(K)));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = vectors[j].entries[i];
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = target.entries[i];

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        RationalFunction inv = m[r][c].inverse();
        for (std::size_t c2 = c; c2 <= cols; ++c2) m[r][c2] = m[r][c2] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RationalFunction factor = m[i][c];
            for (std::size_t c2 = c; c2 <= cols; ++c2)
                m[i][c2] = m[i][c2] - factor * m[r][c2];
        }
        pivot_col.push_back(c);
        ++r;
    }

    PthPowerSolution sol;
    sol.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return sol;  // inconsistent: target outside span

    std::vector<RationalFunction> x(cols, RationalFunction::zero(K));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = m[k][cols];
    sol.coefficients = std::move(x);
    return sol;
}

std::size_t pth_power_rank(const std::vector<PCoordinates>& vectors) {
    if (vectors.empty()) return 0;
    check_compatible(vectors, nullptr);
    PCoordinates zero_target{vectors[0].field,
                             std::vector<RationalFunction>(vectors[0].entries.size(),
                                                           RationalFunction::zero(vectors[0].field))};
    return solve_over_pth_powers(vectors, zero_target).rank;
}

}  // namespace sepdiff
