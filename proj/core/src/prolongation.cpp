#include "sepdiff/prolongation.hpp"

#include "sepdiff/error.hpp"

namespace sepdiff {

AlgebraicSystem make_algebraic_system(std::uint32_t arity, std::vector<DiffPoly> polys) {
    for (const auto& f : polys) {
        if (f.arity() != arity) fail(Errc::ArityMismatch, "system arity mismatch");
        for (DerivVar v : f.used_vars())
            if (v.order > 0)
                fail(Errc::DerivativeVariablePresent,
                     "algebraic systems admit no derivative variables");
    }
    return AlgebraicSystem{arity, std::move(polys)};
}

namespace {

// Transport an algebraic polynomial from the n-variable ring into the first
// n slots of the 2n-variable ring.
DiffPoly widen(const DiffPoly& f, std::uint32_t n2) {
    std::vector<DiffPoly::Term> terms(f.terms().begin(), f.terms().end());
    return DiffPoly::from_terms(f.field(), n2, std::move(terms));
}

}  // namespace

ProlongedSystem prolong(const AlgebraicSystem& sys) {
    std::uint32_t n = sys.arity;
    std::uint32_t n2 = 2 * n;
    ProlongedSystem tau;
    tau.arity = n;
    for (const auto& f : sys.polys) {
        DiffPoly fw = widen(f, n2);
        DiffPoly df = widen(f.coef_delta(), n2);
        for (std::uint32_t i = 0; i < n; ++i) {
            DiffPoly partial = widen(f.partial(DerivVar{i, 0}), n2);
            DiffPoly yi = DiffPoly::var(f.field(), n2, DerivVar{n + i, 0});
            df += partial * yi;
        }
        tau.pairs.push_back({std::move(fw), std::move(df)});
    }
    return tau;
}

std::vector<RationalFunction> lift_point(std::span<const RationalFunction> a) {
    std::vector<RationalFunction> out(a.begin(), a.end());
    for (const auto& x : a) out.push_back(x.derive());
    return out;
}

bool check_membership(std::span<const RationalFunction> point, const ProlongedSystem& tau) {
    if (point.size() != 2 * std::size_t(tau.arity))
        fail(Errc::ArityMismatch, "prolonged point needs 2n coordinates");
    for (const auto& [f, df] : tau.pairs) {
        if (!f.evaluate(point).is_zero()) return false;
        if (!df.evaluate(point).is_zero()) return false;
    }
    return true;
}

DiffPoly substitute_y_with_derivatives(const DiffPoly& df, std::uint32_t n) {
    std::vector<DiffPoly::Term> terms;
    for (const auto& t : df.terms()) {
        DPMonomial m;
        for (auto [v, e] : t.mono) {
            if (v.var >= n) {
                if (v.order != 0) fail(Errc::Internal, "prolonged variable with order > 0");
                m.push_back({DerivVar{v.var - n, 1}, e});
            } else {
                m.push_back({v, e});
            }
        }
        terms.push_back({std::move(m), t.coef});
    }
    return DiffPoly::from_terms(df.field(), n, std::move(terms));
}

std::vector<std::string> prolonged_var_names(std::span<const std::string> base_names) {
    std::vector<std::string> names(base_names.begin(), base_names.end());
    for (std::size_t i = 1; i <= base_names.size(); ++i)
        names.push_back("y" + std::to_string(i));
    return names;
}

}  // namespace sepdiff
