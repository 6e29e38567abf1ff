#include "sepdiff/prolongation.hpp"

#include "test_helpers.hpp"

using namespace sepdiff;
using th::el;

namespace {

const std::vector<std::string> X1{"x"};
const std::vector<std::string> X2{"x1", "x2"};

}  // namespace

TEST_CASE("prolong spec instances") {
    auto K = th::gf5t();
    {
        AlgebraicSystem sys = make_algebraic_system(1, {parse_dpoly("x", K, X1)});
        ProlongedSystem tau = prolong(sys);
        auto names = prolonged_var_names(X1);
        REQUIRE(tau.pairs.size() == 1);
        CHECK(tau.pairs[0].first.to_string(names) == "x");
        CHECK(tau.pairs[0].second.to_string(names) == "y1");
    }
    {
        AlgebraicSystem sys = make_algebraic_system(1, {parse_dpoly("x^2 - t", K, X1)});
        ProlongedSystem tau = prolong(sys);
        // Df = 2*x*y1 + delta(-t) = 2*x*y1 - 1
        CHECK(tau.pairs[0].second ==
              parse_dpoly("2*x*y1 - 1", K, prolonged_var_names(X1)));
    }
    {
        AlgebraicSystem sys =
            make_algebraic_system(2, {parse_dpoly("x1*x2 - 1", K, X2)});
        ProlongedSystem tau = prolong(sys);
        CHECK(tau.pairs[0].second ==
              parse_dpoly("x2*y1 + x1*y2", K, prolonged_var_names(X2)));
    }
    CHECK_ERRC(make_algebraic_system(1, {parse_dpoly("x'", K, X1)}),
               Errc::DerivativeVariablePresent);
}

TEST_CASE("lift_point") {
    auto K = th::gf3ct();
    auto lifted = lift_point(std::vector<RationalFunction>{el("t", K)});
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[1] == el("1", K));

    auto l2 = lift_point(std::vector<RationalFunction>{el("c*t^2", K)});
    CHECK(l2[1] == el("2*c*t", K));

    auto l0 = lift_point(std::vector<RationalFunction>{el("0", K)});
    CHECK(l0[1].is_zero());
}

TEST_CASE("check_membership hand instances") {
    auto K = th::gf5t();
    AlgebraicSystem sys = make_algebraic_system(1, {parse_dpoly("x^2 - t^2", K, X1)});
    ProlongedSystem tau = prolong(sys);
    CHECK(check_membership(lift_point(std::vector<RationalFunction>{el("t", K)}), tau));
    std::vector<RationalFunction> off{el("t", K), el("2", K)};
    CHECK_FALSE(check_membership(off, tau));
    CHECK_ERRC(check_membership(std::vector<RationalFunction>{el("t", K)}, tau),
               Errc::ArityMismatch);
}

TEST_CASE("formal compatibility: y_i -> x_i' recovers delta") {
    auto K = th::gf5t();
    Sampler s(K, 61);
    for (int i = 0; i < 40; ++i) {
        std::uint32_t n = 1 + s.below(2);
        std::vector<DiffPoly> polys;
        for (std::uint32_t k = 0; k < 1 + s.below(2); ++k)
            polys.push_back(s.dpoly(n, 0, 2, 3));
        AlgebraicSystem sys = make_algebraic_system(n, polys);
        ProlongedSystem tau = prolong(sys);
        for (std::size_t k = 0; k < sys.polys.size(); ++k) {
            CHECK(substitute_y_with_derivatives(tau.pairs[k].second, n) ==
                  sys.polys[k].delta());
            // linearity in the y block
            for (DerivVar v : tau.pairs[k].second.used_vars())
                if (v.var >= n) CHECK(tau.pairs[k].second.degree_in(v) == 1);
        }
    }
}

TEST_CASE("characteristic property on constructed points") {
    auto K = th::gf5t();
    Sampler s(K, 62);
    for (int i = 0; i < 30; ++i) {
        std::uint32_t n = 1 + s.below(2);
        std::vector<RationalFunction> a;
        for (std::uint32_t k = 0; k < n; ++k) a.push_back(s.element(1, 2));
        std::vector<DiffPoly> polys;
        for (std::uint32_t r = 0; r < 1 + s.below(2); ++r) {
            DiffPoly g = DiffPoly::zero(K, n);
            for (std::uint32_t k = 0; k < n; ++k) {
                DiffPoly xk = DiffPoly::var(K, n, DerivVar{k, 0});
                DiffPoly ak = DiffPoly::constant(K, n, a[k]);
                g += s.dpoly(n, 0, 1, 2) * (xk - ak);
            }
            polys.push_back(std::move(g));
        }
        ProlongedSystem tau = prolong(make_algebraic_system(n, polys));
        CHECK(check_membership(lift_point(a), tau));
    }
}
