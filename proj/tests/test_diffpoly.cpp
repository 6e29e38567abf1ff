#include "sepdiff/diffpoly.hpp"

#include "test_helpers.hpp"

using namespace sepdiff;
using th::dp;
using th::el;

namespace {

// Independent route for the total derivative: the displayed formula
// delta(f) = f^delta + sum_j (df/dx_j) x_{j+1}.
DiffPoly delta_via_formula(const DiffPoly& f) {
    DiffPoly acc = f.coef_delta();
    if (f.is_zero() || f.in_coefficient_field()) return acc;
    for (std::uint32_t j = 0; j <= f.order(); ++j) {
        DiffPoly part = f.partial(DerivVar{0, j});
        acc += part * DiffPoly::var(f.field(), f.arity(), DerivVar{0, j + 1});
    }
    return acc;
}

}  // namespace

TEST_CASE("delta spec instances") {
    auto K = th::gf5t();
    CHECK(dp("x", K).delta() == dp("x'", K));
    CHECK(dp("t*x", K).delta() == dp("x + t*x'", K));
    CHECK(dp("x'^2 - x", K).delta() == dp("2*x'*d(x,2) - x'", K));
}

TEST_CASE("delta agrees with the displayed formula") {
    auto K = th::gf5t();
    Sampler s(K, 21);
    for (int i = 0; i < 60; ++i) {
        DiffPoly f = s.dpoly(1, 3, 3, 4);
        CHECK(f.delta() == delta_via_formula(f));
    }
    auto K2 = th::gf3ct();
    Sampler s2(K2, 22);
    for (int i = 0; i < 30; ++i) {
        DiffPoly f = s2.dpoly(1, 2, 2, 3);
        CHECK(f.delta() == delta_via_formula(f));
    }
}

TEST_CASE("delta is a derivation on K{x}") {
    auto K = th::gf5t();
    Sampler s(K, 23);
    for (int i = 0; i < 50; ++i) {
        DiffPoly f = s.dpoly(1, 2, 2, 3), g = s.dpoly(1, 2, 2, 3);
        CHECK((f + g).delta() == f.delta() + g.delta());
        CHECK((f * g).delta() == f * g.delta() + g * f.delta());
    }
}

TEST_CASE("rank calculus spec instances") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    CHECK(f.order() == 1);
    CHECK(f.leader() == DerivVar{0, 1});
    CHECK(f.degree() == 2);
    CHECK(f.rank() == Rank{1, 2});

    DiffPoly g = dp("x*d(x,2)^3 + x'", K);
    CHECK(g.order() == 2);
    CHECK(g.degree() == 3);

    DiffPoly t = dp("t", K);
    CHECK(t.order() == 0);  // order 0 assigned to nonzero elements of K
    CHECK_ERRC(t.rank(), Errc::ElementOfK);
    CHECK_ERRC(t.leader(), Errc::ElementOfK);
    CHECK_ERRC(DiffPoly::zero(K, 1).order(), Errc::ZeroPolynomial);
}

TEST_CASE("separant and initial") {
    auto K = th::gf5t();
    CHECK(dp("x'^5 - x", K).separant().is_zero());  // exponent p vanishes
    DiffPoly f = dp("x'^2 - x", K);
    CHECK(f.separant() == dp("2*x'", K));
    CHECK(f.initial() == dp("1", K));
    CHECK(dp("x*d(x,2)^3 + x'", K).initial() == dp("x", K));
}

TEST_CASE("rank drops for separant and initial") {
    auto K = th::gf5t();
    Sampler s(K, 24);
    for (int i = 0; i < 60; ++i) {
        DiffPoly f = s.nonzero_dpoly(1, 3, 3, 4);
        if (f.in_coefficient_field()) continue;
        DiffPoly sf = f.separant();
        if (!sf.is_zero() && !sf.in_coefficient_field()) CHECK(sf.rank() < f.rank());
        DiffPoly in = f.initial();
        if (!in.in_coefficient_field()) CHECK(in.rank() < f.rank());
    }
}

TEST_CASE("partial derivative commutation identity") {
    auto K = th::gf5t();
    CHECK(dp("x'^2", K).partial(DerivVar{0, 1}) == dp("2*x'", K));
    CHECK(dp("x*x'", K).partial(DerivVar{0, 0}) == dp("x'", K));

    // Lemma-style identity at f = x'^2 - x, i = 1
    DiffPoly f = dp("x'^2 - x", K);
    DiffPoly lhs = f.delta().partial(DerivVar{0, 1});
    DiffPoly rhs = f.partial(DerivVar{0, 1}).delta() + f.partial(DerivVar{0, 0});
    CHECK(lhs == rhs);
    CHECK(lhs == dp("2*d(x,2) - 1", K));

    Sampler s(K, 25);
    for (int i = 0; i < 60; ++i) {
        DiffPoly g = s.nonzero_dpoly(1, 3, 3, 4);
        std::uint32_t top = g.in_coefficient_field() ? 1 : g.order() + 1;
        for (std::uint32_t j = 0; j <= top; ++j) {
            DiffPoly l = g.delta().partial(DerivVar{0, j});
            DiffPoly r = g.partial(DerivVar{0, j}).delta();
            if (j > 0) r += g.partial(DerivVar{0, j - 1});
            CHECK(l == r);
        }
    }
}

TEST_CASE("order of delta(f) tracks the separant") {
    auto K = th::gf5t();
    CHECK(dp("x'^5 - x", K).delta().order() <= 1);
    CHECK(dp("x'^2 - x", K).delta().order() == 2);
    Sampler s(K, 26);
    for (int i = 0; i < 60; ++i) {
        DiffPoly f = s.nonzero_dpoly(1, 3, 3, 4);
        if (f.in_coefficient_field()) continue;
        DiffPoly d = f.delta();
        if (f.separant().is_zero()) {
            if (!d.is_zero()) CHECK(d.order() <= f.order());
        } else {
            CHECK(d.order() == f.order() + 1);
        }
    }
}

TEST_CASE("evaluate spec instances") {
    auto K = th::gf5t();
    std::vector<RationalFunction> at_t{el("t", K)};
    CHECK(dp("x'", K).evaluate(at_t) == el("1", K));
    std::vector<RationalFunction> at_t2{el("t^2", K)};
    CHECK(dp("x'^2 - x", K).evaluate(at_t2) == el("3*t^2", K));

    auto K2 = th::gf3ct();
    std::vector<RationalFunction> at_c{el("c", K2)};
    CHECK(parse_dpoly("x'", K2, th::X).evaluate(at_c).is_zero());
}

TEST_CASE("evaluate commutes with the derivation") {
    auto K = th::gf5t();
    Sampler s(K, 27);
    for (int i = 0; i < 40; ++i) {
        DiffPoly f = s.dpoly(1, 2, 2, 3);
        std::vector<RationalFunction> a{s.element()};
        CHECK(f.delta().evaluate(a) == f.evaluate(a).derive());
    }
}

TEST_CASE("nonvanishing witness enumeration") {
    auto K = th::gf5t();
    auto w = nonvanishing_witness(dp("x'", K), 100);
    REQUIRE(w.has_value());
    CHECK(*w == el("t", K));  // scalars are constants, t comes first after them

    auto w2 = nonvanishing_witness(dp("x", K), 100);
    REQUIRE(w2.has_value());
    CHECK(*w2 == el("1", K));

    auto T = make_presentation(2, {"c"}, false);
    auto g = parse_dpoly("x'", T, th::X);
    CHECK_FALSE(nonvanishing_witness(g, 200).has_value());  // trivial derivation

    CHECK_ERRC(nonvanishing_witness(DiffPoly::zero(K, 1), 10), Errc::ZeroInput);
}

TEST_CASE("witness enumerator is deterministic and starts with scalars") {
    auto K = th::gf5t();
    WitnessEnumerator a(K), b(K);
    for (int i = 0; i < 40; ++i) {
        auto x = a.next(), y = b.next();
        REQUIRE(x.has_value());
        CHECK(*x == *y);
    }
    WitnessEnumerator c(K);
    for (fp_t s = 0; s < 5; ++s) CHECK(*c.next() == RationalFunction::scalar(K, s));
    CHECK(*c.next() == th::el("t", K));
    CHECK(*c.next() == th::el("t + 1", K));
}
