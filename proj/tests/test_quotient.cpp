#include "sepdiff/quotient.hpp"

#include "test_helpers.hpp"

using namespace sepdiff;
using th::dp;
using th::el;

namespace {

std::shared_ptr<const SatIdeal> ideal_x1sq(const FieldPresentation& K) {
    return std::make_shared<const SatIdeal>(make_satideal(th::dp("x'^2 - x", K)));
}

}  // namespace

TEST_CASE("generic point spec instances") {
    auto K = th::gf5t();
    auto P = ideal_x1sq(K);
    QuotientElement a = generic_point(P);
    CHECK(q_is_zero(image(P->generator, P)));
    CHECK_FALSE(q_is_zero(image(dp("x", K), P)));             // minimal rank
    CHECK_FALSE(q_is_zero(image(P->generator.separant(), P)));  // s_f(a) != 0
    CHECK_FALSE(q_is_zero(a));
}

TEST_CASE("quotient arithmetic is a field under q_eq") {
    auto K = th::gf5t();
    auto P = ideal_x1sq(K);
    QuotientElement a = generic_point(P);
    QuotientElement one = image(dp("1", K), P);

    CHECK(q_eq(q_mul(a, q_inv(a)), one));

    QuotientElement gp1 = image(dp("x'", K), P);
    CHECK(q_eq(image(dp("x", K), P), q_mul(gp1, gp1)));  // x_1^2 == x_0 in L
    CHECK(q_is_zero(image(P->generator.delta(), P)));

    Sampler s(K, 41);
    auto rand_elem = [&]() {
        DiffPoly num = s.dpoly(1, 2, 2, 2);
        DiffPoly den = s.dpoly(1, 0, 2, 2);
        while (den.is_zero()) den = s.dpoly(1, 0, 2, 2);
        return QuotientElement(P, num, den);  // order-0 denominators avoid P
    };
    for (int i = 0; i < 12; ++i) {
        QuotientElement x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK(q_eq(q_add(x, y), q_add(y, x)));
        CHECK(q_eq(q_mul(x, y), q_mul(y, x)));
        CHECK(q_eq(q_mul(x, q_add(y, z)), q_add(q_mul(x, y), q_mul(x, z))));
        CHECK(q_is_zero(q_sub(x, x)));
        if (!q_is_zero(x)) CHECK(q_eq(q_mul(x, q_inv(x)), one));
    }

    CHECK_ERRC(q_inv(image(P->generator, P)), Errc::DivisionByZeroClass);
    auto Q = std::make_shared<const SatIdeal>(make_satideal(dp("d(x,2)", K)));
    CHECK_ERRC(q_add(a, generic_point(Q)), Errc::MixedIdeals);
}

TEST_CASE("q_delta is a derivation extending derive") {
    auto K = th::gf5t();
    auto P = ideal_x1sq(K);
    CHECK(q_eq(q_delta(image(dp("x", K), P)), image(dp("x'", K), P)));

    QuotientElement c = image(dp("t^2 + 1", K), P);
    CHECK(q_eq(q_delta(c), image(DiffPoly::constant(K, 1, el("t^2 + 1", K).derive()), P)));

    Sampler s(K, 42);
    for (int i = 0; i < 8; ++i) {
        DiffPoly n1 = s.dpoly(1, 1, 2, 2), n2 = s.dpoly(1, 1, 2, 2);
        DiffPoly d1 = s.dpoly(1, 0, 1, 2), d2 = s.dpoly(1, 0, 1, 2);
        if (d1.is_zero() || d2.is_zero()) continue;
        QuotientElement x(P, n1, d1), y(P, n2, d2);
        CHECK(q_eq(q_delta(q_add(x, y)), q_add(q_delta(x), q_delta(y))));
        CHECK(q_eq(q_delta(q_mul(x, y)),
                   q_add(q_mul(x, q_delta(y)), q_mul(y, q_delta(x)))));
    }
}

TEST_CASE("sdcf_witness on the axiom instance family") {
    auto K = th::gf5t();
    for (std::uint32_t m = 0; m <= 2; ++m) {
        DiffPoly f = DiffPoly::var(K, 1, DerivVar{0, m + 1});  // delta^{m+1} x
        DiffPoly g = DiffPoly::var(K, 1, DerivVar{0, m});
        WitnessReport w = sdcf_witness(f, g);
        CHECK(w.f_value_zero);
        CHECK(w.g_value_nonzero);
        CHECK(w.separability_flag);
        CHECK(q_is_zero(image(f, w.ideal)));
        CHECK_FALSE(q_is_zero(image(g, w.ideal)));
    }
}

TEST_CASE("sdcf_witness on x'^2 - x") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    for (const char* gtext : {"x", "x'", "t"}) {
        WitnessReport w = sdcf_witness(f, dp(gtext, K));
        CHECK(w.f_value_zero);
        CHECK(w.g_value_nonzero);
        CHECK(w.separability_flag);
    }
}

TEST_CASE("sdcf_witness rejects bad inputs") {
    auto K = th::gf5t();
    CHECK_ERRC(sdcf_witness(dp("x'^5 - x", K), dp("x", K)), Errc::ZeroSeparant);
    CHECK_ERRC(sdcf_witness(dp("x'^2 - x", K), dp("x'^2", K)), Errc::OrderNotLower);
    CHECK_ERRC(sdcf_witness(dp("x' - x", K), dp("x'", K)), Errc::OrderNotLower);
    CHECK_ERRC(sdcf_witness(DiffPoly::zero(K, 1), dp("x", K)), Errc::ZeroInput);
    CHECK_ERRC(sdcf_witness(dp("x'^2 - x", K), DiffPoly::zero(K, 1)), Errc::ZeroInput);
}

TEST_CASE("witnesses for one ideal share the canonical generic point") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    WitnessReport w1 = sdcf_witness(f, dp("x", K));
    WitnessReport w2 = sdcf_witness(f, dp("x' + t", K));
    CHECK(w1.ideal->generator == w2.ideal->generator);
    QuotientElement moved(w1.ideal, w2.generic_point.num(), w2.generic_point.den());
    CHECK(q_eq(w1.generic_point, moved));
}

TEST_CASE("separating basis audit") {
    auto K = th::gf5t();
    CHECK(separating_basis_check(make_satideal(dp("x'^2 - x", K))));
    CHECK(separating_basis_check(make_satideal(dp("d(x,2)", K))));  // s_f = 1

    SatIdeal corrupted = make_satideal(dp("x'^2 - x", K));
    corrupted.separant = corrupted.generator;
    CHECK_FALSE(separating_basis_check(corrupted));
}
