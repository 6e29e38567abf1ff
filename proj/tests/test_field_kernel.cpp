#include "sepdiff/pcoordinates.hpp"

#include "test_helpers.hpp"

using namespace sepdiff;
using th::el;

TEST_CASE("make_presentation validates its inputs") {
    auto K = make_presentation(5, {}, true);
    CHECK(K.characteristic() == 5);
    CHECK(K.num_constant_gens() == 0);
    CHECK(K.has_diff_gen());
    CHECK(K.to_string() == "GF(5)(;t)");

    auto K2 = make_presentation(3, {"c"}, true);
    CHECK(K2.num_constant_gens() == 1);
    CHECK(K2.to_string() == "GF(3)(c;t)");

    auto K3 = make_presentation(2, {"t1", "t2"}, false);
    CHECK_FALSE(K3.has_diff_gen());
    CHECK(K3.num_vars() == 2);
    CHECK(K3.to_string() == "GF(2)(t1,t2)");

    CHECK_ERRC(make_presentation(4, {}, true), Errc::NonPrimeCharacteristic);
    CHECK_ERRC(make_presentation(1, {}, true), Errc::NonPrimeCharacteristic);
    CHECK_ERRC(make_presentation(5, {"a", "a"}, true), Errc::DuplicateGeneratorName);
    CHECK_ERRC(make_presentation(5, {"t"}, true), Errc::ReservedName);
    CHECK_ERRC(make_presentation(5, {""}, true), Errc::ReservedName);
}

TEST_CASE("derive matches the presentation derivation") {
    auto K = th::gf3ct();
    CHECK(el("t", K).derive() == el("1", K));
    CHECK(el("c", K).derive().is_zero());
    // hand expansion via the Leibniz rule
    CHECK(el("t^2 + c*t", K).derive() == el("2*t + c", K));
    // quotient rule
    CHECK(el("1/t", K).derive() == el("-1/t^2", K));

    auto T = th::gf2t1t2();
    CHECK(el("t1*t2 + t1", T).derive().is_zero());
}

TEST_CASE("derive is additive and Leibniz, exactly") {
    auto K = th::gf3ct();
    Sampler s(K, 1);
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = s.element(), b = s.element();
        CHECK((a + b).derive() == a.derive() + b.derive());
        CHECK((a * b).derive() == a * b.derive() + b * a.derive());
        CHECK(a.is_constant() == a.derive().is_zero());
    }
}

TEST_CASE("is_constant spec instances") {
    auto K = th::gf3ct();
    CHECK_FALSE(el("t", K).is_constant());
    CHECK(el("c", K).is_constant());
    CHECK(el("t^3", K).is_constant());  // delta(t^p) = 0
}

TEST_CASE("frobenius and p-th roots") {
    auto K = th::gf3ct();
    CHECK(el("t^3", K).pth_root() == el("t", K));
    CHECK_FALSE(el("t", K).pth_root().has_value());
    CHECK(el("c^3*t^6", K).pth_root() == el("c*t^2", K));

    Sampler s(K, 2);
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = s.element();
        RationalFunction fa = a.frobenius();
        CHECK(fa.is_pth_power());
        REQUIRE(fa.pth_root().has_value());
        CHECK(*fa.pth_root() == a);
        if (auto r = a.pth_root()) CHECK(r->frobenius() == a);
    }
}

TEST_CASE("p_coordinates spec instances") {
    auto K = th::gf3ct();  // basis (1, t, t^2, c, c*t, ..., c^2*t^2), c most significant
    auto coords = p_coordinates(el("t", K));
    REQUIRE(coords.entries.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        if (i == 1)
            CHECK(coords.entries[i] == el("1", K));
        else
            CHECK(coords.entries[i].is_zero());
    }
    CHECK(standard_basis_element(K, 1) == el("t", K));

    auto coords2 = p_coordinates(el("c^3", K));
    CHECK(coords2.entries[0] == el("c^3", K));
    for (std::size_t i = 1; i < 9; ++i) CHECK(coords2.entries[i].is_zero());
}

TEST_CASE("p_coordinates reconstruction on nontrivial fractions") {
    auto K = th::gf3ct();
    Sampler s(K, 3);
    auto reconstruct = [&](const RationalFunction& a) {
        PCoordinates pc = p_coordinates(a);
        RationalFunction acc = RationalFunction::zero(K);
        for (std::size_t i = 0; i < pc.entries.size(); ++i) {
            CHECK(pc.entries[i].is_pth_power());
            acc += pc.entries[i] * standard_basis_element(K, i);
        }
        CHECK(acc == a);
    };
    reconstruct(el("(t + c)/(t*c + 1)", K));
    for (int i = 0; i < 40; ++i) reconstruct(s.element());
}

TEST_CASE("solve_over_pth_powers spec instances") {
    auto K3 = th::gf3ct();
    {
        std::vector<PCoordinates> vecs{p_coordinates(el("1", K3))};
        auto sol = solve_over_pth_powers(vecs, p_coordinates(el("c^3", K3)));
        REQUIRE(sol.coefficients.has_value());
        CHECK((*sol.coefficients)[0] == el("c^3", K3));
        CHECK(sol.rank == 1);
    }
    auto K2 = th::gf2ct();
    {
        std::vector<PCoordinates> vecs{p_coordinates(el("1", K2)),
                                       p_coordinates(el("t^2", K2))};
        CHECK(pth_power_rank(vecs) == 1);  // t^2 = (t)^2 * 1 over K^2
        auto sol = solve_over_pth_powers(vecs, p_coordinates(el("t^2", K2)));
        REQUIRE(sol.coefficients.has_value());
    }
    {
        std::vector<PCoordinates> vecs{p_coordinates(el("1", K2)),
                                       p_coordinates(el("c", K2))};
        auto sol = solve_over_pth_powers(vecs, p_coordinates(el("t", K2)));
        CHECK_FALSE(sol.coefficients.has_value());
        CHECK(sol.rank == 2);
    }
}

TEST_CASE("fraction canonicality: all routes agree structurally") {
    auto K = th::gf3ct();
    Sampler s(K, 4);
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = s.element(), b = s.element(), c = s.nonzero_element();
        CHECK((a + b) - b == a);
        CHECK((a * c) / c == a);
        CHECK(a / c * c == a);
        CHECK((a * c + b * c) == (a + b) * c);
    }
    // denominators are monic and fractions reduced
    RationalFunction x = el("(2*t + 2)/(2*t^2 + 2*t)", K);
    CHECK(x == el("1/t", K));
    CHECK(x.den().leading_term().coef == 1);
}
