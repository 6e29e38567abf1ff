#include "sepdiff/reduction.hpp"

#include "test_helpers.hpp"

using namespace sepdiff;
using th::dp;
using th::el;

namespace {

// Expansion of the partial-remainder identity, independent of the loop.
bool partial_identity_holds(const PartialRemainderResult& r, const DiffPoly& g,
                            const DiffPoly& f) {
    DiffPoly s = f.separant();
    DiffPoly lhs = s.pow(r.separant_exp) * g;
    DiffPoly acc = r.remainder;
    for (const auto& [j, h] : r.cofactors) acc += h * f.delta(j);
    return lhs == acc;
}

}  // namespace

TEST_CASE("partial_remainder worked example") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    DiffPoly g = dp("d(x,2)", K);
    auto r = partial_remainder(g, f);
    CHECK(r.separant_exp == 1);
    CHECK(r.remainder == dp("x'", K));
    REQUIRE(r.cofactors.size() == 1);
    CHECK(partial_identity_holds(r, g, f));
    // s_f * g - h_1 * delta(f) - remainder expands to zero
    DiffPoly expand = f.separant() * g - r.cofactors.at(1) * f.delta() - r.remainder;
    CHECK(expand.is_zero());
}

TEST_CASE("partial_remainder low order and differential members") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    DiffPoly low = dp("x'*x + t", K);
    auto r = partial_remainder(low, f);
    CHECK(r.separant_exp == 0);
    CHECK(r.remainder == low);
    CHECK(r.cofactors.empty());

    auto r2 = partial_remainder(f.delta(), f);
    CHECK(r2.remainder.is_zero());
    CHECK(partial_identity_holds(r2, f.delta(), f));

    auto r3 = partial_remainder(f.delta(2) * dp("x'", K) + dp("t*x", K), f);
    CHECK(partial_identity_holds(r3, f.delta(2) * dp("x'", K) + dp("t*x", K), f));
    if (!r3.remainder.is_zero()) CHECK(r3.remainder.order() <= f.order());

    CHECK_ERRC(partial_remainder(dp("x", K), dp("x'^5 - x", K)), Errc::ZeroSeparant);
}

TEST_CASE("pseudo_remainder spec instances") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);

    auto r1 = pseudo_remainder(f, f);
    CHECK(r1.initial_exp == 0);
    CHECK(r1.quotient == dp("1", K));
    CHECK(r1.remainder.is_zero());

    auto r2 = pseudo_remainder(dp("x'^3", K), f);
    CHECK(r2.initial_exp == 0);
    CHECK(r2.quotient == dp("x'", K));
    CHECK(r2.remainder == dp("x*x'", K));

    auto r3 = pseudo_remainder(dp("x' + t", K), f);
    CHECK(r3.initial_exp == 0);
    CHECK(r3.quotient.is_zero());
    CHECK(r3.remainder == dp("x' + t", K));

    CHECK_ERRC(pseudo_remainder(dp("d(x,2)", K), f), Errc::OrderTooHigh);
}

TEST_CASE("pseudo_remainder identity with nontrivial initial") {
    auto K = th::gf5t();
    DiffPoly f = dp("x*x'^2 + t", K);  // initial x
    DiffPoly h = dp("x'^3 + x'", K);
    auto r = pseudo_remainder(h, f);
    DiffPoly lhs = f.initial().pow(r.initial_exp) * h;
    CHECK(lhs == r.quotient * f + r.remainder);
    if (!r.remainder.is_zero() && !r.remainder.in_coefficient_field())
        CHECK(r.remainder.rank() < f.rank());
}

TEST_CASE("full_reduce and certificates") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);

    DiffPoly member_g = dp("x'", K) * f + dp("t", K) * f.delta() * f.delta();
    auto c1 = full_reduce(member_g, f);
    CHECK(c1.remainder.is_zero());
    CHECK(verify_certificate(c1, member_g, f));

    auto c2 = full_reduce(dp("x", K), f);
    CHECK(c2.remainder == dp("x", K));
    CHECK(verify_certificate(c2, dp("x", K), f));

    DiffPoly g3 = dp("d(x,2)*x' + x", K);
    auto c3 = full_reduce(g3, f);
    CHECK(verify_certificate(c3, g3, f));
    if (!c3.remainder.is_zero() && !c3.remainder.in_coefficient_field())
        CHECK(c3.remainder.rank() < f.rank());

    // perturbed certificates must fail verification
    auto bad = c3;
    bad.remainder += dp("1", K);
    CHECK_FALSE(verify_certificate(bad, g3, f));

    // hand-built certificate from the worked example
    ReductionCertificate hand;
    hand.separant_exp = 1;
    hand.initial_exp = 0;
    hand.cofactors[1] = dp("1", K);
    hand.quotient = DiffPoly::zero(K, 1);
    hand.remainder = dp("x'", K);
    CHECK(verify_certificate(hand, dp("d(x,2)", K), f));
}

TEST_CASE("random certificates verify exactly") {
    auto K = th::gf5t();
    Sampler s(K, 31);
    int done = 0;
    while (done < 60) {
        DiffPoly f = s.nonzero_dpoly(1, 3, 3, 3);
        if (f.in_coefficient_field() || f.separant().is_zero()) continue;
        DiffPoly g = s.dpoly(1, 3, 3, 3);
        auto cert = full_reduce(g, f);
        CHECK(verify_certificate(cert, g, f));
        if (!cert.remainder.is_zero() && !cert.remainder.in_coefficient_field())
            CHECK(cert.remainder.rank() < f.rank());
        ++done;
    }
}

TEST_CASE("irreducibility heuristic") {
    auto K = th::gf5t();
    CHECK(check_irreducible_heuristic(dp("x'^2 - x", K)).status ==
          IrreducibilityStatus::Irreducible);
    CHECK(check_irreducible_heuristic(dp("d(x,3)", K)).status ==
          IrreducibilityStatus::Irreducible);
    CHECK(check_irreducible_heuristic(dp("t*x' + x", K)).status ==
          IrreducibilityStatus::Irreducible);

    auto red = check_irreducible_heuristic(dp("x'^2", K));
    CHECK(red.status == IrreducibilityStatus::Reducible);
    REQUIRE(red.factor.has_value());
    CHECK(*red.factor == dp("x'", K));

    auto red2 = check_irreducible_heuristic(dp("x^2*x' + x*x'^2", K));
    CHECK(red2.status == IrreducibilityStatus::Reducible);

    // perfect p-th power over GF(2)
    auto K2 = th::gf2ct();
    auto red3 = check_irreducible_heuristic(parse_dpoly("x'^2 + x^2", K2, th::X));
    CHECK(red3.status == IrreducibilityStatus::Reducible);
    REQUIRE(red3.factor.has_value());
    CHECK(*red3.factor == parse_dpoly("x' + x", K2, th::X));

    // repeated factor without being a power: (x + x')^2 * x expanded
    DiffPoly sq = dp("(x + x')^2 * (x + t)", K);
    auto red4 = check_irreducible_heuristic(sq);
    CHECK(red4.status == IrreducibilityStatus::Reducible);
    REQUIRE(red4.factor.has_value());
    CHECK(DiffPoly::try_divide_exact(sq, *red4.factor).has_value());

    // dense squarefree quartic: outside every criterion
    CHECK(check_irreducible_heuristic(dp("x^4 + x'^4 + x*x' + 1", K)).status ==
          IrreducibilityStatus::Unknown);
}

TEST_CASE("make_satideal gates") {
    auto K = th::gf5t();
    SatIdeal P = make_satideal(dp("x'^2 - x", K));
    CHECK(P.provenance == IrreducibilityProvenance::VerifiedHeuristic);
    CHECK(P.separant == dp("2*x'", K));

    CHECK_ERRC(make_satideal(dp("x'^5 - x", K)), Errc::ZeroSeparant);
    CHECK_ERRC(make_satideal(dp("x'^2", K)), Errc::Reducible);
    CHECK_ERRC(make_satideal(dp("x^4 + x'^4 + x*x' + 1", K)), Errc::IrreducibilityUnknown);
    SatIdeal asserted = make_satideal(dp("x^4 + x'^4 + x*x' + 1", K), true);
    CHECK(asserted.provenance == IrreducibilityProvenance::AssertedByCaller);
}

TEST_CASE("membership spec instances") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    SatIdeal P = make_satideal(f);
    CHECK(member(f, P));
    CHECK(member(f.delta(), P));
    CHECK_FALSE(member(dp("x", K), P));         // minimal rank
    CHECK_FALSE(member(f.separant(), P));       // s_f never falls into P
    CHECK(member(DiffPoly::zero(K, 1), P));
}

TEST_CASE("membership closure, minimal rank, primality") {
    auto K = th::gf5t();
    DiffPoly f = dp("x'^2 - x", K);
    SatIdeal P = make_satideal(f);
    Sampler s(K, 32);

    for (int i = 0; i < 25; ++i) {
        DiffPoly a = s.dpoly(1, 2, 2, 2), b = s.dpoly(1, 2, 2, 2);
        DiffPoly m1 = a * f + b * f.delta();
        DiffPoly m2 = s.dpoly(1, 1, 2, 2) * f.delta(2);
        CHECK(member(m1, P));
        CHECK(member(m2, P));
        CHECK(member(m1 + m2, P));
        CHECK(member(m1.delta(), P));
        CHECK(member(s.dpoly(1, 2, 2, 2) * m1, P));
    }
    for (int i = 0; i < 25; ++i) {
        DiffPoly low = s.dpoly(1, 0, 2, 3);
        if (low.is_zero()) continue;
        CHECK_FALSE(member(low, P));  // rank (0,*) < rank (1,2)
    }
    for (int i = 0; i < 25; ++i) {
        DiffPoly g = s.dpoly(1, 2, 2, 2);
        DiffPoly h = s.dpoly(1, 2, 2, 2) * f;  // member by construction
        if (member(g * h, P)) CHECK((member(g, P) || member(h, P)));
    }
}
