#include <doctest.h>

#include "flexion/gari.hpp"
#include "flexion/io.hpp"
#include "flexion/named_moulds.hpp"
#include "flexion/symmetry.hpp"
#include "test_util.hpp"

using namespace flexion;

namespace {

// eps * M componentwise, for dual-number linearization tests.
Mould eps_scaled(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    RationalFunction eps = RationalFunction::variable(eps_var());
    for (int r = 0; r <= m.depth_limit(); ++r) out.at(r) = m.at(r) * eps;
    return out;
}

Mould random_symmetral(testutil::Rng& rng, Flavor f, int depth) {
    return expari(rng.alternal_mould(f, depth));
}

}  // namespace

TEST_CASE("invmu") {
    testutil::Rng rng(61);
    Mould b = rng.mould(Flavor::U, 4, 2, true);
    CHECK(mould_eq(mu(invmu(b), b), Mould::unit(Flavor::U, 4)));
    CHECK(mould_eq(mu(b, invmu(b)), Mould::unit(Flavor::U, 4)));

    // (4.4.2)-(4.4.4): invmu(pil) = anti.neg(pil) = pari.anti(pil)
    Mould p = pil(4);
    CHECK(mould_eq(mu(pari(anti(p)), p), Mould::unit(Flavor::V, 4)));
    CHECK(mould_eq(anti(neg(p)), pari(anti(p))));
    CHECK(mould_eq(invmu(p), anti(neg(p))));
}

TEST_CASE("expari and logari are mutually inverse") {
    testutil::Rng rng(63);
    Mould a = rng.mould(Flavor::U, 5);
    CHECK(mould_eq(logari(expari(a)), a));
    Mould g = rng.mould(Flavor::U, 5, 2, true);
    CHECK(mould_eq(expari(logari(g)), g));
    // depth 1 of expari is the input itself
    CHECK(expari(a).at(1) == a.at(1));
}

TEST_CASE("Prop 2.6.1: expari maps alternal onto symmetral") {
    testutil::Rng rng(65);
    for (int iter = 0; iter < 2; ++iter) {
        Mould a = rng.alternal_mould(Flavor::U, 4);
        REQUIRE(check_alternal(a).holds);
        CHECK(check_symmetral(expari(a)).holds);
    }
    for (int iter = 0; iter < 2; ++iter) {
        Mould s = mu(random_symmetral(rng, Flavor::U, 4), random_symmetral(rng, Flavor::U, 4));
        REQUIRE(check_symmetral(s).holds);
        CHECK(check_alternal(logari(s)).holds);
    }
}

TEST_CASE("Lemma 2.6.2: symmetral composed with alternal is symmetral") {
    testutil::Rng rng(67);
    Mould b = random_symmetral(rng, Flavor::U, 4);
    Mould a = rng.alternal_mould(Flavor::U, 4);
    CHECK(check_symmetral(compose(b, a)).holds);
}

TEST_CASE("garit basics") {
    testutil::Rng rng(69);
    Mould b = rng.mould(Flavor::U, 4, 2, true);
    Mould a = rng.mould(Flavor::U, 4, 2, true);
    // depth 1 fixed
    CHECK(garit(b, a).at(1) == a.at(1));
    // mu-automorphism
    Mould x = rng.mould(Flavor::U, 4, 2, true);
    CHECK(mould_eq(garit(b, mu(a, x)), mu(garit(b, a), garit(b, x))));
    // ganit and gaxit are mu-automorphisms too
    Mould c = rng.mould(Flavor::U, 4, 2, true);
    CHECK(mould_eq(ganit(b, mu(a, x)), mu(ganit(b, a), ganit(b, x))));
    CHECK(mould_eq(gaxit(b, c, mu(a, x)), mu(gaxit(b, c, a), gaxit(b, c, x))));
}

TEST_CASE("garit linearization (2.7.4)") {
    testutil::Rng rng(71);
    Mould a = rng.mould(Flavor::U, 4, 2, true);
    Mould c = rng.mould(Flavor::U, 4);
    Mould b = Mould::unit(Flavor::U, 4) + eps_scaled(c);
    Mould lhs = garit(b, a);
    Mould rhs = a + eps_scaled(arit(c, a));
    CHECK(mould_eq(lhs, rhs));
    // and the full group law recovers preari
    CHECK(mould_eq(gari(a, b), a + eps_scaled(preari(a, c))));
}

TEST_CASE("gari group axioms") {
    testutil::Rng rng(73);
    Mould a = random_symmetral(rng, Flavor::U, 4);
    Mould b = random_symmetral(rng, Flavor::U, 4);
    Mould c = random_symmetral(rng, Flavor::U, 4);
    Mould one = Mould::unit(Flavor::U, 4);
    CHECK(mould_eq(gari(a, one), a));
    CHECK(mould_eq(gari(one, b), b));
    CHECK(mould_eq(gari(gari(a, b), c), gari(a, gari(b, c))));
    CHECK(mould_eq(gari(invgari(a), a), one));
    CHECK(mould_eq(gari(a, invgari(a)), one));
    CHECK(mould_eq(gari(invgari(pal(4)), pal(4)), Mould::unit(Flavor::U, 4)));
}

TEST_CASE("ganit inverses") {
    testutil::Rng rng(75);
    // ganit_pic o ganit_poc = id on flavor-V moulds
    Mould m = rng.mould(Flavor::V, 4, 2, true);
    Mould pic = mould_pic(4), poc = mould_poc(4);
    CHECK(mould_eq(ganit(pic, ganit(poc, m)), m));
    CHECK(mould_eq(ganit(poc, ganit(pic, m)), m));
    CHECK(mould_eq(invgani(poc), pic));

    // invgani(pac) = pari.anti(paj)
    CHECK(mould_eq(invgani(mould_pac(4)), pari(anti(mould_paj(4)))));
}

TEST_CASE("ganit of Y produces difference mould (4.4.10)") {
    // For B in the v_i, ganit_B(Y)(v_1..v_r) = B(v_2-v_1, ..., v_r-v_1).
    testutil::Rng rng(77);
    Mould b = rng.mould(Flavor::V, 3, 2, true);
    Mould y = mould_Y(Flavor::V, 3);
    Mould g = ganit(b, y);
    for (int r = 2; r <= 3; ++r) {
        std::map<Variable, LinearForm> sub;
        for (int i = 1; i < r; ++i)
            sub[v_var(static_cast<std::uint32_t>(i))] =
                LinearForm::variable(v_var(static_cast<std::uint32_t>(i + 1))) -
                LinearForm::variable(v_var(1));
        CHECK(g.at(r) == b.at(r - 1).substitute(sub));
    }
}

TEST_CASE("adari") {
    testutil::Rng rng(79);
    Mould b = rng.mould(Flavor::U, 4);
    CHECK(mould_eq(adari(Mould::unit(Flavor::U, 4), b), b));
    // series form oracle
    Mould a = random_symmetral(rng, Flavor::U, 4);
    CHECK(mould_eq(adari(a, b), adari_series(a, b)));
    // constants are fixed by adari(pal)
    Mould c = Mould::constant(Flavor::U, 4, {rat(0), rat(3), rat(-2), rat(1), rat(7)});
    CHECK(mould_eq(adari(pal(4), c), c));
}

TEST_CASE("gaxit composition law (2.8.6)") {
    testutil::Rng rng(81);
    Mould a = rng.mould(Flavor::U, 3, 2, true);
    Mould b = rng.mould(Flavor::U, 3, 2, true);
    Mould c = rng.mould(Flavor::U, 3, 2, true);
    Mould d = rng.mould(Flavor::U, 3, 2, true);
    Mould x = rng.mould(Flavor::U, 3, 2, true);
    Mould lhs = gaxit(a, b, gaxit(c, d, x));
    Mould rhs = gaxit(mu(gaxit(a, b, c), a), mu(b, gaxit(a, b, d)), x);
    CHECK(mould_eq(lhs, rhs));
}

TEST_CASE("Lemmas 2.8.2-2.8.5") {
    testutil::Rng rng(83);
    Mould a = random_symmetral(rng, Flavor::U, 3);
    Mould b = rng.mould(Flavor::U, 3, 2, true);
    Mould x = rng.mould(Flavor::U, 3, 2, true);

    // (2.8.11) first equality: gaxit_{A,B}(invgaxi_{A,B}(A)) = invmu(A)
    Mould inv_left = invgaxi_left(a, b);
    CHECK(mould_eq(gaxit(a, b, inv_left), invmu(a)));
    // garit_C(invgari C) = invmu C
    Mould cg = random_symmetral(rng, Flavor::U, 3);
    CHECK(mould_eq(garit(cg, invgari(cg)), invmu(cg)));

    // (2.8.5): gaxit_{A,B} o garit_{invgaxi_{A,B}(A)} = ganit_{mu(B,A)}
    CHECK(mould_eq(gaxit(a, b, garit(inv_left, x)), ganit(mu(b, a), x)));

    // (2.8.10): invgaxi^h(B) = swap.invgari.swap(B)
    Mould h = push(swap(invmu(swap(b))));
    CHECK(mould_eq(invgaxi_left(b, h), swap(invgari(swap(b)))));

    // (2.8.12): ganit_{rash C}(ras C) = C
    Mould c = random_symmetral(rng, Flavor::U, 3);
    CHECK(mould_eq(ganit(rash(c), ras(c)), c));
}

TEST_CASE("first fundamental identity (2.8.4)") {
    testutil::Rng rng(85);
    Mould a = rng.mould(Flavor::U, 3, 2, true);
    Mould b = random_symmetral(rng, Flavor::U, 3);
    CHECK(mould_eq(gira(a, b), ganit(rash(b), gari(a, ras(b)))));
    // and on a plain random group-like b
    Mould b2 = rng.mould(Flavor::U, 3, 1, true);
    CHECK(mould_eq(gira(a, b2), ganit(rash(b2), gari(a, ras(b2)))));
}

TEST_CASE("crash(pal) = pac in low depth") {
    CHECK(mould_eq(crash(pal(3)), mould_pac(3)));
}

TEST_CASE("corollary 2.8.6 (2.8.17)") {
    testutil::Rng rng(87);
    Mould a = rng.mould(Flavor::U, 3, 2, true);
    Mould c = random_symmetral(rng, Flavor::U, 3);
    Mould lhs = swap(fragari(swap(a), swap(c)));
    Mould rhs = ganit(crash(c), fragari(a, c));
    CHECK(mould_eq(lhs, rhs));
}

TEST_CASE("second fundamental identity (4.5.2) sample") {
    testutil::Rng rng(89);
    Mould m = testutil::push_symmetrized(rng.mould(Flavor::U, 3));
    Mould lhs = swap(adari(pal(3), m));
    Mould rhs = ganit(mould_pic(3), adari(pil(3), swap(m)));
    CHECK(mould_eq(lhs, rhs));
}
