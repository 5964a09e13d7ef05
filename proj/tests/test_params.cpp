#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voachar/params.hpp"

using namespace voachar;

TEST_CASE("levels and central charges") {
    CHECK(levelOf(2, 3) == Rat(-4, 3));
    CHECK(levelOf(1, 2) == Rat(-3, 2));
    CHECK(levelOf(5, 1) == Rat(3));
    CHECK_THROWS_AS(levelOf(2, 4), IndexOutOfRange); // not coprime
    CHECK_THROWS_AS(levelOf(0, 1), IndexOutOfRange);

    CHECK(ccMinimal(3, 4) == Rat(1, 2));
    CHECK(ccMinimal(2, 5) == Rat(-22, 5));
    CHECK(ccMinimal(2, 3) == Rat(0));

    CHECK_THROWS_AS(ccOfLevel(Rat(-2)), BadLevel);
    // c(k) at admissible k = -2 + q/p equals the (q, 3p) minimal-model value.
    for (auto [q, p] : {std::pair<long long, long long>{2, 3}, {2, 5}, {5, 2}, {7, 1}, {10, 1}})
        CHECK(ccOfLevel(levelOf(q, p)) == ccMinimal(q, 3 * p));
}

TEST_CASE("conformal weights") {
    CHECK_THROWS_AS(hOf(Rat(-2), Rat(1)), BadLevel);
    CHECK(hOf(Rat(1), Rat(2)) == Rat(1)); // 2*(6+2-2)/12 = 1
    CHECK(hWeight(3, 4, 1, 1) == Rat(0));
    CHECK(hWeight(3, 4, 2, 1) == Rat(1, 2));
    CHECK(hWeight(3, 4, 1, 2) == Rat(1, 16));
    CHECK(hWeight(2, 5, 1, 2) == Rat(-1, 5));
    CHECK_THROWS_AS(hWeight(3, 4, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(hWeight(3, 4, 1, 4), IndexOutOfRange);
    // logarithmic box allows s = p when q = 1
    CHECK(hWeight(1, 3, 1, 3) == hWeight(1, 3, 1, 3));

    CHECK(ellWeight(2, 3, 0, 1) == Rat(-1, 3));
    CHECK(muWeight(2, 3, 0, 1) == Rat(-2, 3));
    CHECK_THROWS_AS(ellWeight(4, 3, 3, 0), IndexOutOfRange); // r > q-2
}

TEST_CASE("affine weight maps to the Virasoro weight under the substitution") {
    for (auto [q, p] : {std::pair<long long, long long>{2, 3}, {2, 5}, {5, 2}, {4, 1}, {8, 3}}) {
        Rat k = levelOf(q, p);
        long long rTop = q >= 2 ? q - 2 : 3;
        for (long long r = 0; r <= rTop; ++r)
            for (long long s = 0; s <= p - 1; ++s) {
                Rat mu = muWeight(q, p, r, s);
                Rat ell = ellWeight(q, p, r, s);
                // affine top weight mu(mu+2)/(4(k+2)) equals the ell-ledger value
                CHECK(mu * (mu + Rat(2)) / (Rat(4) * (k + Rat(2))) == ell);
                // and h(k, mu) = -mu/2 + 3*ell lands on the mapped Virasoro weight
                IndexMapResult im = indexMap(q, p, r, s);
                CHECK(hOf(k, mu) == -mu / Rat(2) + Rat(3) * ell);
                CHECK(-mu / Rat(2) + Rat(3) * ell == hWeight(im.q, im.p, im.r, im.s));
            }
    }
}

TEST_CASE("singular-vector offsets and their images") {
    SingularWeightTable hw = singvecTable(SvFamily::AffHw, 2, 3, 0, 1);
    REQUIRE(hw.sv1.has_value());
    CHECK(hw.sv1->df == -2);
    CHECK(hw.sv1->dn == Rat(1));
    REQUIRE(hw.sv2.has_value());
    CHECK(hw.sv2->df == 2);
    CHECK(hw.sv2->dn == Rat(2));

    SingularWeightTable lw = singvecTable(SvFamily::AffLw, 2, 3, 0, 1);
    CHECK(lw.sv1->df == 2);
    CHECK(lw.sv2->df == -2);

    SingularWeightTable vir = singvecTable(SvFamily::Vir, 2, 9, 1, 4);
    CHECK(vir.sv1->dn == Rat(4));
    CHECK(vir.sv2->dn == Rat(5));

    // image under n' = -sign*f/2 + 3n: identical for both signs
    auto [a1, a2] = phiImageOffsets(2, 3, 0, 1, 1);
    auto [b1, b2] = phiImageOffsets(2, 3, 0, 1, -1);
    CHECK(a1 == Rat(4));  // = (r+1)(3s+1)
    REQUIRE(a2.has_value());
    CHECK(*a2 == Rat(5)); // = (q-r-1)(3p-3s-1)
    CHECK(a1 == b1);
    CHECK(*a2 == *b2);

    // q = 1 has no second singular vector
    auto [c1, c2] = phiImageOffsets(1, 2, 3, 1, 1);
    CHECK(c1 == Rat(3 + 1) * Rat(3 * 1 + 1));
    CHECK(!c2.has_value());
}

TEST_CASE("index map") {
    IndexMapResult im = indexMap(5, 2, 1, 1);
    CHECK(im.q == 5);
    CHECK(im.p == 6);
    CHECK(im.r == 2);
    CHECK(im.s == 4);
    CHECK_THROWS_AS(indexMap(3, 2, 0, 0), DivisibleByThree);
    CHECK_THROWS_AS(indexMap(6, 1, 0, 0), DivisibleByThree);
}

TEST_CASE("conductors") {
    CHECK(conductorMinimal(2, 5) == 60);
    CHECK(conductorMinimal(3, 4) == 48);
    CHECK(conductorMinimal(4, 3) == 48);
    CHECK_THROWS_AS(conductorMinimal(1, 5), IndexOutOfRange);
    CHECK_THROWS_AS(conductorMinimal(4, 6), IndexOutOfRange);
}

TEST_CASE("effective central charge and ribbon differences") {
    CHECK(cEff(2) == Rat(0));
    CHECK(cEff(4) == Rat(3, 2));
    CHECK(cEff(5) == Rat(9, 5));
    CHECK_THROWS_AS(cEff(6), IndexOutOfRange);

    for (long long q : {4, 5, 7, 8, 10}) {
        CHECK(ribbonDiff(q, 0) == Rat(0));
        CHECK(ribbonDiff(q, q - 2) == Rat(0));
        for (long long r = 1; r <= q - 3; ++r) CHECK(ribbonDiff(q, r) != Rat(0));
    }
    CHECK(ribbonDiff(5, 1) == Rat(-1, 5));
}
