#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voachar/frac_series.hpp"
#include "voachar/jacobi_series.hpp"

#include <random>

using namespace voachar;

namespace {

FracSeries qPochhammer(const Rat& cutoff) {
    return pochExpandFs(Rat(0), 1, Rat(1), cutoff);
}

} // namespace

TEST_CASE("addition basics") {
    Rat cut(10);
    FracSeries a = FracSeries::one(cut);
    a.addTerm(Rat(1), Rat(1)); // 1 + q
    FracSeries b = FracSeries::one(cut);
    b.addTerm(Rat(1), Rat(-1)); // 1 - q
    FracSeries sum = a + b;
    CHECK(sum.coeff(Rat(0)) == Rat(2));
    CHECK(sum.coeff(Rat(1)) == Rat(0));
    CHECK(sum.terms().size() == 1);

    // fractional lattice: q^{1/2} + q^{1/3} lives on qden 6
    FracSeries h = FracSeries::monomial(Rat(1, 2), Rat(1), cut) +
                   FracSeries::monomial(Rat(1, 3), Rat(1), cut);
    CHECK(h.qden() == 6);
    CHECK(h.coeff(Rat(1, 3)) == Rat(1));
    CHECK(h.coeff(Rat(1, 2)) == Rat(1));

    // additive inverse of a Pochhammer prefix
    FracSeries p = qPochhammer(cut);
    CHECK((p + (-p)).isZero());
}

TEST_CASE("multiplication basics and cutoff bookkeeping") {
    Rat cut(10);
    FracSeries a = FracSeries::one(cut);
    a.addTerm(Rat(1), Rat(1));
    FracSeries sq = a * a; // (1+q)^2
    CHECK(sq.coeff(Rat(0)) == Rat(1));
    CHECK(sq.coeff(Rat(1)) == Rat(2));
    CHECK(sq.coeff(Rat(2)) == Rat(1));

    // (1-q) * geometric series = 1 up to the cutoff
    FracSeries geo(cut);
    for (long long n = 0; n < 10; ++n) geo.addTerm(Rat(n), Rat(1));
    FracSeries oneMinusQ = FracSeries::one(cut);
    oneMinusQ.addTerm(Rat(1), Rat(-1));
    FracSeries prod = oneMinusQ * geo;
    CHECK(prod.coeff(Rat(0)) == Rat(1));
    for (long long n = 1; n < 9; ++n) CHECK(prod.coeff(Rat(n)) == Rat(0));

    // (q;q) * 1/(q;q) = 1 to q^20
    Rat cut20(20);
    FracSeries p = qPochhammer(cut20);
    FracSeries prod2 = p * p.inverse();
    CHECK(!FracSeries::firstMismatch(prod2, FracSeries::one(cut20), cut20).has_value());
}

TEST_CASE("pentagonal-number expansion of (q;q)") {
    FracSeries p = qPochhammer(Rat(9));
    // 1 - q - q^2 + q^5 + q^7 (exponents below 9)
    CHECK(p.coeff(Rat(0)) == Rat(1));
    CHECK(p.coeff(Rat(1)) == Rat(-1));
    CHECK(p.coeff(Rat(2)) == Rat(-1));
    CHECK(p.coeff(Rat(3)) == Rat(0));
    CHECK(p.coeff(Rat(4)) == Rat(0));
    CHECK(p.coeff(Rat(5)) == Rat(1));
    CHECK(p.coeff(Rat(6)) == Rat(0));
    CHECK(p.coeff(Rat(7)) == Rat(1));
    CHECK(p.coeff(Rat(8)) == Rat(0));

    // (q^3;q^3) to q^10: 1 - q^3 - q^6 (next terms +q^15, +q^21)
    FracSeries p3 = pochExpandFs(Rat(0), 1, Rat(3), Rat(10));
    CHECK(p3.coeff(Rat(3)) == Rat(-1));
    CHECK(p3.coeff(Rat(6)) == Rat(-1));
    CHECK(p3.coeff(Rat(9)) == Rat(0));
}

TEST_CASE("inverse gives partition numbers") {
    FracSeries inv = qPochhammer(Rat(11)).inverse();
    long long partition[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long long n = 0; n <= 10; ++n) CHECK(inv.coeff(Rat(n)) == Rat(partition[n]));

    // inverse(1-q) = geometric series
    FracSeries oneMinusQ = FracSeries::one(Rat(8));
    oneMinusQ.addTerm(Rat(1), Rat(-1));
    FracSeries geo = oneMinusQ.inverse();
    for (long long n = 0; n < 8; ++n) CHECK(geo.coeff(Rat(n)) == Rat(1));

    // inverse(q^{1/8}(1-q)) = q^{-1/8}(1+q+...)
    FracSeries m = oneMinusQ.shifted(Rat(1, 8));
    FracSeries mi = m.inverse();
    CHECK(mi.coeff(Rat(-1, 8)) == Rat(1));
    CHECK(mi.coeff(Rat(7, 8)) == Rat(1));

    CHECK_THROWS_AS(FracSeries::zero(Rat(5)).inverse(), ZeroLeadingTerm);
}

TEST_CASE("multiplication is associative and commutative on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coefDist(-4, 4);
    std::uniform_int_distribution<int> expNum(0, 12);
    std::uniform_int_distribution<int> expDen(1, 3);
    Rat cut(6);
    auto randomSeries = [&]() {
        FracSeries s(cut);
        for (int t = 0; t < 6; ++t)
            s.addTerm(Rat(expNum(rng), expDen(rng)), Rat(coefDist(rng)));
        return s;
    };
    for (int trial = 0; trial < 100; ++trial) {
        FracSeries a = randomSeries(), b = randomSeries(), c = randomSeries();
        CHECK(!FracSeries::firstMismatch(a * b, b * a, cut).has_value());
        CHECK(!FracSeries::firstMismatch((a * b) * c, a * (b * c), cut).has_value());
    }
}

TEST_CASE("pochExpandFs rejects nonpositive step") {
    CHECK_THROWS_AS(pochExpandFs(Rat(1), 0, Rat(0), Rat(5)), NonTerminating);
    CHECK_THROWS_AS(pochExpandFs(Rat(1), 0, Rat(-1), Rat(5)), NonTerminating);
}

TEST_CASE("jsGeom expansions") {
    Rat cut(6);
    // 1/(1-w^{-2}) BOUNDED_ABOVE = sum_{m>=0} w^{-2m} at q^0
    JacobiSeries g = jsGeom(Rat(-2), Rat(0), WDir::BoundedAbove, cut, Rat(10));
    CHECK(g.coeff(Rat(0), Rat(0)) == Rat(1));
    CHECK(g.coeff(Rat(0), Rat(-2)) == Rat(1));
    CHECK(g.coeff(Rat(0), Rat(-10)) == Rat(1));
    CHECK(g.isKnown(Rat(0), Rat(-10)));
    CHECK(!g.isKnown(Rat(0), Rat(-12)));

    // 1/(1-w^2) BOUNDED_BELOW = sum_{m>=0} w^{2m} at q^0
    JacobiSeries g2 = jsGeom(Rat(2), Rat(0), WDir::BoundedBelow, cut, Rat(10));
    CHECK(g2.coeff(Rat(0), Rat(0)) == Rat(1));
    CHECK(g2.coeff(Rat(0), Rat(4)) == Rat(1));
    CHECK(!g2.isKnown(Rat(0), Rat(12)));

    // 1/(1-w^2 q) = sum w^{2m} q^m, FINITE
    JacobiSeries g3 = jsGeom(Rat(2), Rat(1), WDir::Finite, cut);
    CHECK(g3.wdir() == WDir::Finite);
    for (long long m = 0; m < 6; ++m) CHECK(g3.coeff(Rat(m), Rat(2 * m)) == Rat(1));

    // 1/(1-w^2) in the BOUNDED_ABOVE direction: -w^{-2} - w^{-4} - ...
    JacobiSeries g4 = jsGeom(Rat(2), Rat(0), WDir::BoundedAbove, cut, Rat(10));
    CHECK(g4.coeff(Rat(0), Rat(0)) == Rat(0));
    CHECK(g4.coeff(Rat(0), Rat(-2)) == Rat(-1));
    CHECK(g4.coeff(Rat(0), Rat(-4)) == Rat(-1));
}

TEST_CASE("substitution basics") {
    Rat cut(8);
    // w^2 q at (q^{-1/2}, q^3) -> q^2
    JacobiSeries m = JacobiSeries::one(cut).monomialMul(Rat(2), Rat(1));
    FracSeries s = m.substitute(Rat(-1, 2), Rat(3));
    CHECK(s.coeff(Rat(2)) == Rat(1));

    // w^{-2} at q^0 -> q^1
    JacobiSeries m2 = JacobiSeries::one(cut).monomialMul(Rat(-2), Rat(0));
    FracSeries s2 = m2.substitute(Rat(-1, 2), Rat(3));
    CHECK(s2.coeff(Rat(1)) == Rat(1));

    // one-variable embedding: substitution = exponent rescaling by q-exponent
    FracSeries f = qPochhammer(Rat(8));
    FracSeries viaJs = JacobiSeries::fromFrac(f).substitute(Rat(-1, 2), Rat(3));
    FracSeries direct = f.rescaledExponents(Rat(3));
    CHECK(!FracSeries::firstMismatch(viaJs, direct, Rat(24)).has_value());

    // incompatible direction raises
    JacobiSeries bad = jsGeom(Rat(-2), Rat(0), WDir::BoundedAbove, cut, Rat(10));
    CHECK_THROWS_AS(bad.substitute(Rat(1, 2), Rat(3)), UnsafeSubstitution);
}

TEST_CASE("substitution honors exactness limits") {
    Rat cut(4);
    // Truncated 1/(1-w^{-2}) with a shallow tail: substituting w->q^{-1/2}
    // maps w^{-2m} to q^m, so the result is only certified below depth/2.
    JacobiSeries g = jsGeom(Rat(-2), Rat(0), WDir::BoundedAbove, cut, Rat(6));
    FracSeries s = g.substitute(Rat(-1, 2), Rat(3));
    CHECK(s.cutoff() == Rat(3)); // floor at w-exp -6 maps to q^3
    CHECK(s.coeff(Rat(0)) == Rat(1));
    CHECK(s.coeff(Rat(1)) == Rat(1));
    CHECK(s.coeff(Rat(2)) == Rat(1));
}

TEST_CASE("mirrorW flips direction and windows") {
    Rat cut(5);
    JacobiSeries g = jsGeom(Rat(-2), Rat(0), WDir::BoundedAbove, cut, Rat(8));
    JacobiSeries m = g.mirrorW();
    CHECK(m.wdir() == WDir::BoundedBelow);
    CHECK(m.coeff(Rat(0), Rat(2)) == Rat(1));
    CHECK(!m.isKnown(Rat(0), Rat(10)));
    FracSeries viaMirror = m.substitute(Rat(1, 2), Rat(3));
    FracSeries directSub = g.substitute(Rat(-1, 2), Rat(3));
    CHECK(!FracSeries::firstMismatch(viaMirror, directSub, Rat(4)).has_value());
}
