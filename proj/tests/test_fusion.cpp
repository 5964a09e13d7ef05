#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voachar/fusion.hpp"

#include <vector>

using namespace voachar;

TEST_CASE("affine fusion at level 3 (q = 5)") {
    using V = std::vector<long long>;
    CHECK(fuseAffine(5, 0, 2) == V{2});
    CHECK(fuseAffine(5, 1, 1) == V{0, 2});
    CHECK(fuseAffine(5, 1, 2) == V{1, 3});
    CHECK(fuseAffine(5, 2, 2) == V{0, 2});      // truncated at 2q-4-4 = 2
    CHECK(fuseAffine(5, 3, 3) == V{0});         // truncated at 2q-4-6 = 0
    CHECK(fuseAffine(5, 2, 3) == V{1});
    CHECK_THROWS_AS(fuseAffine(5, 4, 0), IndexOutOfRange);
    CHECK_THROWS_AS(fuseAffine(1, 0, 0), IndexOutOfRange);
}

TEST_CASE("minimal-model fusion matches the affine rule label by label") {
    for (long long q : {2, 4, 5, 7, 8, 10, 11, 13})
        for (long long r1 = 0; r1 <= q - 2; ++r1)
            for (long long r2 = 0; r2 <= q - 2; ++r2) {
                CAPTURE(q);
                CAPTURE(r1);
                CAPTURE(r2);
                CHECK(fuseAffine(q, r1, r2) == fuseVir3(q, r1, r2));
            }
}

TEST_CASE("ring isomorphism report") {
    for (long long q : {2, 4, 5, 7, 8, 10}) {
        RingIsoReport rep = ringIsoCheck(q);
        CAPTURE(q);
        CHECK(rep.unitAffine);
        CHECK(rep.unitVir);
        CHECK(rep.commutativeAffine);
        CHECK(rep.commutativeVir);
        CHECK(rep.associativeAffine);
        CHECK(rep.associativeVir);
        CHECK(rep.structureMatch);
        CHECK(rep.pass());
    }
    CHECK_THROWS_AS(ringIsoCheck(6), DivisibleByThree);
    CHECK_THROWS_AS(ringIsoCheck(9), DivisibleByThree);
}

TEST_CASE("conductor divisibility pattern") {
    for (long long q = 2; q <= 20; ++q) {
        if (q % 3 == 0) continue;
        BigInt n = conductorMinimal(q, 3);
        CAPTURE(q);
        CHECK((n % 3 == 0) == (q % 3 == 1));
    }
    CHECK(conductorMinimal(4, 3) == 48);
}
