#pragma once

// Fusion rings of the integral-level affine sl2 theory (level k = q - 2) and
// the (q,3) Virasoro minimal models, plus the structure-constant isomorphism
// check between them.

#include "voachar/params.hpp"

#include <vector>

namespace voachar {

// Affine rule: r3 runs from |r1 - r2| in steps of 2 up to
// min(r1 + r2, 2q - 4 - r1 - r2); labels r in {0, ..., q-2}.
std::vector<long long> fuseAffine(long long q, long long r1, long long r2);

// Minimal-model (q,3) rule on the same label set {0, ..., q-2} (Virasoro
// Kac labels r+1 in {1, ..., q-1}, s = 1), computed from the minimal-model
// truncated Clebsch-Gordan rule.
std::vector<long long> fuseVir3(long long q, long long r1, long long r2);

struct RingIsoReport {
    bool unitAffine = false;
    bool unitVir = false;
    bool commutativeAffine = false;
    bool commutativeVir = false;
    bool associativeAffine = false;
    bool associativeVir = false;
    bool structureMatch = false; // N-constants agree under r -> r
    bool pass() const {
        return unitAffine && unitVir && commutativeAffine && commutativeVir &&
               associativeAffine && associativeVir && structureMatch;
    }
};

// Prop-level check: both rings are commutative associative unital and have
// identical structure constants. Requires q >= 2 and 3 not dividing q.
RingIsoReport ringIsoCheck(long long q);

} // namespace voachar
