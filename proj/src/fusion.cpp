#include "voachar/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace voachar {

namespace {

void checkLabel(long long q, long long r) {
    if (q < 2) throw IndexOutOfRange("fusion ring needs q >= 2");
    if (r < 0 || r > q - 2) throw IndexOutOfRange("fusion label out of range");
}

using Vec = std::vector<long long>; // multiplicity vector over labels 0..q-2

Vec basis(long long q, long long r) {
    Vec v(static_cast<std::size_t>(q - 1), 0);
    v[static_cast<std::size_t>(r)] = 1;
    return v;
}

Vec multiply(long long q, const Vec& a, const Vec& b,
             const std::function<std::vector<long long>(long long, long long, long long)>& rule) {
    Vec out(static_cast<std::size_t>(q - 1), 0);
    for (long long r1 = 0; r1 <= q - 2; ++r1) {
        if (a[r1] == 0) continue;
        for (long long r2 = 0; r2 <= q - 2; ++r2) {
            if (b[r2] == 0) continue;
            for (long long r3 : rule(q, r1, r2)) out[r3] += a[r1] * b[r2];
        }
    }
    return out;
}

bool checkRing(long long q, const std::function<std::vector<long long>(long long, long long,
                                                                       long long)>& rule,
               bool& unitOk, bool& commOk, bool& assocOk) {
    unitOk = commOk = assocOk = true;
    for (long long r = 0; r <= q - 2; ++r)
        if (rule(q, 0, r) != std::vector<long long>{r}) unitOk = false;
    for (long long r1 = 0; r1 <= q - 2; ++r1)
        for (long long r2 = 0; r2 <= q - 2; ++r2)
            if (rule(q, r1, r2) != rule(q, r2, r1)) commOk = false;
    for (long long r1 = 0; r1 <= q - 2; ++r1)
        for (long long r2 = 0; r2 <= q - 2; ++r2)
            for (long long r3 = 0; r3 <= q - 2; ++r3) {
                Vec ab = multiply(q, basis(q, r1), basis(q, r2), rule);
                Vec left = multiply(q, ab, basis(q, r3), rule);
                Vec bc = multiply(q, basis(q, r2), basis(q, r3), rule);
                Vec right = multiply(q, basis(q, r1), bc, rule);
                if (left != right) assocOk = false;
            }
    return unitOk && commOk && assocOk;
}

} // namespace

std::vector<long long> fuseAffine(long long q, long long r1, long long r2) {
    checkLabel(q, r1);
    checkLabel(q, r2);
    std::vector<long long> out;
    long long hi = std::min(r1 + r2, 2 * q - 4 - r1 - r2);
    for (long long r3 = std::llabs(r1 - r2); r3 <= hi; r3 += 2) out.push_back(r3);
    return out;
}

std::vector<long long> fuseVir3(long long q, long long r1, long long r2) {
    checkLabel(q, r1);
    checkLabel(q, r2);
    // Kac labels a = r + 1 in {1, ..., q-1}, s = 1 fixed:
    // a3 from |a1 - a2| + 1 step 2 up to min(a1 + a2 - 1, 2q - 1 - a1 - a2).
    long long a1 = r1 + 1, a2 = r2 + 1;
    std::vector<long long> out;
    long long hi = std::min(a1 + a2 - 1, 2 * q - 1 - a1 - a2);
    for (long long a3 = std::llabs(a1 - a2) + 1; a3 <= hi; a3 += 2) out.push_back(a3 - 1);
    return out;
}

RingIsoReport ringIsoCheck(long long q) {
    if (q < 2) throw IndexOutOfRange("fusion ring needs q >= 2");
    if (q % 3 == 0) throw DivisibleByThree("no minimal-model partner when 3 divides q");
    RingIsoReport rep;
    checkRing(q, fuseAffine, rep.unitAffine, rep.commutativeAffine, rep.associativeAffine);
    checkRing(q, fuseVir3, rep.unitVir, rep.commutativeVir, rep.associativeVir);
    rep.structureMatch = true;
    for (long long r1 = 0; r1 <= q - 2; ++r1)
        for (long long r2 = 0; r2 <= q - 2; ++r2)
            if (fuseAffine(q, r1, r2) != fuseVir3(q, r1, r2)) rep.structureMatch = false;
    return rep;
}

} // namespace voachar
