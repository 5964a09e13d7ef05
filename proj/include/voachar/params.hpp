#pragma once

// Exact arithmetic for level / central-charge / conformal-weight / index
// formulas and the singular-vector weight ledger.

#include "voachar/errors.hpp"
#include "voachar/rat.hpp"

#include <optional>
#include <utility>

namespace voachar {

// Module family for singular-vector bookkeeping.
enum class SvFamily { AffHw, AffLw, Vir };

// (Delta f, Delta n) offset of a singular vector from the top of a Verma
// module; Virasoro offsets use df = 0.
struct SingularOffset {
    long long df = 0;
    Rat dn;
};

struct SingularWeightTable {
    SvFamily family = SvFamily::AffHw;
    std::optional<SingularOffset> sv1;
    std::optional<SingularOffset> sv2;
};

// Level of the (q,p) family: k = -2 + q/p, coprime q >= 1, p >= 1.
Rat levelOf(long long q, long long p);

// c(k) = 13 - 2(k+2) - 18/(k+2); equals the (q,3p) minimal-model value at
// admissible k. Throws BadLevel at k = -2.
Rat ccOfLevel(const Rat& k);

// h(k, mu) = mu(3mu + 2 - 2k)/(4(k+2)). Throws BadLevel at k = -2.
Rat hOf(const Rat& k, const Rat& mu);

// Minimal-model central charge c_{q,p} = 1 - 6(p-q)^2/(pq).
Rat ccMinimal(long long q, long long p);

// ell_{r,s}^{q,p} = ((p(r+1) - qs)^2 - p^2)/(4pq), affine index box:
// 0 <= r <= q-2 (q >= 2) or r >= 0 (q = 1), 0 <= s <= p-1.
Rat ellWeight(long long q, long long p, long long r, long long s);

// h_{r,s}^{q,p} = ((qs - pr)^2 - (p-q)^2)/(4pq); box 1 <= r <= q-1 (q >= 2),
// r >= 1 (q = 1), 1 <= s <= p-1 (p >= 2) or 1 <= s <= p (q = 1 logarithmic box).
Rat hWeight(long long q, long long p, long long r, long long s);

// mu_{r,s} = r - qs/p, same affine box as ellWeight.
Rat muWeight(long long q, long long p, long long r, long long s);

// Singular-vector offsets from the top of the (q,p,r,s) Verma module:
// affine hw:  (1) (-2(r+1), s(r+1)),  (2) (2(q-r-1), (p-s)(q-r-1));
// affine lw:  same with the sign of df flipped;
// Virasoro:   (1) dn = rs,            (2) dn = (q-r)(p-s).
// sv2 is absent when q = 1.
SingularWeightTable singvecTable(SvFamily family, long long q, long long p, long long r,
                                 long long s);

// Images of the affine singular-vector offsets under n' = -(sign) f/2 + 3n
// (sign = +1 uses the hw table, sign = -1 the lw table; both give the same
// images). First: image of (1); second: image of (2) (absent when q = 1).
std::pair<Rat, std::optional<Rat>> phiImageOffsets(long long q, long long p, long long r,
                                                   long long s, int sign);

struct IndexMapResult {
    long long q, p, r, s;
};

// (q,p,r,s) -> (q, 3p, r+1, 3s+1); throws DivisibleByThree when 3 | q.
IndexMapResult indexMap(long long q, long long p, long long r, long long s);

// Smallest N with N(h_{r,s}^{q,p} - c_{q,p}/24) integral for every irreducible
// (the T-matrix order), by exact lcm of denominators.
BigInt conductorMinimal(long long q, long long p);

// Effective central charge of the (q,3)-series: 3(q-2)/q.
Rat cEff(long long q);

// h_{r+1,1}^{q,3} - ell_{r,0}^{q,1} = (2-q+r) r/(2q): ribbon-twist difference.
Rat ribbonDiff(long long q, long long r);

} // namespace voachar
