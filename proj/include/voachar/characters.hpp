#pragma once

// Constructors for the module characters: affine Verma / Weyl / admissible /
// boundary-admissible characters of affine sl2, Virasoro Verma / minimal /
// logarithmic / boundary characters, free-fermion characters, and the direct-sum
// and closed-form characters of the V^(p) and A^(3p) algebras. Two-variable
// (w, q) forms where they exist, plus pre-substituted one-variable forms at
// (w, q) -> (q^{-sign/2}, q^3) for identity checking.

#include "voachar/jacobi_series.hpp"
#include "voachar/params.hpp"
#include "voachar/theta.hpp"

namespace voachar {

enum class Variant { Char, SuperChar };

// Affine sl2 Verma module M_k(mu):
//   hw: w^mu q^{mu(mu+2)/(4(k+2))} / ((w^2 q;q)(q;q)(w^{-2};q)),
//       BOUNDED_ABOVE with the (w^{-2};q) zero-exponent factor expanded
//       downward in w; lw is the mirror image under w -> w^{-1}.
// wdepth controls how far the pure-w tails are materialized; wdepth = 0 picks
// a depth sufficient for substitution at (q^{-1/2}, q^3) up to the cutoff.
JacobiSeries chAffineVerma(const Rat& k, const Rat& mu, bool hw, const Rat& cutoff,
                           const Rat& wdepth = Rat(0));

// Weyl module V^k(mu_{r,0}): (w^r - w^{-(r+2)}) q^{r(r+2)/(4(k+2))} over the
// same denominator, BOUNDED_ABOVE.
JacobiSeries chWeyl(const Rat& k, long long r, const Rat& cutoff, const Rat& wdepth = Rat(0));

// Weyl character pre-substituted at (w, q) -> (q^{-sign/2}, q^3), built at the
// generator level (each Pochhammer factor substituted before assembly).
FracSeries chWeylSub(const Rat& k, long long r, int sign, const Rat& cutoff);

// Admissible irreducible L_{-2+q/p}(mu_{r,s}) via the theta quotient
//   q^{1/8 - p/(4q)} (theta_{b+,2pq}(w^{1/p},q) - theta_{b-,2pq}(w^{1/p},q))
//     / (w q^{1/8} (w^2 q;q)(q;q)(w^{-2};q)),   b_pm = pm p(r+1) - qs,
// expanded BOUNDED_ABOVE for hw; lw mirrors w -> w^{-1}.
JacobiSeries chAdmissible(long long q, long long p, long long r, long long s, bool hw,
                          const Rat& cutoff, const Rat& wdepth = Rat(0));

// One-variable admissible character at (w, q) -> (q^{-sign/2}, q^3):
//   q^{1/2 - 3p/(4q)} (Theta_{b+} - Theta_{b-})|_{w -> q^{-1/2}} / (q;q).
// Both signs yield the same series: the lowest-weight module mirrors
// w -> w^{-1}, which the sign = -1 substitution flips back.
FracSeries chAdmissibleSub(long long q, long long p, long long r, long long s, int sign,
                           const Rat& cutoff);

// Boundary-admissible (q = 2, p odd) character
//   q^{(1-p)/8} w^{-2s/p} q^{s^2/(2p)} theta11(w^{-2} q^s, q^p) / theta11(w^{-2}, q)
// for hw (lw mirrored); the factored-i flags of the two theta11's cancel.
JacobiSeries chBoundaryAffine(long long p, long long s, bool hw, const Rat& cutoff,
                              const Rat& wdepth = Rat(0));

// Substituted boundary form (same series for both signs):
//   q^{3(1-p)/8 + s/p + 3s^2/(2p)} theta11(q^{3s+1}, q^{3p}) / theta11(q, q^3).
FracSeries chBoundaryAffineSub(long long p, long long s, int sign, const Rat& cutoff);

// Virasoro Verma module: q^h / (q;q).
FracSeries chVirVerma(const Rat& h, const Rat& cutoff);

// Minimal-model irreducible L_Vir(c_{q,p}, h_{r,s}):
//   q^h sum_j (q^{pq j^2 + (qs-pr) j} - q^{pq j^2 - (qs+pr) j + rs}) / (q;q).
FracSeries chMinimal(long long q, long long p, long long r, long long s, const Rat& cutoff);

// Logarithmic (1,p)-model irreducible M_{r,s;p}: (1 - q^{rs}) q^{h_{r,s}^{1,p}} / (q;q).
FracSeries chLog(long long p, long long r, long long s, const Rat& cutoff);

// Boundary Virasoro character (q = 2, p odd >= 3):
//   i q^{c_{2,p}/24 + s^2/(2p)} theta11(q^s, q^p) / eta(q).
FracSeries chBoundaryVir(long long p, long long s, const Rat& cutoff);

// Free fermion F^{1/2}: prod_{i>=1} (1 + e q^{i-1/2}), e = +1 for the character
// and -1 for the supercharacter.
FracSeries chFermionHalf(Variant v, const Rat& cutoff);

// Three fermions F^{3/2} with h0-weights +2, -2, 0:
//   prod_{i>=1} (1 + e w^2 q^{i-1/2})(1 + e w^{-2} q^{i-1/2})(1 + e q^{i-1/2}).
JacobiSeries chFermionThreeHalf(Variant v, const Rat& cutoff);

// Lowest q-exponent of the r-th summand of both direct sums below:
//   L(r) = 3 p r (r+2)/4 - r/2.
Rat directSumLowestExponent(long long p, long long r);

// Smallest r_max such that every omitted summand (r > r_max) starts at or
// above the cutoff.
long long directSumRMaxNeeded(long long p, const Rat& cutoff);

// V^(p) = sum_{r>=0} (r+1) V^{-2+1/p}(mu_{r,0}), substituted at
// (q^{-sign/2}, q^3); the supercharacter inserts (-1)^r. Throws RMaxTooSmall
// when r_max < directSumRMaxNeeded(p, cutoff).
FracSeries chVpSum(long long p, int sign, Variant v, long long rMax, const Rat& cutoff);

// A^(3p) = sum_{r>=0} (r+1) M_{r+1,1;3p}; same truncation certificate.
FracSeries chA3pSum(long long p, long long rMax, Variant v, const Rat& cutoff);

// Closed form of the substituted V^(2) (super)character (plain trace
// normalization, i.e. including the q^{-c/24} -> q^{-9/8} factor):
//   q^{-9/8} (sum_n e(n) n q^{-sign n/2 + 3n^2/2})
//     / (q^{-sign/2 + 3/8} (q^3;q^3)(q^{3-sign};q^3)(q^{sign};q^3)),
// with e(n) = 1 for char and -(-1)^n for superchar.
FracSeries chV2Closed(Variant v, int sign, const Rat& cutoff);

// Closed form of the A^(6) (super)character:
//   sum_{n>=0} (n+1) e(n) (1 - q^{n+1}) q^{(3n^2+5n)/2} / (q;q), e(n) = (+-1)^n.
FracSeries chA6Closed(Variant v, const Rat& cutoff);

} // namespace voachar
