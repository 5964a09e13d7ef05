#include "voachar/characters.hpp"

#include <functional>
#include <numeric>

namespace voachar {

namespace {

Rat absRat(const Rat& x) { return x.sign() < 0 ? -x : x; }

// Sum_{j in Z} coefFn(j) q^{A j^2 + B j}, A > 0, truncated at cutoff.
FracSeries quadSum(const Rat& A, const Rat& B,
                   const std::function<Rat(const BigInt&)>& coefFn, const Rat& cutoff) {
    FracSeries out(cutoff);
    auto grade = [&](const BigInt& j) {
        Rat t(j);
        return A * t * t + B * t;
    };
    BigInt j0 = (-B / (Rat(2) * A)).floor();
    for (BigInt j = j0;; --j) {
        Rat g = grade(j);
        if (g >= cutoff) break;
        out.addTerm(g, coefFn(j));
    }
    for (BigInt j = j0 + 1;; ++j) {
        Rat g = grade(j);
        if (g >= cutoff) break;
        out.addTerm(g, coefFn(j));
    }
    return out;
}

FracSeries invQQ(const Rat& cutoff) { return pochFs(Rat(1), Rat(1), cutoff).inverse(); }

// 1 / ((w^2 q;q)(q;q)(w^{-2};q)) expanded in the BOUNDED_ABOVE direction.
JacobiSeries denomInvBA(const Rat& cutoff, const Rat& wdepth) {
    JacobiSeries res = jsPochInverse(Rat(2), Rat(1), 0, Rat(1), cutoff);
    res = res * JacobiSeries::fromFrac(invQQ(cutoff));
    res = res * jsGeom(Rat(-2), Rat(0), WDir::BoundedAbove, cutoff, wdepth);
    res = res * jsPochInverse(Rat(-2), Rat(1), 0, Rat(1), cutoff);
    return res;
}

Rat autoDepth(const Rat& cutoff, const Rat& wdepth, const Rat& extra = Rat(0)) {
    if (wdepth.sign() > 0) return wdepth;
    return Rat(2) * cutoff + Rat(2) * absRat(extra) + Rat(16);
}

void checkSign(int sign) {
    if (sign != 1 && sign != -1) throw IndexOutOfRange("sign must be +1 or -1");
}

int variantCoef(Variant v) { return v == Variant::Char ? 1 : -1; }

} // namespace

JacobiSeries chAffineVerma(const Rat& k, const Rat& mu, bool hw, const Rat& cutoff,
                           const Rat& wdepth) {
    Rat t = k + Rat(2);
    if (t.isZero()) throw BadLevel("character undefined at the critical level k = -2");
    Rat hshift = mu * (mu + Rat(2)) / (Rat(4) * t);
    Rat cb = cutoff - hshift;
    JacobiSeries res = denomInvBA(cb, autoDepth(cb, wdepth, mu)).monomialMul(mu, hshift);
    return hw ? res : res.mirrorW();
}

JacobiSeries chWeyl(const Rat& k, long long r, const Rat& cutoff, const Rat& wdepth) {
    Rat t = k + Rat(2);
    if (t.isZero()) throw BadLevel("character undefined at the critical level k = -2");
    if (r < 0) throw IndexOutOfRange("Weyl index r must be nonnegative");
    Rat ell = Rat(r * (r + 2)) / (Rat(4) * t);
    Rat cb = cutoff - ell;
    JacobiSeries num = JacobiSeries::one(cb).monomialMul(Rat(r), Rat(0)) -
                       JacobiSeries::one(cb).monomialMul(Rat(-(r + 2)), Rat(0));
    return (num * denomInvBA(cb, autoDepth(cb, wdepth, Rat(r)))).monomialMul(Rat(0), ell);
}

FracSeries chWeylSub(const Rat& k, long long r, int sign, const Rat& cutoff) {
    checkSign(sign);
    Rat t = k + Rat(2);
    if (t.isZero()) throw BadLevel("character undefined at the critical level k = -2");
    if (r < 0) throw IndexOutOfRange("Weyl index r must be nonnegative");
    Rat ell3 = Rat(3) * Rat(r * (r + 2)) / (Rat(4) * t);
    // The series starts at ell3 - r/2; nothing to report below the cutoff.
    if (cutoff <= ell3 - Rat(r, 2)) return FracSeries::zero(cutoff);
    Rat cb = cutoff - ell3 + Rat(r + 2, 2) + Rat(4);
    // numerator (w^r - w^{-(r+2)}) at w = q^{-sign/2}
    FracSeries num = FracSeries::monomial(Rat(-sign * r, 2), Rat(1), cb) -
                     FracSeries::monomial(Rat(sign * (r + 2), 2), Rat(1), cb);
    // denominator (w^2 q;q)(q;q)(w^{-2};q) at (q^{-sign/2}, q^3):
    //   (q^{3-sign};q^3)(q^3;q^3)(q^{sign};q^3)
    FracSeries den = pochExpandFs(Rat(3 - sign), 0, Rat(3), cb) *
                     pochExpandFs(Rat(3), 0, Rat(3), cb) * pochExpandFs(Rat(sign), 0, Rat(3), cb);
    return ((num * den.inverse()).shifted(ell3)).truncated(cutoff);
}

JacobiSeries chAdmissible(long long q, long long p, long long r, long long s, bool hw,
                          const Rat& cutoff, const Rat& wdepth) {
    if (q < 2 || p < 1 || std::gcd(q, p) != 1)
        throw NotAdmissible("admissible level needs coprime q >= 2, p >= 1");
    if (r < 0 || r > q - 2 || s < 0 || s > p - 1)
        throw IndexOutOfRange("admissible index (r,s) out of range");
    long long bp = p * (r + 1) - q * s;
    long long bm = -p * (r + 1) - q * s;
    long long a = p * q;
    Rat qshift = -Rat(p, 4 * q); // q^{1/8 - p/4q} over q^{1/8}
    Rat cb = cutoff - qshift;
    ThetaSpec spPlus{ThetaKind::GEN, bp, 2 * a, Rat(1, p)};
    ThetaSpec spMinus{ThetaKind::GEN, bm, 2 * a, Rat(1, p)};
    JacobiSeries num = thetaSum(spPlus, cb).series - thetaSum(spMinus, cb).series;
    JacobiSeries res =
        (num * denomInvBA(cb, autoDepth(cb, wdepth, Rat(r + 2)))).monomialMul(Rat(-1), qshift);
    return hw ? res : res.mirrorW();
}

FracSeries chAdmissibleSub(long long q, long long p, long long r, long long s, int sign,
                           const Rat& cutoff) {
    checkSign(sign);
    if (q < 2 || p < 1 || std::gcd(q, p) != 1)
        throw NotAdmissible("admissible level needs coprime q >= 2, p >= 1");
    if (r < 0 || r > q - 2 || s < 0 || s > p - 1)
        throw IndexOutOfRange("admissible index (r,s) out of range");
    long long bp = p * (r + 1) - q * s;
    long long bm = -p * (r + 1) - q * s;
    long long a = p * q;
    Rat pref = Rat(1, 2) - Rat(3 * p, 4 * q);
    Rat cb = cutoff - pref + Rat(2);
    // Both signs collapse to the same one-variable series: the lowest-weight
    // module mirrors w -> w^{-1} before the substitution flips it back.
    Rat asub(-1, 2);
    FracSeries num = thetaSub(bp, 2 * a, Rat(1, p), asub, Rat(3), cb) -
                     thetaSub(bm, 2 * a, Rat(1, p), asub, Rat(3), cb);
    return ((num * invQQ(cb)).shifted(pref)).truncated(cutoff);
}

JacobiSeries chBoundaryAffine(long long p, long long s, bool hw, const Rat& cutoff,
                              const Rat& wdepth) {
    if (p < 1 || p % 2 == 0) throw BadParity("boundary-admissible case needs odd p");
    if (s < 0 || s > p - 1) throw IndexOutOfRange("boundary index s out of range");
    Rat qshift = Rat(1 - p, 8) + Rat(s * s, 2 * p) - Rat(1, 8);
    Rat wshift = Rat(1) - Rat(2 * s, p);
    Rat cb = cutoff - qshift;
    Rat depth = autoDepth(cb, wdepth);
    // numerator real part of theta11(w^{-2} q^s, q^p)
    JacobiSeries num = theta11General(Rat(-2), Rat(s), Rat(p), cb);
    // 1 / real part of theta11(w^{-2}, q) = w q^{-1/8} / ((q;q)(w^{-2}q;q)(w^2;q))
    JacobiSeries deninv = JacobiSeries::fromFrac(invQQ(cb));
    deninv = deninv * jsPochInverse(Rat(-2), Rat(1), 0, Rat(1), cb);
    deninv = deninv * jsGeom(Rat(2), Rat(0), WDir::BoundedAbove, cb, depth);
    deninv = deninv * jsPochInverse(Rat(2), Rat(1), 0, Rat(1), cb);
    JacobiSeries res = (num * deninv).monomialMul(wshift, qshift);
    return hw ? res : res.mirrorW();
}

FracSeries chBoundaryAffineSub(long long p, long long s, int sign, const Rat& cutoff) {
    checkSign(sign);
    if (p < 1 || p % 2 == 0) throw BadParity("boundary-admissible case needs odd p");
    if (s < 0 || s > p - 1) throw IndexOutOfRange("boundary index s out of range");
    Rat pref = Rat(3 * (1 - p), 8) + Rat(s, p) + Rat(3 * s * s, 2 * p);
    // Margin covers the numerator's negative-exponent tip -(3s+1)^2/(6p).
    Rat cb = cutoff - pref + Rat((3 * s + 1) * (3 * s + 1), 6 * p) + Rat(2);
    FracSeries num = theta11Sub(Rat(3 * s + 1), Rat(3 * p), cb);
    FracSeries den = theta11Sub(Rat(1), Rat(3), cb);
    return ((num * den.inverse()).shifted(pref)).truncated(cutoff);
}

FracSeries chVirVerma(const Rat& h, const Rat& cutoff) {
    if (cutoff <= h) return FracSeries::zero(cutoff);
    return invQQ(cutoff - h).shifted(h);
}

FracSeries chMinimal(long long q, long long p, long long r, long long s, const Rat& cutoff) {
    if (q < 2 || p < 2) throw IndexOutOfRange("minimal model needs q, p >= 2");
    Rat h = hWeight(q, p, r, s);
    if (cutoff <= h) return FracSeries::zero(cutoff);
    // Margin covers the theta sums' negative-exponent tips -(qs-pr)^2/(4pq).
    Rat cb = cutoff - h + Rat((p - q) * (p - q), 4 * p * q) + Rat(1);
    Rat A(p * q);
    FracSeries num = quadSum(A, Rat(q * s - p * r), [](const BigInt&) { return Rat(1); }, cb) -
                     quadSum(A, -Rat(q * s + p * r), [](const BigInt&) { return Rat(1); }, cb)
                         .shifted(Rat(r * s))
                         .truncated(cb);
    return ((num * invQQ(cb)).shifted(h)).truncated(cutoff);
}

FracSeries chLog(long long p, long long r, long long s, const Rat& cutoff) {
    Rat h = hWeight(1, p, r, s);
    if (cutoff <= h) return FracSeries::zero(cutoff);
    Rat cb = cutoff - h + Rat(1);
    FracSeries num = FracSeries::one(cb);
    num.addTerm(Rat(r * s), Rat(-1));
    return ((num * invQQ(cb)).shifted(h)).truncated(cutoff);
}

FracSeries chBoundaryVir(long long p, long long s, const Rat& cutoff) {
    if (p < 3 || p % 2 == 0) throw BadParity("boundary Virasoro case needs odd p >= 3");
    if (s < 1 || s > p - 1) throw IndexOutOfRange("boundary index s out of range");
    Rat pref = ccMinimal(2, p) / Rat(24) + Rat(s * s, 2 * p);
    // Margin covers the numerator's negative-exponent tip -s^2/(2p).
    Rat cb = cutoff - pref + Rat(s * s, 2 * p) + Rat(1);
    FracSeries num = theta11Sub(Rat(s), Rat(p), cb);
    return ((num * eta(cb).inverse()).shifted(pref) * Rat(-1)).truncated(cutoff);
}

FracSeries chFermionHalf(Variant v, const Rat& cutoff) {
    Rat c(variantCoef(v));
    FracSeries prod = FracSeries::one(cutoff);
    for (long long i = 1; Rat(2 * i - 1, 2) < cutoff; ++i) {
        FracSeries f = FracSeries::one(cutoff);
        f.addTerm(Rat(2 * i - 1, 2), c);
        prod = prod * f;
    }
    return prod;
}

JacobiSeries chFermionThreeHalf(Variant v, const Rat& cutoff) {
    Rat c(variantCoef(v));
    JacobiSeries res = jsPochProduct(Rat(2), Rat(1, 2), 0, Rat(1), cutoff, c);
    res = res * jsPochProduct(Rat(-2), Rat(1, 2), 0, Rat(1), cutoff, c);
    res = res * JacobiSeries::fromFrac(chFermionHalf(v, cutoff));
    return res;
}

Rat directSumLowestExponent(long long p, long long r) {
    return Rat(3 * p * r * (r + 2), 4) - Rat(r, 2);
}

long long directSumRMaxNeeded(long long p, const Rat& cutoff) {
    if (p < 1) throw IndexOutOfRange("direct sum needs p >= 1");
    // L(r) is strictly increasing in r >= 0, so the first r with L(r) >= cutoff
    // certifies every later summand.
    long long r = 0;
    while (directSumLowestExponent(p, r) < cutoff) ++r;
    return r == 0 ? 0 : r - 1;
}

namespace {
void checkRMax(long long p, long long rMax, const Rat& cutoff) {
    long long need = directSumRMaxNeeded(p, cutoff);
    if (rMax < need)
        throw RMaxTooSmall("direct-sum truncation too small: need r_max >= " +
                           std::to_string(need));
}
} // namespace

FracSeries chVpSum(long long p, int sign, Variant v, long long rMax, const Rat& cutoff) {
    checkSign(sign);
    checkRMax(p, rMax, cutoff);
    Rat k = Rat(-2) + Rat(1, p);
    FracSeries sum = FracSeries::zero(cutoff);
    for (long long r = 0; r <= rMax; ++r) {
        Rat coef(r + 1);
        if (v == Variant::SuperChar && r % 2 != 0) coef = -coef;
        sum = sum + chWeylSub(k, r, sign, cutoff) * coef;
    }
    return sum;
}

FracSeries chA3pSum(long long p, long long rMax, Variant v, const Rat& cutoff) {
    checkRMax(p, rMax, cutoff);
    FracSeries sum = FracSeries::zero(cutoff);
    for (long long r = 0; r <= rMax; ++r) {
        Rat coef(r + 1);
        if (v == Variant::SuperChar && r % 2 != 0) coef = -coef;
        sum = sum + chLog(3 * p, r + 1, 1, cutoff) * coef;
    }
    return sum;
}

FracSeries chV2Closed(Variant v, int sign, const Rat& cutoff) {
    checkSign(sign);
    Rat shift = Rat(sign, 2) - Rat(3, 2); // -(q^{-sign/2+3/8} exponent) - 9/8
    Rat cb = cutoff - shift + Rat(3);
    bool super = v == Variant::SuperChar;
    FracSeries num = quadSum(Rat(3, 2), Rat(-sign, 2),
                             [&](const BigInt& n) {
                                 Rat c(n);
                                 if (super && n % 2 != 0) c = -c;
                                 if (super) c = -c;
                                 return c;
                             },
                             cb);
    FracSeries den = pochExpandFs(Rat(3), 0, Rat(3), cb) *
                     pochExpandFs(Rat(3 - sign), 0, Rat(3), cb) *
                     pochExpandFs(Rat(sign), 0, Rat(3), cb);
    return ((num * den.inverse()).shifted(shift)).truncated(cutoff);
}

FracSeries chA6Closed(Variant v, const Rat& cutoff) {
    Rat cb = cutoff + Rat(1);
    FracSeries num(cb);
    for (long long n = 0; Rat(3 * n * n + 5 * n, 2) < cb; ++n) {
        Rat coef(n + 1);
        if (v == Variant::SuperChar && n % 2 != 0) coef = -coef;
        Rat e(3 * n * n + 5 * n, 2);
        num.addTerm(e, coef);
        num.addTerm(e + Rat(n + 1), -coef);
    }
    return ((num * invQQ(cb))).truncated(cutoff);
}

} // namespace voachar
