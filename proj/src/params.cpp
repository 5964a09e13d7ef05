#include "voachar/params.hpp"

#include <numeric>

namespace voachar {

namespace {

void checkCoprime(long long q, long long p) {
    if (q < 1 || p < 1 || std::gcd(q, p) != 1)
        throw IndexOutOfRange("q, p must be positive and coprime");
}

void checkAffineBox(long long q, long long p, long long r, long long s) {
    checkCoprime(q, p);
    if (r < 0 || (q >= 2 && r > q - 2))
        throw IndexOutOfRange("affine index r out of range");
    if (s < 0 || s > p - 1) throw IndexOutOfRange("affine index s out of range");
}

void checkVirBox(long long q, long long p, long long r, long long s) {
    checkCoprime(q, p);
    if (r < 1 || (q >= 2 && r > q - 1))
        throw IndexOutOfRange("Virasoro index r out of range");
    long long sMax = q == 1 ? p : p - 1; // logarithmic (1,p) box allows s = p
    if (s < 1 || s > sMax) throw IndexOutOfRange("Virasoro index s out of range");
}

} // namespace

Rat levelOf(long long q, long long p) {
    checkCoprime(q, p);
    return Rat(-2) + Rat(q, p);
}

Rat ccOfLevel(const Rat& k) {
    Rat t = k + Rat(2);
    if (t.isZero()) throw BadLevel("central charge undefined at the critical level k = -2");
    return Rat(13) - Rat(2) * t - Rat(18) / t;
}

Rat hOf(const Rat& k, const Rat& mu) {
    Rat t = k + Rat(2);
    if (t.isZero()) throw BadLevel("conformal weight undefined at the critical level k = -2");
    return mu * (Rat(3) * mu + Rat(2) - Rat(2) * k) / (Rat(4) * t);
}

Rat ccMinimal(long long q, long long p) {
    checkCoprime(q, p);
    return Rat(1) - Rat(6 * (p - q) * (p - q), p * q);
}

Rat ellWeight(long long q, long long p, long long r, long long s) {
    checkAffineBox(q, p, r, s);
    long long b = p * (r + 1) - q * s;
    return Rat(b * b - p * p, 4 * p * q);
}

Rat hWeight(long long q, long long p, long long r, long long s) {
    checkVirBox(q, p, r, s);
    long long a = q * s - p * r;
    return Rat(a * a - (p - q) * (p - q), 4 * p * q);
}

Rat muWeight(long long q, long long p, long long r, long long s) {
    checkAffineBox(q, p, r, s);
    return Rat(r) - Rat(q * s, p);
}

SingularWeightTable singvecTable(SvFamily family, long long q, long long p, long long r,
                                 long long s) {
    SingularWeightTable t;
    t.family = family;
    if (family == SvFamily::Vir) {
        checkVirBox(q, p, r, s);
        t.sv1 = SingularOffset{0, Rat(r * s)};
        if (q >= 2) t.sv2 = SingularOffset{0, Rat((q - r) * (p - s))};
        return t;
    }
    checkAffineBox(q, p, r, s);
    long long flip = family == SvFamily::AffLw ? -1 : 1;
    t.sv1 = SingularOffset{flip * (-2 * (r + 1)), Rat(s * (r + 1))};
    if (q >= 2) t.sv2 = SingularOffset{flip * (2 * (q - r - 1)), Rat((p - s) * (q - r - 1))};
    return t;
}

std::pair<Rat, std::optional<Rat>> phiImageOffsets(long long q, long long p, long long r,
                                                   long long s, int sign) {
    if (sign != 1 && sign != -1) throw IndexOutOfRange("sign must be +1 or -1");
    SvFamily fam = sign > 0 ? SvFamily::AffHw : SvFamily::AffLw;
    SingularWeightTable t = singvecTable(fam, q, p, r, s);
    auto image = [&](const SingularOffset& o) {
        // n' = -(sign) f/2 + 3n
        return Rat(-sign * o.df, 2) + Rat(3) * o.dn;
    };
    Rat img1 = image(*t.sv1);
    std::optional<Rat> img2;
    if (t.sv2) img2 = image(*t.sv2);
    return {img1, img2};
}

IndexMapResult indexMap(long long q, long long p, long long r, long long s) {
    checkAffineBox(q, p, r, s);
    if (q % 3 == 0) throw DivisibleByThree("index map undefined when 3 divides q");
    return {q, 3 * p, r + 1, 3 * s + 1};
}

BigInt conductorMinimal(long long q, long long p) {
    if (q < 2 || p < 2) throw IndexOutOfRange("conductor needs the rational case q, p >= 2");
    checkCoprime(q, p);
    Rat c24 = ccMinimal(q, p) / Rat(24);
    BigInt n(1);
    for (long long r = 1; r <= q - 1; ++r)
        for (long long s = 1; s <= p - 1; ++s) {
            Rat v = hWeight(q, p, r, s) - c24;
            n = boost::multiprecision::lcm(n, v.den());
        }
    return n;
}

Rat cEff(long long q) {
    if (q < 2 || q % 3 == 0) throw IndexOutOfRange("effective central charge needs q >= 2, 3 not dividing q");
    return Rat(3 * (q - 2), q);
}

Rat ribbonDiff(long long q, long long r) {
    if (q < 2 || r < 0 || r > q - 2) throw IndexOutOfRange("ribbon difference index out of range");
    return Rat((2 - q + r) * r, 2 * q);
}

} // namespace voachar
