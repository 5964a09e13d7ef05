#include "voachar/theta.hpp"

#include <functional>

namespace voachar {

namespace {

// Quadratic grade function g(t) = B t + C t^2/2 with C > 0, over the coset
// t in nu + Z. Terms of a theta sum live at (grade g(t), w-exponent A t).

Rat gradeAt(const Rat& B, const Rat& C, const Rat& t) {
    return B * t + C * t * t / Rat(2);
}

// Visits every coset point with g(t) < cutoff; fn(k, t, g) where t = nu + k.
void forEachCosetTerm(const Rat& nu, const Rat& B, const Rat& C, const Rat& cutoff,
                      const std::function<void(const BigInt&, const Rat&, const Rat&)>& fn) {
    Rat vertex = -B / C;
    BigInt k0 = (vertex - nu).floor();
    for (BigInt k = k0;; --k) {
        Rat t = nu + Rat(k);
        Rat g = gradeAt(B, C, t);
        if (g >= cutoff) break;
        fn(k, t, g);
    }
    for (BigInt k = k0 + 1;; ++k) {
        Rat t = nu + Rat(k);
        Rat g = gradeAt(B, C, t);
        if (g >= cutoff) break;
        fn(k, t, g);
    }
}

// Exact affine support bound f <= f0 + sigma*g over all coset terms, with
// sigma = |A|/C: f(t) - sigma*g(t) is a downward parabola, so its maximum over
// the coset sits at one of the two points flanking the vertex.
AffineBound quadUpperBound(const Rat& nu, const Rat& A, const Rat& B, const Rat& C) {
    if (A.isZero()) return {Rat(0), Rat(0)};
    Rat sigma = (A.sign() > 0 ? A : -A) / C;
    auto h = [&](const Rat& t) { return A * t - sigma * gradeAt(B, C, t); };
    Rat vertex = (A - sigma * B) / (sigma * C);
    BigInt k0 = (vertex - nu).floor();
    Rat f0 = std::max(h(nu + Rat(k0)), h(nu + Rat(k0 + 1)));
    return {f0, sigma};
}

AffineBound quadLowerBound(const Rat& nu, const Rat& A, const Rat& B, const Rat& C) {
    if (A.isZero()) return {Rat(0), Rat(0)};
    Rat sigma = -(A.sign() > 0 ? A : -A) / C;
    auto h = [&](const Rat& t) { return A * t - sigma * gradeAt(B, C, t); };
    Rat vertex = (A - sigma * B) / (sigma * C); // upward parabola: minimum
    BigInt k0 = (vertex - nu).floor();
    Rat f0 = std::min(h(nu + Rat(k0)), h(nu + Rat(k0 + 1)));
    return {f0, sigma};
}

Rat quadMinGrade(const Rat& nu, const Rat& B, const Rat& C) {
    Rat vertex = -B / C;
    BigInt k0 = (vertex - nu).floor();
    return std::min(gradeAt(B, C, nu + Rat(k0)), gradeAt(B, C, nu + Rat(k0 + 1)));
}

// Assembles a theta-type sum with signs: coefficient sign (-1)^k when
// alternating (k the coset walk index relative to nu).
JacobiSeries quadThetaSum(const Rat& nu, const Rat& A, const Rat& B, const Rat& C,
                          bool alternating, const Rat& cutoff) {
    JacobiSeries out(cutoff, WDir::Finite);
    out.setUpperBound(quadUpperBound(nu, A, B, C));
    out.setLowerBound(quadLowerBound(nu, A, B, C));
    out.setMinGrade(quadMinGrade(nu, B, C));
    forEachCosetTerm(nu, B, C, cutoff, [&](const BigInt& k, const Rat& t, const Rat& g) {
        Rat coef(1);
        if (alternating && k % 2 != 0) coef = Rat(-1);
        out.addTerm(g, A * t, coef);
    });
    return out;
}

} // namespace

ThetaSeries thetaSum(const ThetaSpec& spec, const Rat& cutoff) {
    const Rat& resc = spec.wRescale;
    switch (spec.kind) {
    case ThetaKind::T00:
        // sum_n w^n q^{n^2/2}
        return {quadThetaSum(Rat(0), resc, Rat(0), Rat(1), false, cutoff), false};
    case ThetaKind::T01:
        // sum_n (-1)^n w^n q^{n^2/2}
        return {quadThetaSum(Rat(0), resc, Rat(0), Rat(1), true, cutoff), false};
    case ThetaKind::T11:
        // i * sum_n (-1)^n w^{n+1/2} q^{(n+1/2)^2/2}; walk index k = n relative
        // to nu = 1/2, so the alternating sign is (-1)^n as required.
        return {quadThetaSum(Rat(1, 2), resc, Rat(0), Rat(1), true, cutoff), true};
    case ThetaKind::GEN: {
        // theta_{n,m}: sum_{j in n/m + Z} q^{m j^2/2} (w^{resc})^{m j}
        if (spec.m <= 0) throw SeriesError("thetaSum: GEN modulus m must be positive");
        Rat nu(spec.n, spec.m);
        return {quadThetaSum(nu, resc * Rat(spec.m), Rat(0), Rat(spec.m), false, cutoff), false};
    }
    }
    throw SeriesError("thetaSum: unknown kind");
}

ThetaSeries thetaProd(const ThetaSpec& spec, const Rat& cutoff) {
    const Rat& resc = spec.wRescale;
    JacobiSeries qq = JacobiSeries::fromFrac(pochFs(Rat(1), Rat(1), cutoff));
    switch (spec.kind) {
    case ThetaKind::T00: {
        JacobiSeries s = qq * jsPochProduct(resc, Rat(1, 2), 0, Rat(1), cutoff, Rat(1)) *
                         jsPochProduct(-resc, Rat(1, 2), 0, Rat(1), cutoff, Rat(1));
        return {s, false};
    }
    case ThetaKind::T01: {
        JacobiSeries s = qq * jsPochProduct(resc, Rat(1, 2), 0, Rat(1), cutoff) *
                         jsPochProduct(-resc, Rat(1, 2), 0, Rat(1), cutoff);
        return {s, false};
    }
    case ThetaKind::T11: {
        // i w^{1/2} q^{1/8} (q;q)(wq;q)(w^{-1};q), at w -> w^{resc}
        JacobiSeries s = qq * jsPochProduct(resc, Rat(1), 0, Rat(1), cutoff) *
                         jsPochProduct(-resc, Rat(0), 0, Rat(1), cutoff);
        return {s.monomialMul(resc / Rat(2), Rat(1, 8)), true};
    }
    case ThetaKind::GEN:
        throw SeriesError("thetaProd: no product form for general theta_{n,m}");
    }
    throw SeriesError("thetaProd: unknown kind");
}

FracSeries thetaSub(long long n, long long m, const Rat& wresc, const Rat& a, const Rat& b,
                    const Rat& cutoff) {
    if (m <= 0) throw SeriesError("thetaSub: modulus m must be positive");
    if (b.sign() <= 0) throw SeriesError("thetaSub: q-substitution exponent must be positive");
    // exponent of the j-term: b m j^2/2 + a wresc m j
    Rat B = a * wresc * Rat(m);
    Rat C = b * Rat(m);
    FracSeries out(cutoff);
    forEachCosetTerm(Rat(n, m), B, C, cutoff,
                     [&](const BigInt&, const Rat&, const Rat& g) { out.addTerm(g, Rat(1)); });
    return out;
}

FracSeries theta11Sub(const Rat& xExp, const Rat& qScale, const Rat& cutoff) {
    if (qScale.sign() <= 0) throw SeriesError("theta11Sub: q-scale must be positive");
    FracSeries out(cutoff);
    forEachCosetTerm(Rat(1, 2), xExp, qScale, cutoff,
                     [&](const BigInt& k, const Rat&, const Rat& g) {
                         out.addTerm(g, k % 2 == 0 ? Rat(1) : Rat(-1));
                     });
    return out;
}

JacobiSeries theta11General(const Rat& aw, const Rat& aq, const Rat& qScale, const Rat& cutoff) {
    if (qScale.sign() <= 0) throw SeriesError("theta11General: q-scale must be positive");
    return quadThetaSum(Rat(1, 2), aw, aq, qScale, true, cutoff);
}

FracSeries eta(const Rat& cutoff) {
    Rat shift(1, 24);
    return pochFs(Rat(1), Rat(1), cutoff - shift).shifted(shift);
}

FracSeries pochFs(const Rat& beta, const Rat& step, const Rat& cutoff) {
    return pochExpandFs(beta, 0, step, cutoff);
}

} // namespace voachar
