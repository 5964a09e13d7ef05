#pragma once

// Jacobi theta blocks in sum and product form, plus pre-substituted
// one-variable variants.
//
// theta11-family results carry ImaginaryFlag: the returned series S is real
// with theta11 = i*S; every consumer pairs or divides two theta11's so the i
// cancels and coefficients stay rational.

#include "voachar/jacobi_series.hpp"

namespace voachar {

enum class ThetaKind { T00, T01, T11, GEN };

struct ThetaSpec {
    ThetaKind kind = ThetaKind::T00;
    long long n = 0;         // GEN only: coset index of theta_{n,m}
    long long m = 1;         // GEN only: positive modulus
    Rat wRescale = Rat(1);   // evaluate at w^{wRescale}
};

struct ThetaSeries {
    JacobiSeries series;
    bool imaginaryUnitFactored = false; // true iff the true value is i * series
};

// Direct summation:
//   T00: sum_n w^n q^{n^2/2};  T01: sum_n (-1)^n w^n q^{n^2/2};
//   T11: i * sum_n (-1)^n w^{n+1/2} q^{(n+1/2)^2/2};
//   GEN theta_{n,m}: sum_{j in n/m + Z} q^{m j^2/2} w^{m j}.
// Exact affine w-support bounds in both directions are attached.
ThetaSeries thetaSum(const ThetaSpec& spec, const Rat& cutoff);

// Triple-product forms:
//   T00 = (q;q)(-wq^{1/2};q)(-w^{-1}q^{1/2};q)
//   T01 = (q;q)(wq^{1/2};q)(w^{-1}q^{1/2};q)
//   T11 = i w^{1/2} q^{1/8} (q;q)(wq;q)(w^{-1};q)
ThetaSeries thetaProd(const ThetaSpec& spec, const Rat& cutoff);

// theta_{n,m}(w^{wresc}, q) evaluated at (w, q) = (q^a, q^b), b > 0:
//   sum_{j in n/m + Z} q^{b m j^2/2 + a wresc m j}, exact and truncated.
FracSeries thetaSub(long long n, long long m, const Rat& wresc, const Rat& a, const Rat& b,
                    const Rat& cutoff);

// Real part S of theta11(q^{xExp}, q^{qScale}) = i*S, qScale > 0:
//   S = sum_n (-1)^n q^{xExp (n+1/2) + qScale (n+1/2)^2/2}.
FracSeries theta11Sub(const Rat& xExp, const Rat& qScale, const Rat& cutoff);

// Real part S of theta11(w^{aw} q^{aq}, q^{qScale}) = i*S, two variables:
//   S = sum_n (-1)^n w^{aw (n+1/2)} q^{aq (n+1/2) + qScale (n+1/2)^2/2}.
JacobiSeries theta11General(const Rat& aw, const Rat& aq, const Rat& qScale, const Rat& cutoff);

// Dedekind eta: q^{1/24} (q;q)_infty.
FracSeries eta(const Rat& cutoff);

// (q^{beta}; q^{step})-style one-variable Pochhammer helper re-exported for
// character constructors: prod_{n>=0} (1 - q^{beta + n*step}).
FracSeries pochFs(const Rat& beta, const Rat& step, const Rat& cutoff);

} // namespace voachar
