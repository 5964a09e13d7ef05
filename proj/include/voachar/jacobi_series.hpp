#pragma once

// JacobiSeries: truncated two-variable series in (w, q) holding a Laurent
// polynomial in w at every q-grade, with explicit soundness metadata:
//
//  * wdir:   FINITE          — every q-grade has finitely many w-terms;
//            BOUNDED_ABOVE   — w-exponents bounded above, tails extend downward;
//            BOUNDED_BELOW   — the mirror image.
//  * affine support bounds:  optional certificates "f <= f0 + slope*n" (upper)
//    and/or "f >= f0 + slope*n" (lower) valid for every conceptual term of the
//    series, including terms beyond the q-cutoff.
//  * exactness floors/ceilings: per-q-grade scaled w-exponents; for
//    BOUNDED_ABOVE, coefficients strictly below the floor are unknown (a
//    truncated infinite tail), never assumed zero. Mirrored for BOUNDED_BELOW.
//  * minGrade: a lower bound on every conceptual q-exponent.
//
// Multiplication propagates floors using the other factor's support data, and
// substitute() refuses (UnsafeSubstitution) unless the metadata certifies that
// every reported coefficient of the substituted one-variable series received
// all of its contributions.

#include "voachar/frac_series.hpp"

#include <map>
#include <optional>

namespace voachar {

enum class WDir { Finite, BoundedAbove, BoundedBelow };

struct AffineBound {
    Rat f0;
    Rat slope;
    Rat at(const Rat& n) const { return f0 + slope * n; }
};

struct JsMismatch {
    Rat qExp;
    Rat wExp;
    Rat lhs;
    Rat rhs;
};

class JacobiSeries {
public:
    using WPoly = std::map<long long, Rat>; // scaled w-exponent -> coefficient

    JacobiSeries(Rat cutoff, WDir dir);

    static JacobiSeries one(const Rat& cutoff);
    // Embeds a one-variable series at w-degree 0 (FINITE, exact bounds 0).
    static JacobiSeries fromFrac(const FracSeries& f);

    long long qden() const { return qden_; }
    long long wden() const { return wden_; }
    const Rat& cutoff() const { return cutoff_; }
    WDir wdir() const { return wdir_; }
    const std::map<long long, WPoly>& grades() const { return grades_; }
    const std::optional<AffineBound>& upperBound() const { return upper_; }
    const std::optional<AffineBound>& lowerBound() const { return lower_; }
    const Rat& minGrade() const { return minGrade_; }

    void setUpperBound(AffineBound b) { upper_ = std::move(b); }
    void setLowerBound(AffineBound b) { lower_ = std::move(b); }
    void clearUpperBound() { upper_.reset(); }
    void clearLowerBound() { lower_.reset(); }
    void setMinGrade(Rat g) { minGrade_ = std::move(g); }
    // Marks everything strictly below (above) wExp at qExp as unknown.
    void setLimit(const Rat& qExp, const Rat& wExp);

    void addTerm(const Rat& qExp, const Rat& wExp, const Rat& coef);
    Rat coeff(const Rat& qExp, const Rat& wExp) const;
    // Whether the coefficient at (qExp, wExp) is certified exact.
    bool isKnown(const Rat& qExp, const Rat& wExp) const;

    JacobiSeries operator-() const;
    friend JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b);
    friend JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b);
    friend JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b);
    JacobiSeries operator*(const Rat& scalar) const;

    // Multiply by the monomial w^{wShift} q^{qShift}.
    JacobiSeries monomialMul(const Rat& wShift, const Rat& qShift) const;
    // w -> w^{-1}: flips direction, bounds and limits.
    JacobiSeries mirrorW() const;

    // (w, q) -> (q^{wExp}, q^{qExp}) with qExp > 0. The result's cutoff is the
    // largest exponent bound certified by the window metadata; throws
    // UnsafeSubstitution when the direction/bounds cannot certify finiteness.
    FracSeries substitute(const Rat& wExp, const Rat& qExp) const;

    // First differing coefficient on the region where both sides are known,
    // at q-exponents < min(limit, both cutoffs). Ordered by (q-exp, w-exp).
    static std::optional<JsMismatch> firstMismatch(const JacobiSeries& a, const JacobiSeries& b,
                                                   const Rat& limit);

private:
    JacobiSeries rescaled(long long newQden, long long newWden) const;
    void ensureLattice(const Rat& qExp, const Rat& wExp);
    // Conceptual supremum of nonzero w-exponents at a stored grade (scaled),
    // as an unscaled Rat; nullopt when the grade is certified zero.
    std::optional<Rat> supW(long long scaledGrade) const;
    std::optional<Rat> infW(long long scaledGrade) const;

    long long qden_ = 1;
    long long wden_ = 1;
    Rat cutoff_;
    WDir wdir_;
    Rat minGrade_;
    std::map<long long, WPoly> grades_;
    // BoundedAbove: floors (unknown strictly below); BoundedBelow: ceilings.
    std::map<long long, long long> limits_;
    std::optional<AffineBound> upper_;
    std::optional<AffineBound> lower_;
};

// Geometric expansion of 1/(1 - w^{alphaW} q^{betaQ}).
//  * betaQ > 0: FINITE, exact affine support f = (alphaW/betaQ) n.
//  * betaQ = 0: infinite pure-w tail; `dir` picks the expansion direction and
//    `wdepth` how far the tail is materialized (|f| <= wdepth kept, exactness
//    limit recorded). E.g. 1/(1-w^{-2}) BOUNDED_ABOVE = sum_{m>=0} w^{-2m} and
//    1/(1-w^{2})  BOUNDED_ABOVE = -sum_{m>=1} w^{-2m}.
JacobiSeries jsGeom(const Rat& alphaW, const Rat& betaQ, WDir dir, const Rat& cutoff,
                    const Rat& wdepth = Rat(0));

// prod_{n >= start} (1 + coef * w^{alphaW} q^{betaQ + n*stepQ}), two-variable,
// FINITE; coef = -1 gives the plain Pochhammer product. stepQ > 0; factors with
// nonpositive q-exponents are allowed as long as only finitely many lie below
// the cutoff.
JacobiSeries jsPochProduct(const Rat& alphaW, const Rat& betaQ, long long start, const Rat& stepQ,
                           const Rat& cutoff, const Rat& coef = Rat(-1));

// prod_{n >= start} 1/(1 - w^{alphaW} q^{betaQ + n*stepQ}); requires every
// factor's q-exponent to be positive (zero-exponent factors must be handled by
// the caller via jsGeom with an explicit direction).
JacobiSeries jsPochInverse(const Rat& alphaW, const Rat& betaQ, long long start, const Rat& stepQ,
                           const Rat& cutoff);

} // namespace voachar
