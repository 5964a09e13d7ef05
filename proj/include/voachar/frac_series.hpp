#pragma once

// FracSeries: truncated formal series in one variable q with exponents in (1/D)Z
// and exact rational coefficients.
//
// Exponents are stored as integers over a per-series denominator D ("qden");
// binary operations unify lattices via lcm. Every series carries an exclusive
// exponent cutoff: coefficients at exponents < cutoff are exact, everything at
// or above the cutoff is unknown (never assumed zero). Binary operations
// propagate the cutoff conservatively so unknown tails can never leak into
// "known" coefficients.

#include "voachar/errors.hpp"
#include "voachar/rat.hpp"

#include <map>
#include <optional>
#include <string>

namespace voachar {

class FracSeries {
public:
    struct Mismatch {
        Rat exponent;
        Rat lhs;
        Rat rhs;
    };

    explicit FracSeries(Rat cutoff, long long qden = 1);

    static FracSeries zero(const Rat& cutoff) { return FracSeries(cutoff); }
    static FracSeries one(const Rat& cutoff);
    static FracSeries monomial(const Rat& exponent, const Rat& coefficient, const Rat& cutoff);

    long long qden() const { return qden_; }
    const Rat& cutoff() const { return cutoff_; }
    const std::map<long long, Rat>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    // Accumulates coefficient at the given exponent; silently drops exponents >= cutoff.
    void addTerm(const Rat& exponent, const Rat& coefficient);

    Rat coeff(const Rat& exponent) const;
    std::optional<Rat> lowestExponent() const;
    Rat exponentAt(long long scaled) const { return Rat(scaled, qden_); }

    // q -> q^factor (exponent rescaling); factor > 0. Cutoff scales too.
    FracSeries rescaledExponents(const Rat& factor) const;
    // Multiply by the monomial q^shift.
    FracSeries shifted(const Rat& shift) const;
    // Restrict to a smaller cutoff.
    FracSeries truncated(const Rat& newCutoff) const;

    FracSeries operator-() const;
    friend FracSeries operator+(const FracSeries& a, const FracSeries& b);
    friend FracSeries operator-(const FracSeries& a, const FracSeries& b);
    friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
    FracSeries operator*(const Rat& scalar) const;

    // Multiplicative inverse. The lowest term q^{e0} is factored first, so the
    // result is exact below cutoff - 2*e0. Throws ZeroLeadingTerm when the series
    // has no terms below its cutoff.
    FracSeries inverse() const;

    // First differing coefficient of a and b at exponents < min(limit, both cutoffs);
    // nullopt when equal on that range.
    static std::optional<Mismatch> firstMismatch(const FracSeries& a, const FracSeries& b,
                                                 const Rat& limit);

    // Re-expresses the series on a coarser-or-equal lattice (newDen must be a
    // multiple of every stored exponent's denominator; lcm handling is internal).
    FracSeries withQden(long long newDen) const;

    std::string str(std::size_t maxTerms = 12) const;

private:
    void normalizeLattice(); // shrink qden to the gcd of stored exponents and cutoff lattice

    long long qden_;
    Rat cutoff_;
    std::map<long long, Rat> terms_; // scaled exponent -> nonzero coefficient
};

// q-Pochhammer product expansion:
//   prod_{n >= start} (1 - q^{beta + n*step}), truncated at cutoff.
// Requires step > 0 (so only finitely many factors have exponents below cutoff);
// leading factors with negative exponents are allowed. A factor with exponent
// exactly 0 makes the product identically zero. Throws NonTerminating when
// step <= 0 and infinitely many factors would contribute.
FracSeries pochExpandFs(const Rat& beta, long long start, const Rat& step, const Rat& cutoff);

} // namespace voachar
