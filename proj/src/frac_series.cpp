#include "voachar/frac_series.hpp"

#include <numeric>
#include <sstream>

namespace voachar {

namespace {

long long lcmLL(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

} // namespace

FracSeries::FracSeries(Rat cutoff, long long qden) : qden_(qden), cutoff_(std::move(cutoff)) {}

FracSeries FracSeries::one(const Rat& cutoff) {
    return monomial(Rat(0), Rat(1), cutoff);
}

FracSeries FracSeries::monomial(const Rat& exponent, const Rat& coefficient, const Rat& cutoff) {
    FracSeries s(cutoff);
    s.addTerm(exponent, coefficient);
    return s;
}

void FracSeries::addTerm(const Rat& exponent, const Rat& coefficient) {
    if (coefficient.isZero() || exponent >= cutoff_) return;
    long long eden = toLong(exponent.den());
    if (qden_ % eden != 0) {
        long long newDen = lcmLL(qden_, eden);
        long long factor = newDen / qden_;
        if (factor != 1) {
            std::map<long long, Rat> rescaled;
            for (const auto& [e, c] : terms_) rescaled.emplace(e * factor, c);
            terms_ = std::move(rescaled);
            qden_ = newDen;
        }
    }
    long long scaled = toLong(exponent.num()) * (qden_ / eden);
    auto it = terms_.find(scaled);
    if (it == terms_.end()) {
        terms_.emplace(scaled, coefficient);
    } else {
        it->second += coefficient;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Rat FracSeries::coeff(const Rat& exponent) const {
    Rat scaled = exponent * Rat(qden_);
    if (!scaled.isInteger()) return Rat(0);
    auto it = terms_.find(toLong(scaled.num()));
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Rat> FracSeries::lowestExponent() const {
    if (terms_.empty()) return std::nullopt;
    return Rat(terms_.begin()->first, qden_);
}

FracSeries FracSeries::rescaledExponents(const Rat& factor) const {
    if (factor.sign() <= 0) throw SeriesError("rescaledExponents: factor must be positive");
    FracSeries out(cutoff_ * factor);
    for (const auto& [e, c] : terms_) out.addTerm(Rat(e, qden_) * factor, c);
    out.normalizeLattice();
    return out;
}

FracSeries FracSeries::shifted(const Rat& shift) const {
    FracSeries out(cutoff_ + shift);
    for (const auto& [e, c] : terms_) out.addTerm(Rat(e, qden_) + shift, c);
    out.normalizeLattice();
    return out;
}

FracSeries FracSeries::truncated(const Rat& newCutoff) const {
    if (newCutoff > cutoff_)
        throw SeriesError("truncated: cannot raise the cutoff above the known range");
    FracSeries out(newCutoff, qden_);
    for (const auto& [e, c] : terms_) {
        if (Rat(e, qden_) < newCutoff)
            out.terms_.emplace(e, c);
        else
            break;
    }
    out.normalizeLattice();
    return out;
}

FracSeries FracSeries::operator-() const {
    FracSeries out(cutoff_, qden_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

FracSeries operator+(const FracSeries& a, const FracSeries& b) {
    Rat cutoff = std::min(a.cutoff_, b.cutoff_);
    long long den = lcmLL(a.qden_, b.qden_);
    FracSeries out(cutoff, den);
    long long fa = den / a.qden_, fb = den / b.qden_;
    for (const auto& [e, c] : a.terms_) out.addTerm(Rat(e * fa, den), c);
    for (const auto& [e, c] : b.terms_) out.addTerm(Rat(e * fb, den), c);
    out.normalizeLattice();
    return out;
}

FracSeries operator-(const FracSeries& a, const FracSeries& b) {
    return a + (-b);
}

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
    // The unknown tail of a (exponents >= cutoff_a) meets b no lower than
    // cutoff_a + min(b), so the product is exact strictly below
    // min(cutoff_a + min(b), cutoff_b + min(a)).
    Rat lowA = a.terms_.empty() ? a.cutoff_ : Rat(a.terms_.begin()->first, a.qden_);
    Rat lowB = b.terms_.empty() ? b.cutoff_ : Rat(b.terms_.begin()->first, b.qden_);
    Rat cutoff = std::min(a.cutoff_ + lowB, b.cutoff_ + lowA);
    long long den = lcmLL(a.qden_, b.qden_);
    FracSeries out(cutoff, den);
    long long fa = den / a.qden_, fb = den / b.qden_;
    Rat scaledCut = cutoff * Rat(den);
    for (const auto& [ea, ca] : a.terms_) {
        long long base = ea * fa;
        for (const auto& [eb, cb] : b.terms_) {
            long long e = base + eb * fb;
            if (Rat(e) >= scaledCut) break; // b.terms_ ascends, later terms only larger
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.isZero()) out.terms_.erase(it);
            }
        }
    }
    out.normalizeLattice();
    return out;
}

FracSeries FracSeries::operator*(const Rat& scalar) const {
    if (scalar.isZero()) return FracSeries(cutoff_);
    FracSeries out(cutoff_, qden_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

FracSeries FracSeries::inverse() const {
    if (terms_.empty())
        throw ZeroLeadingTerm("inverse: series has no terms below its cutoff");
    long long e0 = terms_.begin()->first;
    Rat c0 = terms_.begin()->second;
    Rat e0r(e0, qden_);

    // u = a * q^{-e0} / c0 - 1, supported on (0, cutoff - e0).
    Rat unitCut = cutoff_ - e0r;
    std::map<long long, Rat> u;
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        u.emplace(it->first - e0, it->second / c0);

    // v = 1 / (1 + u) by the triangular recursion v[t] = -sum_{s<=t} u[s] v[t-s].
    Rat scaledCut = unitCut * Rat(qden_);
    std::map<long long, Rat> v;
    v.emplace(0, Rat(1));
    // Only exponents reachable as sums of u-support can be nonzero; iterate a
    // worklist in ascending order instead of scanning the whole lattice.
    for (auto vt = v.begin(); vt != v.end(); ++vt) {
        for (const auto& [s, us] : u) {
            long long t = vt->first + s;
            if (Rat(t) >= scaledCut) break;
            Rat contrib = -(us * vt->second);
            auto it = v.find(t);
            if (it == v.end()) {
                v.emplace(t, contrib);
            } else {
                it->second += contrib;
                if (it->second.isZero()) v.erase(it);
            }
        }
    }

    FracSeries out(unitCut - e0r, qden_);
    Rat invC0 = Rat(1) / c0;
    for (const auto& [t, c] : v) out.addTerm(Rat(t - e0, qden_), c * invC0);
    out.normalizeLattice();
    return out;
}

std::optional<FracSeries::Mismatch> FracSeries::firstMismatch(const FracSeries& a,
                                                              const FracSeries& b,
                                                              const Rat& limit) {
    Rat bound = std::min(limit, std::min(a.cutoff_, b.cutoff_));
    long long den = lcmLL(a.qden_, b.qden_);
    long long fa = den / a.qden_, fb = den / b.qden_;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    Rat scaledBound = bound * Rat(den);
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        long long ea = ia != a.terms_.end() ? ia->first * fa : 0;
        long long eb = ib != b.terms_.end() ? ib->first * fb : 0;
        bool hasA = ia != a.terms_.end();
        bool hasB = ib != b.terms_.end();
        long long e;
        Rat va(0), vb(0);
        if (hasA && (!hasB || ea <= eb)) {
            e = ea;
            va = ia->second;
            if (hasB && eb == ea) vb = ib->second;
        } else {
            e = eb;
            vb = ib->second;
        }
        if (Rat(e) >= scaledBound) return std::nullopt;
        if (va != vb) return Mismatch{Rat(e, den), va, vb};
        if (hasA && ea == e) ++ia;
        if (hasB && ib != b.terms_.end() && ib->first * fb == e) ++ib;
    }
    return std::nullopt;
}

FracSeries FracSeries::withQden(long long newDen) const {
    long long den = lcmLL(qden_, newDen);
    FracSeries out(cutoff_, den);
    long long f = den / qden_;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * f, c);
    return out;
}

std::string FracSeries::str(std::size_t maxTerms) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& [e, c] : terms_) {
        if (shown == maxTerms) {
            os << " + ...";
            break;
        }
        if (shown > 0) os << " + ";
        os << "(" << c.str() << ")q^(" << Rat(e, qden_).str() << ")";
        ++shown;
    }
    return os.str();
}

void FracSeries::normalizeLattice() {
    if (terms_.empty()) {
        qden_ = 1;
        return;
    }
    long long g = qden_;
    for (const auto& [e, c] : terms_) {
        g = std::gcd(g, e < 0 ? -e : e);
        if (g == 1) return;
    }
    if (g > 1) {
        std::map<long long, Rat> shrunk;
        for (const auto& [e, c] : terms_) shrunk.emplace(e / g, c);
        terms_ = std::move(shrunk);
        qden_ /= g;
    }
}

FracSeries pochExpandFs(const Rat& beta, long long start, const Rat& step, const Rat& cutoff) {
    if (step.sign() <= 0)
        throw NonTerminating("pochExpandFs: step must be positive so only finitely many "
                             "factors lie below the cutoff");
    FracSeries acc = FracSeries::one(cutoff);
    for (long long n = start;; ++n) {
        Rat e = beta + Rat(n) * step;
        if (e >= cutoff) break;
        FracSeries factor = FracSeries::one(cutoff);
        factor.addTerm(e, Rat(-1));
        acc = acc * factor;
    }
    return acc;
}

} // namespace voachar
