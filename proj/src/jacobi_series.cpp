#include "voachar/jacobi_series.hpp"

#include <numeric>

namespace voachar {

namespace {

long long lcmLL(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

WDir combineDir(WDir a, WDir b) {
    if (a == b) return a;
    if (a == WDir::Finite) return b;
    if (b == WDir::Finite) return a;
    throw SeriesError("JacobiSeries: cannot combine BOUNDED_ABOVE with BOUNDED_BELOW");
}

// Upper bound valid for the union of two term sets (used by addition).
std::optional<AffineBound> unionUpper(const std::optional<AffineBound>& a, const Rat& minA,
                                      const std::optional<AffineBound>& b, const Rat& minB) {
    if (!a || !b) return std::nullopt;
    Rat s = std::max(a->slope, b->slope);
    Rat f0 = std::max(a->f0 + (a->slope - s) * minA, b->f0 + (b->slope - s) * minB);
    return AffineBound{f0, s};
}

std::optional<AffineBound> unionLower(const std::optional<AffineBound>& a, const Rat& minA,
                                      const std::optional<AffineBound>& b, const Rat& minB) {
    if (!a || !b) return std::nullopt;
    Rat s = std::min(a->slope, b->slope);
    Rat f0 = std::min(a->f0 + (a->slope - s) * minA, b->f0 + (b->slope - s) * minB);
    return AffineBound{f0, s};
}

// Upper bound valid for sums f_a + f_b with n = n_a + n_b (used by products).
std::optional<AffineBound> sumUpper(const std::optional<AffineBound>& a, const Rat& minA,
                                    const std::optional<AffineBound>& b, const Rat& minB) {
    if (!a || !b) return std::nullopt;
    Rat s = std::max(a->slope, b->slope);
    Rat f0 = a->f0 + b->f0 + (a->slope - s) * minA + (b->slope - s) * minB;
    return AffineBound{f0, s};
}

std::optional<AffineBound> sumLower(const std::optional<AffineBound>& a, const Rat& minA,
                                    const std::optional<AffineBound>& b, const Rat& minB) {
    if (!a || !b) return std::nullopt;
    Rat s = std::min(a->slope, b->slope);
    Rat f0 = a->f0 + b->f0 + (a->slope - s) * minA + (b->slope - s) * minB;
    return AffineBound{f0, s};
}

} // namespace

JacobiSeries::JacobiSeries(Rat cutoff, WDir dir)
    : cutoff_(std::move(cutoff)), wdir_(dir), minGrade_(0) {}

JacobiSeries JacobiSeries::one(const Rat& cutoff) {
    JacobiSeries s(cutoff, WDir::Finite);
    s.addTerm(Rat(0), Rat(0), Rat(1));
    s.setUpperBound({Rat(0), Rat(0)});
    s.setLowerBound({Rat(0), Rat(0)});
    return s;
}

JacobiSeries JacobiSeries::fromFrac(const FracSeries& f) {
    JacobiSeries s(f.cutoff(), WDir::Finite);
    for (const auto& [e, c] : f.terms()) s.addTerm(Rat(e, f.qden()), Rat(0), c);
    s.setUpperBound({Rat(0), Rat(0)});
    s.setLowerBound({Rat(0), Rat(0)});
    auto low = f.lowestExponent();
    s.setMinGrade(low ? *low : f.cutoff());
    return s;
}

void JacobiSeries::ensureLattice(const Rat& qExp, const Rat& wExp) {
    long long qd = lcmLL(qden_, toLong(qExp.den()));
    long long wd = lcmLL(wden_, toLong(wExp.den()));
    if (qd == qden_ && wd == wden_) return;
    long long fq = qd / qden_, fw = wd / wden_;
    std::map<long long, WPoly> grades;
    for (const auto& [g, poly] : grades_) {
        WPoly np;
        for (const auto& [f, c] : poly) np.emplace(f * fw, c);
        grades.emplace(g * fq, std::move(np));
    }
    grades_ = std::move(grades);
    std::map<long long, long long> limits;
    for (const auto& [g, l] : limits_) limits.emplace(g * fq, l * fw);
    limits_ = std::move(limits);
    qden_ = qd;
    wden_ = wd;
}

void JacobiSeries::setLimit(const Rat& qExp, const Rat& wExp) {
    ensureLattice(qExp, wExp);
    long long g = toLong((qExp * Rat(qden_)).num());
    long long f = toLong((wExp * Rat(wden_)).num());
    auto it = limits_.find(g);
    if (it == limits_.end()) {
        limits_.emplace(g, f);
    } else if (wdir_ == WDir::BoundedAbove) {
        it->second = std::max(it->second, f); // higher floor = larger unknown region
    } else {
        it->second = std::min(it->second, f);
    }
}

void JacobiSeries::addTerm(const Rat& qExp, const Rat& wExp, const Rat& coef) {
    if (coef.isZero() || qExp >= cutoff_) return;
    ensureLattice(qExp, wExp);
    long long g = toLong((qExp * Rat(qden_)).num());
    long long f = toLong((wExp * Rat(wden_)).num());
    WPoly& poly = grades_[g];
    auto it = poly.find(f);
    if (it == poly.end()) {
        poly.emplace(f, coef);
    } else {
        it->second += coef;
        if (it->second.isZero()) poly.erase(it);
    }
    if (poly.empty()) grades_.erase(g);
}

Rat JacobiSeries::coeff(const Rat& qExp, const Rat& wExp) const {
    Rat gs = qExp * Rat(qden_);
    Rat fs = wExp * Rat(wden_);
    if (!gs.isInteger() || !fs.isInteger()) return Rat(0);
    auto git = grades_.find(toLong(gs.num()));
    if (git == grades_.end()) return Rat(0);
    auto fit = git->second.find(toLong(fs.num()));
    return fit == git->second.end() ? Rat(0) : fit->second;
}

bool JacobiSeries::isKnown(const Rat& qExp, const Rat& wExp) const {
    if (qExp >= cutoff_) return false;
    Rat gs = qExp * Rat(qden_);
    if (!gs.isInteger()) return true; // off-lattice grades hold no terms at all
    auto it = limits_.find(toLong(gs.num()));
    if (it == limits_.end()) return true;
    Rat lim(it->second, wden_);
    return wdir_ == WDir::BoundedAbove ? wExp >= lim : wExp <= lim;
}

JacobiSeries JacobiSeries::rescaled(long long newQden, long long newWden) const {
    JacobiSeries out(cutoff_, wdir_);
    out.qden_ = newQden;
    out.wden_ = newWden;
    out.minGrade_ = minGrade_;
    out.upper_ = upper_;
    out.lower_ = lower_;
    long long fq = newQden / qden_, fw = newWden / wden_;
    for (const auto& [g, poly] : grades_) {
        WPoly np;
        for (const auto& [f, c] : poly) np.emplace(f * fw, c);
        out.grades_.emplace(g * fq, std::move(np));
    }
    for (const auto& [g, l] : limits_) out.limits_.emplace(g * fq, l * fw);
    return out;
}

JacobiSeries JacobiSeries::operator-() const {
    JacobiSeries out = *this;
    for (auto& [g, poly] : out.grades_)
        for (auto& [f, c] : poly) c = -c;
    return out;
}

JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b) {
    WDir dir = combineDir(a.wdir_, b.wdir_);
    long long qd = lcmLL(a.qden_, b.qden_);
    long long wd = lcmLL(a.wden_, b.wden_);
    JacobiSeries ra = a.rescaled(qd, wd);
    JacobiSeries rb = b.rescaled(qd, wd);

    JacobiSeries out(std::min(a.cutoff_, b.cutoff_), dir);
    out.qden_ = qd;
    out.wden_ = wd;
    out.minGrade_ = std::min(a.minGrade_, b.minGrade_);
    out.upper_ = unionUpper(a.upper_, a.minGrade_, b.upper_, b.minGrade_);
    out.lower_ = unionLower(a.lower_, a.minGrade_, b.lower_, b.minGrade_);

    Rat scaledCut = out.cutoff_ * Rat(qd);
    auto accumulate = [&](const JacobiSeries& src) {
        for (const auto& [g, poly] : src.grades_) {
            if (Rat(g) >= scaledCut) break;
            JacobiSeries::WPoly& dst = out.grades_[g];
            for (const auto& [f, c] : poly) {
                auto it = dst.find(f);
                if (it == dst.end()) {
                    dst.emplace(f, c);
                } else {
                    it->second += c;
                    if (it->second.isZero()) dst.erase(it);
                }
            }
            if (dst.empty()) out.grades_.erase(g);
        }
    };
    accumulate(ra);
    accumulate(rb);

    auto mergeLimits = [&](const JacobiSeries& src) {
        for (const auto& [g, l] : src.limits_) {
            if (Rat(g) >= scaledCut) continue;
            auto it = out.limits_.find(g);
            if (it == out.limits_.end()) {
                out.limits_.emplace(g, l);
            } else if (dir == WDir::BoundedAbove) {
                it->second = std::max(it->second, l);
            } else {
                it->second = std::min(it->second, l);
            }
        }
    };
    mergeLimits(ra);
    mergeLimits(rb);
    return out;
}

JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b) {
    return a + (-b);
}

std::optional<Rat> JacobiSeries::supW(long long scaledGrade) const {
    std::optional<Rat> best;
    auto git = grades_.find(scaledGrade);
    if (git != grades_.end() && !git->second.empty())
        best = Rat(git->second.rbegin()->first, wden_);
    auto lit = limits_.find(scaledGrade);
    if (lit != limits_.end()) {
        if (wdir_ == WDir::BoundedAbove) {
            Rat fl(lit->second, wden_);
            if (!best || fl > *best) best = fl; // unknown tail lies strictly below the floor
        } else {
            // Unknown region extends upward; only an affine bound can cap it.
            if (!upper_)
                throw SeriesError("JacobiSeries: w-support unbounded above at a truncated grade");
            best = upper_->at(Rat(scaledGrade, qden_));
        }
    }
    if (best && upper_) {
        Rat cap = upper_->at(Rat(scaledGrade, qden_));
        if (cap < *best) best = cap;
    }
    return best;
}

std::optional<Rat> JacobiSeries::infW(long long scaledGrade) const {
    std::optional<Rat> best;
    auto git = grades_.find(scaledGrade);
    if (git != grades_.end() && !git->second.empty())
        best = Rat(git->second.begin()->first, wden_);
    auto lit = limits_.find(scaledGrade);
    if (lit != limits_.end()) {
        if (wdir_ == WDir::BoundedBelow) {
            Rat cl(lit->second, wden_);
            if (!best || cl < *best) best = cl; // unknown tail lies strictly above the ceiling
        } else {
            if (!lower_)
                throw SeriesError("JacobiSeries: w-support unbounded below at a truncated grade");
            best = lower_->at(Rat(scaledGrade, qden_));
        }
    }
    if (best && lower_) {
        Rat cap = lower_->at(Rat(scaledGrade, qden_));
        if (cap > *best) best = cap;
    }
    return best;
}

JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b) {
    WDir dir = combineDir(a.wdir_, b.wdir_);
    long long qd = lcmLL(a.qden_, b.qden_);
    long long wd = lcmLL(a.wden_, b.wden_);
    JacobiSeries ra = a.rescaled(qd, wd);
    JacobiSeries rb = b.rescaled(qd, wd);

    // Unknown q-tails meet the other factor no lower than cutoff + minGrade.
    Rat cutoff = std::min(a.cutoff_ + b.minGrade_, b.cutoff_ + a.minGrade_);
    JacobiSeries out(cutoff, dir);
    out.qden_ = qd;
    out.wden_ = wd;
    out.minGrade_ = a.minGrade_ + b.minGrade_;
    out.upper_ = sumUpper(a.upper_, a.minGrade_, b.upper_, b.minGrade_);
    out.lower_ = sumLower(a.lower_, a.minGrade_, b.lower_, b.minGrade_);

    Rat scaledCut = cutoff * Rat(qd);
    for (const auto& [ga, pa] : ra.grades_) {
        for (const auto& [gb, pb] : rb.grades_) {
            long long g = ga + gb;
            if (Rat(g) >= scaledCut) break; // rb.grades_ ascends
            JacobiSeries::WPoly& dst = out.grades_[g];
            for (const auto& [f1, c1] : pa) {
                for (const auto& [f2, c2] : pb) {
                    long long f = f1 + f2;
                    auto it = dst.find(f);
                    if (it == dst.end()) {
                        dst.emplace(f, c1 * c2);
                    } else {
                        it->second += c1 * c2;
                        if (it->second.isZero()) dst.erase(it);
                    }
                }
            }
            if (dst.empty()) out.grades_.erase(g);
        }
    }

    // Exactness limits: the unknown region of one factor times the conceptual
    // support of the other.
    auto propagate = [&](const JacobiSeries& withLimits, const JacobiSeries& other) {
        std::map<long long, bool> otherGrades;
        for (const auto& [g, poly] : other.grades_) otherGrades.emplace(g, true);
        for (const auto& [g, l] : other.limits_) otherGrades.emplace(g, true);
        for (const auto& [ga, la] : withLimits.limits_) {
            for (const auto& [gb, unused] : otherGrades) {
                long long g = ga + gb;
                if (Rat(g) >= scaledCut) continue;
                Rat bound;
                if (dir == WDir::BoundedAbove) {
                    auto sup = other.supW(gb);
                    if (!sup) continue; // grade certified zero
                    bound = Rat(la, wd) + *sup;
                } else {
                    auto inf = other.infW(gb);
                    if (!inf) continue;
                    bound = Rat(la, wd) + *inf;
                }
                out.setLimit(Rat(g, qd), bound);
            }
        }
    };
    if (dir != WDir::Finite) {
        propagate(ra, rb);
        propagate(rb, ra);
    }
    return out;
}

JacobiSeries JacobiSeries::operator*(const Rat& scalar) const {
    if (scalar.isZero()) {
        JacobiSeries out(cutoff_, wdir_);
        out.minGrade_ = minGrade_;
        out.upper_ = upper_;
        out.lower_ = lower_;
        out.limits_ = limits_;
        return out;
    }
    JacobiSeries out = *this;
    for (auto& [g, poly] : out.grades_)
        for (auto& [f, c] : poly) c *= scalar;
    return out;
}

JacobiSeries JacobiSeries::monomialMul(const Rat& wShift, const Rat& qShift) const {
    JacobiSeries out(cutoff_ + qShift, wdir_);
    out.minGrade_ = minGrade_ + qShift;
    if (upper_) out.upper_ = AffineBound{upper_->f0 + wShift - upper_->slope * qShift, upper_->slope};
    if (lower_) out.lower_ = AffineBound{lower_->f0 + wShift - lower_->slope * qShift, lower_->slope};
    for (const auto& [g, poly] : grades_)
        for (const auto& [f, c] : poly)
            out.addTerm(Rat(g, qden_) + qShift, Rat(f, wden_) + wShift, c);
    for (const auto& [g, l] : limits_)
        out.setLimit(Rat(g, qden_) + qShift, Rat(l, wden_) + wShift);
    return out;
}

JacobiSeries JacobiSeries::mirrorW() const {
    WDir dir = wdir_;
    if (dir == WDir::BoundedAbove)
        dir = WDir::BoundedBelow;
    else if (dir == WDir::BoundedBelow)
        dir = WDir::BoundedAbove;
    JacobiSeries out(cutoff_, dir);
    out.qden_ = qden_;
    out.wden_ = wden_;
    out.minGrade_ = minGrade_;
    if (upper_) out.lower_ = AffineBound{-upper_->f0, -upper_->slope};
    if (lower_) out.upper_ = AffineBound{-lower_->f0, -lower_->slope};
    for (const auto& [g, poly] : grades_) {
        WPoly np;
        for (const auto& [f, c] : poly) np.emplace(-f, c);
        out.grades_.emplace(g, std::move(np));
    }
    for (const auto& [g, l] : limits_) out.limits_.emplace(g, -l);
    return out;
}

FracSeries JacobiSeries::substitute(const Rat& wExp, const Rat& qExp) const {
    if (qExp.sign() <= 0) throw SeriesError("substitute: q-exponent must be positive");
    if (wExp.sign() > 0 && wdir_ == WDir::BoundedAbove)
        throw UnsafeSubstitution("substitute: w tail extends downward but w-exponent > 0");
    if (wExp.sign() < 0 && wdir_ == WDir::BoundedBelow)
        throw UnsafeSubstitution("substitute: w tail extends upward but w-exponent < 0");

    // Certified exactness bound for the result.
    Rat bound(0);
    if (wExp.isZero()) {
        bound = cutoff_ * qExp;
    } else {
        const std::optional<AffineBound>& side = wExp.sign() < 0 ? upper_ : lower_;
        if (!side)
            throw UnsafeSubstitution(
                "substitute: no affine w-support bound to certify the q-tail");
        Rat slope = side->slope * wExp + qExp;
        if (slope.sign() < 0)
            throw UnsafeSubstitution(
                "substitute: target exponents decrease along the q-tail; result ill-defined");
        bound = side->at(cutoff_) * wExp + cutoff_ * qExp;
    }
    for (const auto& [g, l] : limits_) {
        Rat b = Rat(l, wden_) * wExp + Rat(g, qden_) * qExp;
        if (b < bound) bound = b;
    }

    FracSeries out(bound);
    for (const auto& [g, poly] : grades_)
        for (const auto& [f, c] : poly)
            out.addTerm(Rat(f, wden_) * wExp + Rat(g, qden_) * qExp, c);
    return out;
}

std::optional<JsMismatch> JacobiSeries::firstMismatch(const JacobiSeries& a,
                                                      const JacobiSeries& b, const Rat& limit) {
    combineDir(a.wdir_, b.wdir_); // validates compatibility
    long long qd = lcmLL(a.qden_, b.qden_);
    long long wd = lcmLL(a.wden_, b.wden_);
    JacobiSeries ra = a.rescaled(qd, wd);
    JacobiSeries rb = b.rescaled(qd, wd);
    Rat bound = std::min(limit, std::min(a.cutoff_, b.cutoff_));
    Rat scaledBound = bound * Rat(qd);

    std::map<long long, bool> gradeKeys;
    for (const auto& [g, poly] : ra.grades_) gradeKeys.emplace(g, true);
    for (const auto& [g, poly] : rb.grades_) gradeKeys.emplace(g, true);

    auto knownRegion = [&](const JacobiSeries& s, long long g, long long f) {
        auto it = s.limits_.find(g);
        if (it == s.limits_.end()) return true;
        return s.wdir_ == WDir::BoundedAbove ? f >= it->second : f <= it->second;
    };

    static const WPoly kEmpty{};
    for (const auto& [g, unused] : gradeKeys) {
        if (Rat(g) >= scaledBound) break;
        auto ia = ra.grades_.find(g);
        auto ib = rb.grades_.find(g);
        const WPoly& pa = ia != ra.grades_.end() ? ia->second : kEmpty;
        const WPoly& pb = ib != rb.grades_.end() ? ib->second : kEmpty;
        std::map<long long, bool> wKeys;
        for (const auto& [f, c] : pa) wKeys.emplace(f, true);
        for (const auto& [f, c] : pb) wKeys.emplace(f, true);
        for (const auto& [f, u2] : wKeys) {
            if (!knownRegion(ra, g, f) || !knownRegion(rb, g, f)) continue;
            auto fa = pa.find(f);
            auto fb = pb.find(f);
            Rat va = fa != pa.end() ? fa->second : Rat(0);
            Rat vb = fb != pb.end() ? fb->second : Rat(0);
            if (va != vb) return JsMismatch{Rat(g, qd), Rat(f, wd), va, vb};
        }
    }
    return std::nullopt;
}

JacobiSeries jsGeom(const Rat& alphaW, const Rat& betaQ, WDir dir, const Rat& cutoff,
                    const Rat& wdepth) {
    if (alphaW.isZero()) throw SeriesError("jsGeom: w-exponent must be nonzero");
    if (betaQ.sign() < 0) throw SeriesError("jsGeom: q-exponent must be nonnegative");

    if (betaQ.sign() > 0) {
        JacobiSeries out(cutoff, WDir::Finite);
        Rat slope = alphaW / betaQ;
        out.setUpperBound({Rat(0), slope});
        out.setLowerBound({Rat(0), slope});
        for (long long m = 0;; ++m) {
            Rat qe = betaQ * Rat(m);
            if (qe >= cutoff) break;
            out.addTerm(qe, alphaW * Rat(m), Rat(1));
        }
        return out;
    }

    // betaQ == 0: pure-w geometric tail, materialized to |f| <= wdepth.
    if (dir == WDir::Finite)
        throw SeriesError("jsGeom: zero q-exponent needs an explicit expansion direction");
    if (wdepth.sign() <= 0)
        throw SeriesError("jsGeom: zero q-exponent needs a positive w-depth");
    if (dir == WDir::BoundedBelow) return jsGeom(-alphaW, betaQ, WDir::BoundedAbove, cutoff, wdepth).mirrorW();

    JacobiSeries out(cutoff, WDir::BoundedAbove);
    Rat absA = alphaW.sign() < 0 ? -alphaW : alphaW;
    long long depth = toLong((wdepth / absA).floor());
    if (alphaW.sign() < 0) {
        // 1/(1 - w^{-a}) = sum_{m>=0} w^{-am}
        for (long long m = 0; m <= depth; ++m) out.addTerm(Rat(0), alphaW * Rat(m), Rat(1));
        out.setLimit(Rat(0), alphaW * Rat(depth));
        out.setUpperBound({Rat(0), Rat(0)});
    } else {
        // 1/(1 - w^{a}) = -w^{-a}/(1 - w^{-a}) = -sum_{m>=1} w^{-am}
        for (long long m = 1; m <= depth; ++m) out.addTerm(Rat(0), -alphaW * Rat(m), Rat(-1));
        out.setLimit(Rat(0), -alphaW * Rat(depth));
        out.setUpperBound({-alphaW, Rat(0)});
    }
    return out;
}

JacobiSeries jsPochProduct(const Rat& alphaW, const Rat& betaQ, long long start, const Rat& stepQ,
                           const Rat& cutoff, const Rat& coef) {
    if (stepQ.sign() <= 0)
        throw NonTerminating("jsPochProduct: step must be positive so only finitely many "
                             "factors lie below the cutoff");
    JacobiSeries acc = JacobiSeries::one(cutoff);
    for (long long n = start;; ++n) {
        Rat e = betaQ + Rat(n) * stepQ;
        if (e >= cutoff) break;
        JacobiSeries factor(cutoff, WDir::Finite);
        factor.addTerm(Rat(0), Rat(0), Rat(1));
        factor.addTerm(e, alphaW, coef);
        if (e.isZero()) {
            factor.setUpperBound({std::max(alphaW, Rat(0)), Rat(0)});
            factor.setLowerBound({std::min(alphaW, Rat(0)), Rat(0)});
        } else {
            Rat slope = alphaW / e;
            factor.setUpperBound({Rat(0), slope});
            factor.setLowerBound({Rat(0), slope});
            if (e.sign() < 0) factor.setMinGrade(e);
        }
        acc = acc * factor;
    }
    return acc;
}

JacobiSeries jsPochInverse(const Rat& alphaW, const Rat& betaQ, long long start, const Rat& stepQ,
                           const Rat& cutoff) {
    if (stepQ.sign() <= 0)
        throw NonTerminating("jsPochInverse: step must be positive");
    JacobiSeries acc = JacobiSeries::one(cutoff);
    for (long long n = start;; ++n) {
        Rat e = betaQ + Rat(n) * stepQ;
        if (e >= cutoff) break;
        if (e.sign() <= 0)
            throw SeriesError("jsPochInverse: factors need positive q-exponents; expand "
                              "zero-exponent factors explicitly with jsGeom");
        acc = acc * jsGeom(alphaW, e, WDir::Finite, cutoff);
    }
    return acc;
}

} // namespace voachar
