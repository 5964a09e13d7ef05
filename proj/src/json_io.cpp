#include "voachar/json_io.hpp"

namespace voachar {

Json bigToJson(const BigInt& v) {
    static const BigInt kMax = BigInt(std::numeric_limits<std::int64_t>::max());
    static const BigInt kMin = BigInt(std::numeric_limits<std::int64_t>::min());
    if (v <= kMax && v >= kMin) return static_cast<std::int64_t>(v);
    return v.str();
}

Json ratToJson(const Rat& r) {
    Json j = Json::object();
    j["num"] = bigToJson(r.num());
    j["den"] = bigToJson(r.den());
    return j;
}

Json seriesToJson(const FracSeries& s) {
    Json j = Json::object();
    j["schema"] = 1;
    j["type"] = "series";
    j["qden"] = s.qden();
    j["cutoff"] = ratToJson(s.cutoff());
    Json terms = Json::array();
    for (const auto& [scaled, coef] : s.terms()) {
        Json t = Json::object();
        t["exp"] = ratToJson(s.exponentAt(scaled));
        t["coef"] = ratToJson(coef);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json jacobiToJson(const JacobiSeries& s) {
    Json j = Json::object();
    j["schema"] = 1;
    j["type"] = "jacobi_series";
    switch (s.wdir()) {
    case WDir::Finite: j["wdir"] = "finite"; break;
    case WDir::BoundedAbove: j["wdir"] = "bounded_above"; break;
    case WDir::BoundedBelow: j["wdir"] = "bounded_below"; break;
    }
    j["cutoff"] = ratToJson(s.cutoff());
    Json grades = Json::array();
    for (const auto& [scaledQ, wpoly] : s.grades()) {
        Json g = Json::object();
        g["q"] = ratToJson(Rat(scaledQ, s.qden()));
        Json terms = Json::array();
        for (const auto& [scaledW, coef] : wpoly) {
            Json t = Json::object();
            t["w"] = ratToJson(Rat(scaledW, s.wden()));
            t["coef"] = ratToJson(coef);
            terms.push_back(std::move(t));
        }
        g["terms"] = std::move(terms);
        grades.push_back(std::move(g));
    }
    j["grades"] = std::move(grades);
    return j;
}

Json dimsToJson(const DimTable& t) {
    Json j = Json::object();
    j["schema"] = 1;
    j["type"] = "dim_table";
    Json entries = Json::array();
    for (const auto& [key, dim] : t) {
        Json e = Json::object();
        e["f"] = key.f;
        e["two_n"] = key.twiceN;
        e["dim"] = bigToJson(dim);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json reportToJson(const VerificationReport& r) {
    Json j = Json::object();
    j["check_id"] = r.checkId;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["order"] = ratToJson(r.cutoff);
    j["passed"] = r.passed;
    if (r.firstMismatch) {
        Json m = Json::object();
        m["exponent"] = ratToJson(r.firstMismatch->exponent);
        m["lhs"] = ratToJson(r.firstMismatch->lhs);
        m["rhs"] = ratToJson(r.firstMismatch->rhs);
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["notes"] = r.notes;
    j["elapsed_ms"] = r.elapsedMs;
    return j;
}

Json reportsToJson(const std::vector<VerificationReport>& reports) {
    Json j = Json::object();
    j["schema"] = 1;
    j["type"] = "verification_run";
    long long passed = 0;
    for (const auto& r : reports)
        if (r.passed) ++passed;
    j["total"] = static_cast<long long>(reports.size());
    j["passed"] = passed;
    j["failed"] = static_cast<long long>(reports.size()) - passed;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(reportToJson(r));
    j["reports"] = std::move(arr);
    return j;
}

} // namespace voachar
