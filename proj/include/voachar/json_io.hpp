#pragma once

// Deterministic JSON encodings for series, dimension tables and verification
// reports. Key order and term order are fixed so identical inputs always
// serialize to byte-identical output. Integers that fit in 64 bits are emitted
// as JSON numbers, larger values as decimal strings.

#include "voachar/jacobi_series.hpp"
#include "voachar/pbw.hpp"
#include "voachar/verifier.hpp"

#include <json.hpp>

namespace voachar {

using Json = nlohmann::ordered_json;

Json ratToJson(const Rat& r);      // {"num": ..., "den": ...}
Json bigToJson(const BigInt& v);   // number or decimal string

// {"schema":1, "type":"series", "qden":D, "cutoff":{...},
//  "terms":[{"exp":{...},"coef":{...}}, ...]} with terms by increasing exponent.
Json seriesToJson(const FracSeries& s);

// {"schema":1, "type":"jacobi_series", "wdir":..., "cutoff":{...},
//  "grades":[{"q":{...},"terms":[{"w":{...},"coef":{...}},...]},...]}.
Json jacobiToJson(const JacobiSeries& s);

// {"schema":1, "type":"dim_table", "entries":[{"f":..,"two_n":..,"dim":..},...]}.
Json dimsToJson(const DimTable& t);

// Single report: {"check_id":..., "params":{...}, "order":{...}, "passed":...,
// "first_mismatch":null|{...}, "notes":[...], "elapsed_ms":...}.
Json reportToJson(const VerificationReport& r);

// {"schema":1, "type":"verification_run", "total":N, "passed":N, "failed":N,
//  "reports":[...]}.
Json reportsToJson(const std::vector<VerificationReport>& reports);

} // namespace voachar
