#pragma once

// Error taxonomy shared by all modules. Every domain error derives from
// SeriesError so callers can distinguish domain failures from programming bugs.

#include <stdexcept>
#include <string>

namespace voachar {

struct SeriesError : std::runtime_error {
    explicit SeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

// fs_inverse on a series with no terms below its cutoff.
struct ZeroLeadingTerm : SeriesError {
    explicit ZeroLeadingTerm(const std::string& msg) : SeriesError(msg) {}
};

// poch_expand with infinitely many factors contributing below the cutoff.
struct NonTerminating : SeriesError {
    explicit NonTerminating(const std::string& msg) : SeriesError(msg) {}
};

// js_substitute whose result would receive infinitely many or unknown contributions.
struct UnsafeSubstitution : SeriesError {
    explicit UnsafeSubstitution(const std::string& msg) : SeriesError(msg) {}
};

// Level k = -2 (the critical level) where c(k), h(k, mu) are undefined.
struct BadLevel : SeriesError {
    explicit BadLevel(const std::string& msg) : SeriesError(msg) {}
};

struct IndexOutOfRange : SeriesError {
    explicit IndexOutOfRange(const std::string& msg) : SeriesError(msg) {}
};

struct BadParity : SeriesError {
    explicit BadParity(const std::string& msg) : SeriesError(msg) {}
};

struct NotAdmissible : SeriesError {
    explicit NotAdmissible(const std::string& msg) : SeriesError(msg) {}
};

// Index map (q,p) -> (q,3p) requires 3 not dividing q.
struct DivisibleByThree : SeriesError {
    explicit DivisibleByThree(const std::string& msg) : SeriesError(msg) {}
};

// Truncated direct sum with a truncation bound too small for the requested cutoff.
struct RMaxTooSmall : SeriesError {
    explicit RMaxTooSmall(const std::string& msg) : SeriesError(msg) {}
};

// Basis-label map applied to a label outside the legal set.
struct IllegalLabel : SeriesError {
    explicit IllegalLabel(const std::string& msg) : SeriesError(msg) {}
};

} // namespace voachar
