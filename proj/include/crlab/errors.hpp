#pragma once

#include <stdexcept>
#include <string>

namespace crlab {

// Contract-level failures. Search outcomes (budget exhaustion, refutation,
// exhaustive "none") are returned as statuses, not thrown.

struct MalformedEncoding : std::runtime_error {
    explicit MalformedEncoding(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGraph : std::runtime_error {
    explicit EmptyGraph(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationExhausted : std::runtime_error {
    explicit GenerationExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct StaleMatch : std::runtime_error {
    explicit StaleMatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotInducedPath : std::runtime_error {
    explicit NotInducedPath(const std::string& what) : std::runtime_error(what) {}
};

struct TargetMismatch : std::runtime_error {
    explicit TargetMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crlab
