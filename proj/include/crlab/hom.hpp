#pragma once

#include "crlab/graph.hpp"
#include "crlab/kneser.hpp"
#include "crlab/odd_girth.hpp"
#include "crlab/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace crlab {

// Vertex map source -> target; edge preservation is checked, never assumed.
struct Homomorphism {
    std::vector<int> map;
};

enum class SearchStatus { Found, NoneExhaustive, Refuted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExceeded;
    std::optional<Homomorphism> witness;                 // Found
    std::optional<ObstructionCertificate> obstruction;   // Refuted
    long long nodes = 0;
};

struct SearchOptions {
    long long budget = 100'000'000; // node budget (assignment attempts)
    int threads = 1;                // 1 = deterministic serial reference
    // called every ~10^6 nodes in serial mode
    std::function<void(long long)> progress;
};

// Backtracking over vertex assignments: domains start full and are pruned
// only by arc consistency; vertex order is minimum-remaining-domain with
// smallest-label ties, value order is lexicographic by target label. The
// odd-girth obstruction is checked first and short-circuits to Refuted.
// With threads > 1 the top-level branches run on an OpenMP team sharing an
// atomic stop flag; status agrees with the serial run but the Found witness
// may differ.
SearchOutcome find_hom(const Graph& source, const Graph& target,
                       const SearchOptions& opts = {});
SearchOutcome find_hom(const Graph& source, const Graph& target, long long budget);

// Violating source edges (empty iff h is a homomorphism). Throws
// ShapeMismatch on wrong map length or out-of-range values.
std::vector<std::pair<int, int>> verify_hom(const Graph& source, const Graph& target,
                                            const Homomorphism& h);

const char* search_status_name(SearchStatus s);

// One conjecture instance at level k: check mad < (2k+1)/k and
// odd girth >= 2k+1, then search for a homomorphism into K(2k+1, k).
struct ConjectureReport {
    int k = 0;
    Rational mad_value;
    OddGirth girth;
    Rational mad_bound;
    int odd_girth_min = 0;
    bool mad_ok = false;
    bool odd_girth_ok = false;
    bool premises_pass = false;
    KneserParams target;
    std::optional<SearchOutcome> outcome; // present iff premises pass
};

ConjectureReport conjecture_instance(const Graph& g, int k,
                                     const SearchOptions& opts = {});

} // namespace crlab
