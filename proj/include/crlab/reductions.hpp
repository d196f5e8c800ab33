#pragma once

#include "crlab/graph.hpp"
#include "crlab/hom.hpp"
#include "crlab/kneser.hpp"
#include "crlab/odd_girth.hpp"
#include "crlab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace crlab {

// Forbidden local configurations:
//   F1  degree-1 vertex whose neighbor has degree <= 3
//   F2  odd cycle of length <= 2k+3 containing a chord
//   F3  vertex of degree >= 4 all of whose neighbors have degree 2 or 3
//   F4  induced path of length exactly L+1 with all internal vertices of
//       degree 2
//   F5  two matches of kinds F1-F4 sharing at least one vertex
enum class MatchKind { F1, F2, F3, F4, F5 };

struct ConfigMatch {
    MatchKind kind;
    std::vector<int> vertices; // sorted involved vertices

    int leaf = -1, leaf_neighbor = -1;          // F1
    std::vector<int> cycle;                     // F2: canonical orientation
    std::pair<int, int> chord{-1, -1};          // F2
    int split_odd = 0, split_even = 0;          // F2: cycle lengths made by the chord
    int fan_center = -1;                        // F3
    std::vector<int> path;                      // F4: canonical direction
    std::vector<ConfigMatch> parts;             // F5: the two constituents
};

const char* match_kind_name(MatchKind k);

// All matches, deterministically ordered. k >= 2, L >= 2.
std::vector<ConfigMatch> detect_forbidden(const Graph& g, int k, int L);

// Structural re-check of a match against g (thresholds such as cycle length
// or path length are intrinsic to the stored witness).
bool validate_match(const Graph& g, const ConfigMatch& m);

enum class StepKind { F1, F2, F3, F4, F5, PathCollapse, VertexDeletion };

const char* step_kind_name(StepKind k);

struct ReductionAudit {
    Rational mad_before, mad_after;
    OddGirth og_before, og_after;
    bool mad_increased = false;   // possible only when an edge is added (collapse)
    bool og_dropped = false;      // below the before value
    bool og_below_2k1 = false;    // reported for both thresholds; see below
    bool og_below_2k3 = false;
    bool claim_violated = false;  // og_dropped || og_below_2k3 (collapse steps)
};

// Data sufficient to extend any homomorphism of `after` back to `before`.
struct LiftRecipe {
    enum class Kind { VertexRemoval, EdgeRemoval, PathCollapse };
    Kind kind = Kind::VertexRemoval;
    std::vector<int> old_of; // after-label -> before-label

    int removed_vertex = -1;            // VertexRemoval, before label
    std::vector<int> removed_neighbors; // its neighbors, before labels

    std::pair<int, int> removed_edge{-1, -1}; // EdgeRemoval (F2 chord)

    std::vector<int> path;                           // PathCollapse, before labels
    std::vector<std::vector<int>> interior_off_path; // per interior vertex
    bool added_edge = false;
};

struct ReductionStep {
    StepKind kind;
    Graph before, after;
    LiftRecipe recipe;
    ReductionAudit audit;
};

// Applies the match's reduction: F1 deletes the leaf; F2 deletes the chord;
// F3 deletes the smallest-label degree-2 neighbor, else the smallest-label
// degree-3 neighbor; F4 collapses the path; F5 applies its smallest-kind
// constituent. Throws StaleMatch when the match no longer validates.
// k (when >= 2) pins the audit thresholds.
ReductionStep apply_reduction(const Graph& g, const ConfigMatch& m, int k = -1);

// Removes the interior of an induced path (length >= 2) and joins its
// endpoints. The odd-girth claim audited here fails exactly when the removed
// sub-path has odd length inside a short enough odd cycle; mad can increase
// because of the added edge, which the audit flags rather than forbids.
ReductionStep collapse_path(const Graph& g, const std::vector<int>& path, int k = -1);

// High-degree vertex deletion used by the class B/D strategies.
ReductionStep delete_vertex_step(const Graph& g, int v, int k = -1);

enum class LiftFailReason { NoWalk, NoCommonNeighbor, EdgeConstraintViolated };

const char* lift_fail_reason_name(LiftFailReason r);

struct LiftOutcome {
    bool lifted = false;
    std::optional<Homomorphism> hom; // verified on step.before when lifted
    std::optional<LiftFailReason> reason;
};

// Extends h_after (a coloring of step.after into K(p.n, p.k)) to step.before.
// Reintroduced vertices take the lexicographically first color disjoint from
// all neighbor colors; collapsed paths are re-expanded by the
// lexicographically first walk that also respects the interior vertices'
// off-path neighbors. Throws TargetMismatch when h_after is not a coloring
// of step.after into K(p.n, p.k).
LiftOutcome lift_coloring(const ReductionStep& step, const Homomorphism& h_after,
                          const KneserParams& p);

// --- structure scans shared with the discharging rules ---

struct ChordedOddCycle {
    std::vector<int> cycle; // canonical: starts at its min vertex
    std::vector<std::pair<int, int>> chords;
};

// Every simple odd cycle of length <= max_len that carries at least one chord.
std::vector<ChordedOddCycle> chorded_odd_cycles_upto(const Graph& g, int max_len);

// Ordered pairs (endpoint, its path-neighbor) over all maximal induced paths
// of length > L, deduplicated.
std::vector<std::pair<int, int>> long_path_endpoint_pairs(const Graph& g, int L);

// All F4-style windows: induced paths of length exactly len whose internal
// vertices have degree 2 (canonical direction, deduplicated).
std::vector<std::vector<int>> degree2_induced_paths_of_length(const Graph& g, int len);

} // namespace crlab
