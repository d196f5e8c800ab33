#pragma once

#include "crlab/graph.hpp"
#include "crlab/odd_girth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crlab {

// A k-element subset of a ground set {0..ground-1}, ground <= 64.
// Certificates print it 1-indexed, e.g. "{1,2,4}".
struct KSubset {
    int ground = 0;
    uint64_t bits = 0;

    int size() const { return __builtin_popcountll(bits); }
    bool contains(int e) const { return (bits >> e) & 1; }
    bool disjoint(const KSubset& o) const { return (bits & o.bits) == 0; }
    std::vector<int> elements() const;
    std::string str() const;

    static KSubset of(int ground, std::initializer_list<int> elems);
    static KSubset from_bits(int ground, uint64_t bits) { return {ground, bits}; }

    bool operator==(const KSubset&) const = default;
};

struct KneserParams {
    int n = 0; // ground set size
    int k = 0; // subset size; valid when 1 <= k and 2k+1 <= n

    bool valid() const { return 1 <= k && 2 * k + 1 <= n; }
    std::string str() const { return "kneser:" + std::to_string(n) + "," + std::to_string(k); }
};

constexpr int kDefaultVertexCap = 10000;

// All k-subsets of {0..n-1} in lexicographic order (as increasing tuples).
std::vector<KSubset> k_subsets_lex(int n, int k);

// C(n, k), saturating at a large sentinel to avoid overflow.
long long binomial(int n, int k);

// Kneser graph K(n, k): one vertex per k-subset (lexicographic labels),
// edges exactly between disjoint subsets.
struct KneserGraph {
    KneserParams params;
    Graph graph;
    std::vector<KSubset> labels;

    int index_of(const KSubset& s) const; // -1 if not a vertex
};

// Throws TooLarge when C(n,k) exceeds vertex_cap (or the ground set exceeds
// 64 elements). The adjacency build has a serial reference and an OpenMP
// kernel; rows are independent, so both produce identical graphs.
KneserGraph kneser_graph(const KneserParams& p, int vertex_cap = kDefaultVertexCap);

std::vector<std::vector<int>> kneser_adjacency_serial(const std::vector<KSubset>& labels);
std::vector<std::vector<int>> kneser_adjacency_parallel(const std::vector<KSubset>& labels);

// Witness that no homomorphism source -> target exists: a homomorphism maps
// an odd cycle onto a closed odd walk of the same length, which contains an
// odd cycle of at most that length.
struct ObstructionCertificate {
    int source_odd_girth = 0;
    OddGirth target_odd_girth;
    std::vector<int> witness_cycle; // odd cycle in the source
};

std::optional<ObstructionCertificate> refute_hom_by_odd_girth(const Graph& source,
                                                              const Graph& target);

// Walk a = c0, c1, ..., c_length = b with consecutive subsets disjoint, or
// nullopt. Decided exactly by BFS over (vertex, parity) layers; any shorter
// same-parity walk is padded by bouncing on a neighbor of b.
std::optional<std::vector<KSubset>> find_walk(const KneserParams& p, const KSubset& a,
                                              const KSubset& b, int length);

// Lexicographically first k-subset disjoint from every listed color, if one
// exists. Exists iff the union of the colors leaves >= k free elements.
std::optional<KSubset> find_common_neighbor(const KneserParams& p,
                                            const std::vector<KSubset>& colors);

// Exhaustive search for a pattern extension embedding K(2j+1,j) -> K(2k+3,k+1):
// ground sets T = {1..2j+1} and U = S \ T, each j-subset X of T mapped to
// X u P_X with P_X a (k+1-j)-subset of U, such that disjoint X, Y get
// disjoint patterns. The relaxed variant draws P_X from S \ X instead and
// then needs full image disjointness plus injectivity as constraints.
enum class EmbeddingStatus { Verified, FailedExhaustive, BudgetExceeded };

struct EmbeddingAttempt {
    int j = 0, k = 0;
    bool relaxed = false;
    EmbeddingStatus status = EmbeddingStatus::BudgetExceeded;
    long long nodes = 0;
    std::vector<KSubset> source_labels;          // j-subsets of T, lex order
    std::vector<KSubset> patterns;               // per source vertex, when Verified
    std::vector<KSubset> images;                 // X u P_X, when Verified
    std::optional<ObstructionCertificate> obstruction; // independent cross-check
};

EmbeddingAttempt attempt_embedding(int j, int k, long long budget, bool relaxed = false);

const char* embedding_status_name(EmbeddingStatus s);

} // namespace crlab
