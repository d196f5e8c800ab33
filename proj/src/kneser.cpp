#include "crlab/kneser.hpp"

#include "crlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crlab {

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    for (uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string KSubset::str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e + 1);
        first = false;
    }
    return out + "}";
}

KSubset KSubset::of(int ground, std::initializer_list<int> elems) {
    KSubset s{ground, 0};
    for (int e : elems) {
        if (e < 0 || e >= ground) throw std::out_of_range("element out of ground set");
        s.bits |= 1ull << e;
    }
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1ll << 40)) return 1ll << 40; // saturate; callers only compare to caps
    }
    return r;
}

std::vector<KSubset> k_subsets_lex(int n, int k) {
    std::vector<KSubset> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        KSubset s{n, 0};
        for (int e : c) s.bits |= 1ull << e;
        out.push_back(s);
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    if (k == 0) out = {KSubset{n, 0}};
    return out;
}

std::vector<std::vector<int>> kneser_adjacency_serial(const std::vector<KSubset>& labels) {
    int v = (int)labels.size();
    std::vector<std::vector<int>> adj(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (i != j && labels[i].disjoint(labels[j])) adj[i].push_back(j);
    return adj;
}

std::vector<std::vector<int>> kneser_adjacency_parallel(const std::vector<KSubset>& labels) {
    int v = (int)labels.size();
    std::vector<std::vector<int>> adj(v);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (i != j && labels[i].disjoint(labels[j])) adj[i].push_back(j);
    return adj;
}

int KneserGraph::index_of(const KSubset& s) const {
    if (s.ground != params.n || s.size() != params.k) return -1;
    auto it = std::lower_bound(labels.begin(), labels.end(), s,
                               [](const KSubset& a, const KSubset& b) {
                                   return a.elements() < b.elements();
                               });
    if (it == labels.end() || !(*it == s)) return -1;
    return (int)(it - labels.begin());
}

KneserGraph kneser_graph(const KneserParams& p, int vertex_cap) {
    if (!p.valid()) throw std::invalid_argument("kneser params need 1 <= k, 2k+1 <= n");
    if (p.n > 64) throw TooLarge("ground set above 64 elements");
    long long count = binomial(p.n, p.k);
    if (count > vertex_cap)
        throw TooLarge("K(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") has " +
                       std::to_string(count) + " vertices, above the cap of " +
                       std::to_string(vertex_cap));
    KneserGraph out;
    out.params = p;
    out.labels = k_subsets_lex(p.n, p.k);
    auto adj = count > 2000 ? kneser_adjacency_parallel(out.labels)
                            : kneser_adjacency_serial(out.labels);
    out.graph = Graph::from_adjacency(std::move(adj));
    return out;
}

std::optional<ObstructionCertificate> refute_hom_by_odd_girth(const Graph& source,
                                                              const Graph& target) {
    OddGirth src = odd_girth(source);
    if (src.infinite) return std::nullopt;
    OddGirth tgt = odd_girth(target);
    if (!(src < tgt)) return std::nullopt;
    ObstructionCertificate cert;
    cert.source_odd_girth = src.value;
    cert.target_odd_girth = tgt;
    auto cycle = shortest_odd_cycle(source);
    assert(cycle && (int)cycle->size() == src.value);
    cert.witness_cycle = *cycle;
    return cert;
}

std::optional<std::vector<KSubset>> find_walk(const KneserParams& p, const KSubset& a,
                                              const KSubset& b, int length) {
    if (length < 1) throw std::invalid_argument("walk length must be >= 1");
    KneserGraph kg = kneser_graph(p);
    int ia = kg.index_of(a), ib = kg.index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("endpoints are not vertices of " + p.str());

    int n = kg.graph.vertex_count();
    std::vector<int> dist(2 * n, -1), parent(2 * n, -1);
    std::queue<int> q;
    dist[2 * ia] = 0;
    q.push(2 * ia);
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int w : kg.graph.neighbors(s / 2)) {
            int t = 2 * w + (1 - s % 2);
            if (dist[t] < 0) {
                dist[t] = dist[s] + 1;
                parent[t] = s;
                q.push(t);
            }
        }
    }
    int goal = 2 * ib + (length % 2);
    if (dist[goal] < 0 || dist[goal] > length) return std::nullopt;

    std::vector<int> walk;
    for (int s = goal; s >= 0; s = parent[s]) walk.push_back(s / 2);
    std::reverse(walk.begin(), walk.end());
    // pad to the requested length by bouncing on b's first neighbor
    int bounce = kg.graph.neighbors(ib).front();
    while ((int)walk.size() < length + 1) {
        walk.push_back(bounce);
        walk.push_back(ib);
    }
    std::vector<KSubset> out;
    out.reserve(walk.size());
    for (int v : walk) out.push_back(kg.labels[v]);
    return out;
}

std::optional<KSubset> find_common_neighbor(const KneserParams& p,
                                            const std::vector<KSubset>& colors) {
    uint64_t blocked = 0;
    for (const KSubset& c : colors) {
        if (c.ground != p.n || c.size() != p.k)
            throw std::invalid_argument("color is not a vertex of " + p.str());
        blocked |= c.bits;
    }
    // lexicographically first k-subset of the free elements
    int free = p.n - __builtin_popcountll(blocked);
    if (free < p.k) return std::nullopt;
    KSubset out{p.n, 0};
    int need = p.k;
    for (int e = 0; e < p.n && need > 0; ++e) {
        if ((blocked >> e) & 1) continue;
        out.bits |= 1ull << e;
        --need;
    }
    return out;
}

namespace {

struct EmbeddingSearch {
    std::vector<KSubset> sources;             // j-subsets of T
    std::vector<std::vector<KSubset>> cands;  // per-vertex candidate patterns
    std::vector<std::vector<char>> t_disjoint; // sources[a] disjoint sources[b]
    bool relaxed;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<int> chosen;                // candidate index per vertex, -1 unset
    std::vector<std::vector<char>> alive;   // forward-checked domains

    bool compatible(int u, int cu, int v, int cv) const {
        const KSubset& pu = cands[u][cu];
        const KSubset& pv = cands[v][cv];
        if (t_disjoint[u][v]) {
            if (!relaxed) return pu.disjoint(pv);
            return ((sources[u].bits | pu.bits) & (sources[v].bits | pv.bits)) == 0;
        }
        if (relaxed) // injectivity; paper-mode images always differ inside T
            return (sources[u].bits | pu.bits) != (sources[v].bits | pv.bits);
        return true;
    }

    // prune later domains against the assignment (v, c); false on wipeout
    bool forward_check(int v, int c, std::vector<std::pair<int, int>>& undo) {
        for (int w = v + 1; w < (int)sources.size(); ++w) {
            bool any = false;
            for (int d = 0; d < (int)cands[w].size(); ++d) {
                if (!alive[w][d]) continue;
                if (!compatible(v, c, w, d)) {
                    alive[w][d] = 0;
                    undo.emplace_back(w, d);
                } else {
                    any = true;
                }
            }
            if (!any) return false;
        }
        return true;
    }

    bool dfs(int v) {
        if (exceeded) return false;
        if (v == (int)sources.size()) return true;
        for (int c = 0; c < (int)cands[v].size(); ++c) {
            if (!alive[v][c]) continue;
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            chosen[v] = c;
            std::vector<std::pair<int, int>> undo;
            bool ok = forward_check(v, c, undo);
            if (ok && dfs(v + 1)) return true;
            for (auto [w, d] : undo) alive[w][d] = 1;
            chosen[v] = -1;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace

EmbeddingAttempt attempt_embedding(int j, int k, long long budget, bool relaxed) {
    if (!(2 <= j && j <= k)) throw std::invalid_argument("need 2 <= j <= k");
    int big_n = 2 * k + 3, pat = k + 1 - j;
    if (big_n > 64) throw TooLarge("ground set above 64 elements");

    EmbeddingAttempt out;
    out.j = j;
    out.k = k;
    out.relaxed = relaxed;

    // T = first 2j+1 elements of S, U = the rest
    uint64_t t_mask = (1ull << (2 * j + 1)) - 1;
    uint64_t u_mask = ((1ull << big_n) - 1) & ~t_mask;

    EmbeddingSearch search;
    search.relaxed = relaxed;
    search.budget = budget;
    for (const KSubset& x : k_subsets_lex(2 * j + 1, j))
        search.sources.push_back(KSubset{big_n, x.bits});
    out.source_labels = search.sources;

    std::vector<KSubset> all_patterns = k_subsets_lex(big_n, pat);
    search.cands.resize(search.sources.size());
    for (size_t v = 0; v < search.sources.size(); ++v) {
        uint64_t allowed = relaxed ? (~search.sources[v].bits & ((1ull << big_n) - 1)) : u_mask;
        for (const KSubset& p : all_patterns)
            if ((p.bits & ~allowed) == 0) search.cands[v].push_back(p);
    }
    size_t nv = search.sources.size();
    search.t_disjoint.assign(nv, std::vector<char>(nv, 0));
    for (size_t a = 0; a < nv; ++a)
        for (size_t b = 0; b < nv; ++b)
            search.t_disjoint[a][b] = search.sources[a].disjoint(search.sources[b]);
    search.chosen.assign(nv, -1);
    search.alive.resize(nv);
    for (size_t v = 0; v < nv; ++v) search.alive[v].assign(search.cands[v].size(), 1);

    bool found = search.dfs(0);
    out.nodes = search.nodes;
    if (search.exceeded) {
        out.status = EmbeddingStatus::BudgetExceeded;
    } else if (found) {
        out.status = EmbeddingStatus::Verified;
        for (size_t v = 0; v < nv; ++v) {
            out.patterns.push_back(search.cands[v][search.chosen[v]]);
            out.images.push_back(
                KSubset{big_n, search.sources[v].bits | out.patterns.back().bits});
        }
    } else {
        out.status = EmbeddingStatus::FailedExhaustive;
    }

    // independent cross-check: the odd-girth obstruction between the two
    // Kneser graphs, when both fit under the construction cap
    if (binomial(2 * j + 1, j) <= kDefaultVertexCap &&
        binomial(big_n, k + 1) <= kDefaultVertexCap) {
        KneserGraph small = kneser_graph({2 * j + 1, j});
        KneserGraph big = kneser_graph({big_n, k + 1});
        out.obstruction = refute_hom_by_odd_girth(small.graph, big.graph);
    }
    return out;
}

const char* embedding_status_name(EmbeddingStatus s) {
    switch (s) {
        case EmbeddingStatus::Verified: return "verified";
        case EmbeddingStatus::FailedExhaustive: return "failed-exhaustive";
        case EmbeddingStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

} // namespace crlab
