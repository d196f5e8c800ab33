#include "crlab/mad.hpp"

#include "crlab/errors.hpp"

#include <algorithm>
#include <cassert>

namespace crlab {

namespace {

struct Dinic {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, it;

    explicit Dinic(int n) : adj(n), level(n), it(n) {}

    void add_edge(int u, int v, long long cap) {
        adj[u].push_back({v, cap, (int)adj[v].size()});
        adj[v].push_back({u, 0, (int)adj[u].size() - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{s};
        level[s] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (const Arc& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = it[v]; i < (int)adj[v].size(); ++i) {
            Arc& a = adj[v][i];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    adj[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            long long f;
            while ((f = dfs(s, t, INT64_MAX)) > 0) flow += f;
        }
        return flow;
    }

    // source side of the min cut after max_flow
    std::vector<char> reachable(int s) {
        std::vector<char> seen(adj.size(), 0);
        std::vector<int> q{s};
        seen[s] = 1;
        for (size_t h = 0; h < q.size(); ++h)
            for (const Arc& a : adj[q[h]])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push_back(a.to);
                }
        return seen;
    }
};

// Goldberg's test network: is there a nonempty S with q*e(S) - p*v(S) > 0?
// Nodes: source, one per edge, one per vertex, sink. Min cut equals
// q*m - max_S (q*e(S) - p*|S|), so max-flow < q*m decides the test; the
// residual-reachable vertex nodes give a maximizing S.
bool denser_than(const Graph& g, long long p, long long q, std::vector<int>* out) {
    int n = g.vertex_count();
    auto edges = g.edges();
    long long m = (long long)edges.size();
    if (m == 0) return false;
    int s = 0, t = 1;
    Dinic net(2 + (int)m + n);
    long long inf = q * m + p * n + 1;
    for (int i = 0; i < (int)m; ++i) {
        net.add_edge(s, 2 + i, q);
        net.add_edge(2 + i, 2 + (int)m + edges[i].first, inf);
        net.add_edge(2 + i, 2 + (int)m + edges[i].second, inf);
    }
    for (int v = 0; v < n; ++v) net.add_edge(2 + (int)m + v, t, p);
    long long flow = net.max_flow(s, t);
    if (flow >= q * m) return false;
    if (out) {
        auto side = net.reachable(s);
        out->clear();
        for (int v = 0; v < n; ++v)
            if (side[2 + (int)m + v]) out->push_back(v);
    }
    return true;
}

long long induced_edge_count(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : verts) in[v] = 1;
    long long e = 0;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (in[w] && v < w) ++e;
    return e;
}

} // namespace

Rational mad_with_witness(const Graph& g, std::vector<int>* witness) {
    int n = g.vertex_count();
    if (n == 0) throw EmptyGraph("mad of the empty graph");
    if (g.edge_count() == 0) {
        if (witness) *witness = {0};
        return Rational(0, 1);
    }
    std::vector<int> best(n);
    for (int v = 0; v < n; ++v) best[v] = v;
    long long be = g.edge_count(), bv = n;
    std::vector<int> cand;
    while (denser_than(g, be, bv, &cand)) {
        long long e = induced_edge_count(g, cand);
        long long v = (long long)cand.size();
        assert(v > 0 && e * bv > be * v);
        be = e;
        bv = v;
        best = cand;
    }
    if (witness) *witness = best;
    return Rational(2 * be, bv);
}

Rational mad(const Graph& g) {
    return mad_with_witness(g, nullptr);
}

bool has_subgraph_with_density_at_least(const Graph& g, long long p, long long q) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (p <= 0) return true;
    // e/v >= p/q  <=>  e/v > (pK-1)/(qK) with K = n+1: no candidate density
    // e/v (v <= n) lies strictly between the two thresholds.
    long long k = n + 1;
    return denser_than(g, p * k - 1, q * k, nullptr);
}

} // namespace crlab
