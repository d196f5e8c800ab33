#include "crlab/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace crlab {

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    long long deg_sum = 0;
    for (size_t v = 0; v < adj.size(); ++v) {
        assert(std::is_sorted(adj[v].begin(), adj[v].end()));
        deg_sum += (long long)adj[v].size();
    }
    assert(deg_sum % 2 == 0);
    g.adj_ = std::move(adj);
    g.edge_count_ = (int)(deg_sum / 2);
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, (int)nb.size());
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::out_of_range("vertex out of range");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_vertices(const std::vector<int>& victims,
                             std::vector<int>* old_of) const {
    std::vector<char> gone(vertex_count(), 0);
    for (int v : victims) gone.at(v) = 1;
    std::vector<int> new_id(vertex_count(), -1);
    int m = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[v]) new_id[v] = m++;
    Graph out(m);
    if (old_of) {
        old_of->assign(m, -1);
        for (int v = 0; v < vertex_count(); ++v)
            if (new_id[v] >= 0) (*old_of)[new_id[v]] = v;
    }
    for (int u = 0; u < vertex_count(); ++u) {
        if (gone[u]) continue;
        for (int v : adj_[u])
            if (u < v && !gone[v]) out.add_edge(new_id[u], new_id[v]);
    }
    return out;
}

Graph Graph::remove_vertex(int v, std::vector<int>* old_of) const {
    return remove_vertices({v}, old_of);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<char> in(vertex_count(), 0);
    for (int v : keep) in.at(v) = 1;
    std::vector<int> victims;
    for (int v = 0; v < vertex_count(); ++v)
        if (!in[v]) victims.push_back(v);
    return remove_vertices(victims);
}

bool Graph::is_induced_path(const std::vector<int>& path) const {
    if (path.size() < 2) return false;
    std::vector<char> seen(vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!has_edge(path[i], path[i + 1])) return false;
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 2; j < path.size(); ++j)
            if (has_edge(path[i], path[j])) return false;
    return true;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace crlab
