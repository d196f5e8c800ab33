#pragma once

#include <string>
#include <utility>
#include <vector>

namespace crlab {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    // Adopts prebuilt neighbor lists; they must be sorted, symmetric and
    // loop-free (checked with assertions only).
    static Graph from_adjacency(std::vector<std::vector<int>> adj);

    int vertex_count() const { return (int)adj_.size(); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    int max_degree() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);    // no-op if the edge exists
    void remove_edge(int u, int v); // no-op if absent

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Copy with `victims` deleted; survivors are relabelled to stay dense.
    // old_of, if given, receives the before-label of each new vertex.
    Graph remove_vertices(const std::vector<int>& victims,
                          std::vector<int>* old_of = nullptr) const;
    Graph remove_vertex(int v, std::vector<int>* old_of = nullptr) const;

    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

    // True iff `path` is an induced path: distinct vertices, consecutive ones
    // adjacent, non-consecutive ones (endpoints included) non-adjacent.
    bool is_induced_path(const std::vector<int>& path) const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

// graph6 (McKay's format): 6-bit groups at byte offset 63, upper triangle
// column-major. One graph per line in files, no ">>graph6<<" header.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace crlab
