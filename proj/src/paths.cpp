#include "crlab/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace crlab {

namespace {

struct PathSearch {
    const Graph& g;
    int bound; // stop as soon as a path of length bound+1 exists
    std::vector<char> on_path;
    std::vector<int> path;
    int best = 0;
    std::vector<int> best_path;

    PathSearch(const Graph& g, int bound)
        : g(g), bound(bound), on_path(g.vertex_count(), 0) {}

    bool done() const { return best > bound; }

    // can `w` extend the path at the far end, keeping it induced?
    bool extends(int w) const {
        if (on_path[w]) return false;
        // adjacent to the last vertex only
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (g.has_edge(w, path[i])) return false;
        return true;
    }

    void record() {
        int len = (int)path.size() - 1;
        if (len > best) {
            best = len;
            best_path = path;
        }
    }

    void dfs() {
        record();
        if (done()) return;
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (!extends(w)) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            on_path[w] = 0;
            if (done()) return;
        }
    }

    void run() {
        for (int s = 0; s < g.vertex_count() && !done(); ++s) {
            path = {s};
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[s] = 1;
            dfs();
        }
        if (best_path.empty() && g.vertex_count() > 0) best_path = {0};
    }
};

} // namespace

int longest_induced_path_upto(const Graph& g, int bound, std::vector<int>* witness) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    if (g.vertex_count() == 0) {
        if (witness) witness->clear();
        return 0;
    }
    PathSearch search(g, bound);
    search.run();
    if (witness) *witness = search.best_path;
    return std::min(search.best, bound + 1);
}

char class_letter(ClassLabel l) {
    switch (l) {
        case ClassLabel::A: return 'A';
        case ClassLabel::B: return 'B';
        case ClassLabel::C: return 'C';
        case ClassLabel::D: return 'D';
    }
    return '?';
}

GraphClass classify(const Graph& g, int L) {
    if (L < 1) throw std::invalid_argument("classify needs L >= 1");
    GraphClass out;
    out.max_degree = g.max_degree();
    std::vector<int> path;
    int len = longest_induced_path_upto(g, L, &path);
    bool long_thread = len > L;
    if (long_thread) out.long_thread_witness = path;
    bool high = out.max_degree >= 4;
    out.label = high ? (long_thread ? ClassLabel::D : ClassLabel::B)
                     : (long_thread ? ClassLabel::C : ClassLabel::A);
    return out;
}

} // namespace crlab
