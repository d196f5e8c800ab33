#pragma once

#include "crlab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crlab {

// Length of the shortest odd cycle; infinite exactly for bipartite graphs.
struct OddGirth {
    bool infinite = true;
    int value = 0; // meaningful only when !infinite; odd, >= 3

    static OddGirth finite(int v) { return OddGirth{false, v}; }
    static OddGirth inf() { return OddGirth{}; }

    bool operator==(const OddGirth&) const = default;

    // infinite compares above every finite value
    bool operator<(const OddGirth& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator>=(int threshold) const { return infinite || value >= threshold; }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// Computed on the bipartite double cover: the shortest odd closed walk
// through v is dist((v,0),(v,1)); the minimum over v is the odd girth.
OddGirth odd_girth(const Graph& g);

// A shortest odd cycle as a vertex list (length odd_girth, no repeat of the
// start at the end), or nullopt for bipartite graphs.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

bool is_bipartite(const Graph& g);

} // namespace crlab
