#pragma once

#include "crlab/graph.hpp"

#include <optional>
#include <vector>

namespace crlab {

// Four-way structural classification by maximum degree and the presence of an
// induced path longer than L.
enum class ClassLabel { A, B, C, D };

struct GraphClass {
    ClassLabel label = ClassLabel::A;
    int max_degree = 0;
    std::optional<std::vector<int>> long_thread_witness; // induced path, length > L
};

char class_letter(ClassLabel l);

// min(bound+1, length in edges of the longest induced path). The value
// bound+1 is a sentinel meaning "exceeds bound". Branch-and-bound DFS,
// exact at desk scale. If witness is given it receives a longest induced
// path found (truncated at length bound+1 when the sentinel fires).
int longest_induced_path_upto(const Graph& g, int bound,
                              std::vector<int>* witness = nullptr);

// Requires L >= 1. Witness present iff label is C or D.
GraphClass classify(const Graph& g, int L);

} // namespace crlab
