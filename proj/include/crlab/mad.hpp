#pragma once

#include "crlab/graph.hpp"
#include "crlab/rational.hpp"

#include <vector>

namespace crlab {

// Maximum average degree: max over nonempty subgraphs H of 2|E(H)|/|V(H)|,
// exact. Densest subgraphs may be taken induced, so this is 2 * max density.
// Computed by iterating Goldberg's flow test "is there a subgraph with
// density > p/q" over the finite set of candidate densities e/v; each test is
// one integer max-flow, and the extracted cut side strictly improves the
// candidate until the maximum is reached.
// Throws EmptyGraph when n == 0.
Rational mad(const Graph& g);

// mad together with a witness vertex set attaining it.
Rational mad_with_witness(const Graph& g, std::vector<int>* witness);

// Single flow test: does some nonempty subgraph have e(H)/v(H) >= p/q?
// (p, q reduced, q > 0). Used for fast premise filtering.
bool has_subgraph_with_density_at_least(const Graph& g, long long p, long long q);

} // namespace crlab
