#pragma once

#include "crlab/graph.hpp"
#include "crlab/rational.hpp"

#include <cstdint>

namespace crlab {

// Random graph with mad < mad_bound and odd girth >= odd_girth_min,
// deterministic for a fixed seed: candidate edges are shuffled, then each is
// inserted and kept only if both constraints still hold.
// odd_girth_min must be odd and >= 3; throws GenerationExhausted when even
// the edgeless graph violates the constraints (mad_bound <= 0).
Graph gen_constrained(int n, const Rational& mad_bound, int odd_girth_min,
                      uint64_t seed);

} // namespace crlab
