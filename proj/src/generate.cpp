#include "crlab/generate.hpp"

#include "crlab/errors.hpp"
#include "crlab/mad.hpp"
#include "crlab/odd_girth.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace crlab {

Graph gen_constrained(int n, const Rational& mad_bound, int odd_girth_min,
                      uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_constrained needs n >= 1");
    if (odd_girth_min < 3 || odd_girth_min % 2 == 0)
        throw std::invalid_argument("odd_girth_min must be odd and >= 3");
    if (mad_bound <= Rational(0))
        throw GenerationExhausted("no graph has mad < " + mad_bound.str());

    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    Graph g(n);
    for (auto [u, v] : candidates) {
        g.add_edge(u, v);
        bool ok = mad(g) < mad_bound && odd_girth(g) >= odd_girth_min;
        if (!ok) g.remove_edge(u, v);
    }
    return g;
}

} // namespace crlab
