#include "crlab/reductions.hpp"

#include "crlab/errors.hpp"
#include "crlab/mad.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

namespace crlab {

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    return out;
}

ReductionAudit make_audit(const Graph& before, const Graph& after, int k, bool collapse) {
    ReductionAudit a;
    a.mad_before = mad(before);
    a.mad_after = after.vertex_count() > 0 ? mad(after) : Rational(0, 1);
    a.og_before = odd_girth(before);
    a.og_after = odd_girth(after);
    a.mad_increased = a.mad_after > a.mad_before;
    a.og_dropped = a.og_after < a.og_before;
    if (k >= 2) {
        a.og_below_2k1 = !(a.og_after >= 2 * k + 1);
        a.og_below_2k3 = !(a.og_after >= 2 * k + 3);
    }
    a.claim_violated = a.og_dropped || (collapse && k >= 2 && a.og_below_2k3);
    return a;
}

// Simple cycles of length <= max_len, each reported once: the start is the
// cycle's minimum vertex and the direction makes cycle[1] < cycle.back().
template <typename F>
void enumerate_cycles_upto(const Graph& g, int max_len, F&& report) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> on(n, 0);

    auto dfs = [&](auto&& self) -> void {
        int s = path.front(), last = path.back();
        for (int w : g.neighbors(last)) {
            if (w == s && path.size() >= 3 && path[1] < last) report(path);
            if (w > s && !on[w] && (int)path.size() < max_len) {
                on[w] = 1;
                path.push_back(w);
                self(self);
                path.pop_back();
                on[w] = 0;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        dfs(dfs);
        on[s] = 0;
    }
}

std::vector<std::pair<int, int>> cycle_chords(const Graph& g, const std::vector<int>& cycle) {
    int l = (int)cycle.size();
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < l; ++i)
        for (int j = i + 2; j < l; ++j) {
            if (i == 0 && j == l - 1) continue; // cycle edge
            if (g.has_edge(cycle[i], cycle[j]))
                chords.emplace_back(std::min(cycle[i], cycle[j]),
                                    std::max(cycle[i], cycle[j]));
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

} // namespace

std::vector<ChordedOddCycle> chorded_odd_cycles_upto(const Graph& g, int max_len) {
    std::vector<ChordedOddCycle> out;
    enumerate_cycles_upto(g, max_len, [&](const std::vector<int>& cycle) {
        if (cycle.size() % 2 == 0) return;
        auto chords = cycle_chords(g, cycle);
        if (chords.empty()) return;
        out.push_back({cycle, std::move(chords)});
    });
    std::sort(out.begin(), out.end(), [](const ChordedOddCycle& a, const ChordedOddCycle& b) {
        return a.cycle < b.cycle;
    });
    return out;
}

std::vector<std::vector<int>> degree2_induced_paths_of_length(const Graph& g, int len) {
    // Interior vertices have degree 2, so the whole path is forced by its
    // first two vertices: walk through the unique continuations.
    std::vector<std::vector<int>> out;
    if (len < 2) return out;
    std::set<std::vector<int>> seen;
    int n = g.vertex_count();
    for (int w0 = 0; w0 < n; ++w0) {
        for (int w1 : g.neighbors(w0)) {
            std::vector<int> path = {w0, w1};
            bool ok = true;
            while ((int)path.size() < len + 1 && ok) {
                int cur = path.back(), prev = path[path.size() - 2];
                if (g.degree(cur) != 2) {
                    ok = false;
                    break;
                }
                const auto& nb = g.neighbors(cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                path.push_back(next);
            }
            if (!ok || (int)path.size() != len + 1) continue;
            std::vector<char> dup(n, 0);
            for (int v : path) {
                if (dup[v]) {
                    ok = false;
                    break;
                }
                dup[v] = 1;
            }
            if (!ok || g.has_edge(path.front(), path.back())) continue;
            if (path.back() < path.front()) std::reverse(path.begin(), path.end());
            if (seen.insert(path).second) out.push_back(path);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Does some maximal induced path of length > L start with (u, w)? DFS over
// far-end extensions; a far-maximal path qualifies when the u-end cannot be
// extended either.
struct MaximalPathProbe {
    const Graph& g;
    int L;
    std::vector<char> on;
    std::vector<int> path;

    MaximalPathProbe(const Graph& g, int L) : g(g), L(L), on(g.vertex_count(), 0) {}

    bool extendable_at(int end) const {
        for (int y : g.neighbors(end)) {
            if (on[y]) continue;
            bool clear = true;
            for (int v : path)
                if (v != end && g.has_edge(y, v)) {
                    clear = false;
                    break;
                }
            if (clear) return true;
        }
        return false;
    }

    bool dfs() {
        int last = path.back();
        bool far_extended = false;
        for (int x : g.neighbors(last)) {
            if (on[x]) continue;
            bool clear = true;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (g.has_edge(x, path[i])) {
                    clear = false;
                    break;
                }
            if (!clear) continue;
            far_extended = true;
            on[x] = 1;
            path.push_back(x);
            bool hit = dfs();
            path.pop_back();
            on[x] = 0;
            if (hit) return true;
        }
        if (far_extended) return false;
        // far-maximal; length and u-end maximality decide
        if ((int)path.size() - 1 <= L) return false;
        return !extendable_at(path.front());
    }

    bool fires(int u, int w) {
        std::fill(on.begin(), on.end(), 0);
        path = {u, w};
        on[u] = on[w] = 1;
        return dfs();
    }
};

} // namespace

std::vector<std::pair<int, int>> long_path_endpoint_pairs(const Graph& g, int L) {
    std::vector<std::pair<int, int>> out;
    MaximalPathProbe probe(g, L);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int w : g.neighbors(u))
            if (probe.fires(u, w)) out.emplace_back(u, w);
    return out;
}

const char* match_kind_name(MatchKind k) {
    switch (k) {
        case MatchKind::F1: return "F1";
        case MatchKind::F2: return "F2";
        case MatchKind::F3: return "F3";
        case MatchKind::F4: return "F4";
        case MatchKind::F5: return "F5";
    }
    return "?";
}

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::F1: return "F1";
        case StepKind::F2: return "F2";
        case StepKind::F3: return "F3";
        case StepKind::F4: return "F4";
        case StepKind::F5: return "F5";
        case StepKind::PathCollapse: return "path-collapse";
        case StepKind::VertexDeletion: return "vertex-deletion";
    }
    return "?";
}

std::vector<ConfigMatch> detect_forbidden(const Graph& g, int k, int L) {
    if (k < 2 || L < 2) throw std::invalid_argument("detect_forbidden needs k >= 2, L >= 2");
    std::vector<ConfigMatch> base;

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v).front();
        if (g.degree(u) > 3) continue;
        ConfigMatch m;
        m.kind = MatchKind::F1;
        m.leaf = v;
        m.leaf_neighbor = u;
        m.vertices = {std::min(u, v), std::max(u, v)};
        base.push_back(std::move(m));
    }

    for (const auto& coc : chorded_odd_cycles_upto(g, 2 * k + 3)) {
        for (auto chord : coc.chords) {
            ConfigMatch m;
            m.kind = MatchKind::F2;
            m.cycle = coc.cycle;
            m.chord = chord;
            int l = (int)coc.cycle.size();
            int pi = -1, pj = -1;
            for (int i = 0; i < l; ++i) {
                if (coc.cycle[i] == chord.first) pi = i;
                if (coc.cycle[i] == chord.second) pj = i;
            }
            int d = std::abs(pi - pj);
            int s1 = d + 1, s2 = l - d + 1;
            m.split_odd = s1 % 2 == 1 ? s1 : s2;
            m.split_even = s1 % 2 == 0 ? s1 : s2;
            m.vertices = coc.cycle;
            std::sort(m.vertices.begin(), m.vertices.end());
            base.push_back(std::move(m));
        }
    }

    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) < 4) continue;
        bool fan = true;
        for (int w : g.neighbors(u))
            if (g.degree(w) != 2 && g.degree(w) != 3) {
                fan = false;
                break;
            }
        if (!fan) continue;
        ConfigMatch m;
        m.kind = MatchKind::F3;
        m.fan_center = u;
        m.vertices = g.neighbors(u);
        m.vertices.push_back(u);
        std::sort(m.vertices.begin(), m.vertices.end());
        base.push_back(std::move(m));
    }

    for (const auto& path : degree2_induced_paths_of_length(g, L + 1)) {
        ConfigMatch m;
        m.kind = MatchKind::F4;
        m.path = path;
        m.vertices = path;
        std::sort(m.vertices.begin(), m.vertices.end());
        base.push_back(std::move(m));
    }

    std::stable_sort(base.begin(), base.end(), [](const ConfigMatch& a, const ConfigMatch& b) {
        if (a.kind != b.kind) return (int)a.kind < (int)b.kind;
        return a.vertices < b.vertices;
    });

    std::vector<ConfigMatch> out = base;
    for (size_t i = 0; i < base.size(); ++i) {
        for (size_t j = i + 1; j < base.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(base[i].vertices.begin(), base[i].vertices.end(),
                                  base[j].vertices.begin(), base[j].vertices.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            ConfigMatch m;
            m.kind = MatchKind::F5;
            m.parts = {base[i], base[j]};
            std::set_union(base[i].vertices.begin(), base[i].vertices.end(),
                           base[j].vertices.begin(), base[j].vertices.end(),
                           std::back_inserter(m.vertices));
            out.push_back(std::move(m));
        }
    }
    return out;
}

bool validate_match(const Graph& g, const ConfigMatch& m) {
    int n = g.vertex_count();
    auto in_range = [&](int v) { return 0 <= v && v < n; };
    switch (m.kind) {
        case MatchKind::F1:
            return in_range(m.leaf) && in_range(m.leaf_neighbor) && g.degree(m.leaf) == 1 &&
                   g.has_edge(m.leaf, m.leaf_neighbor) && g.degree(m.leaf_neighbor) <= 3;
        case MatchKind::F2: {
            const auto& c = m.cycle;
            int l = (int)c.size();
            if (l < 3 || l % 2 == 0) return false;
            std::vector<char> seen(n, 0);
            for (int v : c) {
                if (!in_range(v) || seen[v]) return false;
                seen[v] = 1;
            }
            for (int i = 0; i < l; ++i)
                if (!g.has_edge(c[i], c[(i + 1) % l])) return false;
            auto chords = cycle_chords(g, c);
            return std::find(chords.begin(), chords.end(), m.chord) != chords.end();
        }
        case MatchKind::F3: {
            if (!in_range(m.fan_center) || g.degree(m.fan_center) < 4) return false;
            for (int w : g.neighbors(m.fan_center))
                if (g.degree(w) != 2 && g.degree(w) != 3) return false;
            return true;
        }
        case MatchKind::F4: {
            if (m.path.size() < 3 || !g.is_induced_path(m.path)) return false;
            for (size_t i = 1; i + 1 < m.path.size(); ++i)
                if (g.degree(m.path[i]) != 2) return false;
            return true;
        }
        case MatchKind::F5:
            if (m.parts.size() != 2) return false;
            if (!validate_match(g, m.parts[0]) || !validate_match(g, m.parts[1])) return false;
            for (int v : m.parts[0].vertices)
                for (int w : m.parts[1].vertices)
                    if (v == w) return true;
            return false;
    }
    return false;
}

namespace {

ReductionStep delete_vertex_core(const Graph& g, int v, int k, StepKind kind) {
    ReductionStep st;
    st.kind = kind;
    st.before = g;
    st.recipe.kind = LiftRecipe::Kind::VertexRemoval;
    st.recipe.removed_vertex = v;
    st.recipe.removed_neighbors = g.neighbors(v);
    st.after = g.remove_vertex(v, &st.recipe.old_of);
    st.audit = make_audit(st.before, st.after, k, false);
    return st;
}

ReductionStep collapse_core(const Graph& g, const std::vector<int>& path, int k) {
    ReductionStep st;
    st.kind = StepKind::PathCollapse;
    st.before = g;
    st.recipe.kind = LiftRecipe::Kind::PathCollapse;
    st.recipe.path = path;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
        std::vector<int> off;
        for (int w : g.neighbors(path[i]))
            if (w != path[i - 1] && w != path[i + 1]) off.push_back(w);
        st.recipe.interior_off_path.push_back(std::move(off));
    }
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    Graph after = g.remove_vertices(interior, &st.recipe.old_of);
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int i = 0; i < after.vertex_count(); ++i) new_id[st.recipe.old_of[i]] = i;
    int a = new_id[path.front()], b = new_id[path.back()];
    st.recipe.added_edge = !after.has_edge(a, b);
    if (st.recipe.added_edge) after.add_edge(a, b);
    st.after = std::move(after);
    st.audit = make_audit(st.before, st.after, k, true);
    return st;
}

} // namespace

ReductionStep collapse_path(const Graph& g, const std::vector<int>& path, int k) {
    if (path.size() < 3 || !g.is_induced_path(path))
        throw NotInducedPath("collapse_path needs an induced path of length >= 2");
    return collapse_core(g, path, k);
}

ReductionStep delete_vertex_step(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    return delete_vertex_core(g, v, k, StepKind::VertexDeletion);
}

ReductionStep apply_reduction(const Graph& g, const ConfigMatch& m, int k) {
    if (!validate_match(g, m)) throw StaleMatch("match no longer validates");
    switch (m.kind) {
        case MatchKind::F1:
            return delete_vertex_core(g, m.leaf, k, StepKind::F1);
        case MatchKind::F2: {
            ReductionStep st;
            st.kind = StepKind::F2;
            st.before = g;
            Graph after = g;
            after.remove_edge(m.chord.first, m.chord.second);
            st.after = std::move(after);
            st.recipe.kind = LiftRecipe::Kind::EdgeRemoval;
            st.recipe.removed_edge = m.chord;
            st.recipe.old_of = identity_map(g.vertex_count());
            st.audit = make_audit(st.before, st.after, k, false);
            return st;
        }
        case MatchKind::F3: {
            int victim = -1;
            for (int w : g.neighbors(m.fan_center))
                if (g.degree(w) == 2) {
                    victim = w;
                    break;
                }
            if (victim < 0) victim = g.neighbors(m.fan_center).front();
            return delete_vertex_core(g, victim, k, StepKind::F3);
        }
        case MatchKind::F4: {
            ReductionStep st = collapse_core(g, m.path, k);
            st.kind = StepKind::F4;
            return st;
        }
        case MatchKind::F5: {
            const ConfigMatch& pick =
                (int)m.parts[0].kind <= (int)m.parts[1].kind ? m.parts[0] : m.parts[1];
            ReductionStep st = apply_reduction(g, pick, k);
            st.kind = StepKind::F5;
            return st;
        }
    }
    throw std::logic_error("unreachable");
}

const char* lift_fail_reason_name(LiftFailReason r) {
    switch (r) {
        case LiftFailReason::NoWalk: return "no-walk";
        case LiftFailReason::NoCommonNeighbor: return "no-common-neighbor";
        case LiftFailReason::EdgeConstraintViolated: return "edge-constraint-violated";
    }
    return "?";
}

namespace {

struct Bitset {
    int words;
    std::vector<uint64_t> b;
    explicit Bitset(int n) : words((n + 63) / 64), b(words, 0) {}
    void set(int i) { b[i / 64] |= 1ull << (i % 64); }
    bool get(int i) const { return (b[i / 64] >> (i % 64)) & 1; }
    bool any() const {
        for (uint64_t w : b)
            if (w) return true;
        return false;
    }
    Bitset& operator&=(const Bitset& o) {
        for (int i = 0; i < words; ++i) b[i] &= o.b[i];
        return *this;
    }
};

Bitset neighbors_of_set(const Graph& g, const Bitset& s) {
    Bitset out((int)g.vertex_count());
    for (int blk = 0; blk < s.words; ++blk) {
        uint64_t m = s.b[blk];
        while (m) {
            int v = blk * 64 + std::countr_zero(m);
            m &= m - 1;
            for (int w : g.neighbors(v)) out.set(w);
        }
    }
    return out;
}

} // namespace

LiftOutcome lift_coloring(const ReductionStep& step, const Homomorphism& h_after,
                          const KneserParams& p) {
    KneserGraph kg = kneser_graph(p);
    int na = step.after.vertex_count();
    if ((int)h_after.map.size() != na)
        throw TargetMismatch("map length does not match the reduced graph");
    for (int v : h_after.map)
        if (v < 0 || v >= kg.graph.vertex_count())
            throw TargetMismatch("map value is not a vertex of " + p.str());

    const LiftRecipe& r = step.recipe;
    int nb = step.before.vertex_count();
    // the edge joining collapsed-path endpoints is an artifact of the
    // reduction; its constraint is dropped when re-expanding
    std::pair<int, int> skip{-1, -1};
    if (r.kind == LiftRecipe::Kind::PathCollapse && r.added_edge) {
        std::vector<int> new_id(nb, -1);
        for (int i = 0; i < na; ++i) new_id[r.old_of[i]] = i;
        int a = new_id[r.path.front()], b = new_id[r.path.back()];
        skip = {std::min(a, b), std::max(a, b)};
    }
    for (auto [u, v] : step.after.edges()) {
        if (std::pair<int, int>{u, v} == skip) continue;
        if (!kg.graph.has_edge(h_after.map[u], h_after.map[v]))
            throw TargetMismatch("h_after is not a homomorphism into " + p.str());
    }
    std::vector<int> hb(nb, -1);
    for (int i = 0; i < na; ++i) hb[r.old_of[i]] = h_after.map[i];

    LiftOutcome out;
    switch (r.kind) {
        case LiftRecipe::Kind::VertexRemoval: {
            std::vector<KSubset> colors;
            for (int w : r.removed_neighbors) colors.push_back(kg.labels[hb[w]]);
            auto c = find_common_neighbor(p, colors);
            if (!c) {
                out.reason = LiftFailReason::NoCommonNeighbor;
                return out;
            }
            hb[r.removed_vertex] = kg.index_of(*c);
            break;
        }
        case LiftRecipe::Kind::EdgeRemoval: {
            if (!kg.graph.has_edge(hb[r.removed_edge.first], hb[r.removed_edge.second])) {
                out.reason = LiftFailReason::EdgeConstraintViolated;
                return out;
            }
            break;
        }
        case LiftRecipe::Kind::PathCollapse: {
            int len = (int)r.path.size() - 1;
            int nv = kg.graph.vertex_count();
            // per-position allowed colors (interior: disjoint from the colors
            // of the vertex's off-path neighbors)
            std::vector<Bitset> allowed(len + 1, Bitset(nv));
            allowed[0].set(hb[r.path.front()]);
            allowed[len].set(hb[r.path.back()]);
            for (int i = 1; i < len; ++i) {
                uint64_t blocked = 0;
                for (int x : r.interior_off_path[i - 1]) blocked |= kg.labels[hb[x]].bits;
                for (int c = 0; c < nv; ++c)
                    if ((kg.labels[c].bits & blocked) == 0) allowed[i].set(c);
            }
            std::vector<Bitset> fwd(len + 1, Bitset(nv)), bwd(len + 1, Bitset(nv));
            fwd[0] = allowed[0];
            for (int i = 1; i <= len; ++i) {
                fwd[i] = neighbors_of_set(kg.graph, fwd[i - 1]);
                fwd[i] &= allowed[i];
            }
            if (!fwd[len].any()) {
                out.reason = LiftFailReason::NoWalk;
                return out;
            }
            bwd[len] = allowed[len];
            for (int i = len - 1; i >= 0; --i) {
                bwd[i] = neighbors_of_set(kg.graph, bwd[i + 1]);
                bwd[i] &= allowed[i];
            }
            int cur = hb[r.path.front()];
            for (int i = 1; i < len; ++i) {
                int pick = -1;
                for (int c : kg.graph.neighbors(cur)) {
                    if (fwd[i].get(c) && bwd[i].get(c)) {
                        pick = c;
                        break;
                    }
                }
                assert(pick >= 0);
                hb[r.path[i]] = pick;
                cur = pick;
            }
            break;
        }
    }

    Homomorphism hom{hb};
    if (!verify_hom(step.before, kg.graph, hom).empty())
        throw std::logic_error("lift produced an invalid homomorphism");
    out.lifted = true;
    out.hom = hom;
    return out;
}

} // namespace crlab
