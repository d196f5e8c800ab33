#include "crlab/hom.hpp"

#include "crlab/errors.hpp"
#include "crlab/mad.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crlab {

namespace {

struct Domains {
    int words = 0;
    std::vector<uint64_t> bits; // ns rows x words

    uint64_t* row(int v) { return bits.data() + (size_t)v * words; }
    const uint64_t* row(int v) const { return bits.data() + (size_t)v * words; }

    int count(int v) const {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(row(v)[w]);
        return c;
    }
    bool empty_row(int v) const {
        for (int w = 0; w < words; ++w)
            if (row(v)[w]) return false;
        return true;
    }
};

struct HomSolver {
    const Graph& src;
    int ns, nt, words;
    std::vector<uint64_t> tadj; // target adjacency rows, nt x words
    long long budget;
    std::atomic<long long>* nodes;          // shared across workers
    std::atomic<bool>* stop;                // set when any worker found a witness
    std::function<void(long long)> progress;
    long long last_report = 0;

    std::vector<int> result;
    bool exceeded = false;
    bool aborted = false;

    HomSolver(const Graph& s, const Graph& t, long long budget,
              std::atomic<long long>* nodes, std::atomic<bool>* stop)
        : src(s), ns(s.vertex_count()), nt(t.vertex_count()),
          words((t.vertex_count() + 63) / 64), budget(budget), nodes(nodes), stop(stop) {
        tadj.assign((size_t)nt * words, 0);
        for (int v = 0; v < nt; ++v)
            for (int w : t.neighbors(v)) tadj[(size_t)v * words + w / 64] |= 1ull << (w % 64);
    }

    Domains full_domains() const {
        Domains d;
        d.words = words;
        d.bits.assign((size_t)ns * words, 0);
        for (int v = 0; v < ns; ++v) {
            for (int w = 0; w < words; ++w) d.row(v)[w] = ~0ull;
            int spare = words * 64 - nt;
            if (spare) d.row(v)[words - 1] = ~0ull >> spare;
        }
        return d;
    }

    // D(w) &= union of target neighborhoods over D(u); true if changed
    bool revise(Domains& d, int w, int u, bool* wipe) const {
        std::vector<uint64_t> support(words, 0);
        const uint64_t* du = d.row(u);
        for (int blk = 0; blk < words; ++blk) {
            uint64_t m = du[blk];
            while (m) {
                int a = blk * 64 + std::countr_zero(m);
                m &= m - 1;
                const uint64_t* na = &tadj[(size_t)a * words];
                for (int i = 0; i < words; ++i) support[i] |= na[i];
            }
        }
        bool changed = false, any = false;
        uint64_t* dw = d.row(w);
        for (int i = 0; i < words; ++i) {
            uint64_t nv = dw[i] & support[i];
            if (nv != dw[i]) changed = true;
            dw[i] = nv;
            any |= nv != 0;
        }
        *wipe = !any;
        return changed;
    }

    // AC-3 to fixpoint from the seed vertices; false on wipeout
    bool propagate(Domains& d, std::vector<int> queue) const {
        std::vector<char> queued(ns, 0);
        for (int v : queue) queued[v] = 1;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            queued[u] = 0;
            for (int w : src.neighbors(u)) {
                bool wipe = false;
                if (revise(d, w, u, &wipe)) {
                    if (wipe) return false;
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return true;
    }

    int pick_vertex(const Domains& d, const std::vector<char>& assigned) const {
        int best = -1, best_count = 0;
        for (int v = 0; v < ns; ++v) {
            if (assigned[v]) continue;
            int c = d.count(v);
            if (best < 0 || c < best_count) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    bool charge_node() {
        long long n = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if (progress && n - last_report >= 1'000'000) {
            last_report = n;
            progress(n);
        }
        if (n > budget) {
            exceeded = true;
            return false;
        }
        return true;
    }

    // true when a full assignment was reached
    bool search(Domains& d, std::vector<char>& assigned, std::vector<int>& value,
                int num_assigned) {
        if (stop && stop->load(std::memory_order_relaxed) && result.empty()) {
            aborted = true;
            return false;
        }
        if (num_assigned == ns) {
            result = value;
            return true;
        }
        int u = pick_vertex(d, assigned);
        const uint64_t* du = d.row(u);
        for (int blk = 0; blk < words; ++blk) {
            uint64_t m = du[blk];
            while (m) {
                int a = blk * 64 + std::countr_zero(m);
                m &= m - 1;
                if (!charge_node()) return false;
                Domains next = d;
                uint64_t* nu = next.row(u);
                for (int i = 0; i < words; ++i) nu[i] = 0;
                nu[a / 64] = 1ull << (a % 64);
                assigned[u] = 1;
                value[u] = a;
                if (propagate(next, {u}) &&
                    search(next, assigned, value, num_assigned + 1))
                    return true;
                assigned[u] = 0;
                value[u] = -1;
                if (exceeded || aborted) return false;
            }
        }
        return false;
    }
};

SearchOutcome serial_outcome(HomSolver& solver, Domains root) {
    std::vector<char> assigned(solver.ns, 0);
    std::vector<int> value(solver.ns, -1);
    SearchOutcome out;
    bool found = solver.search(root, assigned, value, 0);
    out.nodes = solver.nodes->load();
    if (found) {
        out.status = SearchStatus::Found;
        out.witness = Homomorphism{solver.result};
    } else if (solver.exceeded) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::NoneExhaustive;
    }
    return out;
}

} // namespace

SearchOutcome find_hom(const Graph& source, const Graph& target,
                       const SearchOptions& opts) {
    if (target.vertex_count() == 0)
        throw std::invalid_argument("find_hom: empty target");

    SearchOutcome out;
    if (auto cert = refute_hom_by_odd_girth(source, target)) {
        out.status = SearchStatus::Refuted;
        out.obstruction = cert;
        return out;
    }
    if (source.vertex_count() == 0) {
        out.status = SearchStatus::Found;
        out.witness = Homomorphism{{}};
        return out;
    }

    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    HomSolver solver(source, target, opts.budget, &nodes, nullptr);
    solver.progress = opts.progress;
    Domains root = solver.full_domains();
    std::vector<int> all(source.vertex_count());
    for (int v = 0; v < source.vertex_count(); ++v) all[v] = v;
    if (!solver.propagate(root, all)) {
        out.status = SearchStatus::NoneExhaustive;
        out.nodes = 0;
        return out;
    }

    int threads = std::max(1, opts.threads);
#ifndef _OPENMP
    threads = 1;
#endif
    if (threads == 1) return serial_outcome(solver, std::move(root));

#ifdef _OPENMP
    // split the branch space on the first chosen vertex; workers share the
    // node budget and a stop flag
    std::vector<char> assigned0(solver.ns, 0);
    int u0 = solver.pick_vertex(root, assigned0);
    std::vector<int> branch_values;
    const uint64_t* du = root.row(u0);
    for (int blk = 0; blk < solver.words; ++blk) {
        uint64_t m = du[blk];
        while (m) {
            branch_values.push_back(blk * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    int nb = (int)branch_values.size();
    std::vector<int> status(nb, -1); // 0 none, 1 found, 2 exceeded, 3 aborted
    std::vector<std::vector<int>> witnesses(nb);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int b = 0; b < nb; ++b) {
        if (stop.load(std::memory_order_relaxed)) {
            status[b] = 3;
            continue;
        }
        HomSolver worker(source, target, opts.budget, &nodes, &stop);
        Domains d = root;
        int a = branch_values[b];
        uint64_t* row = d.row(u0);
        for (int i = 0; i < worker.words; ++i) row[i] = 0;
        row[a / 64] = 1ull << (a % 64);
        std::vector<char> assigned(worker.ns, 0);
        std::vector<int> value(worker.ns, -1);
        assigned[u0] = 1;
        value[u0] = a;
        bool found = false;
        if (worker.charge_node() && worker.propagate(d, {u0}))
            found = worker.search(d, assigned, value, 1);
        if (found) {
            status[b] = 1;
            witnesses[b] = worker.result;
            stop.store(true, std::memory_order_relaxed);
        } else if (worker.exceeded) {
            status[b] = 2;
        } else if (worker.aborted) {
            status[b] = 3;
        } else {
            status[b] = 0;
        }
    }
    out.nodes = nodes.load();
    for (int b = 0; b < nb; ++b) {
        if (status[b] == 1) {
            out.status = SearchStatus::Found;
            out.witness = Homomorphism{witnesses[b]};
            return out;
        }
    }
    bool exceeded = std::count(status.begin(), status.end(), 2) > 0;
    out.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NoneExhaustive;
    return out;
#else
    return serial_outcome(solver, std::move(root));
#endif
}

SearchOutcome find_hom(const Graph& source, const Graph& target, long long budget) {
    SearchOptions opts;
    opts.budget = budget;
    return find_hom(source, target, opts);
}

std::vector<std::pair<int, int>> verify_hom(const Graph& source, const Graph& target,
                                            const Homomorphism& h) {
    if ((int)h.map.size() != source.vertex_count())
        throw ShapeMismatch("map length " + std::to_string(h.map.size()) + " for " +
                            std::to_string(source.vertex_count()) + " vertices");
    for (int v : h.map)
        if (v < 0 || v >= target.vertex_count())
            throw ShapeMismatch("map value out of target range");
    std::vector<std::pair<int, int>> violations;
    for (auto [u, v] : source.edges())
        if (!target.has_edge(h.map[u], h.map[v])) violations.emplace_back(u, v);
    return violations;
}

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneExhaustive: return "none-exhaustive";
        case SearchStatus::Refuted: return "refuted";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

ConjectureReport conjecture_instance(const Graph& g, int k, const SearchOptions& opts) {
    if (k < 2) throw std::invalid_argument("conjecture_instance needs k >= 2");
    ConjectureReport rep;
    rep.k = k;
    rep.mad_value = mad(g);
    rep.girth = odd_girth(g);
    rep.mad_bound = Rational(2 * k + 1, k);
    rep.odd_girth_min = 2 * k + 1;
    rep.mad_ok = rep.mad_value < rep.mad_bound;
    rep.odd_girth_ok = rep.girth >= rep.odd_girth_min;
    rep.premises_pass = rep.mad_ok && rep.odd_girth_ok;
    rep.target = KneserParams{2 * k + 1, k};
    if (rep.premises_pass) {
        KneserGraph kg = kneser_graph(rep.target);
        rep.outcome = find_hom(g, kg.graph, opts);
    }
    return rep;
}

} // namespace crlab
