#include "crlab/pipeline.hpp"

#include "crlab/mad.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crlab {

namespace {

int smallest_max_degree_vertex(const Graph& g) {
    int best = -1, d = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d) {
            d = g.degree(v);
            best = v;
        }
    return best;
}

void note_audit_violations(const ReductionStep& st, int index,
                           std::vector<ClaimViolation>& out) {
    if (st.audit.claim_violated) {
        std::string detail = "odd girth " + st.audit.og_before.str() + " -> " +
                             st.audit.og_after.str();
        out.push_back({index, "odd-girth-drop", detail});
    }
    if (st.audit.mad_increased) {
        std::string detail =
            "mad " + st.audit.mad_before.str() + " -> " + st.audit.mad_after.str();
        out.push_back({index, "mad-increase", detail});
    }
}

// one class-strategy step set; empty when no reduction applies
std::vector<ReductionStep> next_steps(const Graph& cur, const PipelineConfig& cfg) {
    GraphClass cls = classify(cur, cfg.effective_L());
    std::vector<ReductionStep> out;
    switch (cls.label) {
        case ClassLabel::A: {
            auto matches = detect_forbidden(cur, cfg.k, cfg.effective_L());
            for (MatchKind want : {MatchKind::F1, MatchKind::F4}) {
                for (const auto& m : matches)
                    if (m.kind == want) {
                        out.push_back(apply_reduction(cur, m, cfg.k));
                        return out;
                    }
            }
            return out;
        }
        case ClassLabel::B:
            out.push_back(delete_vertex_step(cur, smallest_max_degree_vertex(cur), cfg.k));
            return out;
        case ClassLabel::C: {
            std::vector<int> path;
            longest_induced_path_upto(cur, cur.vertex_count(), &path);
            out.push_back(collapse_path(cur, path, cfg.k));
            return out;
        }
        case ClassLabel::D: {
            std::vector<int> path;
            longest_induced_path_upto(cur, cur.vertex_count(), &path);
            out.push_back(collapse_path(cur, path, cfg.k));
            const Graph& after = out.back().after;
            if (after.max_degree() >= 4)
                out.push_back(delete_vertex_step(after, smallest_max_degree_vertex(after), cfg.k));
            return out;
        }
    }
    return out;
}

} // namespace

PipelineReport run_pipeline(const Graph& g, const PipelineConfig& cfg) {
    if (cfg.k < 2 || cfg.effective_L() < 2)
        throw std::invalid_argument("pipeline needs k >= 2 and L >= 2");

    PipelineReport rep;
    rep.mad_value = mad(g);
    rep.girth = odd_girth(g);
    rep.mad_bound = Rational(2 * cfg.k + 1, cfg.k);
    rep.odd_girth_min = 2 * cfg.k + 1;
    rep.premises_pass = rep.mad_value < rep.mad_bound && rep.girth >= rep.odd_girth_min;
    rep.classification = classify(g, cfg.effective_L());
    if (!rep.premises_pass) return rep;

    KneserParams target{2 * cfg.k + 1, cfg.k};
    KneserGraph kg = kneser_graph(target);

    Graph cur = g;
    while (cur.vertex_count() > cfg.base_size &&
           (int)rep.steps.size() < cfg.max_reduction_steps) {
        auto steps = next_steps(cur, cfg);
        if (steps.empty()) break;
        for (ReductionStep& st : steps) {
            assert(st.after.vertex_count() < cur.vertex_count() ||
                   st.after.edge_count() < cur.edge_count());
            cur = st.after;
            note_audit_violations(st, (int)rep.steps.size(), rep.claim_violations);
            rep.steps.push_back(std::move(st));
        }
    }

    SearchOptions opts;
    opts.budget = cfg.node_budget;
    opts.threads = cfg.threads;
    rep.base_outcome = find_hom(cur, kg.graph, opts);
    rep.total_nodes += rep.base_outcome->nodes;

    if (rep.base_outcome->status == SearchStatus::Found) {
        Homomorphism h = *rep.base_outcome->witness;
        bool ok = true;
        for (auto it = rep.steps.rbegin(); it != rep.steps.rend(); ++it) {
            LiftOutcome lift = lift_coloring(*it, h, target);
            rep.lifts.push_back(lift);
            if (!lift.lifted) {
                int idx = (int)(rep.steps.rend() - it) - 1;
                rep.claim_violations.push_back(
                    {idx, "lift-failed", lift_fail_reason_name(*lift.reason)});
                ok = false;
                break;
            }
            h = *lift.hom;
        }
        if (ok) rep.final_hom = h;
    }

    if (!rep.final_hom && !rep.steps.empty()) {
        rep.fallback_used = true;
        rep.fallback_outcome = find_hom(g, kg.graph, opts);
        rep.total_nodes += rep.fallback_outcome->nodes;
        if (rep.fallback_outcome->status == SearchStatus::Found)
            rep.final_hom = rep.fallback_outcome->witness;
    }
    if (rep.final_hom && !verify_hom(g, kg.graph, *rep.final_hom).empty())
        throw std::logic_error("pipeline produced an invalid homomorphism");
    return rep;
}

ExperimentResult run_experiment(int count, int n, const PipelineConfig& cfg,
                                uint64_t seed, int workers) {
    if (count < 1) throw std::invalid_argument("experiment needs count >= 1");
    ExperimentResult res;
    res.graphs.resize(count);
    res.reports.resize(count);
    res.rows.resize(count);

    Rational bound(2 * cfg.k + 1, cfg.k);
    int og_min = 2 * cfg.k + 1;

#ifdef _OPENMP
    int team = std::max(1, workers);
#else
    (void)workers;
    int team = 1;
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (int i = 0; i < count; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Graph g = gen_constrained(n, bound, og_min, seed + (uint64_t)i);
        PipelineReport rep = run_pipeline(g, cfg);
        auto t1 = std::chrono::steady_clock::now();

        ExperimentRow row;
        row.graph6 = write_graph6(g);
        row.mad_value = rep.mad_value;
        row.girth = rep.girth;
        row.cls = class_letter(rep.classification.label);
        row.steps = (int)rep.steps.size();
        row.hom_found = rep.final_hom.has_value();
        row.claim_violations = (int)rep.claim_violations.size();
        row.nodes = rep.total_nodes;
        row.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        res.graphs[i] = std::move(g);
        res.reports[i] = std::move(rep);
        res.rows[i] = std::move(row);
    }
    return res;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::string out = "graph6,mad,oddGirth,class,steps,homFound,claimViolations,nodes,millis\n";
    for (const ExperimentRow& r : rows) {
        out += r.graph6;
        out += ",";
        out += r.mad_value.str();
        out += ",";
        out += r.girth.str();
        out += ",";
        out += r.cls;
        out += ",";
        out += std::to_string(r.steps);
        out += ",";
        out += r.hom_found ? "true" : "false";
        out += ",";
        out += std::to_string(r.claim_violations);
        out += ",";
        out += std::to_string(r.nodes);
        out += ",";
        out += std::to_string(r.millis);
        out += "\n";
    }
    return out;
}

} // namespace crlab
