#pragma once

#include "crlab/discharging.hpp"
#include "crlab/generate.hpp"
#include "crlab/graph.hpp"
#include "crlab/hom.hpp"
#include "crlab/paths.hpp"
#include "crlab/reductions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crlab {

struct PipelineConfig {
    int k = 2;
    int L = 0; // 0 means the default 3*(2k+3)
    long long node_budget = 100'000'000;
    RuleVariant rule_variant; // used by the discharging CLI path
    int max_reduction_steps = 1000;
    int base_size = 8; // stop reducing at this many vertices
    int threads = 1;

    int effective_L() const { return L > 0 ? L : 3 * (2 * k + 3); }
};

struct ClaimViolation {
    int step_index = -1; // index into steps, -1 when not tied to one
    std::string kind;    // "odd-girth-drop", "mad-increase", "lift-failed"
    std::string detail;
};

// Reduce-solve-lift record for one input graph. final_hom, when present, is
// verified against the original input.
struct PipelineReport {
    Rational mad_value;
    OddGirth girth;
    Rational mad_bound;
    int odd_girth_min = 0;
    bool premises_pass = false;

    GraphClass classification; // of the original input
    std::vector<ReductionStep> steps;
    std::optional<SearchOutcome> base_outcome; // on the fully reduced graph
    std::vector<LiftOutcome> lifts;            // in lift order (last step first)
    std::optional<Homomorphism> final_hom;
    std::vector<ClaimViolation> claim_violations;
    bool fallback_used = false;
    std::optional<SearchOutcome> fallback_outcome; // direct search on the input
    long long total_nodes = 0;
};

// Classify; reduce by the class strategy (A: F1 then F4, B: delete a
// max-degree vertex, C: collapse the longest induced path, D: collapse then
// delete) until the graph is small or nothing applies; solve the base by
// search into K(2k+1,k); lift back step by step. Failed lifts and violated
// audits are recorded and trigger a direct search on the original input, so
// the report always states whether a homomorphism exists (within budget).
PipelineReport run_pipeline(const Graph& g, const PipelineConfig& cfg);

struct ExperimentRow {
    std::string graph6;
    Rational mad_value;
    OddGirth girth;
    char cls;
    int steps = 0;
    bool hom_found = false;
    int claim_violations = 0;
    long long nodes = 0;
    long long millis = 0;
};

struct ExperimentResult {
    std::vector<Graph> graphs;
    std::vector<PipelineReport> reports;
    std::vector<ExperimentRow> rows;
};

// count constrained graphs (premises of level cfg.k), one pipeline run each.
// Row i uses seed + i, so output is deterministic for a fixed seed (the
// millis column aside) and independent of the worker count.
ExperimentResult run_experiment(int count, int n, const PipelineConfig& cfg,
                                uint64_t seed, int workers = 1);

// "graph6,mad,oddGirth,class,steps,homFound,claimViolations,nodes,millis"
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

} // namespace crlab
