// crlab: exact graph parameters, Kneser homomorphism search, local
// reductions, discharging, and audited certificates, driven by graph6 files.
//
// Exit codes: 0 success (for audit subcommands a conclusively found violation
// is a success and exits 0 with its certificate), 1 audited-claim violation
// in pipeline/experiment output or an inconclusive audit, 2 input error.

#include "crlab/errors.hpp"
#include "crlab/json_io.hpp"
#include "crlab/mad.hpp"
#include "crlab/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace crlab;

namespace {

int env_threads() {
    const char* v = std::getenv("CRLAB_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

std::vector<Graph> load_graphs(const std::string& path) {
    if (path == "-") {
        std::vector<Graph> out;
        std::string line;
        while (std::getline(std::cin, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) out.push_back(parse_graph6(line));
        }
        return out;
    }
    return read_graph6_file(path);
}

Graph parse_target(const std::string& spec, KneserParams* kp) {
    if (spec.rfind("kneser:", 0) == 0) {
        auto comma = spec.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad target: " + spec);
        KneserParams p{std::stoi(spec.substr(7, comma - 7)), std::stoi(spec.substr(comma + 1))};
        if (kp) *kp = p;
        return kneser_graph(p).graph;
    }
    if (spec.rfind("graph6:", 0) == 0) return parse_graph6(spec.substr(7));
    throw std::invalid_argument("target must be kneser:n,k or graph6:<string>");
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for sparse-graph homomorphisms into Kneser graphs"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path, target_spec, path_spec, log_path;
    int k = 2, j = 2, L = 0, n = 0, count = 0, base_size = 8, max_steps = 1000;
    long long seed = 1;
    double budget = 1e8;
    bool relaxed = false, r1_deg2_only = false, stats = false, verbose = false;
    int threads = env_threads();

    auto* c_mad = app.add_subcommand("mad", "exact maximum average degree, one per line");
    c_mad->add_option("--in", in_path);

    auto* c_og = app.add_subcommand("oddgirth", "odd girth, one per line");
    c_og->add_option("--in", in_path);

    auto* c_cls = app.add_subcommand("classify", "degree/thread class A-D, one per line");
    c_cls->add_option("--in", in_path);
    c_cls->add_option("--L", L, "thread threshold (default 3*(2k+3))");
    c_cls->add_option("--k", k);

    auto* c_hom = app.add_subcommand("hom", "search for a homomorphism, JSON per graph");
    c_hom->add_option("--in", in_path);
    c_hom->add_option("--target", target_spec)->required();
    c_hom->add_option("--budget", budget);
    c_hom->add_option("--threads", threads);
    c_hom->add_flag("--verbose", verbose, "progress to stderr every 1e6 nodes");

    auto* c_pipe = app.add_subcommand("pipeline", "reduce, solve the base, lift; JSON per graph");
    c_pipe->add_option("--in", in_path);
    c_pipe->add_option("--k", k)->required();
    c_pipe->add_option("--L", L);
    c_pipe->add_option("--budget", budget);
    c_pipe->add_option("--max-steps", max_steps);
    c_pipe->add_option("--base-size", base_size);
    c_pipe->add_option("--threads", threads);

    auto* c_exp = app.add_subcommand("experiment", "batch pipeline runs over generated graphs, CSV");
    c_exp->add_option("--count", count)->required();
    c_exp->add_option("--n", n)->required();
    c_exp->add_option("--k", k)->required();
    c_exp->add_option("--seed", seed);
    c_exp->add_option("--L", L);
    c_exp->add_option("--budget", budget);
    c_exp->add_option("--workers", threads, "row workers (default CRLAB_THREADS)");
    c_exp->add_option("--out", out_path);

    auto* c_emb = app.add_subcommand("audit-embedding",
                                     "exhaustive search for the pattern embedding, JSON");
    c_emb->add_option("--j", j)->required();
    c_emb->add_option("--k", k)->required();
    c_emb->add_option("--budget", budget);
    c_emb->add_flag("--relaxed", relaxed, "draw patterns from S minus X instead of U");

    auto* c_col = app.add_subcommand("audit-collapse", "collapse a path and audit the claims, JSON");
    c_col->add_option("--in", in_path);
    c_col->add_option("--path", path_spec, "comma-separated vertices")->required();
    c_col->add_option("--k", k)->required();

    auto* c_dis = app.add_subcommand("discharge", "run the charge rules, JSON audit");
    c_dis->add_option("--in", in_path);
    c_dis->add_option("--k", k)->required();
    c_dis->add_option("--L", L);
    c_dis->add_flag("--r1-deg2-only", r1_deg2_only, "restrict R1 to degree-2 receivers");
    c_dis->add_option("--log", log_path, "write the transfer log CSV here");

    auto* c_kn = app.add_subcommand("kneser", "emit K(n,k) as graph6");
    c_kn->add_option("--n", n)->required();
    c_kn->add_option("--k", k)->required();
    c_kn->add_flag("--stats", stats, "print counts and odd girth instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_mad) {
            for (const Graph& g : load_graphs(in_path)) std::cout << mad(g).str() << "\n";
        } else if (*c_og) {
            for (const Graph& g : load_graphs(in_path)) std::cout << odd_girth(g).str() << "\n";
        } else if (*c_cls) {
            int eff = L > 0 ? L : 3 * (2 * k + 3);
            for (const Graph& g : load_graphs(in_path))
                std::cout << class_letter(classify(g, eff).label) << "\n";
        } else if (*c_hom) {
            KneserParams kp;
            bool is_kneser = target_spec.rfind("kneser:", 0) == 0;
            Graph target = parse_target(target_spec, &kp);
            SearchOptions opts;
            opts.budget = (long long)budget;
            opts.threads = threads;
            if (verbose)
                opts.progress = [](long long nodes) { std::cerr << "nodes=" << nodes << "\n"; };
            std::string desc = is_kneser ? kp.str() : "graph6:" + write_graph6(target);
            for (const Graph& g : load_graphs(in_path)) {
                SearchOutcome out = find_hom(g, target, opts);
                std::cout << search_outcome_json(out, desc).dump() << "\n";
            }
        } else if (*c_pipe) {
            PipelineConfig cfg;
            cfg.k = k;
            cfg.L = L;
            cfg.node_budget = (long long)budget;
            cfg.max_reduction_steps = max_steps;
            cfg.base_size = base_size;
            cfg.threads = threads;
            int violations = 0;
            for (const Graph& g : load_graphs(in_path)) {
                PipelineReport rep = run_pipeline(g, cfg);
                violations += (int)rep.claim_violations.size();
                std::cout << pipeline_report_json(rep, KneserParams{2 * k + 1, k}.str()).dump()
                          << "\n";
            }
            return violations > 0 ? 1 : 0;
        } else if (*c_exp) {
            PipelineConfig cfg;
            cfg.k = k;
            cfg.L = L;
            cfg.node_budget = (long long)budget;
            ExperimentResult res = run_experiment(count, n, cfg, (uint64_t)seed, threads);
            write_output(out_path, experiment_csv(res.rows));
            int violations = 0;
            for (const ExperimentRow& r : res.rows) violations += r.claim_violations;
            return violations > 0 ? 1 : 0;
        } else if (*c_emb) {
            EmbeddingAttempt a = attempt_embedding(j, k, (long long)budget, relaxed);
            std::cout << embedding_json(a).dump(2) << "\n";
            return a.status == EmbeddingStatus::BudgetExceeded ? 1 : 0;
        } else if (*c_col) {
            auto graphs = load_graphs(in_path);
            if (graphs.size() != 1)
                throw std::invalid_argument("audit-collapse expects exactly one graph");
            ReductionStep st = collapse_path(graphs[0], parse_vertex_list(path_spec), k);
            std::cout << reduction_step_json(st).dump(2) << "\n";
            return 0;
        } else if (*c_dis) {
            int eff = L > 0 ? L : 3 * (2 * k + 3);
            RuleVariant variant;
            variant.r1_includes_degree1 = !r1_deg2_only;
            for (const Graph& g : load_graphs(in_path)) {
                ChargeState s = run_discharging(g, k, eff, init_charges(g), variant);
                std::cout << charge_audit_json(audit_charges(g, s)).dump() << "\n";
                if (!log_path.empty()) write_output(log_path, transfer_log_csv(s));
            }
        } else if (*c_kn) {
            KneserGraph kg = kneser_graph({n, k});
            if (stats) {
                std::cout << kg.params.str() << ": " << kg.graph.vertex_count() << " vertices, "
                          << kg.graph.edge_count() << " edges, odd girth "
                          << odd_girth(kg.graph).str() << "\n";
            } else {
                std::cout << write_graph6(kg.graph) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
