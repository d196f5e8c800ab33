#include "crlab/discharging.hpp"

#include "crlab/errors.hpp"
#include "crlab/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace crlab {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
    }
    return "?";
}

Rational ChargeState::total() const {
    Rational t(0);
    for (const Rational& c : charges) t += c;
    return t;
}

ChargeState init_charges(const Graph& g) {
    ChargeState s;
    s.charges.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.charges.emplace_back(g.degree(v));
    return s;
}

std::vector<std::tuple<Rule, int, int>> eligible_transfers(const Graph& g, int k, int L,
                                                           const RuleVariant& variant) {
    std::set<std::tuple<int, int, int>> keys;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) < 4) continue;
        for (int w : g.neighbors(u)) {
            int d = g.degree(w);
            if (d == 2 || (d == 1 && variant.r1_includes_degree1))
                keys.insert({(int)Rule::R1, u, w});
        }
    }
    for (const auto& coc : chorded_odd_cycles_upto(g, 2 * k + 3)) {
        int l = (int)coc.cycle.size();
        for (int i = 0; i < l; ++i)
            keys.insert({(int)Rule::R2, coc.cycle[i], coc.cycle[(i + 1) % l]});
    }
    for (auto [u, w] : long_path_endpoint_pairs(g, L))
        keys.insert({(int)Rule::R3, u, w});
    std::vector<std::tuple<Rule, int, int>> out;
    for (auto [rule, from, to] : keys) out.emplace_back((Rule)rule, from, to);
    return out;
}

ChargeState run_discharging(const Graph& g, int k, int L, ChargeState s,
                            const RuleVariant& variant) {
    if (k < 2 || L < 2) throw std::invalid_argument("run_discharging needs k >= 2, L >= 2");
    if ((int)s.charges.size() != g.vertex_count())
        throw std::invalid_argument("charge state does not match the graph");

    // the three rules key on graph structure only; scan once
    using Key = std::tuple<int, int, int>; // (rule, from, to)
    std::set<Key> eligible;
    for (auto [rule, from, to] : eligible_transfers(g, k, L, variant))
        eligible.insert({(int)rule, from, to});

    std::set<Key> fired;
    for (const Transfer& t : s.log) fired.insert({(int)t.rule, t.from, t.to});

    long long cap = (long long)g.vertex_count() * g.edge_count();
    int round = s.log.empty() ? 0 : s.log.back().round;
    for (;;) {
        std::vector<Key> batch;
        for (const Key& key : eligible)
            if (!fired.count(key)) batch.push_back(key);
        if (batch.empty()) break;
        ++round;
        if (round > std::max(cap, 1ll))
            throw NonTermination("discharging exceeded the round cap");
        for (const Key& key : batch) {
            auto [rule, from, to] = key;
            Rational amount = rule == (int)Rule::R1   ? variant.r1_amount
                              : rule == (int)Rule::R2 ? variant.r2_amount
                                                      : variant.r3_amount;
            s.charges[from] -= amount;
            s.charges[to] += amount;
            s.log.push_back({round, (Rule)rule, from, to, amount});
            fired.insert(key);
        }
    }
    return s;
}

ChargeAudit audit_charges(const Graph& g, const ChargeState& s) {
    ChargeAudit a;
    a.total = s.total();
    a.expected = 2ll * g.edge_count();
    a.balanced = a.total == Rational(a.expected);
    for (int v = 0; v < (int)s.charges.size(); ++v) {
        a.final_charges.emplace_back(v, s.charges[v]);
        if (s.charges[v] < Rational(0)) a.deficit_vertices.push_back(v);
    }
    return a;
}

std::string transfer_log_csv(const ChargeState& s) {
    std::string out = "round,rule,from,to,amount\n";
    for (const Transfer& t : s.log) {
        out += std::to_string(t.round);
        out += ",";
        out += rule_name(t.rule);
        out += ",";
        out += std::to_string(t.from);
        out += ",";
        out += std::to_string(t.to);
        out += ",";
        out += t.amount.str();
        out += "\n";
    }
    return out;
}

} // namespace crlab
