#pragma once

#include "crlab/graph.hpp"
#include "crlab/rational.hpp"

#include <string>
#include <vector>

namespace crlab {

// Charge redistribution rules:
//   R1  each vertex of degree >= 4 sends r1_amount to each neighbor of
//       degree 1 or 2 (or degree 2 only, when r1_includes_degree1 is off)
//   R2  each vertex on a chorded odd cycle of length <= 2k+3 sends r2_amount
//       to its successor around the cycle
//   R3  each endpoint of each maximal induced path of length > L sends
//       r3_amount to its path-neighbor
enum class Rule { R1, R2, R3 };

const char* rule_name(Rule r);

struct Transfer {
    int round;
    Rule rule;
    int from, to;
    Rational amount;
};

struct ChargeState {
    std::vector<Rational> charges;
    std::vector<Transfer> log;

    Rational total() const;
};

struct RuleVariant {
    bool r1_includes_degree1 = true; // default per the main rule statement
    Rational r1_amount{1, 2};
    Rational r2_amount{1, 4};
    Rational r3_amount{1, 2};
};

// charge(v) = deg(v); total is 2|E|.
ChargeState init_charges(const Graph& g);

// The structural (rule, from, to) triples the rules make eligible on g,
// sorted by rule then labels. Each fires at most once per run.
std::vector<std::tuple<Rule, int, int>> eligible_transfers(const Graph& g, int k, int L,
                                                           const RuleVariant& variant = {});

// Synchronous rounds: all transfers of a round are computed from the
// round-start state and applied together; a given (rule, from, to) fires at
// most once per run, so rounds stop when nothing new is eligible. Rule order
// R1 -> R2 -> R3, pairs by label. Throws NonTermination past |V|*|E| rounds.
ChargeState run_discharging(const Graph& g, int k, int L, ChargeState s,
                            const RuleVariant& variant = {});

struct ChargeAudit {
    Rational total;
    long long expected = 0; // 2|E|
    bool balanced = false;
    std::vector<std::pair<int, Rational>> final_charges;
    std::vector<int> deficit_vertices; // charge < 0
};

ChargeAudit audit_charges(const Graph& g, const ChargeState& s);

// "round,rule,from,to,amount" with amounts as "p/q"
std::string transfer_log_csv(const ChargeState& s);

} // namespace crlab
