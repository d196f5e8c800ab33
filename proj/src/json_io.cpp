#include "crlab/json_io.hpp"

namespace crlab {

using nlohmann::json;

nlohmann::json hom_certificate_json(const Homomorphism& h, const std::string& target) {
    return json{{"map", h.map}, {"target", target}};
}

nlohmann::json obstruction_json(const ObstructionCertificate& c) {
    return json{
        {"kind", "odd-girth-obstruction"},
        {"parameters",
         {{"sourceOddGirth", c.source_odd_girth},
          {"targetOddGirth", c.target_odd_girth.str()}}},
        {"witness", {{"oddCycle", c.witness_cycle}}},
        {"searchNodes", 0},
    };
}

nlohmann::json search_outcome_json(const SearchOutcome& o, const std::string& target) {
    json j{{"status", search_status_name(o.status)}, {"nodes", o.nodes}};
    if (o.witness) j["certificate"] = hom_certificate_json(*o.witness, target);
    if (o.obstruction) j["obstruction"] = obstruction_json(*o.obstruction);
    return j;
}

nlohmann::json embedding_json(const EmbeddingAttempt& a) {
    json j{
        {"kind", "embedding-attempt"},
        {"parameters",
         {{"j", a.j},
          {"k", a.k},
          {"relaxed", a.relaxed},
          {"source", KneserParams{2 * a.j + 1, a.j}.str()},
          {"target", KneserParams{2 * a.k + 3, a.k + 1}.str()}}},
        {"searchNodes", a.nodes},
    };
    json witness{{"status", embedding_status_name(a.status)}};
    if (a.status == EmbeddingStatus::Verified) {
        json map = json::array();
        for (size_t i = 0; i < a.patterns.size(); ++i)
            map.push_back({{"source", a.source_labels[i].str()},
                           {"pattern", a.patterns[i].str()},
                           {"image", a.images[i].str()}});
        witness["map"] = map;
    }
    if (a.obstruction) witness["obstruction"] = obstruction_json(*a.obstruction);
    j["witness"] = witness;
    return j;
}

nlohmann::json audit_json(const ReductionAudit& a) {
    return json{
        {"madBefore", a.mad_before.str()},
        {"madAfter", a.mad_after.str()},
        {"oddGirthBefore", a.og_before.str()},
        {"oddGirthAfter", a.og_after.str()},
        {"madIncreased", a.mad_increased},
        {"oddGirthDropped", a.og_dropped},
        {"oddGirthBelow2k1", a.og_below_2k1},
        {"oddGirthBelow2k3", a.og_below_2k3},
        {"claimViolated", a.claim_violated},
    };
}

nlohmann::json reduction_step_json(const ReductionStep& s) {
    json j{{"kind", step_kind_name(s.kind)}, {"audit", audit_json(s.audit)}};
    json removed = json::array();
    json added = json::array();
    switch (s.recipe.kind) {
        case LiftRecipe::Kind::VertexRemoval:
            removed.push_back(s.recipe.removed_vertex);
            j["neighbors"] = s.recipe.removed_neighbors;
            break;
        case LiftRecipe::Kind::EdgeRemoval:
            j["removedEdge"] = {s.recipe.removed_edge.first, s.recipe.removed_edge.second};
            break;
        case LiftRecipe::Kind::PathCollapse:
            for (size_t i = 1; i + 1 < s.recipe.path.size(); ++i)
                removed.push_back(s.recipe.path[i]);
            j["path"] = s.recipe.path;
            if (s.recipe.added_edge)
                added.push_back({s.recipe.path.front(), s.recipe.path.back()});
            break;
    }
    j["removedVertices"] = removed;
    j["addedEdges"] = added;
    return j;
}

nlohmann::json conjecture_report_json(const ConjectureReport& r) {
    json j{
        {"k", r.k},
        {"mad", r.mad_value.str()},
        {"madBound", r.mad_bound.str()},
        {"oddGirth", r.girth.str()},
        {"oddGirthMin", r.odd_girth_min},
        {"madOk", r.mad_ok},
        {"oddGirthOk", r.odd_girth_ok},
        {"premisesPass", r.premises_pass},
        {"target", r.target.str()},
    };
    if (r.outcome) j["search"] = search_outcome_json(*r.outcome, r.target.str());
    return j;
}

nlohmann::json pipeline_report_json(const PipelineReport& r, const std::string& target) {
    json j{
        {"premise",
         {{"mad", r.mad_value.str()},
          {"madBound", r.mad_bound.str()},
          {"oddGirth", r.girth.str()},
          {"oddGirthMin", r.odd_girth_min},
          {"pass", r.premises_pass}}},
        {"class", std::string(1, class_letter(r.classification.label))},
        {"maxDegree", r.classification.max_degree},
    };
    if (r.classification.long_thread_witness)
        j["longThreadWitness"] = *r.classification.long_thread_witness;
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back(reduction_step_json(s));
    j["steps"] = steps;
    if (r.base_outcome) j["baseOutcome"] = search_outcome_json(*r.base_outcome, target);
    json lifts = json::array();
    for (const auto& l : r.lifts) {
        json lj{{"lifted", l.lifted}};
        if (l.reason) lj["reason"] = lift_fail_reason_name(*l.reason);
        lifts.push_back(lj);
    }
    j["lifts"] = lifts;
    json violations = json::array();
    for (const auto& v : r.claim_violations)
        violations.push_back({{"step", v.step_index}, {"kind", v.kind}, {"detail", v.detail}});
    j["claimViolations"] = violations;
    j["fallbackUsed"] = r.fallback_used;
    if (r.fallback_outcome)
        j["fallbackOutcome"] = search_outcome_json(*r.fallback_outcome, target);
    if (r.final_hom) j["finalHom"] = hom_certificate_json(*r.final_hom, target);
    j["homFound"] = r.final_hom.has_value();
    j["nodes"] = r.total_nodes;
    return j;
}

nlohmann::json charge_audit_json(const ChargeAudit& a) {
    json charges = json::array();
    for (const auto& [v, c] : a.final_charges)
        charges.push_back({{"vertex", v}, {"charge", c.str()}});
    return json{
        {"total", a.total.str()},
        {"expected", a.expected},
        {"balanced", a.balanced},
        {"charges", charges},
        {"deficits", a.deficit_vertices},
    };
}

} // namespace crlab
