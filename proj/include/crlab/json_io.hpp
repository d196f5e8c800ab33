#pragma once

#include "crlab/discharging.hpp"
#include "crlab/hom.hpp"
#include "crlab/kneser.hpp"
#include "crlab/pipeline.hpp"
#include "crlab/reductions.hpp"

#include <json.hpp>

#include <string>

namespace crlab {

// Certificate and report serialization. Homomorphism certificates are
// {"map": [...], "target": "kneser:n,k" | "graph6:<string>"}; search and
// audit certificates carry kind/parameters/witness/searchNodes.

nlohmann::json hom_certificate_json(const Homomorphism& h, const std::string& target);
nlohmann::json search_outcome_json(const SearchOutcome& o, const std::string& target);
nlohmann::json obstruction_json(const ObstructionCertificate& c);
nlohmann::json embedding_json(const EmbeddingAttempt& a);
nlohmann::json audit_json(const ReductionAudit& a);
nlohmann::json reduction_step_json(const ReductionStep& s);
nlohmann::json conjecture_report_json(const ConjectureReport& r);
nlohmann::json pipeline_report_json(const PipelineReport& r, const std::string& target);
nlohmann::json charge_audit_json(const ChargeAudit& a);

} // namespace crlab
