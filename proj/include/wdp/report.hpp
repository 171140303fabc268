// Deterministic JSON and markdown emission for reports.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wdp/clifford.hpp"
#include "wdp/rules.hpp"

namespace wdp {

// {"order": n, "coeffs": ["p/q", ...]} in the power basis mod Phi_n.
nlohmann::json cyclo_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::json& j);

nlohmann::json wdrep_json(const WDRep& r);

nlohmann::json chartable_json(const Group& g);
std::string chartable_markdown(const Group& g);

nlohmann::json class_report_json(const ClassReport& r);
std::string class_report_markdown(const ClassReport& r);
// Schema check for an emitted ClassReport; empty when valid.
std::vector<std::string> validate_class_report_json(const nlohmann::json& j);

nlohmann::json cross_validation_json(const CrossValidation& cv);

nlohmann::json restriction_json(const RestrictionReport& r);
std::string restriction_markdown(const RestrictionReport& r);

// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace wdp
