// Packet-size decision tables and restriction (JH) tables, loaded from data.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdp/gsp4.hpp"

namespace wdp {

struct rules_error : std::runtime_error { using std::runtime_error::runtime_error; };

using Bindings = std::map<std::string, long>;

struct RuleEntry {
    std::string label;
    Bindings when;
    long n = 1;
    std::string i_generators;
    long i_size = 1;
    std::string condition;
    std::string provenance;
};

struct JHCase {
    std::string label;
    Bindings when;
};

struct JHEntry {
    std::string table;
    std::string row;
    std::string family;
    std::string condition;
    std::vector<long> counts;
    Residue p = Residue::unspecified;  // unspecified: row applies for every p
    std::vector<JHCase> cases;
    std::string provenance;
};

class RuleBook {
public:
    static const RuleBook& builtin();
    static RuleBook parse(const std::string& json_text);

    const std::vector<RuleEntry>& rules() const { return rules_; }
    const std::vector<JHEntry>& jh() const { return jh_; }

    // Throws on an unknown label, on a condition the bindings leave unbound, and when no row matches.
    const RuleEntry& predict(const std::string& label, const Bindings& b) const;
    const JHEntry& jh_lookup(const std::string& family, const std::string& condition) const;
    // Rows whose case mapping matches; p-specific rows are kept only if they fit the declared p.
    std::vector<const JHEntry*> jh_rows(const std::string& label, const Bindings& b, Residue p) const;
    // Classifier labels with no rule.
    std::vector<std::string> missing_labels(const std::vector<std::string>& labels) const;

    std::string render_markdown() const;

private:
    std::vector<RuleEntry> rules_;
    std::vector<JHEntry> jh_;
};

struct CrossValidation {
    ClassReport report;
    const RuleEntry* rule = nullptr;
    std::vector<const JHEntry*> jh_rows;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty() && report.ok(); }
};

CrossValidation cross_validate(const GSp4Param& p, const RuleBook& book = RuleBook::builtin());

}  // namespace wdp
