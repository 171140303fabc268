// Systematic parameter enumeration over the group catalog.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdp/rules.hpp"

namespace wdp {

struct CorpusOptions {
    int max_group_order = 64;
    int jobs = 1;
    bool twist_reduce = true;  // one representative per twist orbit
    Residue p = Residue::unspecified;
};

struct CorpusEntry {
    std::string key;  // canonical parameter key, used for ordering
    int group_pos = 0;
    CrossValidation cv;
};

struct CorpusResult {
    std::vector<CorpusEntry> entries;  // sorted by (catalog position, phi, sim)
    std::map<std::string, long> label_counts;
    std::vector<std::string> groups;
    long mismatches = 0;
    long consistency_failures = 0;
    bool ok() const { return mismatches == 0 && consistency_failures == 0; }
};

// Parameters of every catalog group up to the bound; each phi with all its valid sims.
std::vector<GSp4Param> corpus_params(const GroupPtr& g, bool twist_reduce, Residue p = Residue::unspecified);
// True when no linear twist of phi is smaller in canonical order.
bool is_twist_canonical(const WDRep& phi);

CorpusResult run_corpus(const CorpusOptions& opt, const RuleBook& book = RuleBook::builtin());

nlohmann::json corpus_json(const CorpusResult& r);
std::string corpus_markdown(const CorpusResult& r);

}  // namespace wdp
