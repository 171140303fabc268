// Invariant suite shared by `wdpack verify` and the acceptance binary.
#pragma once

#include <string>
#include <vector>

#include "wdp/corpus.hpp"

namespace wdp {

struct CriterionResult {
    int id = 0;
    std::string title;
    long checks = 0;
    std::vector<std::string> failures;
    std::string note;
    bool pass() const { return checks > 0 && failures.empty(); }
};

// Brute-force subgroup lattice: every subgroup, sorted member lists, in lexicographic order.
std::vector<std::vector<int>> all_subgroups(const GroupTable& t);
// One subgroup from each conjugacy class.
std::vector<std::vector<int>> subgroup_class_reps(const GroupTable& t);

// Element-level induction: Ind_H psi evaluated at every element of G.
std::vector<Cyclo> induced_values(const Group& g, const Subgroup& h, int psi);

struct VerifyOptions {
    int max_group_order = 64;
    int jobs = 1;
};

CriterionResult check_character_core(const VerifyOptions& opt);
CriterionResult check_wedge_identity(const VerifyOptions& opt);
// Criteria 3, 4, 6 and 8 read the untwisted corpus (every phi, every sim).
CriterionResult check_cardinality(const CorpusResult& full);
CriterionResult check_size_bound(const CorpusResult& full);
CriterionResult check_named_instances();
CriterionResult check_primitive_equivalence(const CorpusResult& full);
CriterionResult check_clifford(const VerifyOptions& opt);
CriterionResult check_rules(const CorpusResult& full);
CriterionResult check_determinism(const VerifyOptions& opt);

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt);

}  // namespace wdp
