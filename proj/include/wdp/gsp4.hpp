// GSp4 parameters: similitude validation, std, twist groups, component groups, classification.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdp/wdrep.hpp"

namespace wdp {

enum class Residue { unspecified, two, odd };
const char* residue_name(Residue p);
Residue parse_residue(const std::string& s);

struct param_error : std::runtime_error {
    std::string condition;
    param_error(std::string cond, const std::string& msg) : std::runtime_error(msg), condition(std::move(cond)) {}
};

// An internal identity failed; never raised for valid input.
struct invariant_error : std::runtime_error { using std::runtime_error::runtime_error; };

struct GSp4Param {
    WDRep phi;
    int sim = 0;
    Residue p = Residue::unspecified;
    std::vector<int> sim_candidates;  // every valid similitude character, ascending
};

// Empty when (phi, sim) is a symplectic-similitude parameter, else the failing condition.
std::string similitude_failure(const WDRep& phi, int sim);
std::vector<int> valid_sims(const WDRep& phi);
// With sim omitted the smallest valid similitude character is chosen; all are recorded.
GSp4Param validate_param(const WDRep& phi, std::optional<int> sim = std::nullopt, Residue p = Residue::unspecified);

WDRep std_of(const GSp4Param& p);
std::vector<int> i_group(const GSp4Param& p);
// Quadratic characters (trivial included) fixing an irreducible WD piece under twisting.
std::vector<int> self_twists(const Group& g, int irrep);

struct SOComponentGroup {
    int r = 0;
    long size = 1;
};
SOComponentGroup component_group_so(const WDRep& psi);

int a_size_gsp4(const GSp4Param& p);

struct PacketSize {
    long path_a = 0;  // from the component group of std
    long path_b = 0;  // #A_phi * #I(phi)
    int a_phi = 1;
    int i_size = 1;
    int r = 0;
    bool discrete = false;
    bool agree() const { return path_a == path_b; }
};
PacketSize packet_size_n(const GSp4Param& p);

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct StdConstituent {
    int irrep;
    int n;
    long mult;
    bool self_dual;
    SelfDualType type;
};

struct ClassReport {
    std::string group;
    GSp4Param param;
    std::vector<StdConstituent> std_decomposition;
    std::string case_label;
    std::vector<int> i_phi;
    int a_phi_size = 1;
    long a_std_size = 1;
    long n = 1;
    int r = 0;
    std::map<std::string, std::string> witnesses;
    std::map<std::string, long> bindings;
    std::vector<Check> consistency;
    std::vector<std::string> warnings;
    bool p_conflict = false;  // declared p contradicts the model
    bool ok() const;
    void check(const std::string& name, bool pass, const std::string& detail = "");
};

ClassReport classify_param(const GSp4Param& p);

// Every label classify_param can emit.
const std::vector<std::string>& classifier_labels();

// Effective WD representations of the given dimension, in canonical order.
std::vector<WDRep> enumerate_wdreps(const GroupPtr& g, long dim);

struct LiftCandidate {
    GroupPtr group;
    std::vector<int> inflation;  // irrep of the base group -> irrep of the candidate
};
// Pulls psi back along a candidate's inflation map; throws param_error if the map is malformed.
WDRep pullback(const WDRep& psi, const LiftCandidate& c);
std::optional<GSp4Param> lift_search(const WDRep& psi, const std::vector<LiftCandidate>& candidates, int jobs = 1);

}  // namespace wdp
