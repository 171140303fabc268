// Restriction of irreducibles to a normal subgroup with elementary abelian 2-group quotient.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wdp/model.hpp"

namespace wdp {

struct clifford_error : std::runtime_error { using std::runtime_error::runtime_error; };

struct IrrepRestriction {
    int irrep = 0;
    std::vector<std::pair<int, long>> constituents;  // (irrep of H, multiplicity)
    bool multiplicity_free = true;
    std::vector<int> i_h;          // linear characters trivial on H fixing pi
    std::vector<int> n_pi;         // common kernel of i_h
    std::vector<int> stabilizer;   // stabilizer in G of the first constituent
    long orbit_size = 0;           // G-orbit of the first constituent
    bool single_orbit = true;      // constituents form one G-orbit
    // Only evaluated when multiplicity_free.
    bool lemmas_checked = false;
    bool jh_equals_i = true;       // #constituents == #I_H(pi)
    bool simply_transitive = true; // stabilizer == N_pi
};

struct RestrictionReport {
    std::string group;
    std::vector<int> h_members;
    int k = 0;  // G/H = (Z/2)^k
    std::vector<IrrepRestriction> irreps;
    bool hypothesis_holds = true;  // every restriction multiplicity free
    bool twist_pairs_ok = true;    // irreps sharing a constituent differ by a character of G/H
    bool frobenius_ok = true;      // Res multiplicities equal independently induced multiplicities
    std::vector<std::string> failures;  // lemma or bookkeeping failures; hypothesis failures are not listed
    bool ok() const { return failures.empty(); }
};

RestrictionReport restrict_analyze(const Group& g, const std::vector<int>& h_members);

// Every proper normal H with G/H elementary abelian 2, as common kernels of quadratic characters.
std::vector<std::vector<int>> elementary_two_quotients(const Group& g);

}  // namespace wdp
