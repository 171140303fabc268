#include "wdp/clifford.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wdp/charalg.hpp"

namespace wdp {

std::vector<std::vector<int>> elementary_two_quotients(const Group& g) {
    // Subgroups of the quadratic character group, closed one generator at a time.
    std::set<std::set<int>> subs{{0}};
    for (int w : g.quadratic()) {
        std::set<std::set<int>> next = subs;
        for (const auto& s : subs) {
            std::set<int> t = s;
            for (int x : s) t.insert(g.lin_mul(x, w));
            next.insert(t);
        }
        subs = std::move(next);
    }
    std::set<std::vector<int>> out;
    for (const auto& s : subs) {
        if (s.size() == 1) continue;
        out.insert(g.common_kernel(std::vector<int>(s.begin(), s.end())));
    }
    return {out.begin(), out.end()};
}

RestrictionReport restrict_analyze(const Group& g, const std::vector<int>& h_members) {
    std::vector<int> members = h_members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!g.is_normal(members)) throw clifford_error("subgroup is not normal");
    const Subgroup& h = g.subgroup(members);
    const GroupTable& t = g.table();
    for (int x = 0; x < g.order(); ++x)
        if (!h.contains(t.mul(x, x))) throw clifford_error("quotient is not an elementary abelian 2-group");

    RestrictionReport rep;
    rep.group = g.name();
    rep.h_members = members;
    for (int idx = h.index; idx > 1; idx /= 2) ++rep.k;

    std::vector<int> lin_h;
    for (int l : g.linear()) {
        bool trivial = true;
        for (int x : members)
            if (g.value_at(l, x) != Cyclo(1)) {
                trivial = false;
                break;
            }
        if (trivial) lin_h.push_back(l);
    }
    if (static_cast<int>(lin_h.size()) != h.index) rep.failures.push_back("characters of G/H do not number [G:H]");

    // G-orbit and stabilizer of each H-irrep under conjugation.
    const int kh = h.group->num_irreps();
    std::vector<std::set<int>> orbit(kh);
    std::vector<std::vector<int>> stab(kh);
    for (int j = 0; j < kh; ++j)
        for (int x = 0; x < g.order(); ++x) {
            int c = g.conjugate_irrep(h, j, x);
            orbit[j].insert(c);
            if (c == j) stab[j].push_back(x);
        }

    for (int i = 0; i < g.num_irreps(); ++i) {
        IrrepRestriction r;
        r.irrep = i;
        for (int j = 0; j < kh; ++j)
            if (h.res[i][j]) {
                r.constituents.emplace_back(j, h.res[i][j]);
                if (h.res[i][j] > 1) r.multiplicity_free = false;
            }
        for (int l : lin_h)
            if (g.twist(i, l) == i) r.i_h.push_back(l);
        r.n_pi = g.common_kernel(r.i_h);
        int c0 = r.constituents.front().first;
        r.stabilizer = stab[c0];
        r.orbit_size = static_cast<long>(orbit[c0].size());
        std::set<int> cs;
        for (const auto& c : r.constituents) cs.insert(c.first);
        r.single_orbit = cs == orbit[c0];
        if (!r.single_orbit) rep.failures.push_back("chi" + std::to_string(i) + ": constituents are not one G-orbit");
        if (r.multiplicity_free) {
            r.lemmas_checked = true;
            r.jh_equals_i = r.constituents.size() == r.i_h.size();
            r.simply_transitive = r.stabilizer == r.n_pi;
            if (!r.jh_equals_i) rep.failures.push_back("chi" + std::to_string(i) + ": #JH != #I_H");
            if (!r.simply_transitive)
                rep.failures.push_back("chi" + std::to_string(i) + ": G/N_pi does not act simply transitively");
        } else {
            rep.hypothesis_holds = false;
        }
        rep.irreps.push_back(std::move(r));
    }

    for (size_t a = 0; a < rep.irreps.size(); ++a)
        for (size_t b = a + 1; b < rep.irreps.size(); ++b) {
            const auto& x = rep.irreps[a];
            const auto& y = rep.irreps[b];
            if (!x.multiplicity_free || !y.multiplicity_free) continue;
            bool share = false;
            for (const auto& c : x.constituents)
                if (h.res[y.irrep][c.first]) share = true;
            if (!share) continue;
            bool twisted = std::any_of(lin_h.begin(), lin_h.end(), [&](int l) { return g.twist(x.irrep, l) == y.irrep; });
            if (!twisted) {
                rep.twist_pairs_ok = false;
                rep.failures.push_back("chi" + std::to_string(x.irrep) + ", chi" + std::to_string(y.irrep) +
                                       " share a constituent but are not twists");
            }
        }

    for (int j = 0; j < kh; ++j) {
        auto ind = induce(g, h, VirtualChar::irrep(h.group, j));
        for (int i = 0; i < g.num_irreps(); ++i)
            if (ind.coeff(i) != h.res[i][j]) rep.frobenius_ok = false;
    }
    if (!rep.frobenius_ok) rep.failures.push_back("restriction and induction multiplicities disagree");
    return rep;
}

}  // namespace wdp
