#include "wdp/gsp4.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace wdp {

const char* residue_name(Residue p) {
    switch (p) {
        case Residue::two: return "2";
        case Residue::odd: return "odd";
        default: return "unspecified";
    }
}

Residue parse_residue(const std::string& s) {
    if (s == "2") return Residue::two;
    if (s == "odd") return Residue::odd;
    if (s.empty() || s == "unspecified") return Residue::unspecified;
    throw param_error("bad residue characteristic", "p must be 2 or odd, got '" + s + "'");
}

namespace {

struct Piece {
    int irrep;
    int n;
    bool operator==(const Piece&) const = default;
};

std::vector<Piece> pieces(const WDRep& phi) {
    std::vector<Piece> r;
    for (const auto& t : phi.terms())
        for (long m = 0; m < t.mult; ++m) r.push_back({t.irrep, t.n});
    return r;
}

int piece_dim(const Group& g, Piece p) { return g.degree(p.irrep) * p.n; }
int piece_det(const Group& g, Piece p) { return g.lin_pow(g.det(p.irrep), p.n); }
Piece piece_twist(const Group& g, Piece p, int lin) { return {g.twist(p.irrep, lin), p.n}; }
int dihedral_count(const Group& g, Piece p) { return static_cast<int>(self_twists(g, p.irrep).size()) - 1; }
bool is_quadratic(const Group& g, int lin) { return lin != 0 && g.lin_mul(lin, lin) == 0; }

int unit_index(const std::vector<long>& v) {
    int r = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != 1 || r >= 0) return -1;
        r = static_cast<int>(i);
    }
    return r;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string piece_str(const Group& g, Piece p) {
    std::ostringstream os;
    os << "chi" << p.irrep;
    if (p.n != 1) os << "xS" << p.n;
    os << " (dim " << piece_dim(g, p) << ")";
    return os.str();
}

}  // namespace

std::vector<int> self_twists(const Group& g, int irrep) {
    std::vector<int> r{0};
    for (int w : g.quadratic())
        if (g.twist(irrep, w) == irrep) r.push_back(w);
    return r;
}

std::string similitude_failure(const WDRep& phi, int sim) {
    if (!phi.group()) return "no group";
    const Group& g = *phi.group();
    if (!phi.is_effective()) return "not effective";
    if (phi.dim() != 4) return "dimension is not 4";
    if (sim < 0 || sim >= g.num_irreps() || !g.is_linear(sim)) return "sim is not a linear character";
    for (const auto& t : phi.terms()) {
        int partner = g.twist(g.dual(t.irrep), sim);
        if (partner != t.irrep) {
            if (phi.mult(partner, t.n) != t.mult) return "pairing fails";
            continue;
        }
        switch (term_type(g, t.irrep, t.n, sim)) {
            case SelfDualType::symplectic: break;
            case SelfDualType::orthogonal:
                if (t.mult % 2) return "self-paired orthogonal-type constituent with odd multiplicity";
                break;
            default: return "pairing fails";
        }
    }
    if (wd_det(phi) != g.lin_mul(sim, sim)) return "det(phi) != sim^2";
    return "";
}

std::vector<int> valid_sims(const WDRep& phi) {
    std::vector<int> r;
    if (!phi.is_effective() || phi.dim() != 4) return r;
    const Group& g = *phi.group();
    for (const auto& t : wd_wedge2(phi).terms())
        if (t.n == 1 && g.is_linear(t.irrep) && similitude_failure(phi, t.irrep).empty()) r.push_back(t.irrep);
    return r;
}

GSp4Param validate_param(const WDRep& phi, std::optional<int> sim, Residue p) {
    if (!phi.group()) throw param_error("no group", "parameter has no group");
    if (!phi.is_effective()) throw param_error("not effective", "not symplectic-similitude: not effective");
    if (phi.dim() != 4) throw param_error("dimension is not 4", "not symplectic-similitude: dimension is not 4");
    GSp4Param r;
    r.phi = phi;
    r.p = p;
    r.sim_candidates = valid_sims(phi);
    if (sim) {
        auto f = similitude_failure(phi, *sim);
        if (!f.empty()) throw param_error(f, "not symplectic-similitude: " + f);
        r.sim = *sim;
    } else {
        if (r.sim_candidates.empty()) {
            // Name the condition that fails for the first linear constituent of the exterior square.
            std::string why = "no linear constituent of wedge2(phi) is a similitude character";
            for (const auto& t : wd_wedge2(phi).terms())
                if (t.n == 1 && phi.group()->is_linear(t.irrep)) {
                    why = similitude_failure(phi, t.irrep);
                    break;
                }
            throw param_error(why, "not symplectic-similitude: " + why);
        }
        r.sim = r.sim_candidates[0];
    }
    return r;
}

WDRep std_of(const GSp4Param& p) {
    const Group& g = *p.phi.group();
    WDRep s = wd_twist(wd_wedge2(p.phi), g.lin_inv(p.sim));
    s.add(0, 1, -1);
    if (!s.is_effective()) throw invariant_error("std(phi) has a negative multiplicity");
    if (s.dim() != 5) throw invariant_error("std(phi) is not 5-dimensional");
    if (wd_dual(s) != s) throw invariant_error("std(phi) is not self-dual");
    if (wd_det(s) != 0) throw invariant_error("std(phi) has nontrivial determinant");
    return s;
}

std::vector<int> i_group(const GSp4Param& p) {
    const Group& g = *p.phi.group();
    std::vector<int> r{0};
    for (int w : g.quadratic())
        if (wd_twist(p.phi, w) == p.phi) r.push_back(w);
    std::set<int> s(r.begin(), r.end());
    for (int a : r)
        for (int b : r)
            if (!s.count(g.lin_mul(a, b))) throw invariant_error("I(phi) is not closed under products");
    return r;
}

SOComponentGroup component_group_so(const WDRep& psi) {
    if (!psi.is_effective()) throw wd_error("not effective");
    if (wd_dual(psi) != psi) throw wd_error("not self-dual");
    if (wd_det(psi) != 0) throw wd_error("determinant is not trivial");
    const Group& g = *psi.group();
    SOComponentGroup c;
    bool odd_piece = false;
    for (const auto& t : psi.terms())
        if (term_type(g, t.irrep, t.n) == SelfDualType::orthogonal) {
            ++c.r;
            if ((g.degree(t.irrep) * t.n) % 2) odd_piece = true;
        }
    if (c.r == 0) throw invariant_error("no orthogonal isotypic component");
    if (psi.dim() % 2 && !odd_piece) throw invariant_error("odd dimension without an odd orthogonal constituent");
    c.size = 1L << (c.r - 1);
    return c;
}

int a_size_gsp4(const GSp4Param& p) {
    const Group& g = *p.phi.group();
    auto ps = pieces(p.phi);
    if (ps.size() != 2) return 1;
    for (auto x : ps)
        if (piece_dim(g, x) != 2 || piece_det(g, x) != p.sim) return 1;
    return 2;
}

PacketSize packet_size_n(const GSp4Param& p) {
    PacketSize r;
    WDRep s = std_of(p);
    auto c = component_group_so(s);
    r.r = c.r;
    r.path_a = c.size;
    r.a_phi = a_size_gsp4(p);
    r.i_size = static_cast<int>(i_group(p).size());
    r.path_b = static_cast<long>(r.a_phi) * r.i_size;
    r.discrete = is_discrete_so(s, 5);
    return r;
}

bool ClassReport::ok() const {
    return std::all_of(consistency.begin(), consistency.end(), [](const Check& c) { return c.pass; });
}

void ClassReport::check(const std::string& name, bool pass, const std::string& detail) {
    consistency.push_back({name, pass, detail});
}

const std::vector<std::string>& classifier_labels() {
    static const std::vector<std::string> l{"I",        "II",        "III-a1",       "III-a2",       "III-a3",
                                            "III-a4",   "III-b1",    "III-b2",       "DS-i",         "DS-ii",
                                            "DS-iii-a", "DS-iii-b",  "NDS-Siegel-a", "NDS-Siegel-b", "NDS-Klingen",
                                            "NDS-Borel"};
    return l;
}

namespace {

// Case III sub-classification. Fills label, witnesses and bindings.
void classify_induced(const Group& g, const GSp4Param& p, const WDRep& stdphi, int rho, ClassReport& rep) {
    const auto& idx2 = g.index2();
    for (size_t e = 0; e < idx2.size(); ++e) {
        int omega = idx2[e].omega;
        if (stdphi.mult(omega, 1) < 1) continue;
        const Subgroup& h = g.subgroup(idx2[e].members);
        const Group& hg = *h.group;
        int sim_h = unit_index(h.res[p.sim]);
        for (int s = 0; s < hg.num_irreps(); ++s) {
            if (hg.degree(s) != 2 || h.res[rho][s] == 0) continue;
            if (unit_index(h.ind[s]) != rho || hg.det(s) != sim_h) continue;

            rep.witnesses["E"] = "H" + std::to_string(e) + " " + join(idx2[e].members);
            rep.witnesses["omega_E"] = "chi" + std::to_string(omega);
            rep.witnesses["sigma"] = "irrep " + std::to_string(s) + " of E";
            int tau = 0;
            while (h.contains(tau)) ++tau;
            rep.witnesses["tau"] = "element " + std::to_string(tau);
            int st = g.conjugate_irrep(h, s, tau);

            // Identity wedge2(Ind sigma) = Ind(det sigma) + M(sigma), by class functions.
            {
                auto phic = VirtualChar::irrep(g.shared_from_this(), rho);
                auto sig = VirtualChar::irrep(h.group, s);
                auto lhs = wedge2(phic);
                auto rhs = induce(g, h, VirtualChar::irrep(h.group, hg.det(s))) + asai_lift(g, h, sig);
                rep.check("wedge_identity", lhs == rhs, "wedge2(phi) = Ind(det sigma) + M(sigma)");
            }

            std::vector<int> chis;
            for (int l : hg.linear())
                if (hg.twist(s, l) == st) chis.push_back(l);
            if (chis.empty()) {
                auto tw = self_twists(hg, s);
                if (tw.size() == 1) {
                    rep.case_label = "III-a1";
                    return;
                }
                struct KInfo {
                    std::vector<int> members;
                    std::vector<int> h_members;
                    int omega_h;
                    bool normal;
                    bool klein;
                };
                std::vector<KInfo> ks;
                for (size_t i = 1; i < tw.size(); ++i) {
                    KInfo k;
                    k.omega_h = tw[i];
                    k.h_members = hg.kernel(tw[i]);
                    for (int x : k.h_members) k.members.push_back(h.members[x]);
                    k.normal = g.is_normal(k.members);
                    k.klein = false;
                    if (k.normal) {
                        std::vector<char> in(g.order(), 0);
                        for (int x : k.members) in[x] = 1;
                        k.klein = true;
                        for (int x = 0; x < g.order(); ++x)
                            if (!in[g.table().mul(x, x)]) k.klein = false;
                    }
                    ks.push_back(std::move(k));
                }
                auto pick = [&](auto pred) -> const KInfo* {
                    for (const auto& k : ks)
                        if (pred(k)) return &k;
                    return nullptr;
                };
                const KInfo* k = pick([](const KInfo& x) { return x.normal && x.klein; });
                if (k) rep.case_label = "III-a3";
                if (!k && (k = pick([](const KInfo& x) { return x.normal; }))) rep.case_label = "III-a2";
                if (!k) {
                    k = &ks.front();
                    rep.case_label = "III-a4";
                    // sigma = Ind_K^E rho_K; test whether sigma^tau|_K * rho_K extends to a 2-dim character of G.
                    const Subgroup& kh = hg.subgroup(k->h_members);
                    const Subgroup& kg = g.subgroup(k->members);
                    const Group& kgrp = *kh.group;
                    if (kgrp.chars().degrees() != kg.group->chars().degrees())
                        throw invariant_error("subgroup tables disagree");
                    int rk = -1;
                    for (int l : kgrp.linear())
                        if (unit_index(kh.ind[l]) == s) {
                            rk = l;
                            break;
                        }
                    if (rk < 0) throw invariant_error("sigma is not induced from K");
                    std::vector<long> v(kgrp.num_irreps(), 0);
                    for (int j = 0; j < kgrp.num_irreps(); ++j)
                        if (kh.res[st][j]) v[kgrp.twist(j, rk)] += kh.res[st][j];
                    bool extends = false;
                    for (int i = 0; i < g.num_irreps() && !extends; ++i)
                        if (g.degree(i) == 2 && kg.res[i] == v) extends = true;
                    const auto& lin = g.linear();
                    for (size_t a = 0; a < lin.size() && !extends; ++a)
                        for (size_t b = a; b < lin.size() && !extends; ++b) {
                            std::vector<long> w(v.size());
                            for (size_t j = 0; j < v.size(); ++j) w[j] = kg.res[lin[a]][j] + kg.res[lin[b]][j];
                            if (w == v) extends = true;
                        }
                    rep.bindings["extends"] = extends;
                }
                rep.witnesses["K"] = join(k->members);
                return;
            }

            rep.witnesses["chi"] = "irrep " + std::to_string(chis.front()) + " of E";
            for (int c : chis)
                if (hg.lin_mul(c, c) != 0) rep.check("chi_quadratic", false, "sigma^tau = sigma chi with chi^2 != 1");
            int inv_chi = -1;
            for (int c : chis)
                if (g.conjugate_irrep(h, c, tau) == c) {
                    inv_chi = c;
                    break;
                }
            if (inv_chi < 0) {
                rep.case_label = "III-b1";
                return;
            }
            rep.case_label = "III-b2";
            rep.witnesses["chi"] = "irrep " + std::to_string(inv_chi) + " of E";
            // chi = lambda^tau / lambda, and sigma lambda^-1 = Res pi.
            for (int lam : hg.linear()) {
                int q = hg.lin_mul(g.conjugate_irrep(h, lam, tau), hg.lin_inv(lam));
                if (q != inv_chi) continue;
                int target = hg.twist(s, hg.lin_inv(lam));
                for (int pi = 0; pi < g.num_irreps(); ++pi)
                    if (g.degree(pi) == 2 && unit_index(h.res[pi]) == target) {
                        rep.witnesses["lambda"] = "irrep " + std::to_string(lam) + " of E";
                        rep.witnesses["pi"] = "chi" + std::to_string(pi);
                        rep.bindings["pi_dihedral"] = dihedral_count(g, {pi, 1});
                        rep.witnesses["binding_source"] = "pi";
                        return;
                    }
            }
            // No (lambda, pi) inside the model: read the count off sigma's quadratic self-twists.
            rep.bindings["pi_dihedral"] = static_cast<long>(self_twists(hg, s).size()) - 1;
            rep.witnesses["binding_source"] = "sigma";
            return;
        }
    }
    throw invariant_error("case III without an induction witness");
}

void classify_irreducible(const Group& g, const GSp4Param& p, const WDRep& stdphi, int rho, ClassReport& rep) {
    auto st = stdphi.terms();
    bool has_linear = false;
    for (const auto& t : st)
        if (g.degree(t.irrep) * t.n == 1) has_linear = true;
    bool std_irreducible = st.size() == 1 && st[0].mult == 1;

    // Independent side: does some index-2 subgroup induce phi?
    bool induced = false;
    for (const auto& e : g.index2()) {
        const Subgroup& h = g.subgroup(e.members);
        if (unit_index(h.res[rho]) < 0) {
            induced = true;
            if (!rep.witnesses.count("E")) rep.witnesses["E"] = join(e.members);
        }
    }
    rep.check("primitive_equivalence", std_irreducible == !induced,
              std::string("std irreducible: ") + (std_irreducible ? "yes" : "no") +
                  ", induced from index 2: " + (induced ? "yes" : "no"));

    if (std_irreducible) {
        rep.case_label = "I";
        return;
    }
    if (!has_linear) {
        rep.case_label = "II";
        bool shape = st.size() == 2;
        if (shape) {
            std::vector<long> dims;
            for (const auto& t : st) dims.push_back(g.degree(t.irrep) * t.n * t.mult);
            std::sort(dims.begin(), dims.end());
            shape = dims == std::vector<long>{2, 3};
        }
        rep.check("case_II_shape", shape, "std = 2 + 3");
        return;
    }
    rep.witnesses.erase("E");
    classify_induced(g, p, stdphi, rho, rep);
}

void classify_reducible(const Group& g, const GSp4Param& p, ClassReport& rep) {
    auto ps = pieces(p.phi);
    std::vector<int> dims;
    for (auto x : ps) dims.push_back(piece_dim(g, x));
    std::sort(dims.rbegin(), dims.rend());

    if (dims == std::vector<int>{4}) {
        Piece x = ps[0];
        if (x.n == 4) {
            rep.case_label = "DS-i";
        } else if (x.n == 2) {
            rep.case_label = "DS-ii";
            rep.bindings["dihedral"] = dihedral_count(g, x);
        } else {
            throw invariant_error("unexpected 4-dimensional piece");
        }
        rep.witnesses["phi1"] = piece_str(g, x);
        return;
    }

    if (dims == std::vector<int>{2, 2}) {
        Piece a = ps[0], b = ps[1];
        rep.witnesses["phi1"] = piece_str(g, a);
        rep.witnesses["phi2"] = piece_str(g, b);
        int da = piece_det(g, a), db = piece_det(g, b);
        if (da == p.sim && db == p.sim) {
            if (a != b) rep.bindings["sl2_pieces"] = (a.n == 2) + (b.n == 2);
            if (a == b) {
                rep.case_label = "NDS-Siegel-b";
                rep.bindings["chi_trivial"] = 1;
                rep.bindings["dihedral"] = dihedral_count(g, a);
                rep.witnesses["chi"] = "chi0";
                return;
            }
            int chi = -1;
            for (int l : g.linear())
                if (piece_twist(g, a, l) == b) {
                    chi = l;
                    break;
                }
            if (chi >= 0) {
                rep.case_label = "DS-iii-b";
                rep.witnesses["chi"] = "chi" + std::to_string(chi);
                rep.bindings["dihedral"] = dihedral_count(g, a);
                if (!is_quadratic(g, chi)) rep.check("chi_quadratic", false, "phi1 = phi2 chi with chi^2 != 1");
            } else {
                rep.case_label = "DS-iii-a";
                auto ta = self_twists(g, a.irrep), tb = self_twists(g, b.irrep);
                bool same = false;
                for (int w : ta)
                    if (w != 0 && std::find(tb.begin(), tb.end(), w) != tb.end()) same = true;
                rep.bindings["same_dihedral_field"] = same;
            }
            return;
        }
        // Siegel: phi = sigma + sigma chi with sim = chi det(sigma).
        for (int swap = 0; swap < 2; ++swap) {
            Piece s = swap ? b : a, o = swap ? a : b;
            int chi = g.lin_mul(p.sim, g.lin_inv(piece_det(g, s)));
            if (piece_twist(g, s, chi) != o) continue;
            rep.witnesses["sigma"] = piece_str(g, s);
            rep.witnesses["chi"] = "chi" + std::to_string(chi);
            rep.bindings["dihedral"] = dihedral_count(g, s);
            if (g.lin_mul(chi, chi) != 0) {
                rep.case_label = "NDS-Siegel-a";
            } else {
                rep.case_label = "NDS-Siegel-b";
                rep.bindings["chi_trivial"] = chi == 0;
                auto t = self_twists(g, s.irrep);
                rep.bindings["chi_in_T"] = std::find(t.begin(), t.end(), chi) != t.end();
            }
            return;
        }
        throw invariant_error("2+2 parameter fits no Siegel or discrete shape");
    }

    if (dims == std::vector<int>{2, 1, 1}) {
        Piece tau{};
        std::vector<int> nus;
        for (auto x : ps) {
            if (piece_dim(g, x) == 2) tau = x;
            else nus.push_back(x.irrep);
        }
        for (int i = 0; i < 2; ++i) {
            int chi = nus[i], other = nus[1 - i];
            Piece sigma = piece_twist(g, tau, g.lin_inv(chi));
            int ds = piece_det(g, sigma);
            if (g.lin_mul(chi, ds) != other) continue;
            rep.case_label = "NDS-Klingen";
            rep.witnesses["chi"] = "chi" + std::to_string(chi);
            rep.witnesses["sigma"] = piece_str(g, sigma);
            auto t = self_twists(g, sigma.irrep);
            bool cond = sigma.n == 1 && is_quadratic(g, ds) && std::find(t.begin(), t.end(), ds) != t.end();
            rep.bindings["dihedral_det"] = cond;
            if (cond) rep.witnesses["omega_E"] = "chi" + std::to_string(ds);
            return;
        }
        throw invariant_error("2+1+1 parameter fits no Klingen shape");
    }

    if (dims == std::vector<int>{1, 1, 1, 1}) {
        // phi = chi (chi1 chi2 + chi1 + chi2 + 1) has several readings (choice of pairing, of the
        // outer pair and of chi inside it). The quadratic count is not the same for all of them;
        // a quadratic twist fixing phi shows up in every reading, so the smallest count is bound.
        static const int pairings[6][4] = {{0, 1, 2, 3}, {2, 3, 0, 1}, {0, 2, 1, 3},
                                           {1, 3, 0, 2}, {0, 3, 1, 2}, {1, 2, 0, 3}};
        long best = -1;
        std::string seen;
        for (const auto& pr : pairings) {
            int a = ps[pr[0]].irrep, b = ps[pr[1]].irrep, c = ps[pr[2]].irrep, d = ps[pr[3]].irrep;
            if (g.lin_mul(a, b) != p.sim || g.lin_mul(c, d) != p.sim) continue;
            for (int chi : {a, b}) {
                int c1 = g.lin_mul(c, g.lin_inv(chi)), c2 = g.lin_mul(d, g.lin_inv(chi));
                std::set<int> q;
                for (int x : {c1, c2, g.lin_mul(c1, c2)})
                    if (is_quadratic(g, x)) q.insert(x);
                long k = static_cast<long>(q.size());
                seen += (seen.empty() ? "" : ",") + std::to_string(k);
                if (best >= 0 && k >= best) continue;
                best = k;
                rep.witnesses["chi"] = "chi" + std::to_string(chi);
                rep.witnesses["chi1"] = "chi" + std::to_string(c1);
                rep.witnesses["chi2"] = "chi" + std::to_string(c2);
            }
        }
        if (best < 0) throw invariant_error("1+1+1+1 parameter fits no Borel shape");
        rep.case_label = "NDS-Borel";
        rep.bindings["quadratic_count"] = best;
        rep.witnesses["quadratic_counts_all_readings"] = seen;
        return;
    }
    throw invariant_error("unreachable parameter shape");
}

}  // namespace

ClassReport classify_param(const GSp4Param& p) {
    const Group& g = *p.phi.group();
    ClassReport rep;
    rep.group = g.name();
    rep.param = p;

    WDRep w = wd_wedge2(p.phi);
    rep.check("sim_in_wedge2", w.mult(p.sim, 1) >= 1);
    rep.check("det_phi_eq_sim2", wd_det(p.phi) == g.lin_mul(p.sim, p.sim));

    WDRep stdphi = std_of(p);
    for (const auto& t : stdphi.terms())
        rep.std_decomposition.push_back({t.irrep, t.n, t.mult, g.dual(t.irrep) == t.irrep, term_type(g, t.irrep, t.n)});
    rep.check("std_valid", true, "dim 5, self-dual, trivial determinant");

    auto ps = packet_size_n(p);
    rep.i_phi = i_group(p);
    rep.a_phi_size = ps.a_phi;
    rep.a_std_size = ps.path_a;
    rep.r = ps.r;
    rep.n = ps.path_a;
    rep.check("path_agreement", ps.agree(),
              "component group " + std::to_string(ps.path_a) + " vs " + std::to_string(ps.a_phi) + " * " +
                  std::to_string(ps.i_size));
    static const std::set<long> allowed{1, 2, 4, 8, 16};
    rep.check("n_allowed", allowed.count(ps.path_a) > 0, "N in {1,2,4,8,16}");
    if (ps.discrete) {
        long c = 0;
        for (const auto& t : stdphi.terms()) c += t.mult;
        rep.check("discrete_constituent_count", (1L << (c - 1)) == ps.path_a, "log2 N = #constituents(std) - 1");
    }

    auto ts = p.phi.terms();
    if (ts.size() == 1 && ts[0].mult == 1 && ts[0].n == 1 && g.degree(ts[0].irrep) == 4)
        classify_irreducible(g, p, stdphi, ts[0].irrep, rep);
    else
        classify_reducible(g, p, rep);

    if (p.p == Residue::odd) {
        if (rep.case_label == "I" || rep.case_label == "II")
            rep.warnings.push_back("case " + rep.case_label + " flagged: impossible for p != 2");
        if (rep.case_label == "III-b2") rep.warnings.push_back("case III-b2 flagged: occurs only for p = 2");
        if (rep.n == 16) rep.warnings.push_back("N = 16 flagged: impossible for p != 2");
        if (!g.two_part_is_klein())
            rep.warnings.push_back("declared p != 2 but the model's abelianization has 2-part other than (Z/2)^2");
        rep.p_conflict = !rep.warnings.empty();
    }
    if (p.sim_candidates.size() > 1)
        rep.warnings.push_back("several similitude characters are valid: " + join(p.sim_candidates) +
                               "; report uses chi" + std::to_string(p.sim));
    return rep;
}

std::vector<WDRep> enumerate_wdreps(const GroupPtr& g, long dim) {
    std::vector<Piece> cand;
    for (int n = 1; n <= dim; ++n)
        for (int i = 0; i < g->num_irreps(); ++i)
            if (g->degree(i) * n <= dim) cand.push_back({i, n});
    std::vector<WDRep> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, size_t from, long left) -> void {
        if (left == 0) {
            WDRep r(g);
            for (int c : stack) r.add(cand[c].irrep, cand[c].n, 1);
            out.push_back(std::move(r));
            return;
        }
        for (size_t c = from; c < cand.size(); ++c) {
            long d = piece_dim(*g, cand[c]);
            if (d > left) continue;
            stack.push_back(static_cast<int>(c));
            self(self, c, left - d);
            stack.pop_back();
        }
    };
    rec(rec, 0, dim);
    return out;
}

WDRep pullback(const WDRep& psi, const LiftCandidate& c) {
    const Group& base = *psi.group();
    const Group& g = *c.group;
    const int kb = base.num_irreps();
    if (static_cast<int>(c.inflation.size()) != kb) throw param_error("malformed correspondence", "correspondence has wrong length");
    std::set<int> seen;
    for (int i = 0; i < kb; ++i) {
        int j = c.inflation[i];
        if (j < 0 || j >= g.num_irreps() || !seen.insert(j).second)
            throw param_error("malformed correspondence", "correspondence is not injective into the candidate's irreps");
        if (g.degree(j) != base.degree(i)) throw param_error("malformed correspondence", "correspondence changes a degree");
    }
    if (c.inflation[0] != 0) throw param_error("malformed correspondence", "trivial character must map to trivial");
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < kb; ++j) {
            std::vector<long> want(g.num_irreps(), 0);
            const auto& t = base.tensor(i, j);
            for (int l = 0; l < kb; ++l) want[c.inflation[l]] += t[l];
            if (g.tensor(c.inflation[i], c.inflation[j]) != want)
                throw param_error("malformed correspondence", "correspondence does not respect tensor products");
        }
    WDRep r(c.group);
    for (const auto& t : psi.terms()) r.add(c.inflation[t.irrep], t.n, t.mult);
    return r;
}

std::optional<GSp4Param> lift_search(const WDRep& psi, const std::vector<LiftCandidate>& candidates, int jobs) {
    if (psi.dim() != 5) throw param_error("wrong dimension", "lift target must be 5-dimensional");
    jobs = std::max(1, jobs);
    for (const auto& c : candidates) {
        WDRep target = pullback(psi, c);
        auto reps = enumerate_wdreps(c.group, 4);
        std::atomic<size_t> best{reps.size()};
        std::vector<std::optional<GSp4Param>> found(reps.size());
        auto work = [&](int t) {
            for (size_t i = t; i < reps.size(); i += jobs) {
                if (i >= best.load()) return;
                for (int s : valid_sims(reps[i])) {
                    GSp4Param p;
                    p.phi = reps[i];
                    p.sim = s;
                    p.sim_candidates = valid_sims(reps[i]);
                    if (std_of(p) == target) {
                        found[i] = p;
                        size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        };
        std::vector<std::thread> th;
        for (int t = 1; t < jobs; ++t) th.emplace_back(work, t);
        work(0);
        for (auto& x : th) x.join();
        if (best.load() < reps.size()) return found[best.load()];
    }
    return std::nullopt;
}

}  // namespace wdp
