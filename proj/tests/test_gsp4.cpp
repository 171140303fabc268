#include <doctest.h>

#include <algorithm>
#include <set>

#include "wdp/catalog.hpp"
#include "wdp/corpus.hpp"

using namespace wdp;

namespace {

int of_degree(const Group& g, int d, int skip = 0) {
    for (int i = 0; i < g.num_irreps(); ++i)
        if (g.degree(i) == d && skip-- == 0) return i;
    return -1;
}

// Values of the degree-n layer of phi at every element.
std::vector<Cyclo> layer(const WDRep& phi, int n) {
    const Group& g = *phi.group();
    std::vector<Cyclo> v(g.order());
    for (const auto& t : phi.terms())
        if (t.n == n)
            for (int x = 0; x < g.order(); ++x) v[x] += Cyclo(t.mult) * g.value_at(t.irrep, x);
    return v;
}

// Quadratic characters chi (trivial included) with phi (x) chi = phi, by comparing values.
std::set<int> brute_twists(const WDRep& phi) {
    const Group& g = *phi.group();
    std::set<int> out{0};
    for (int q : g.quadratic()) {
        bool fixed = true;
        for (int n = 1; n <= 5 && fixed; ++n) {
            auto v = layer(phi, n);
            for (int x = 0; x < g.order() && fixed; ++x) fixed = v[x] * g.value_at(q, x) == v[x];
        }
        if (fixed) out.insert(q);
    }
    return out;
}

const std::vector<GSp4Param>& all_params() {
    static const std::vector<GSp4Param> ps = [] {
        std::vector<GSp4Param> v;
        for (const auto& n : catalog_names())
            for (auto& p : corpus_params(Group::catalog(n), false)) v.push_back(std::move(p));
        return v;
    }();
    return ps;
}

}  // namespace

TEST_CASE("similitude characters of the extraspecial 4-dim irreducible") {
    for (const char* n : {"D8oD8", "D8oQ8"}) {
        auto g = Group::catalog(n);
        int f = of_degree(*g, 4);
        auto p = validate_param(WDRep::term(g, f));
        // f (x) f is the sum of all 16 linear characters; the 6 inside wedge2 are the sims.
        CHECK(p.sim_candidates.size() == 6);
        // Twisted indicator scan: symplectic relative to eta, and det = eta^2.
        std::vector<int> brute;
        for (int eta : g->linear()) {
            Cyclo s;
            for (int x = 0; x < g->order(); ++x)
                s += g->value_at(eta, x).conj() * g->value_at(f, g->table().mul(x, x));
            if (s * Cyclo(mpq_class(1, g->order())) == Cyclo(-1) && g->det(f) == g->lin_mul(eta, eta)) brute.push_back(eta);
        }
        CHECK(brute == p.sim_candidates);
    }
}

TEST_CASE("Borel shape chi (chi1 chi2 + chi1 + chi2 + 1) is valid with sim chi^2 chi1 chi2") {
    for (const char* n : {"C4xC2", "C8", "V4", "C3", "C2^3"}) {
        auto g = Group::catalog(n);
        for (int chi : g->linear())
            for (int c1 : g->linear())
                for (int c2 : g->linear()) {
                    WDRep b = WDRep::term(g, g->lin_mul(c1, c2)) + WDRep::term(g, c1) + WDRep::term(g, c2) + WDRep::term(g, 0);
                    WDRep phi = wd_twist(b, chi);
                    int sim = g->lin_mul(g->lin_mul(chi, chi), g->lin_mul(c1, c2));
                    CHECK(similitude_failure(phi, sim) == "");
                }
    }
}

TEST_CASE("mismatched determinants are rejected") {
    auto g = Group::catalog("SL(2,3)");
    int a = -1, b = -1;
    for (int i = 0; i < g->num_irreps(); ++i) {
        if (g->degree(i) != 2) continue;
        if (g->det(i) == 0) a = i;
        else b = i;
    }
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    // det(phi) = det(b) is not 1 = sim^2, and the constituent b has no partner under the trivial sim.
    WDRep phi = WDRep::term(g, a) + WDRep::term(g, b);
    REQUIRE(wd_det(phi) != 0);
    try {
        validate_param(phi, 0);
        FAIL("expected rejection");
    } catch (const param_error& e) {
        CHECK(e.condition == "pairing fails");
    }
    // The only similitude pairs a with itself and b with its dual twist.
    CHECK(valid_sims(phi).size() == 1);
    CHECK_THROWS_AS(validate_param(WDRep::term(g, a)), param_error);
}

TEST_CASE("std of the principal parameter and of sigma x S2") {
    auto c1 = Group::catalog("C1");
    CHECK(std_of(validate_param(WDRep::term(c1, 0, 4))) == WDRep::term(c1, 0, 5));
    // wedge2(sigma x S2) = det sigma x S3 + sym2 sigma, so std = (det sigma / sim) x S3 + sym2 sigma / sim - 1.
    for (const char* n : {"D8", "Q8", "S3", "SL(2,3)"}) {
        auto g = Group::catalog(n);
        for (int s = 0; s < g->num_irreps(); ++s) {
        if (g->degree(s) != 2) continue;
        WDRep phi = WDRep::term(g, s, 2);
        // sigma x S2 needs sigma orthogonal relative to sim: the sims are the linear constituents of sym2 sigma.
        auto sims = valid_sims(phi);
        std::vector<int> lin_in_sym2;
        for (int l : g->linear())
            if (g->sym2(s)[l]) lin_in_sym2.push_back(l);
        std::sort(sims.begin(), sims.end());
        CHECK(sims == lin_in_sym2);
        for (int sim : sims) {
            auto p = validate_param(phi, sim);
            int inv = g->lin_inv(sim);
            WDRep want = WDRep::term(g, g->lin_mul(g->det(s), inv), 3) +
                         WDRep::from_char(tensor(sym2(VirtualChar::irrep(g, s)), VirtualChar::irrep(g, inv)) -
                                          VirtualChar::irrep(g, 0));
            CHECK(std_of(p) == want);
        }
        }
    }
}

TEST_CASE("std of an induced parameter contains omega_E") {
    long checked = 0;
    for (const char* n : {"D8oD8", "D8oQ8", "D8xC2", "Q8xC2", "SL(2,3)", "S4"}) {
        auto g = Group::catalog(n);
        for (const auto& e : g->index2()) {
            const Subgroup& h = g->subgroup(e.members);
            for (int s = 0; s < h.group->num_irreps(); ++s) {
                if (h.group->degree(s) != 2) continue;
                auto ind = induce(*g, h, VirtualChar::irrep(h.group, s));
                if (!ind.is_irreducible()) continue;
                WDRep phi = WDRep::from_char(ind);
                for (int sim : valid_sims(phi)) {
                    if (h.res[sim][h.group->det(s)] != 1) continue;  // sim restricted to E must be det sigma
                    GSp4Param p = validate_param(phi, sim);
                    CHECK(std_of(p).mult(e.omega, 1) >= 1);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("twist groups") {
    auto v4 = Group::catalog("V4");
    WDRep b(v4);
    for (int i = 0; i < 4; ++i) b.add(i, 1, 1);
    auto ib = i_group(validate_param(b, v4->lin_mul(1, 2)));
    CHECK(ib.size() == 4);
    auto c1 = Group::catalog("C1");
    CHECK(i_group(validate_param(WDRep::term(c1, 0, 4))) == std::vector<int>{0});
    auto g = Group::catalog("D8oD8");
    int f = of_degree(*g, 4);
    auto ig = i_group(validate_param(WDRep::term(g, f)));
    CHECK(ig.size() == 16);
    auto brute = brute_twists(WDRep::term(g, f));
    CHECK(std::set<int>(ig.begin(), ig.end()) == brute);
}

TEST_CASE("twist groups agree with a brute-force twist test on the corpus") {
    for (const auto& p : all_params()) {
        auto ig = i_group(p);
        CHECK(std::set<int>(ig.begin(), ig.end()) == brute_twists(p.phi));
    }
}

TEST_CASE("component groups in SO_N") {
    auto c1 = Group::catalog("C1");
    auto s5 = component_group_so(WDRep::term(c1, 0, 5));
    CHECK(s5.r == 1);
    CHECK(s5.size == 1);
    auto s4 = Group::catalog("S4");
    int sign = -1, std3 = -1;
    for (int i = 0; i < s4->num_irreps(); ++i) {
        if (s4->degree(i) == 1 && i != 0) sign = i;
        if (s4->degree(i) == 3 && std3 < 0 && s4->fs(i) == 1) std3 = i;
    }
    // 1 + sign + 3-dim, with the 3-dim chosen so that det is trivial.
    for (int i = 0; i < s4->num_irreps(); ++i)
        if (s4->degree(i) == 3 && s4->det(i) == sign) std3 = i;
    auto c = component_group_so(WDRep::term(s4, 0) + WDRep::term(s4, sign) + WDRep::term(s4, std3));
    CHECK(c.r == 3);
    CHECK(c.size == 4);
    auto g = Group::catalog("D8oD8");
    auto five = std_of(validate_param(WDRep::term(g, of_degree(*g, 4))));
    CHECK(component_group_so(five).r == 5);
    CHECK(component_group_so(five).size == 16);
}

TEST_CASE("A_phi sizes") {
    auto q = Group::catalog("Q8xC2");
    WDRep two(q);
    for (int i = 0; i < q->num_irreps(); ++i)
        if (q->degree(i) == 2) two.add(i, 1, 1);
    CHECK(a_size_gsp4(validate_param(two)) == 2);
    // Siegel sigma + sigma chi with chi^2 != 1.
    auto g = Group::catalog("C3:C4");
    int found = 0;
    for (int s = 0; s < g->num_irreps(); ++s) {
        if (g->degree(s) != 2) continue;
        for (int chi : g->linear()) {
            if (g->lin_order(chi) <= 2) continue;
            WDRep phi = WDRep::term(g, s) + WDRep::term(g, g->twist(s, chi));
            for (int sim : valid_sims(phi)) {
                auto p = validate_param(phi, sim);
                CHECK(a_size_gsp4(p) == 1);
                auto r = classify_param(p);
                if (r.case_label == "NDS-Siegel-a") {
                    CHECK(r.n == static_cast<long>(r.i_phi.size()));
                    ++found;
                }
            }
        }
    }
    CHECK(found > 0);
    auto e = Group::catalog("D8oQ8");
    CHECK(a_size_gsp4(validate_param(WDRep::term(e, of_degree(*e, 4)))) == 1);
}

TEST_CASE("packet sizes by both paths") {
    auto g = Group::catalog("D8oD8");
    auto ps = packet_size_n(validate_param(WDRep::term(g, of_degree(*g, 4))));
    CHECK(ps.path_a == 16);
    CHECK(ps.path_b == 16);
    CHECK(ps.a_phi == 1);
    auto c1 = Group::catalog("C1");
    auto pc = packet_size_n(validate_param(WDRep::term(c1, 0, 4)));
    CHECK(pc.path_a == 1);
    CHECK(pc.path_b == 1);
    auto q8 = Group::catalog("Q8");
    auto pq = validate_param(WDRep::term(q8, of_degree(*q8, 2), 2));
    CHECK(packet_size_n(pq).path_a == 4);
    CHECK(i_group(pq).size() == 4);
}

TEST_CASE("classification of named parameters") {
    auto e = Group::catalog("D8oD8");
    auto r = classify_param(validate_param(WDRep::term(e, of_degree(*e, 4))));
    CHECK(r.case_label == "III-b2");
    CHECK(r.n == 16);
    CHECK(r.ok());

    auto gl = Group::catalog("GL(2,3)");
    int found = 0;
    for (int i = 0; i < gl->num_irreps(); ++i) {
        if (gl->degree(i) != 4) continue;
        for (int sim : valid_sims(WDRep::term(gl, i))) {
            auto x = classify_param(validate_param(WDRep::term(gl, i), sim));
            if (x.case_label != "II") continue;
            ++found;
            CHECK(x.n == 2);
            REQUIRE(x.i_phi.size() == 2);
            int omega = x.i_phi[1];
            CHECK(gl->lin_order(omega) == 2);
        }
    }
    CHECK(found == 1);

    // Klingen: chi (1 + sigma + det sigma) with sigma dihedral w.r.t. E and det sigma = omega_E.
    auto d8 = Group::catalog("D8");
    int s = of_degree(*d8, 2);
    WDRep k = WDRep::term(d8, 0) + WDRep::term(d8, s) + WDRep::term(d8, d8->det(s));
    auto kr = classify_param(validate_param(k, d8->det(s)));
    CHECK(kr.case_label == "NDS-Klingen");
    CHECK(kr.n == 2);
}

TEST_CASE("lift search") {
    auto c1 = Group::catalog("C1");
    auto l1 = lift_search(WDRep::term(c1, 0, 5), {LiftCandidate{c1, {0}}});
    REQUIRE(l1);
    CHECK(l1->phi == WDRep::term(c1, 0, 4));

    auto d8 = Group::catalog("D8");
    int s = of_degree(*d8, 2);
    auto target = std_of(validate_param(WDRep::term(d8, s, 2)));
    std::vector<int> id(d8->num_irreps());
    for (int i = 0; i < d8->num_irreps(); ++i) id[i] = i;
    auto l2 = lift_search(target, {LiftCandidate{d8, id}}, 2);
    REQUIRE(l2);
    CHECK(l2->phi == WDRep::term(d8, s, 2));

    // Five quadratics over (Z/2)^4, lifted through the extraspecial group.
    auto e = Group::catalog("D8oD8");
    std::vector<int> center;
    for (int x = 0; x < e->order(); ++x) {
        bool c = true;
        for (int y = 0; y < e->order() && c; ++y) c = e->table().mul(x, y) == e->table().mul(y, x);
        if (c) center.push_back(x);
    }
    auto q = quotient(*e, center);
    REQUIRE(q.group->order() == 16);
    auto full = std_of(validate_param(WDRep::term(e, of_degree(*e, 4))));
    WDRep psi(q.group);
    for (const auto& t : full.terms()) {
        int base = static_cast<int>(std::find(q.inflation.begin(), q.inflation.end(), t.irrep) - q.inflation.begin());
        REQUIRE(base < q.group->num_irreps());
        psi.add(base, t.n, t.mult);
    }
    auto l3 = lift_search(psi, {LiftCandidate{e, q.inflation}});
    REQUIRE(l3);
    CHECK(l3->phi == WDRep::term(e, of_degree(*e, 4)));

    CHECK_THROWS_AS(lift_search(psi, {LiftCandidate{e, {0, 1}}}), param_error);
}

TEST_CASE("corpus invariants of std") {
    for (const auto& p : all_params()) {
        auto st = std_of(p);
        CHECK(st.dim() == 5);
        CHECK(wd_dual(st) == st);
        CHECK(wd_det(st) == 0);
        CHECK(wd_wedge2(p.phi).mult(p.sim, 1) >= 1);
        CHECK(packet_size_n(p).agree());
    }
}

TEST_CASE("twist equivariance") {
    for (const auto& p : all_params()) {
        const Group& g = *p.phi.group();
        auto base = classify_param(p);
        for (int nu : g.linear()) {
            WDRep t = wd_twist(p.phi, nu);
            int sim = g.lin_mul(p.sim, g.lin_mul(nu, nu));
            REQUIRE(similitude_failure(t, sim) == "");
            auto q = validate_param(t, sim);
            CHECK(std_of(q) == std_of(p));
            CHECK(i_group(q) == i_group(p));
            CHECK(classify_param(q).case_label == base.case_label);
        }
        // A failing sim stays failing after the twist.
        for (int bad : g.linear()) {
            if (similitude_failure(p.phi, bad).empty()) continue;
            int nu = g.linear().back();
            CHECK_FALSE(similitude_failure(wd_twist(p.phi, nu), g.lin_mul(bad, g.lin_mul(nu, nu))).empty());
        }
    }
}

TEST_CASE("case label is unchanged on a quotient model through which phi factors") {
    int tested = 0;
    for (const auto& p : all_params()) {
        const Group& g = *p.phi.group();
        // Kernel of phi: where every layer takes its degree value.
        std::vector<int> ker;
        for (int x = 0; x < g.order(); ++x) {
            bool in = true;
            for (const auto& t : p.phi.terms()) in = in && g.value_at(t.irrep, x) == Cyclo(g.degree(t.irrep));
            if (in) ker.push_back(x);
        }
        if (ker.size() == 1) continue;
        // The similitude character must factor as well.
        bool sim_ok = std::all_of(ker.begin(), ker.end(), [&](int x) { return g.value_at(p.sim, x) == Cyclo(1); });
        if (!sim_ok) continue;
        auto q = quotient(g, ker);
        auto down = [&](int irrep) {
            return static_cast<int>(std::find(q.inflation.begin(), q.inflation.end(), irrep) - q.inflation.begin());
        };
        WDRep phi(q.group);
        for (const auto& t : p.phi.terms()) phi.add(down(t.irrep), t.n, t.mult);
        auto pq = validate_param(phi, down(p.sim));
        CHECK(classify_param(pq).case_label == classify_param(p).case_label);
        CHECK(classify_param(pq).n == classify_param(p).n);
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("irreducible parameters: std irreducible iff no self-twist and no reducible index-2 restriction") {
    for (const auto& p : all_params()) {
        auto ts = p.phi.terms();
        if (ts.size() != 1 || ts[0].mult != 1 || ts[0].n != 1) continue;
        const Group& g = *p.phi.group();
        auto st = std_of(p).terms();
        bool std_irr = st.size() == 1 && st[0].mult == 1;
        bool self_twist = brute_twists(p.phi).size() > 1;
        bool restr_red = false;
        for (const auto& e : g.index2()) {
            auto r = restrict_to(g.subgroup(e.members), VirtualChar::irrep(p.phi.group(), ts[0].irrep));
            restr_red = restr_red || !r.is_irreducible();
        }
        CHECK(std_irr == (!self_twist && !restr_red));
    }
}
