#include "wdp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <set>

#include "wdp/catalog.hpp"
#include "wdp/clifford.hpp"
#include "wdp/report.hpp"

namespace wdp {

namespace {

std::vector<GroupPtr> catalog_upto(int bound) {
    std::vector<GroupPtr> out;
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        if (g->order() <= bound) out.push_back(g);
    }
    return out;
}

void fail(CriterionResult& r, const std::string& msg) {
    // Keep reports readable when a systematic failure repeats.
    if (r.failures.size() < 50) r.failures.push_back(msg);
    else if (r.failures.size() == 50) r.failures.push_back("...");
}

std::string describe(const GSp4Param& p) {
    return p.phi.group()->name() + " " + p.phi.to_string() + " sim chi" + std::to_string(p.sim);
}

// Decomposition of a function given at every element, through the class representatives.
std::vector<long> decompose_elementwise(const Group& g, const std::vector<Cyclo>& at) {
    const auto& cl = g.chars().classes();
    std::vector<Cyclo> v(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) {
        v[c] = at[cl.reps[c]];
        for (int x : cl.members[c])
            if (at[x] != v[c]) throw char_error("not a class function");
    }
    return g.decompose(v);
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const GroupTable& t) {
    std::set<std::vector<int>> subs;
    std::vector<std::vector<int>> frontier;
    for (int x = 0; x < t.order(); ++x) {
        auto c = subgroup_closure(t, {x});
        if (subs.insert(c).second) frontier.push_back(c);
    }
    std::vector<std::vector<int>> cyclic = frontier;
    // Every subgroup is a join of cyclic ones.
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier)
            for (const auto& c : cyclic) {
                if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
                std::vector<int> gens = s;
                gens.insert(gens.end(), c.begin(), c.end());
                auto j = subgroup_closure(t, gens);
                if (subs.insert(j).second) next.push_back(j);
            }
        frontier = std::move(next);
    }
    return {subs.begin(), subs.end()};
}

std::vector<std::vector<int>> subgroup_class_reps(const GroupTable& t) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> reps;
    for (const auto& s : all_subgroups(t)) {
        if (seen.count(s)) continue;
        reps.push_back(s);
        for (int x = 0; x < t.order(); ++x) {
            std::vector<int> c;
            for (int y : s) c.push_back(t.conj(y, x));
            std::sort(c.begin(), c.end());
            seen.insert(c);
        }
    }
    return reps;
}

std::vector<Cyclo> induced_values(const Group& g, const Subgroup& h, int psi) {
    const GroupTable& t = g.table();
    const Group& hg = *h.group;
    std::vector<Cyclo> out(g.order());
    mpq_class scale(1, static_cast<long>(h.members.size()));
    for (int x = 0; x < g.order(); ++x) {
        Cyclo s;
        for (int y = 0; y < g.order(); ++y) {
            int p = h.pos[t.conj(x, y)];
            if (p >= 0) s += hg.value_at(psi, p);
        }
        out[x] = s * Cyclo(scale);
    }
    return out;
}

CriterionResult check_character_core(const VerifyOptions& opt) {
    CriterionResult r;
    r.id = 1;
    r.title = "character core: orthogonality, Frobenius reciprocity, Mackey";
    std::atomic<long> ortho{0}, frob{0}, mackey{0};
    std::mutex mu;
    auto one = [&](const Group& g) {
        CriterionResult r;  // per-group failures, merged below
        const CharTable& ct = g.chars();
        const GroupTable& t = g.table();
        const int k = ct.num_classes();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Cyclo s;
                for (int c = 0; c < k; ++c) s += Cyclo(ct.class_size(c)) * ct.value(i, c) * ct.value(j, c).conj();
                ++ortho;
                if (s != Cyclo(i == j ? g.order() : 0)) fail(r, g.name() + ": row orthogonality " + std::to_string(i) + "," + std::to_string(j));
                Cyclo col;
                for (int x = 0; x < k; ++x) col += ct.value(x, i) * ct.value(x, j).conj();
                ++ortho;
                if (col != Cyclo(i == j ? ct.centralizer_order(i) : 0))
                    fail(r, g.name() + ": column orthogonality " + std::to_string(i) + "," + std::to_string(j));
            }

        auto reps = subgroup_class_reps(t);
        for (const auto& hm : reps) {
            const Subgroup& h = g.subgroup(hm);
            const Group& hg = *h.group;
            for (int j = 0; j < hg.num_irreps(); ++j) {
                auto ind = induced_values(g, h, j);
                auto ind_dec = decompose_elementwise(g, ind);
                auto lib = induce(g, h, VirtualChar::irrep(h.group, j));
                if (lib.coeffs() != ind_dec) fail(r, g.name() + ": induce disagrees with element sums");
                for (int i = 0; i < g.num_irreps(); ++i) {
                    // <Res chi_i, psi_j>_H by summing over H.
                    Cyclo s;
                    for (size_t a = 0; a < hm.size(); ++a) s += g.value_at(i, hm[a]) * hg.value_at(j, static_cast<int>(a)).conj();
                    s = s * Cyclo(mpq_class(1, static_cast<long>(hm.size())));
                    ++frob;
                    if (s != Cyclo(ind_dec[i]) || h.res[i][j] != ind_dec[i])
                        fail(r, g.name() + ": Frobenius reciprocity chi" + std::to_string(i) + " / psi" + std::to_string(j));
                }
            }
        }

        // Mackey: Res_K Ind_H psi = sum over K\G/H of Ind_{K cap sHs^-1}^K psi^s.
        for (const auto& hm : reps) {
            const Subgroup& h = g.subgroup(hm);
            for (const auto& km : reps) {
                const Subgroup& kk = g.subgroup(km);
                std::vector<int> dc(g.order(), -1);
                std::vector<int> dreps;
                for (int s = 0; s < g.order(); ++s) {
                    if (dc[s] >= 0) continue;
                    int id = static_cast<int>(dreps.size());
                    dreps.push_back(s);
                    for (int a : km)
                        for (int b : hm) dc[t.mul(t.mul(a, s), b)] = id;
                }
                const int kk_n = kk.group->num_irreps();
                for (int j = 0; j < h.group->num_irreps(); ++j) {
                    std::vector<long> lhs(kk_n, 0);
                    for (int i = 0; i < g.num_irreps(); ++i)
                        for (int m = 0; m < kk_n; ++m) lhs[m] += h.ind[j][i] * kk.res[i][m];
                    std::vector<long> rhs(kk_n, 0);
                    for (int s : dreps) {
                        int si = t.inv(s);
                        std::vector<int> lpos;  // K cap sHs^-1, as positions in K
                        for (int y : km)
                            if (h.contains(t.mul(t.mul(si, y), s))) lpos.push_back(kk.pos[y]);
                        const Subgroup& l = kk.group->subgroup(lpos);
                        const Group& lg = *l.group;
                        std::vector<Cyclo> v(lg.num_classes());
                        for (int c = 0; c < lg.num_classes(); ++c) {
                            int y = km[l.members[lg.chars().classes().reps[c]]];
                            v[c] = h.group->value_at(j, h.pos[t.mul(t.mul(si, y), s)]);
                        }
                        auto d = lg.decompose(v);
                        for (int q = 0; q < lg.num_irreps(); ++q)
                            for (int m = 0; m < kk_n; ++m) rhs[m] += d[q] * l.ind[q][m];
                    }
                    ++mackey;
                    if (lhs != rhs) fail(r, g.name() + ": Mackey |H|=" + std::to_string(hm.size()) + " |K|=" + std::to_string(km.size()));
                }
            }
        }
        return r;
    };
    auto groups = catalog_upto(opt.max_group_order);
    // Largest groups first so that the slowest ones start early.
    std::stable_sort(groups.begin(), groups.end(), [](const GroupPtr& a, const GroupPtr& b) { return a->order() > b->order(); });
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < groups.size();) {
            auto local = one(*groups[i]);
            std::lock_guard<std::mutex> lk(mu);
            for (auto& f : local.failures) fail(r, f);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, opt.jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(r.failures.begin(), r.failures.end());
    r.checks = ortho + frob + mackey;
    r.note = std::to_string(ortho) + " orthogonality, " + std::to_string(frob) + " reciprocity, " + std::to_string(mackey) +
             " Mackey checks";
    return r;
}

CriterionResult check_wedge_identity(const VerifyOptions& opt) {
    CriterionResult r;
    r.id = 2;
    r.title = "wedge2(Ind sigma) = Ind(det sigma) + M(sigma)";
    for (const auto& gp : catalog_upto(opt.max_group_order)) {
        const Group& g = *gp;
        const GroupTable& t = g.table();
        long brute = 0;
        for (const auto& s : all_subgroups(t))
            if (static_cast<int>(s.size()) * 2 == g.order()) ++brute;
        if (brute != static_cast<long>(g.index2().size())) fail(r, g.name() + ": index-2 subgroup count disagrees with brute force");
        for (const auto& e : g.index2()) {
            const Subgroup& h = g.subgroup(e.members);
            for (int s = 0; s < h.group->num_irreps(); ++s) {
                if (h.group->degree(s) != 2) continue;
                auto ind = induced_values(g, h, s);
                std::vector<Cyclo> w(g.order());
                for (int x = 0; x < g.order(); ++x)
                    w[x] = (ind[x] * ind[x] - ind[t.mul(x, x)]) * Cyclo(mpq_class(1, 2));
                auto lhs = decompose_elementwise(g, w);
                auto sigma = VirtualChar::irrep(h.group, s);
                auto rhs = induce(g, h, VirtualChar::irrep(h.group, h.group->det(s))) + asai_lift(g, h, sigma);
                ++r.checks;
                if (rhs.coeffs() != lhs) fail(r, g.name() + ": sigma = irrep " + std::to_string(s) + " of H" + std::to_string(&e - &g.index2()[0]));
            }
        }
    }
    r.note = std::to_string(r.checks) + " (H, sigma) pairs";
    return r;
}

CriterionResult check_cardinality(const CorpusResult& full) {
    CriterionResult r;
    r.id = 3;
    r.title = "|A_std| = |A_phi| * |I(phi)|";
    for (const auto& e : full.entries) {
        const auto& p = e.cv.report.param;
        long lhs = component_group_so(std_of(p)).size;
        long rhs = static_cast<long>(a_size_gsp4(p)) * static_cast<long>(i_group(p).size());
        ++r.checks;
        if (lhs != rhs) fail(r, describe(p) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    }
    r.note = std::to_string(r.checks) + " params";
    return r;
}

CriterionResult check_size_bound(const CorpusResult& full) {
    CriterionResult r;
    r.id = 4;
    r.title = "N in {1,2,4,8,16}; N <= 8 when the 2-part of the abelianization is Klein";
    long klein = 0;
    for (const auto& e : full.entries) {
        const auto& rep = e.cv.report;
        long n = rep.n;
        ++r.checks;
        if (n != 1 && n != 2 && n != 4 && n != 8 && n != 16) fail(r, describe(rep.param) + ": N = " + std::to_string(n));
        if (rep.param.phi.group()->two_part_is_klein()) {
            ++klein;
            if (n > 8) fail(r, describe(rep.param) + ": N = 16 over a Klein model");
        }
    }
    r.note = std::to_string(r.checks) + " params, " + std::to_string(klein) + " over Klein models";
    return r;
}

CriterionResult check_named_instances() {
    CriterionResult r;
    r.id = 5;
    r.title = "named instances";
    auto expect = [&](const std::string& tag, const WDRep& phi, long n, const std::string& label = "",
                      std::optional<int> sim = std::nullopt) {
        ++r.checks;
        try {
            auto rep = classify_param(validate_param(phi, sim));
            if (rep.n != n) fail(r, tag + ": N = " + std::to_string(rep.n) + ", expected " + std::to_string(n));
            if (!label.empty() && rep.case_label != label) fail(r, tag + ": case " + rep.case_label + ", expected " + label);
            if (!rep.ok()) fail(r, tag + ": consistency failure");
            return rep;
        } catch (const std::exception& ex) {
            fail(r, tag + ": " + ex.what());
            return ClassReport{};
        }
    };

    auto c1 = Group::catalog("C1");
    auto rep = expect("mu S4", WDRep::term(c1, 0, 4), 1, "DS-i");
    ++r.checks;
    if (std_of(rep.param) != WDRep::term(c1, 0, 5)) fail(r, "mu S4: std is not S5");

    auto d8 = Group::catalog("D8");
    int sd8 = -1;
    for (int i = 0; i < d8->num_irreps(); ++i)
        if (d8->degree(i) == 2) sd8 = i;
    expect("D8 sigma S2", WDRep::term(d8, sd8, 2), 4, "DS-ii");

    auto s3 = Group::catalog("S3");
    int ss3 = -1;
    for (int i = 0; i < s3->num_irreps(); ++i)
        if (s3->degree(i) == 2) ss3 = i;
    expect("S3 sigma S2", WDRep::term(s3, ss3, 2), 2, "DS-ii");

    for (const char* name : {"D8oD8", "D8oQ8"}) {
        auto g = Group::catalog(name);
        for (int i = 0; i < g->num_irreps(); ++i) {
            if (g->degree(i) != 4) continue;
            auto x = expect(std::string(name) + " faithful 4-dim", WDRep::term(g, i), 16, "III-b2");
            for (const auto& c : x.consistency)
                if (c.name == "path_agreement" && !c.pass) fail(r, std::string(name) + ": paths disagree");
        }
    }

    // rho from Q8 and its twist by the C2 character: the two 2-dim irreps of Q8 x C2.
    auto q = Group::catalog("Q8xC2");
    WDRep qs(q);
    for (int i = 0; i < q->num_irreps(); ++i)
        if (q->degree(i) == 2) qs.add(i, 1, 1);
    expect("Q8xC2 rho + rho chi", qs, 16, "DS-iii-b");

    // Borel: 1 + chi1 + chi2 + chi1 chi2 with sim = chi1 chi2.
    auto v4 = Group::catalog("V4");
    WDRep bv(v4);
    for (int i = 0; i < 4; ++i) bv.add(i, 1, 1);
    expect("Borel, chi1 != chi2 quadratic", bv, 4, "NDS-Borel", v4->lin_mul(1, 2));
    auto c8 = Group::catalog("C8");
    int a = -1, b = -1;
    for (int l : c8->linear()) {
        if (a < 0 && c8->lin_order(l) == 8) a = l;
        if (b < 0 && c8->lin_order(l) == 4) b = l;
    }
    WDRep bc(c8);
    bc.add(0, 1, 1);
    bc.add(a, 1, 1);
    bc.add(b, 1, 1);
    bc.add(c8->lin_mul(a, b), 1, 1);
    expect("Borel, no quadratics", bc, 1, "NDS-Borel", c8->lin_mul(a, b));
    r.note = std::to_string(r.checks) + " instances";
    return r;
}

CriterionResult check_primitive_equivalence(const CorpusResult& full) {
    CriterionResult r;
    r.id = 6;
    r.title = "std irreducible iff phi not induced from index 2";
    long prim = 0, ind = 0;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : full.entries) {
        const auto& p = e.cv.report.param;
        auto ts = p.phi.terms();
        if (ts.size() != 1 || ts[0].n != 1 || ts[0].mult != 1) continue;
        const Group& g = *p.phi.group();
        auto st = std_of(p).terms();
        bool std_irr = st.size() == 1 && st[0].mult == 1;
        // Brute force: index-2 subgroups from the lattice, each 2-dim irrep induced elementwise.
        bool induced = false;
        auto phi_vals = VirtualChar::irrep(p.phi.group(), ts[0].irrep);
        for (const auto& hm : all_subgroups(g.table())) {
            if (static_cast<int>(hm.size()) * 2 != g.order()) continue;
            const Subgroup& h = g.subgroup(hm);
            for (int s = 0; s < h.group->num_irreps() && !induced; ++s) {
                if (h.group->degree(s) != 2) continue;
                auto v = induced_values(g, h, s);
                bool same = true;
                for (int x = 0; x < g.order() && same; ++x) same = v[x] == g.value_at(ts[0].irrep, x);
                induced = same;
            }
            if (induced) break;
        }
        ++r.checks;
        (std_irr ? prim : ind)++;
        if (std_irr == induced)
            fail(r, describe(p) + (std_irr ? ": std irreducible but phi is induced" : ": std reducible but phi is primitive"));
    }
    r.note = std::to_string(r.checks) + " irreducible params (" + std::to_string(prim) + " primitive, " + std::to_string(ind) +
             " induced)";
    return r;
}

CriterionResult check_clifford(const VerifyOptions& opt) {
    CriterionResult r;
    r.id = 7;
    r.title = "Clifford restriction: #JH = #I_H and simple transitivity";
    long pairs = 0, skipped = 0;
    for (const auto& gp : catalog_upto(opt.max_group_order)) {
        for (const auto& hm : elementary_two_quotients(*gp)) {
            auto rep = restrict_analyze(*gp, hm);
            ++pairs;
            for (const auto& x : rep.irreps) {
                if (!x.lemmas_checked) {
                    ++skipped;
                    continue;
                }
                ++r.checks;
            }
            for (const auto& f : rep.failures) fail(r, gp->name() + " |H|=" + std::to_string(hm.size()) + ": " + f);
        }
    }
    // D8 over its center: restriction of the 2-dim irrep has multiplicity 2.
    auto d8 = Group::catalog("D8");
    std::vector<int> center;
    for (int x = 0; x < d8->order(); ++x) {
        bool c = true;
        for (int y = 0; y < d8->order(); ++y) c = c && d8->table().mul(x, y) == d8->table().mul(y, x);
        if (c) center.push_back(x);
    }
    auto zr = restrict_analyze(*d8, center);
    ++r.checks;
    if (zr.hypothesis_holds || !zr.ok()) fail(r, "D8 over its center: expected a hypothesis failure and no lemma failure");
    r.note = std::to_string(pairs) + " (G, H) pairs, " + std::to_string(r.checks) + " lemma checks, " +
             std::to_string(skipped) + " irreps outside the multiplicity-free hypothesis";
    return r;
}

CriterionResult check_rules(const CorpusResult& full) {
    CriterionResult r;
    r.id = 8;
    r.title = "packet-rules cross-validation and exhaustiveness";
    const auto& book = RuleBook::builtin();
    for (const auto& l : book.missing_labels(classifier_labels())) fail(r, "no rule for label " + l);
    ++r.checks;
    for (const auto& e : full.entries) {
        ++r.checks;
        if (!e.cv.mismatches.empty()) {
            std::string m;
            for (const auto& x : e.cv.mismatches) m += (m.empty() ? "" : "; ") + x;
            fail(r, describe(e.cv.report.param) + " [" + e.cv.report.case_label + "]: " + m);
        }
    }
    r.note = std::to_string(full.mismatches) + " mismatching params of " + std::to_string(full.entries.size());
    return r;
}

CriterionResult check_determinism(const VerifyOptions& opt) {
    CriterionResult r;
    r.id = 9;
    r.title = "corpus output is byte-deterministic";
    CorpusOptions a;
    a.max_group_order = opt.max_group_order;
    a.jobs = 1;
    CorpusOptions b = a;
    b.jobs = std::max(2, opt.jobs);
    auto ra = run_corpus(a);
    auto rb = run_corpus(b);
    auto x = dump(corpus_json(ra));
    auto y = dump(corpus_json(rb));
    r.checks = 2;
    if (x != y) fail(r, "corpus JSON differs between runs");
    if (corpus_markdown(ra) != corpus_markdown(rb)) fail(r, "corpus markdown differs between runs");
    r.note = std::to_string(x.size()) + " bytes of JSON";
    return r;
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt) {
    CorpusOptions co;
    co.max_group_order = opt.max_group_order;
    co.jobs = opt.jobs;
    co.twist_reduce = false;
    auto full = run_corpus(co);
    return {check_character_core(opt),         check_wedge_identity(opt), check_cardinality(full),
            check_size_bound(full),            check_named_instances(),   check_primitive_equivalence(full),
            check_clifford(opt),               check_rules(full),         check_determinism(opt)};
}

}  // namespace wdp
