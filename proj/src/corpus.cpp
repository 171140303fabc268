#include "wdp/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "wdp/catalog.hpp"
#include "wdp/report.hpp"

namespace wdp {

using nlohmann::json;

bool is_twist_canonical(const WDRep& phi) {
    const Group& g = *phi.group();
    for (int l : g.linear())
        if (wd_twist(phi, l) < phi) return false;
    return true;
}

std::vector<GSp4Param> corpus_params(const GroupPtr& g, bool twist_reduce, Residue p) {
    std::vector<GSp4Param> out;
    for (const auto& phi : enumerate_wdreps(g, 4)) {
        if (twist_reduce && !is_twist_canonical(phi)) continue;
        auto sims = valid_sims(phi);
        for (int s : sims) {
            GSp4Param q;
            q.phi = phi;
            q.sim = s;
            q.p = p;
            q.sim_candidates = sims;
            out.push_back(std::move(q));
        }
    }
    return out;
}

namespace {

std::string param_key(int pos, const GSp4Param& p) {
    // Zero-padded so that the string order matches the numeric order.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%03d|", pos);
    std::string k = buf;
    for (const auto& t : p.phi.terms()) {
        std::snprintf(buf, sizeof buf, "%02d.%03d.%02ld;", t.n, t.irrep, t.mult);
        k += buf;
    }
    std::snprintf(buf, sizeof buf, "|%03d", p.sim);
    return k + buf;
}

}  // namespace

CorpusResult run_corpus(const CorpusOptions& opt, const RuleBook& book) {
    CorpusResult res;
    std::vector<std::pair<int, GSp4Param>> work;
    const auto& names = catalog_names();
    for (size_t i = 0; i < names.size(); ++i) {
        auto g = Group::catalog(names[i]);
        if (g->order() > opt.max_group_order) continue;
        res.groups.push_back(names[i]);
        for (auto& p : corpus_params(g, opt.twist_reduce, opt.p)) work.emplace_back(static_cast<int>(i), std::move(p));
    }

    std::vector<CorpusEntry> entries(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < work.size();) {
            auto& e = entries[i];
            e.group_pos = work[i].first;
            e.key = param_key(work[i].first, work[i].second);
            e.cv = cross_validate(work[i].second, book);
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(entries.begin(), entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.key < b.key; });
    for (const auto& e : entries) {
        res.label_counts[e.cv.report.case_label]++;
        if (!e.cv.mismatches.empty()) ++res.mismatches;
        if (!e.cv.report.ok()) ++res.consistency_failures;
    }
    res.entries = std::move(entries);
    return res;
}

json corpus_json(const CorpusResult& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        const auto& rep = e.cv.report;
        json failed = json::array();
        for (const auto& c : rep.consistency)
            if (!c.pass) failed.push_back(c.name);
        entries.push_back({{"key", e.key},
                           {"group", rep.group},
                           {"phi", rep.param.phi.to_string()},
                           {"sim", rep.param.sim},
                           {"case", rep.case_label},
                           {"bindings", rep.bindings},
                           {"N", rep.n},
                           {"I_size", rep.i_phi.size()},
                           {"A_phi_size", rep.a_phi_size},
                           {"predicted_N", e.cv.rule ? json(e.cv.rule->n) : json(nullptr)},
                           {"predicted_I_size", e.cv.rule ? json(e.cv.rule->i_size) : json(nullptr)},
                           {"failed_checks", failed},
                           {"mismatches", e.cv.mismatches}});
    }
    return {{"groups", r.groups},
            {"params", r.entries.size()},
            {"label_counts", r.label_counts},
            {"mismatches", r.mismatches},
            {"consistency_failures", r.consistency_failures},
            {"entries", entries}};
}

std::string corpus_markdown(const CorpusResult& r) {
    std::ostringstream os;
    os << "# Corpus\n\n- groups: " << r.groups.size() << "\n- params: " << r.entries.size()
       << "\n- mismatches: " << r.mismatches << "\n- consistency failures: " << r.consistency_failures << "\n\n";
    os << "| case | count |\n|---|---|\n";
    for (const auto& [k, v] : r.label_counts) os << "| " << k << " | " << v << " |\n";
    bool any = false;
    for (const auto& e : r.entries) {
        if (e.cv.ok()) continue;
        if (!any) os << "\n## Failures\n\n| group | phi | sim | case | N | detail |\n|---|---|---|---|---|---|\n";
        any = true;
        std::string detail;
        for (const auto& m : e.cv.mismatches) detail += (detail.empty() ? "" : "; ") + m;
        for (const auto& c : e.cv.report.consistency)
            if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.name;
        os << "| " << e.cv.report.group << " | " << e.cv.report.param.phi.to_string() << " | chi" << e.cv.report.param.sim
           << " | " << e.cv.report.case_label << " | " << e.cv.report.n << " | " << detail << " |\n";
    }
    return os.str();
}

}  // namespace wdp
