#include "wdp/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wdp/rules_data.hpp"

namespace wdp {

namespace {

using nlohmann::json;

const std::set<long> kAllowed{1, 2, 4, 8, 16};

Bindings read_when(const json& j) {
    Bindings b;
    if (j.contains("when"))
        for (auto it = j["when"].begin(); it != j["when"].end(); ++it) b[it.key()] = it.value().get<long>();
    return b;
}

bool matches(const Bindings& when, const Bindings& b) {
    for (const auto& [k, v] : when) {
        auto it = b.find(k);
        if (it == b.end() || it->second != v) return false;
    }
    return true;
}

std::string when_str(const Bindings& w) {
    if (w.empty()) return "-";
    std::string s;
    for (const auto& [k, v] : w) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    return s;
}

std::string counts_str(const std::vector<long>& c) {
    std::string s;
    for (long x : c) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return s;
}

}  // namespace

RuleBook RuleBook::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw rules_error(std::string("rules data: ") + e.what());
    }
    RuleBook b;
    for (const auto& r : j.at("rules")) {
        RuleEntry e;
        e.label = r.at("label").get<std::string>();
        e.when = read_when(r);
        e.n = r.at("N").get<long>();
        e.i_generators = r.at("I").get<std::string>();
        e.i_size = r.at("I_size").get<long>();
        e.condition = r.value("condition", "");
        e.provenance = r.at("provenance").get<std::string>();
        if (!kAllowed.count(e.n) || !kAllowed.count(e.i_size))
            throw rules_error("rules data: N and |I| must lie in {1,2,4,8,16} (" + e.label + ")");
        b.rules_.push_back(std::move(e));
    }
    for (const auto& r : j.at("jh")) {
        JHEntry e;
        e.table = r.at("table").get<std::string>();
        e.row = r.value("row", "");
        e.family = r.at("family").get<std::string>();
        e.condition = r.value("condition", "");
        e.counts = r.at("counts").get<std::vector<long>>();
        if (r.contains("p")) e.p = parse_residue(r["p"].get<std::string>());
        for (const auto& c : r.at("cases")) e.cases.push_back({c.at("label").get<std::string>(), read_when(c)});
        e.provenance = r.at("provenance").get<std::string>();
        for (long c : e.counts)
            if (!kAllowed.count(c)) throw rules_error("rules data: JH count outside {1,2,4,8,16} (" + e.family + ")");
        b.jh_.push_back(std::move(e));
    }
    return b;
}

const RuleBook& RuleBook::builtin() {
    static const RuleBook b = parse(data::kRulesJson);
    return b;
}

const RuleEntry& RuleBook::predict(const std::string& label, const Bindings& b) const {
    bool known = false;
    for (const auto& r : rules_) {
        if (r.label != label) continue;
        known = true;
        for (const auto& kv : r.when)
            if (!b.count(kv.first)) throw rules_error("unbound condition '" + kv.first + "' for " + label);
        if (matches(r.when, b)) return r;
    }
    if (!known) throw rules_error("unknown case label: " + label);
    throw rules_error("no rule for " + label + " with " + when_str(b));
}

const JHEntry& RuleBook::jh_lookup(const std::string& family, const std::string& condition) const {
    for (const auto& e : jh_)
        if (e.family == family && (e.condition == condition || (condition == "-" && e.condition.empty()))) return e;
    throw rules_error("no JH row for family '" + family + "' with condition '" + condition + "'");
}

std::vector<const JHEntry*> RuleBook::jh_rows(const std::string& label, const Bindings& b, Residue p) const {
    std::vector<const JHEntry*> r;
    for (const auto& e : jh_) {
        // Undeclared p reads the p = 2 row, which is the larger one.
        Residue want = p == Residue::unspecified ? Residue::two : p;
        if (e.p != Residue::unspecified && e.p != want) continue;
        for (const auto& c : e.cases)
            if (c.label == label && matches(c.when, b)) {
                r.push_back(&e);
                break;
            }
    }
    return r;
}

std::vector<std::string> RuleBook::missing_labels(const std::vector<std::string>& labels) const {
    std::vector<std::string> m;
    for (const auto& l : labels)
        if (std::none_of(rules_.begin(), rules_.end(), [&](const RuleEntry& r) { return r.label == l; }))
            m.push_back(l);
    return m;
}

std::string RuleBook::render_markdown() const {
    std::ostringstream os;
    os << "# Packet sizes N(phi) and twist groups I(phi)\n\n";
    os << "| case | condition | bindings | N | I(phi) | source |\n|---|---|---|---|---|---|\n";
    for (const auto& r : rules_)
        os << "| " << r.label << " | " << r.condition << " | " << when_str(r.when) << " | " << r.n << " | "
           << r.i_generators << " | " << r.provenance << " |\n";
    std::vector<std::string> tables;
    for (const auto& e : jh_)
        if (std::find(tables.begin(), tables.end(), e.table) == tables.end()) tables.push_back(e.table);
    for (const auto& t : tables) {
        os << "\n# Restriction from GSp4(F) to Sp4(F) (" << t << ")\n\n";
        os << "| row | pi | #JH(pi) | condition | cases | source |\n|---|---|---|---|---|---|\n";
        for (const auto& e : jh_) {
            if (e.table != t) continue;
            std::string cond = e.condition;
            if (e.p != Residue::unspecified && cond.empty()) cond = std::string("p = ") + residue_name(e.p);
            std::string cases;
            for (const auto& c : e.cases) {
                cases += (cases.empty() ? "" : "; ") + c.label;
                if (!c.when.empty()) cases += " (" + when_str(c.when) + ")";
            }
            os << "| " << e.row << " | " << e.family << " | " << counts_str(e.counts) << " | " << cond << " | "
               << cases << " | " << e.provenance << " |\n";
        }
    }
    return os.str();
}

CrossValidation cross_validate(const GSp4Param& p, const RuleBook& book) {
    CrossValidation cv;
    cv.report = classify_param(p);
    const auto& rep = cv.report;
    long i_size = static_cast<long>(rep.i_phi.size());
    try {
        cv.rule = &book.predict(rep.case_label, rep.bindings);
        if (cv.rule->n != rep.n)
            cv.mismatches.push_back("N: predicted " + std::to_string(cv.rule->n) + ", computed " + std::to_string(rep.n));
        if (cv.rule->i_size != i_size)
            cv.mismatches.push_back("|I|: predicted " + std::to_string(cv.rule->i_size) + ", computed " +
                                    std::to_string(i_size));
    } catch (const rules_error& e) {
        cv.mismatches.push_back(e.what());
    }
    cv.jh_rows = book.jh_rows(rep.case_label, rep.bindings, p.p);
    // With a p-warning the declared p contradicts the model, so the p-specific row is not a test.
    for (const auto* e : cv.jh_rows) {
        if (rep.p_conflict && e->p != Residue::unspecified) continue;
        if (std::find(e->counts.begin(), e->counts.end(), i_size) == e->counts.end())
            cv.mismatches.push_back("#JH: row '" + e->family + " / " + e->condition + "' lists " + counts_str(e->counts) +
                                    ", computed |I| = " + std::to_string(i_size));
    }
    return cv;
}

}  // namespace wdp
