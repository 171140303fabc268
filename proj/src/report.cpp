#include "wdp/report.hpp"

#include <sstream>

namespace wdp {

using nlohmann::json;

namespace {

json int_list(const std::vector<int>& v) { return json(v); }

std::string chi_list(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "chi" : ", chi") + std::to_string(x);
    return s.empty() ? "-" : s;
}

std::string md_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '|') o += '\\';
        o += c;
    }
    return o;
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json cyclo_json(const Cyclo& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
    std::vector<mpq_class> c;
    for (const auto& s : j.at("coeffs")) {
        mpq_class q(s.get<std::string>());
        q.canonicalize();
        c.push_back(q);
    }
    return Cyclo::from_coeffs(j.at("order").get<int>(), std::move(c));
}

json wdrep_json(const WDRep& r) {
    json terms = json::array();
    for (const auto& t : r.terms()) terms.push_back({{"irrep", t.irrep}, {"n", t.n}, {"mult", t.mult}});
    return {{"group", r.group() ? r.group()->name() : ""}, {"dim", r.dim()}, {"terms", terms}, {"text", r.to_string()}};
}

json chartable_json(const Group& g) {
    const CharTable& ct = g.chars();
    json classes = json::array();
    for (int c = 0; c < ct.num_classes(); ++c)
        classes.push_back({{"representative", ct.classes().reps[c]},
                           {"size", ct.class_size(c)},
                           {"element_order", g.table().elem_order(ct.classes().reps[c])}});
    json irreps = json::array();
    for (int i = 0; i < ct.num_irreps(); ++i) {
        json vals = json::array();
        for (int c = 0; c < ct.num_classes(); ++c) vals.push_back(cyclo_json(ct.value(i, c)));
        irreps.push_back({{"index", i},
                          {"degree", ct.degree(i)},
                          {"fs_indicator", g.fs(i)},
                          {"dual", g.dual(i)},
                          {"det", g.det(i)},
                          {"values", vals}});
    }
    return {{"group", g.name()}, {"order", g.order()}, {"classes", classes}, {"irreps", irreps}};
}

std::string chartable_markdown(const Group& g) {
    const CharTable& ct = g.chars();
    std::ostringstream os;
    os << "# Character table of " << g.name() << " (order " << g.order() << ")\n\n| |";
    for (int c = 0; c < ct.num_classes(); ++c) os << " " << ct.classes().reps[c] << " |";
    os << "\n|---|";
    for (int c = 0; c < ct.num_classes(); ++c) os << "---|";
    os << "\n| size |";
    for (int c = 0; c < ct.num_classes(); ++c) os << " " << ct.class_size(c) << " |";
    os << "\n";
    for (int i = 0; i < ct.num_irreps(); ++i) {
        os << "| chi" << i << " |";
        for (int c = 0; c < ct.num_classes(); ++c) os << " " << md_escape(ct.value(i, c).to_string()) << " |";
        os << "\n";
    }
    os << "\nFrobenius-Schur indicators:";
    for (int i = 0; i < ct.num_irreps(); ++i) os << " " << g.fs(i);
    os << "\n";
    return os.str();
}

json class_report_json(const ClassReport& r) {
    json stdd = json::array();
    for (const auto& c : r.std_decomposition)
        stdd.push_back({{"irrep", c.irrep}, {"n", c.n}, {"mult", c.mult}, {"self_dual", c.self_dual}, {"type", type_name(c.type)}});
    json checks = json::array();
    for (const auto& c : r.consistency) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"group", r.group},
            {"phi", wdrep_json(r.param.phi)},
            {"sim", r.param.sim},
            {"sim_candidates", int_list(r.param.sim_candidates)},
            {"p", residue_name(r.param.p)},
            {"std", stdd},
            {"case", r.case_label},
            {"I_phi", int_list(r.i_phi)},
            {"A_phi_size", r.a_phi_size},
            {"A_std_size", r.a_std_size},
            {"N", r.n},
            {"r", r.r},
            {"witnesses", r.witnesses},
            {"bindings", r.bindings},
            {"consistency", checks},
            {"warnings", r.warnings},
            {"ok", r.ok()}};
}

std::vector<std::string> validate_class_report_json(const json& j) {
    std::vector<std::string> errs;
    auto need = [&](const char* k, bool (json::*pred)() const noexcept) {
        if (!j.contains(k)) {
            errs.push_back(std::string("missing ") + k);
            return false;
        }
        if (!(j.at(k).*pred)()) {
            errs.push_back(std::string("wrong type for ") + k);
            return false;
        }
        return true;
    };
    if (!j.is_object()) return {"report is not an object"};
    need("group", &json::is_string);
    if (need("phi", &json::is_object)) {
        const auto& phi = j.at("phi");
        if (!phi.contains("terms") || !phi.at("terms").is_array()) errs.push_back("phi.terms missing");
        else
            for (const auto& t : phi.at("terms"))
                if (!t.contains("irrep") || !t.contains("n") || !t.contains("mult")) errs.push_back("malformed phi term");
        if (!phi.contains("dim") || phi.at("dim") != 4) errs.push_back("phi.dim is not 4");
    }
    need("sim", &json::is_number_integer);
    need("sim_candidates", &json::is_array);
    if (need("p", &json::is_string)) {
        auto p = j.at("p").get<std::string>();
        if (p != "2" && p != "odd" && p != "unspecified") errs.push_back("bad p");
    }
    if (need("std", &json::is_array)) {
        for (const auto& c : j.at("std")) {
            if (!c.contains("type") || !c.contains("mult")) {
                errs.push_back("malformed std constituent");
                continue;
            }
            if (!c.at("self_dual").get<bool>()) errs.push_back("std constituent not self-dual");
        }
    }
    need("case", &json::is_string);
    need("I_phi", &json::is_array);
    need("A_phi_size", &json::is_number_integer);
    need("A_std_size", &json::is_number_integer);
    if (need("N", &json::is_number_integer)) {
        long n = j.at("N").get<long>();
        if (n != 1 && n != 2 && n != 4 && n != 8 && n != 16) errs.push_back("N outside {1,2,4,8,16}");
    }
    need("r", &json::is_number_integer);
    need("witnesses", &json::is_object);
    need("bindings", &json::is_object);
    if (need("consistency", &json::is_array))
        for (const auto& c : j.at("consistency"))
            if (!c.contains("name") || !c.contains("pass")) errs.push_back("malformed consistency entry");
    need("warnings", &json::is_array);
    need("ok", &json::is_boolean);
    return errs;
}

std::string class_report_markdown(const ClassReport& r) {
    std::ostringstream os;
    os << "# Classification over " << r.group << "\n\n";
    os << "- phi: " << r.param.phi.to_string() << " (dim " << r.param.phi.dim() << ")\n";
    os << "- sim: chi" << r.param.sim << " (candidates: " << chi_list(r.param.sim_candidates) << ")\n";
    os << "- p: " << residue_name(r.param.p) << "\n";
    os << "- case: " << r.case_label << "\n";
    os << "- N(phi): " << r.n << "\n";
    os << "- I(phi): " << chi_list(r.i_phi) << " (size " << r.i_phi.size() << ")\n";
    os << "- |A_phi|: " << r.a_phi_size << ", |A_std|: " << r.a_std_size << ", r = " << r.r << "\n\n";
    os << "## std(phi)\n\n| irrep | n | mult | type |\n|---|---|---|---|\n";
    for (const auto& c : r.std_decomposition)
        os << "| chi" << c.irrep << " | " << c.n << " | " << c.mult << " | " << type_name(c.type) << " |\n";
    if (!r.bindings.empty()) {
        os << "\n## Bindings\n\n";
        for (const auto& [k, v] : r.bindings) os << "- " << k << " = " << v << "\n";
    }
    if (!r.witnesses.empty()) {
        os << "\n## Witnesses\n\n";
        for (const auto& [k, v] : r.witnesses) os << "- " << k << ": " << v << "\n";
    }
    os << "\n## Checks\n\n";
    for (const auto& c : r.consistency)
        os << "- [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!r.warnings.empty()) {
        os << "\n## Warnings\n\n";
        for (const auto& w : r.warnings) os << "- " << w << "\n";
    }
    return os.str();
}

json cross_validation_json(const CrossValidation& cv) {
    json j = class_report_json(cv.report);
    json rule = nullptr;
    if (cv.rule)
        rule = {{"label", cv.rule->label}, {"N", cv.rule->n}, {"I", cv.rule->i_generators}, {"I_size", cv.rule->i_size}};
    json rows = json::array();
    for (const auto* e : cv.jh_rows)
        rows.push_back({{"table", e->table}, {"family", e->family}, {"condition", e->condition}, {"counts", e->counts}});
    j["prediction"] = rule;
    j["jh_rows"] = rows;
    j["mismatches"] = cv.mismatches;
    return j;
}

json restriction_json(const RestrictionReport& r) {
    json irreps = json::array();
    for (const auto& x : r.irreps) {
        json cons = json::array();
        for (const auto& [j, m] : x.constituents) cons.push_back({{"irrep", j}, {"mult", m}});
        json e = {{"irrep", x.irrep},
                  {"constituents", cons},
                  {"multiplicity_free", x.multiplicity_free},
                  {"I_H", x.i_h},
                  {"N_pi_order", x.n_pi.size()},
                  {"stabilizer_order", x.stabilizer.size()},
                  {"orbit_size", x.orbit_size},
                  {"single_orbit", x.single_orbit}};
        if (x.lemmas_checked) {
            e["jh_equals_i"] = x.jh_equals_i;
            e["simply_transitive"] = x.simply_transitive;
        }
        irreps.push_back(e);
    }
    return {{"group", r.group},
            {"H", r.h_members},
            {"k", r.k},
            {"hypothesis_holds", r.hypothesis_holds},
            {"twist_pairs_ok", r.twist_pairs_ok},
            {"frobenius_ok", r.frobenius_ok},
            {"irreps", irreps},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

std::string restriction_markdown(const RestrictionReport& r) {
    std::ostringstream os;
    os << "# Restriction from " << r.group << " to H (index 2^" << r.k << ", |H| = " << r.h_members.size() << ")\n\n";
    os << "- multiplicity-free hypothesis: " << (r.hypothesis_holds ? "holds" : "fails") << "\n";
    os << "- twist pairs: " << (r.twist_pairs_ok ? "ok" : "FAIL") << "\n";
    os << "- Frobenius cross-check: " << (r.frobenius_ok ? "ok" : "FAIL") << "\n\n";
    os << "| pi | constituents | #JH | #I_H | orbit | stabilizer | lemma |\n|---|---|---|---|---|---|---|\n";
    for (const auto& x : r.irreps) {
        std::string cons;
        for (const auto& [j, m] : x.constituents)
            cons += (cons.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) + "*" : "") + "psi" + std::to_string(j);
        std::string lemma = !x.lemmas_checked ? "not multiplicity-free"
                            : (x.jh_equals_i && x.simply_transitive) ? "ok"
                                                                     : "FAIL";
        os << "| chi" << x.irrep << " | " << cons << " | " << x.constituents.size() << " | " << x.i_h.size() << " | "
           << x.orbit_size << " | " << x.stabilizer.size() << " | " << lemma << " |\n";
    }
    if (!r.failures.empty()) {
        os << "\n## Failures\n\n";
        for (const auto& f : r.failures) os << "- " << f << "\n";
    }
    return os.str();
}

}  // namespace wdp
