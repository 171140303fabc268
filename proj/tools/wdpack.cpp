// wdpack: character tables, GSp4 parameter classification and packet sizes over finite models.
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wdp/catalog.hpp"
#include "wdp/clifford.hpp"
#include "wdp/corpus.hpp"
#include "wdp/dsl.hpp"
#include "wdp/report.hpp"
#include "wdp/verify.hpp"
#include "wdp/version.hpp"

using namespace wdp;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kConsistency = 1;
constexpr int kUsage = 2;

struct Options {
    std::string group;
    std::string param;
    int sim = -1;
    std::string p;
    std::string format = "json";
    std::string out;
    int max_order = 64;
    int jobs = 1;
    bool no_header = false;
    bool all_twists = false;
    std::string subgroup;
    std::string label;
    std::vector<std::string> bindings;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Writes json or markdown to stdout, or to <out>.json and <out>.md when --out is given.
void emit(const Options& o, json j, const std::string& md) {
    if (!o.no_header) j["header"] = {{"tool", "wdpack"}, {"version", kVersion}, {"generated", timestamp()}};
    std::string hdr = o.no_header ? "" : "<!-- wdpack " + std::string(kVersion) + " " + timestamp() + " -->\n";
    if (!o.out.empty()) {
        std::ofstream(o.out + ".json") << dump(j);
        std::ofstream(o.out + ".md") << hdr << md;
        return;
    }
    if (o.format == "md") std::cout << hdr << md;
    else std::cout << dump(j);
}

GroupPtr context_group(const Options& o) {
    if (o.group.empty()) return nullptr;
    try {
        return Group::catalog(o.group);
    } catch (const group_error& e) {
        throw usage_error(e.what());
    }
}

std::string param_text(const std::string& arg) {
    std::string s = arg;
    size_t k = s.find_first_not_of(" \t\r\n");
    bool inline_expr = k != std::string::npos && (s[k] == '(' || s[k] == '{');
    if (!inline_expr && std::filesystem::is_regular_file(s)) {
        std::ifstream in(s);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return s;
}

GSp4Param load_param(const Options& o) {
    if (o.param.empty()) throw usage_error("--param is required");
    auto ast = parse_param_expr(param_text(o.param));
    auto r = evaluate(ast, context_group(o));
    std::optional<int> sim = r.sim;
    if (o.sim >= 0) sim = o.sim;
    Residue p = o.p.empty() ? r.p : parse_residue(o.p);
    return validate_param(r.phi, sim, p);
}

int cmd_chartable(const Options& o) {
    auto g = context_group(o);
    if (!g) throw usage_error("chartable needs --group");
    emit(o, chartable_json(*g), chartable_markdown(*g));
    return kOk;
}

int cmd_classify(const Options& o) {
    auto rep = classify_param(load_param(o));
    emit(o, class_report_json(rep), class_report_markdown(rep));
    for (const auto& c : rep.consistency)
        if (!c.pass) std::cerr << "consistency failure: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return rep.ok() ? kOk : kConsistency;
}

int cmd_packet(const Options& o) {
    auto p = load_param(o);
    auto cv = cross_validate(p);
    auto ps = packet_size_n(p);
    json j = cross_validation_json(cv);
    j["packet"] = {{"N_from_std", ps.path_a},
                   {"N_from_A_and_I", ps.path_b},
                   {"A_phi_size", ps.a_phi},
                   {"I_size", ps.i_size},
                   {"r", ps.r},
                   {"discrete", ps.discrete}};
    std::ostringstream md;
    md << "# Packet of " << p.phi.to_string() << " over " << cv.report.group << "\n\n"
       << "- case: " << cv.report.case_label << "\n- N(phi) = " << ps.path_a << " (std path), " << ps.path_b
       << " (|A_phi| * |I(phi)| = " << ps.a_phi << " * " << ps.i_size << ")\n"
       << "- discrete: " << (ps.discrete ? "yes" : "no") << "\n";
    if (cv.rule) md << "- table prediction: N = " << cv.rule->n << ", I = " << cv.rule->i_generators << "\n";
    for (const auto& m : cv.mismatches) md << "- mismatch: " << m << "\n";
    emit(o, j, md.str());
    for (const auto& m : cv.mismatches) std::cerr << "mismatch: " << m << "\n";
    return ps.agree() && cv.ok() ? kOk : kConsistency;
}

int cmd_predict(const Options& o) {
    Bindings b;
    for (const auto& kv : o.bindings) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw usage_error("binding '" + kv + "' is not key=value");
        try {
            b[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw usage_error("binding '" + kv + "' needs an integer value");
        }
    }
    const RuleEntry* r;
    try {
        r = &RuleBook::builtin().predict(o.label, b);
    } catch (const rules_error& e) {
        throw usage_error(e.what());
    }
    json j = {{"label", r->label}, {"when", r->when}, {"N", r->n}, {"I", r->i_generators}, {"I_size", r->i_size},
              {"condition", r->condition}, {"source", r->provenance}};
    std::ostringstream md;
    md << "- case: " << r->label << "\n- N(phi) = " << r->n << "\n- I(phi) = " << r->i_generators << " (size "
       << r->i_size << ")\n";
    if (!r->condition.empty()) md << "- condition: " << r->condition << "\n";
    emit(o, j, md.str());
    return kOk;
}

int cmd_tables(const Options& o) {
    const auto& book = RuleBook::builtin();
    json rules = json::array(), jh = json::array();
    for (const auto& r : book.rules())
        rules.push_back({{"label", r.label}, {"when", r.when}, {"N", r.n}, {"I", r.i_generators}, {"I_size", r.i_size},
                         {"condition", r.condition}, {"source", r.provenance}});
    for (const auto& e : book.jh()) {
        json cases = json::array();
        for (const auto& c : e.cases) cases.push_back({{"label", c.label}, {"when", c.when}});
        jh.push_back({{"table", e.table}, {"row", e.row}, {"family", e.family}, {"condition", e.condition},
                      {"counts", e.counts}, {"p", residue_name(e.p)}, {"cases", cases}, {"source", e.provenance}});
    }
    auto missing = book.missing_labels(classifier_labels());
    emit(o, {{"rules", rules}, {"jh", jh}, {"labels_without_rule", missing}}, book.render_markdown());
    return missing.empty() ? kOk : kConsistency;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.max_group_order = o.max_order;
    vo.jobs = o.jobs;
    auto res = run_all_criteria(vo);
    json arr = json::array();
    std::ostringstream md;
    bool all = true;
    for (const auto& c : res) {
        all = all && c.pass();
        arr.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", c.checks},
                       {"note", c.note}, {"failures", c.failures}});
        md << "- [" << (c.pass() ? "PASS" : "FAIL") << "] " << c.id << ". " << c.title << " (" << c.note << ")\n";
        for (const auto& f : c.failures) md << "  - " << f << "\n";
    }
    emit(o, {{"criteria", arr}, {"pass", all}}, md.str());
    return all ? kOk : kConsistency;
}

int cmd_corpus(const Options& o) {
    CorpusOptions co;
    co.max_group_order = o.max_order;
    co.jobs = o.jobs;
    co.twist_reduce = !o.all_twists;
    if (!o.p.empty()) co.p = parse_residue(o.p);
    auto r = run_corpus(co);
    emit(o, corpus_json(r), corpus_markdown(r));
    return r.ok() ? kOk : kConsistency;
}

std::vector<int> parse_elements(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw usage_error("bad element index '" + tok + "' in --subgroup");
        }
    }
    return out;
}

int cmd_cliffordsim(const Options& o) {
    std::vector<GroupPtr> groups;
    if (auto g = context_group(o)) groups.push_back(g);
    else
        for (const auto& n : catalog_names())
            if (Group::catalog(n)->order() <= o.max_order) groups.push_back(Group::catalog(n));
    json arr = json::array();
    std::string md;
    bool ok = true;
    for (const auto& g : groups) {
        std::vector<std::vector<int>> hs;
        if (!o.subgroup.empty()) {
            auto el = parse_elements(o.subgroup);
            for (int x : el)
                if (x < 0 || x >= g->order()) throw usage_error("element index out of range in --subgroup");
            hs.push_back(subgroup_closure(g->table(), el));
        } else {
            hs = elementary_two_quotients(*g);
        }
        for (const auto& h : hs) {
            RestrictionReport rep;
            try {
                rep = restrict_analyze(*g, h);
            } catch (const clifford_error& e) {
                throw usage_error(e.what());
            }
            ok = ok && rep.ok();
            arr.push_back(restriction_json(rep));
            md += restriction_markdown(rep) + "\n";
        }
    }
    emit(o, {{"restrictions", arr}, {"ok", ok}}, md);
    return ok ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wdpack: L-packet sizes for GSp4 parameters over finite Weil-group models"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--group", o.group, "catalog group used as the evaluation context");
    app.add_option("--param", o.param, "parameter expression, inline or a file (s-expression or JSON AST)");
    app.add_option("--sim", o.sim, "similitude character (irrep index of a linear character)");
    app.add_option("--p", o.p, "residue characteristic")->check(CLI::IsMember({"2", "odd"}));
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", o.out, "write <out>.json and <out>.md instead of printing");
    app.add_option("--max-group-order", o.max_order, "largest catalog group to include")->check(CLI::PositiveNumber);
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--no-header", o.no_header, "omit the version/timestamp header");

    auto* chartable = app.add_subcommand("chartable", "exact character table of --group");
    auto* classify = app.add_subcommand("classify", "classify a parameter and report N(phi)");
    auto* packet = app.add_subcommand("packet", "packet size by both computation paths");
    auto* predict = app.add_subcommand("predict", "look up the rule table for a case label");
    predict->add_option("label", o.label, "case label, e.g. III-a3")->required();
    predict->add_option("bindings", o.bindings, "condition bindings key=value");
    auto* tables = app.add_subcommand("tables", "print the packet-size and restriction tables");
    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    auto* corpus = app.add_subcommand("corpus", "enumerate parameters over the catalog and cross-validate");
    corpus->add_flag("--all-twists", o.all_twists, "keep every twist instead of one representative per orbit");
    auto* clifford = app.add_subcommand("cliffordsim", "restriction to normal subgroups with elementary 2-quotient");
    clifford->add_option("--subgroup", o.subgroup, "comma-separated generators of H (default: every such H)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*chartable) return cmd_chartable(o);
        if (*classify) return cmd_classify(o);
        if (*packet) return cmd_packet(o);
        if (*predict) return cmd_predict(o);
        if (*tables) return cmd_tables(o);
        if (*verify) return cmd_verify(o);
        if (*corpus) return cmd_corpus(o);
        if (*clifford) return cmd_cliffordsim(o);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const eval_error& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return kUsage;
    } catch (const param_error& e) {
        std::cerr << "invalid parameter (" << e.condition << "): " << e.what() << "\n";
        return kUsage;
    } catch (const group_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kConsistency;
    }
    return kUsage;
}
