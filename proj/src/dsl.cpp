#include "wdp/dsl.hpp"

#include <cctype>
#include <sstream>

namespace wdp {

using nlohmann::json;

namespace {

bool same_ptr(const std::shared_ptr<Expr>& a, const std::shared_ptr<Expr>& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

}  // namespace

bool SubgroupRef::operator==(const SubgroupRef& o) const {
    return kind == o.kind && index == o.index && elements == o.elements && same_ptr(lin, o.lin);
}

bool Expr::operator==(const Expr& o) const {
    return op == o.op && index == o.index && n == o.n && name == o.name && sub == o.sub && args == o.args &&
           same_ptr(sim, o.sim) && p == o.p;
}

const char* op_name(Expr::Op op) {
    switch (op) {
        case Expr::Op::irrep: return "irrep";
        case Expr::Op::linchar: return "linchar";
        case Expr::Op::ind: return "ind";
        case Expr::Op::twist: return "twist";
        case Expr::Op::dsum: return "dsum";
        case Expr::Op::box: return "box";
        case Expr::Op::dual: return "dual";
        case Expr::Op::group: return "group";
        case Expr::Op::param: return "param";
    }
    return "?";
}

// ---------------------------------------------------------------- s-expressions

namespace {

struct Token {
    enum Kind { open, close, atom, string, end } kind;
    std::string text;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip();
        SourceLoc at{line_, col_};
        if (i_ >= s_.size()) return {Token::end, "", at};
        char c = s_[i_];
        if (c == '(' || c == ')') {
            advance();
            return {c == '(' ? Token::open : Token::close, std::string(1, c), at};
        }
        if (c == '"') {
            advance();
            std::string t;
            while (i_ < s_.size() && s_[i_] != '"') {
                if (s_[i_] == '\n') throw parse_error(at, "unterminated string");
                t += s_[i_];
                advance();
            }
            if (i_ >= s_.size()) throw parse_error(at, "unterminated string");
            advance();
            return {Token::string, t, at};
        }
        std::string t;
        while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')' &&
               s_[i_] != '"' && s_[i_] != ';') {
            t += s_[i_];
            advance();
        }
        return {Token::atom, t, at};
    }

private:
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip() {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
                advance();
            } else if (s_[i_] == ';') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { tok_ = lex_.next(); }

    Expr top() {
        Expr e = expr();
        if (tok_.kind != Token::end) throw parse_error(tok_.loc, "unexpected '" + tok_.text + "' after expression");
        return e;
    }

private:
    Token take() {
        Token t = tok_;
        tok_ = lex_.next();
        return t;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k) throw parse_error(tok_.loc, "expected " + what + describe());
        take();
    }
    std::string describe() const {
        if (tok_.kind == Token::end) return ", found end of input";
        return ", found '" + tok_.text + "'";
    }
    long integer(const std::string& what) {
        if (tok_.kind != Token::atom) throw parse_error(tok_.loc, "expected " + what + describe());
        const auto& t = tok_.text;
        size_t k = (t[0] == '-') ? 1 : 0;
        if (k == t.size() || t.find_first_not_of("0123456789", k) != std::string::npos || t.size() > 9)
            throw parse_error(tok_.loc, "expected " + what + describe());
        long v = std::stol(t);
        take();
        return v;
    }

    Expr expr() {
        SourceLoc at = tok_.loc;
        expect(Token::open, "'('");
        if (tok_.kind != Token::atom) throw parse_error(tok_.loc, "expected an operator" + describe());
        SourceLoc head_at = tok_.loc;
        std::string head = take().text;
        Expr e;
        e.loc = at;
        if (head == "irrep" || head == "linchar") {
            e.op = head == "irrep" ? Expr::Op::irrep : Expr::Op::linchar;
            e.index = integer("an irreducible index");
        } else if (head == "ind") {
            e.op = Expr::Op::ind;
            e.sub = subgroup();
            e.args.push_back(expr());
        } else if (head == "twist") {
            e.op = Expr::Op::twist;
            e.args.push_back(expr());
            e.args.push_back(expr());
        } else if (head == "dsum") {
            e.op = Expr::Op::dsum;
            while (tok_.kind == Token::open) e.args.push_back(expr());
            if (e.args.empty()) throw parse_error(tok_.loc, "dsum needs at least one operand");
        } else if (head == "box") {
            e.op = Expr::Op::box;
            e.args.push_back(expr());
            e.n = integer("a positive SL2 dimension");
            if (e.n < 1) throw parse_error(at, "box needs n >= 1");
        } else if (head == "dual") {
            e.op = Expr::Op::dual;
            e.args.push_back(expr());
        } else if (head == "group") {
            e.op = Expr::Op::group;
            if (tok_.kind != Token::atom && tok_.kind != Token::string)
                throw parse_error(tok_.loc, "expected a group name" + describe());
            e.name = take().text;
            e.args.push_back(expr());
        } else if (head == "param") {
            e.op = Expr::Op::param;
            e.args.push_back(expr());
            while (tok_.kind == Token::open) {
                SourceLoc o = tok_.loc;
                take();
                if (tok_.kind != Token::atom) throw parse_error(tok_.loc, "expected 'sim' or 'p'" + describe());
                std::string key = take().text;
                if (key == "sim") {
                    if (e.sim) throw parse_error(o, "duplicate sim");
                    e.sim = std::make_shared<Expr>(expr());
                } else if (key == "p") {
                    if (e.p != Residue::unspecified) throw parse_error(o, "duplicate p");
                    if (tok_.kind != Token::atom || (tok_.text != "2" && tok_.text != "odd"))
                        throw parse_error(tok_.loc, "expected 2 or odd" + describe());
                    e.p = parse_residue(take().text);
                } else {
                    throw parse_error(o, "unknown param option '" + key + "'");
                }
                expect(Token::close, "')'");
            }
        } else {
            throw parse_error(head_at, "unknown operator '" + head + "'");
        }
        expect(Token::close, "')'");
        return e;
    }

    SubgroupRef subgroup() {
        SubgroupRef s;
        s.loc = tok_.loc;
        if (tok_.kind == Token::atom) {
            const auto& t = tok_.text;
            if (t.size() < 2 || t[0] != 'H' || t.find_first_not_of("0123456789", 1) != std::string::npos)
                throw parse_error(tok_.loc, "expected a subgroup (H<k>, (subgroup ...) or (kernel ...))" + describe());
            s.kind = SubgroupRef::Kind::index2;
            s.index = std::stol(t.substr(1));
            take();
            return s;
        }
        expect(Token::open, "a subgroup");
        if (tok_.kind != Token::atom) throw parse_error(tok_.loc, "expected 'subgroup' or 'kernel'" + describe());
        std::string head = take().text;
        if (head == "subgroup") {
            s.kind = SubgroupRef::Kind::elements;
            while (tok_.kind == Token::atom) s.elements.push_back(integer("an element index"));
        } else if (head == "kernel") {
            s.kind = SubgroupRef::Kind::kernel;
            s.lin = std::make_shared<Expr>(expr());
        } else {
            throw parse_error(s.loc, "unknown subgroup form '" + head + "'");
        }
        expect(Token::close, "')'");
        return s;
    }

    Lexer lex_;
    Token tok_;
};

bool needs_quotes(const std::string& s) {
    if (s.empty()) return true;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';') return true;
    return false;
}

void print(std::ostream& os, const Expr& e);

void print_sub(std::ostream& os, const SubgroupRef& s) {
    switch (s.kind) {
        case SubgroupRef::Kind::index2: os << 'H' << s.index; break;
        case SubgroupRef::Kind::elements:
            os << "(subgroup";
            for (long x : s.elements) os << ' ' << x;
            os << ')';
            break;
        case SubgroupRef::Kind::kernel:
            os << "(kernel ";
            print(os, *s.lin);
            os << ')';
            break;
    }
}

void print(std::ostream& os, const Expr& e) {
    os << '(' << op_name(e.op);
    switch (e.op) {
        case Expr::Op::irrep:
        case Expr::Op::linchar: os << ' ' << e.index; break;
        case Expr::Op::ind:
            os << ' ';
            print_sub(os, *e.sub);
            os << ' ';
            print(os, e.args[0]);
            break;
        case Expr::Op::box:
            os << ' ';
            print(os, e.args[0]);
            os << ' ' << e.n;
            break;
        case Expr::Op::group:
            os << ' ' << (needs_quotes(e.name) ? "\"" + e.name + "\"" : e.name) << ' ';
            print(os, e.args[0]);
            break;
        case Expr::Op::param:
            os << ' ';
            print(os, e.args[0]);
            if (e.sim) {
                os << " (sim ";
                print(os, *e.sim);
                os << ')';
            }
            if (e.p != Residue::unspecified) os << " (p " << residue_name(e.p) << ')';
            break;
        default:
            for (const auto& a : e.args) {
                os << ' ';
                print(os, a);
            }
    }
    os << ')';
}

}  // namespace

Expr parse_sexpr(const std::string& text) { return Parser(text).top(); }

std::string to_sexpr(const Expr& e) {
    std::ostringstream os;
    print(os, e);
    return os.str();
}

// ---------------------------------------------------------------- JSON AST

namespace {

const json& field(const json& j, const char* key, const std::string& ptr) {
    if (!j.is_object()) throw parse_error(ptr, "expected an object");
    if (!j.contains(key)) throw parse_error(ptr, std::string("missing field '") + key + "'");
    return j.at(key);
}

long int_field(const json& j, const char* key, const std::string& ptr) {
    const json& v = field(j, key, ptr);
    if (!v.is_number_integer()) throw parse_error(ptr + "/" + key, "expected an integer");
    return v.get<long>();
}

Expr expr_from_json(const json& j, const std::string& ptr);

SubgroupRef sub_from_json(const json& j, const std::string& ptr) {
    SubgroupRef s;
    const json& k = field(j, "kind", ptr);
    if (!k.is_string()) throw parse_error(ptr + "/kind", "expected a string");
    auto kind = k.get<std::string>();
    if (kind == "index2") {
        s.kind = SubgroupRef::Kind::index2;
        s.index = int_field(j, "index", ptr);
    } else if (kind == "elements") {
        s.kind = SubgroupRef::Kind::elements;
        const json& el = field(j, "elements", ptr);
        if (!el.is_array()) throw parse_error(ptr + "/elements", "expected an array");
        for (size_t i = 0; i < el.size(); ++i) {
            if (!el[i].is_number_integer())
                throw parse_error(ptr + "/elements/" + std::to_string(i), "expected an integer");
            s.elements.push_back(el[i].get<long>());
        }
    } else if (kind == "kernel") {
        s.kind = SubgroupRef::Kind::kernel;
        s.lin = std::make_shared<Expr>(expr_from_json(field(j, "linchar", ptr), ptr + "/linchar"));
    } else {
        throw parse_error(ptr + "/kind", "unknown subgroup kind '" + kind + "'");
    }
    return s;
}

Expr expr_from_json(const json& j, const std::string& ptr) {
    const json& opj = field(j, "op", ptr);
    if (!opj.is_string()) throw parse_error(ptr + "/op", "expected a string");
    std::string op = opj.get<std::string>();
    Expr e;
    auto arg = [&](const char* key) { return expr_from_json(field(j, key, ptr), ptr + "/" + key); };
    if (op == "irrep" || op == "linchar") {
        e.op = op == "irrep" ? Expr::Op::irrep : Expr::Op::linchar;
        e.index = int_field(j, "index", ptr);
    } else if (op == "ind") {
        e.op = Expr::Op::ind;
        e.sub = sub_from_json(field(j, "subgroup", ptr), ptr + "/subgroup");
        e.args.push_back(arg("arg"));
    } else if (op == "twist") {
        e.op = Expr::Op::twist;
        e.args.push_back(arg("arg"));
        e.args.push_back(arg("by"));
    } else if (op == "dsum") {
        e.op = Expr::Op::dsum;
        const json& a = field(j, "args", ptr);
        if (!a.is_array() || a.empty()) throw parse_error(ptr + "/args", "expected a non-empty array");
        for (size_t i = 0; i < a.size(); ++i) e.args.push_back(expr_from_json(a[i], ptr + "/args/" + std::to_string(i)));
    } else if (op == "box") {
        e.op = Expr::Op::box;
        e.args.push_back(arg("arg"));
        e.n = int_field(j, "n", ptr);
        if (e.n < 1) throw parse_error(ptr + "/n", "box needs n >= 1");
    } else if (op == "dual") {
        e.op = Expr::Op::dual;
        e.args.push_back(arg("arg"));
    } else if (op == "group") {
        e.op = Expr::Op::group;
        const json& nm = field(j, "name", ptr);
        if (!nm.is_string()) throw parse_error(ptr + "/name", "expected a string");
        e.name = nm.get<std::string>();
        e.args.push_back(arg("arg"));
    } else if (op == "param") {
        e.op = Expr::Op::param;
        e.args.push_back(arg("arg"));
        if (j.contains("sim")) e.sim = std::make_shared<Expr>(arg("sim"));
        if (j.contains("p")) {
            const json& pj = j.at("p");
            std::string ps = pj.is_string() ? pj.get<std::string>() : pj.is_number_integer() ? std::to_string(pj.get<long>()) : "";
            if (ps != "2" && ps != "odd") throw parse_error(ptr + "/p", "expected 2 or odd");
            e.p = parse_residue(ps);
        }
    } else {
        throw parse_error(ptr + "/op", "unknown operator '" + op + "'");
    }
    return e;
}

json sub_to_json(const SubgroupRef& s) {
    switch (s.kind) {
        case SubgroupRef::Kind::index2: return {{"kind", "index2"}, {"index", s.index}};
        case SubgroupRef::Kind::elements: return {{"kind", "elements"}, {"elements", s.elements}};
        case SubgroupRef::Kind::kernel: return {{"kind", "kernel"}, {"linchar", to_json(*s.lin)}};
    }
    return {};
}

}  // namespace

Expr parse_json_ast(const json& j) { return expr_from_json(j, ""); }

json to_json(const Expr& e) {
    json j;
    j["op"] = op_name(e.op);
    switch (e.op) {
        case Expr::Op::irrep:
        case Expr::Op::linchar: j["index"] = e.index; break;
        case Expr::Op::ind:
            j["subgroup"] = sub_to_json(*e.sub);
            j["arg"] = to_json(e.args[0]);
            break;
        case Expr::Op::twist:
            j["arg"] = to_json(e.args[0]);
            j["by"] = to_json(e.args[1]);
            break;
        case Expr::Op::dsum: {
            json a = json::array();
            for (const auto& x : e.args) a.push_back(to_json(x));
            j["args"] = a;
            break;
        }
        case Expr::Op::box:
            j["arg"] = to_json(e.args[0]);
            j["n"] = e.n;
            break;
        case Expr::Op::dual: j["arg"] = to_json(e.args[0]); break;
        case Expr::Op::group:
            j["name"] = e.name;
            j["arg"] = to_json(e.args[0]);
            break;
        case Expr::Op::param:
            j["arg"] = to_json(e.args[0]);
            if (e.sim) j["sim"] = to_json(*e.sim);
            if (e.p != Residue::unspecified) j["p"] = residue_name(e.p);
            break;
    }
    return j;
}

Expr parse_param_expr(const std::string& text) {
    size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && text[k] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw parse_error("", std::string("malformed JSON: ") + e.what());
        }
        return parse_json_ast(j);
    }
    return parse_sexpr(text);
}

// ---------------------------------------------------------------- evaluation

namespace {

[[noreturn]] void fail(const Expr& e, const std::string& msg) { throw eval_error(e.loc, to_sexpr(e), msg); }

WDRep eval(const Expr& e, const GroupPtr& g);

int eval_linear(const Expr& e, const GroupPtr& g) {
    WDRep w = eval(e, g);
    auto ts = w.terms();
    if (ts.size() != 1 || ts[0].mult != 1 || ts[0].n != 1 || !g->is_linear(ts[0].irrep))
        fail(e, "expected a linear character");
    return ts[0].irrep;
}

const Subgroup& resolve(const Expr& at, const SubgroupRef& s, const GroupPtr& g) {
    try {
        switch (s.kind) {
            case SubgroupRef::Kind::index2: {
                const auto& l = g->index2();
                if (s.index < 0 || s.index >= static_cast<long>(l.size()))
                    fail(at, "H" + std::to_string(s.index) + " does not exist (" + g->name() + " has " +
                                 std::to_string(l.size()) + " index-2 subgroups)");
                return g->subgroup(l[s.index].members);
            }
            case SubgroupRef::Kind::elements: {
                std::vector<int> gens;
                for (long x : s.elements) {
                    if (x < 0 || x >= g->order()) fail(at, "element index " + std::to_string(x) + " out of range");
                    gens.push_back(static_cast<int>(x));
                }
                return g->subgroup_generated(gens);
            }
            case SubgroupRef::Kind::kernel: return g->subgroup(g->kernel(eval_linear(*s.lin, g)));
        }
    } catch (const group_error& ex) {
        fail(at, ex.what());
    }
    fail(at, "bad subgroup");
}

WDRep eval(const Expr& e, const GroupPtr& g) {
    if (!g) fail(e, "no group context; use (group NAME ...) or --group");
    switch (e.op) {
        case Expr::Op::irrep:
        case Expr::Op::linchar: {
            if (e.index < 0 || e.index >= g->num_irreps())
                fail(e, "index out of range for " + g->name() + " (" + std::to_string(g->num_irreps()) + " irreducibles)");
            if (e.op == Expr::Op::linchar && !g->is_linear(static_cast<int>(e.index)))
                fail(e, "irreducible " + std::to_string(e.index) + " is not linear");
            return WDRep::term(g, static_cast<int>(e.index));
        }
        case Expr::Op::ind: {
            const Subgroup& h = resolve(e, *e.sub, g);
            WDRep inner = eval(e.args[0], h.group);
            if (!inner.is_effective()) fail(e, "induction of a non-effective operand");
            return wd_induce(*g, h, inner);
        }
        case Expr::Op::twist: {
            WDRep a = eval(e.args[0], g);
            return wd_twist(a, eval_linear(e.args[1], g));
        }
        case Expr::Op::dsum: {
            WDRep r(g);
            for (const auto& a : e.args) r += eval(a, g);
            return r;
        }
        case Expr::Op::box: {
            WDRep a = eval(e.args[0], g);
            if (!a.is_pure_weil()) fail(e, "box needs a pure Weil operand (every term with n = 1)");
            WDRep r(g);
            for (const auto& t : a.terms()) r.add(t.irrep, static_cast<int>(e.n), t.mult);
            return r;
        }
        case Expr::Op::dual: return wd_dual(eval(e.args[0], g));
        case Expr::Op::group: fail(e, "group must be the outermost form");
        case Expr::Op::param: fail(e, "param must be outermost (inside group at most)");
    }
    fail(e, "unknown operator");
}

}  // namespace

EvalResult evaluate(const Expr& e, GroupPtr g) {
    const Expr* cur = &e;
    if (cur->op == Expr::Op::group) {
        try {
            g = Group::catalog(cur->name);
        } catch (const group_error& ex) {
            fail(*cur, ex.what());
        }
        cur = &cur->args[0];
    }
    EvalResult r;
    if (cur->op == Expr::Op::param) {
        r.p = cur->p;
        if (cur->sim) r.sim = eval_linear(*cur->sim, g);
        cur = &cur->args[0];
    }
    r.phi = eval(*cur, g);
    if (!r.phi.is_effective()) fail(*cur, "expression does not evaluate to an effective representation");
    return r;
}

}  // namespace wdp
