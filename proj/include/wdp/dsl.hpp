// Parameter-expression language: s-expression text or JSON AST, evaluated to WD representations.
//
//   expr := (irrep i) | (linchar i) | (ind SUB expr) | (twist expr expr) | (dsum expr ...)
//         | (box expr n) | (dual expr) | (group NAME expr) | (param expr (sim expr) (p 2|odd))
//   SUB  := H<k> | (subgroup g ...) | (kernel expr)
//
// H<k> is the k-th index-2 subgroup in canonical order; (subgroup g ...) is generated by the
// listed element indices. Group names with parentheses are written as strings: "SL(2,3)".
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdp/gsp4.hpp"

namespace wdp {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

struct parse_error : std::runtime_error {
    SourceLoc loc;
    parse_error(SourceLoc l, const std::string& msg)
        : std::runtime_error(std::to_string(l.line) + ":" + std::to_string(l.col) + ": " + msg), loc(l) {}
    // JSON input has no line structure; errors carry a JSON pointer instead.
    parse_error(const std::string& pointer, const std::string& msg) : std::runtime_error("json " + pointer + ": " + msg) {}
};

// Ill-typed node found during evaluation.
struct eval_error : std::runtime_error {
    SourceLoc loc;
    eval_error(SourceLoc l, const std::string& node, const std::string& msg)
        : std::runtime_error(std::to_string(l.line) + ":" + std::to_string(l.col) + ": in " + node + ": " + msg),
          loc(l) {}
};

struct Expr;

struct SubgroupRef {
    enum class Kind { index2, elements, kernel };
    Kind kind = Kind::index2;
    long index = 0;
    std::vector<long> elements;
    std::shared_ptr<Expr> lin;
    SourceLoc loc;
    bool operator==(const SubgroupRef& o) const;
};

struct Expr {
    enum class Op { irrep, linchar, ind, twist, dsum, box, dual, group, param };
    Op op = Op::irrep;
    long index = 0;  // irrep, linchar
    long n = 1;      // box
    std::string name;  // group
    std::optional<SubgroupRef> sub;  // ind
    std::vector<Expr> args;  // operands; twist: {expr, lin}
    std::shared_ptr<Expr> sim;  // param
    Residue p = Residue::unspecified;  // param
    SourceLoc loc;
    bool operator==(const Expr& o) const;  // ignores source locations
};

const char* op_name(Expr::Op op);

Expr parse_sexpr(const std::string& text);
Expr parse_json_ast(const nlohmann::json& j);
// JSON when the first non-blank character is '{', s-expression otherwise.
Expr parse_param_expr(const std::string& text);

std::string to_sexpr(const Expr& e);
nlohmann::json to_json(const Expr& e);

struct EvalResult {
    WDRep phi;
    std::optional<int> sim;
    Residue p = Residue::unspecified;
};

// Evaluates against the group named in the expression, else the given default group.
EvalResult evaluate(const Expr& e, GroupPtr default_group = nullptr);

}  // namespace wdp
