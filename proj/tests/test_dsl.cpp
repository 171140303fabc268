#include <doctest.h>

#include <random>

#include "wdp/catalog.hpp"
#include "wdp/dsl.hpp"

using namespace wdp;

namespace {

int c4_index(const Group& g) {
    for (size_t k = 0; k < g.index2().size(); ++k)
        if (g.subgroup(g.index2()[k].members).group->table().exponent() == 4) return static_cast<int>(k);
    return -1;
}

WDRep eval_in(const std::string& text, const char* group) { return evaluate(parse_sexpr(text), Group::catalog(group)).phi; }

// Random well-typed expression over g; depth-limited.
std::string random_expr(std::mt19937& rng, const Group& g, int depth) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    int c = depth == 0 ? pick(2) : pick(6);
    switch (c) {
        case 0: return "(irrep " + std::to_string(pick(g.num_irreps())) + ")";
        case 1: return "(linchar " + std::to_string(pick(static_cast<int>(g.linear().size()))) + ")";
        case 2: return "(dual " + random_expr(rng, g, depth - 1) + ")";
        case 3: return "(dsum " + random_expr(rng, g, depth - 1) + " " + random_expr(rng, g, depth - 1) + ")";
        case 4: return "(twist " + random_expr(rng, g, depth - 1) + " (linchar " +
                       std::to_string(pick(static_cast<int>(g.linear().size()))) + "))";
        default: return "(box (irrep " + std::to_string(pick(g.num_irreps())) + ") " + std::to_string(1 + pick(4)) + ")";
    }
}

}  // namespace

TEST_CASE("trivial group box") {
    auto r = evaluate(parse_sexpr("(box (irrep 0) 4)"), Group::catalog("C1"));
    CHECK(r.phi == WDRep::term(Group::catalog("C1"), 0, 4));
    CHECK_FALSE(r.sim);
}

TEST_CASE("induction from C4 into D8") {
    auto d8 = Group::catalog("D8");
    int k = c4_index(*d8);
    REQUIRE(k >= 0);
    const Subgroup& h = d8->subgroup(d8->index2()[k].members);
    for (int j = 0; j < h.group->num_irreps(); ++j) {
        auto phi = eval_in("(ind H" + std::to_string(k) + " (irrep " + std::to_string(j) + "))", "D8");
        CHECK(phi.dim() == 2);
        // Oracle: Frobenius multiplicities from the subgroup data.
        WDRep want(d8);
        for (int i = 0; i < d8->num_irreps(); ++i)
            if (h.ind[j][i]) want.add(i, 1, h.ind[j][i]);
        CHECK(phi == want);
    }
    // C4 has four irreducibles, so index 4 is out of range and names the offending node.
    try {
        eval_in("(ind H" + std::to_string(k) + " (irrep 4))", "D8");
        FAIL("expected a type error");
    } catch (const eval_error& e) {
        CHECK(std::string(e.what()).find("(irrep 4)") != std::string::npos);
        CHECK(e.loc.col == 9);
    }
}

TEST_CASE("Siegel shape") {
    auto d8 = Group::catalog("D8");
    int two = 4;
    REQUIRE(d8->degree(two) == 2);
    auto phi = eval_in("(dsum (irrep 4) (twist (irrep 4) (linchar 1)))", "D8");
    WDRep want(d8);
    want.add(two, 1, 1);
    want.add(d8->twist(two, d8->linear()[1]), 1, 1);
    CHECK(phi == want);
}

TEST_CASE("group and param wrappers") {
    auto r = evaluate(parse_sexpr(R"x((group "SL(2,3)" (param (box (irrep 1) 2) (sim (linchar 1)) (p 2))))x"));
    CHECK(r.phi.group()->name() == "SL(2,3)");
    REQUIRE(r.sim);
    CHECK(*r.sim == Group::catalog("SL(2,3)")->linear()[1]);
    CHECK(r.p == Residue::two);
    auto q = evaluate(parse_sexpr("(group C4 (param (box (linchar 2) 4) (p odd)))"));
    CHECK(q.p == Residue::odd);
    CHECK_FALSE(q.sim);
}

TEST_CASE("kernel and element subgroups") {
    auto d8 = Group::catalog("D8");
    for (size_t k = 0; k < d8->index2().size(); ++k) {
        auto a = eval_in("(ind H" + std::to_string(k) + " (irrep 0))", "D8");
        auto b = eval_in("(ind (kernel (irrep " + std::to_string(d8->index2()[k].omega) + ")) (irrep 0))", "D8");
        CHECK(a == b);
    }
    auto c = eval_in("(ind (subgroup 0) (irrep 0))", "D8");
    CHECK(c.dim() == 8);
}

TEST_CASE("print and parse round trip") {
    std::mt19937 rng(7);
    for (const char* n : {"D8", "Q8", "SL(2,3)", "C3:C4"}) {
        auto g = Group::catalog(n);
        for (int i = 0; i < 60; ++i) {
            auto text = random_expr(rng, *g, 3);
            auto e = parse_sexpr(text);
            auto printed = to_sexpr(e);
            auto again = parse_sexpr(printed);
            CHECK(again == e);
            CHECK(to_sexpr(again) == printed);
            CHECK(parse_json_ast(to_json(e)) == e);
            CHECK(parse_param_expr(to_json(e).dump()) == e);
        }
    }
    auto w = parse_sexpr(R"x((group "SL(2,3)" (param (ind H0 (twist (irrep 1) (linchar 2))) (sim (linchar 1)) (p odd))))x");
    CHECK(parse_sexpr(to_sexpr(w)) == w);
    CHECK(parse_json_ast(to_json(w)) == w);
    auto k = parse_sexpr("(ind (kernel (linchar 1)) (ind (subgroup 1 2) (irrep 0)))");
    CHECK(parse_sexpr(to_sexpr(k)) == k);
    CHECK(parse_json_ast(to_json(k)) == k);
}

TEST_CASE("semantics match direct constructors") {
    std::mt19937 rng(11);
    auto g = Group::catalog("D8");
    for (int i = 0; i < 100; ++i) {
        auto a = random_expr(rng, *g, 2);
        auto b = random_expr(rng, *g, 2);
        WDRep pa, pb;
        try {
            pa = eval_in(a, "D8");
            pb = eval_in(b, "D8");
        } catch (const eval_error&) {
            continue;  // twist of a non-linear operand
        }
        WDRep sum = pa;
        for (const auto& t : pb.terms()) sum.add(t.irrep, t.n, t.mult);
        CHECK(eval_in("(dsum " + a + " " + b + ")", "D8") == sum);
        CHECK(eval_in("(dual " + a + ")", "D8") == wd_dual(pa));
    }
}

TEST_CASE("syntax errors carry locations") {
    auto loc = [](const std::string& text) {
        try {
            parse_sexpr(text);
        } catch (const parse_error& e) {
            return std::make_pair(e.loc.line, e.loc.col);
        }
        return std::make_pair(-1, -1);
    };
    CHECK(loc("(irrep)") == std::make_pair(1, 7));
    CHECK(loc("(irrep 1") == std::make_pair(1, 9));
    CHECK(loc("(frob 1)") == std::make_pair(1, 2));
    CHECK(loc("(dsum\n  (irrep 0)\n  (box (irrep 0) x))") == std::make_pair(3, 18));
    CHECK(loc("(irrep 1) (irrep 2)") == std::make_pair(1, 11));
    CHECK(loc("(ind K1 (irrep 0))") == std::make_pair(1, 6));
    CHECK(loc("; comment only\n") .first == 2);
    CHECK_THROWS_AS(parse_param_expr("{\"op\": "), parse_error);
    CHECK_THROWS_AS(parse_json_ast(nlohmann::json{{"op", "frob"}}), parse_error);
    CHECK_THROWS_AS(parse_json_ast(nlohmann::json{{"op", "irrep"}}), parse_error);
}

TEST_CASE("type errors name the node") {
    auto msg = [](const std::string& text, const char* g) -> std::string {
        try {
            evaluate(parse_sexpr(text), g ? Group::catalog(g) : nullptr);
        } catch (const eval_error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(msg("(box (dsum (irrep 0) (box (irrep 0) 2)) 2)", "C2").find("in (box (dsum") != std::string::npos);
    CHECK(msg("(twist (irrep 0) (irrep 4))", "D8").find("in (irrep 4)") != std::string::npos);
    CHECK(msg("(irrep 9)", "C2").find("out of range") != std::string::npos);
    CHECK_FALSE(msg("(irrep 0)", nullptr).empty());
    CHECK_FALSE(msg("(group NoSuchGroup (irrep 0))", nullptr).empty());
    CHECK_FALSE(msg("(dsum (group C2 (irrep 0)))", "C2").empty());
    CHECK_FALSE(msg("(ind H7 (irrep 0))", "D8").empty());
    CHECK(msg("(ind H0 (irrep 0))", "D8").empty());
}
