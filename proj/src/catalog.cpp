#include "wdp/catalog.hpp"

#include <map>

namespace wdp {

namespace {

using Cycles = std::vector<std::vector<int>>;

Perm cyc(const Cycles& c, int degree = 0) { return perm_from_cycles(c, degree); }

// Monomial matrix with fourth-root-of-unity entries: e_j -> i^phase[j] e_perm[j].
struct Monomial {
    std::vector<int> perm, phase;
};

Monomial kron(const Monomial& a, const Monomial& b) {
    int da = static_cast<int>(a.perm.size()), db = static_cast<int>(b.perm.size());
    Monomial r;
    r.perm.resize(da * db);
    r.phase.resize(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            r.perm[i * db + j] = a.perm[i] * db + b.perm[j];
            r.phase[i * db + j] = (a.phase[i] + b.phase[j]) % 4;
        }
    return r;
}

// Faithful action on the 4d points i^k e_j.
Perm monomial_perm(const Monomial& m) {
    int d = static_cast<int>(m.perm.size());
    Perm p(4 * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < 4; ++k) p[4 * j + k] = 4 * m.perm[j] + (k + m.phase[j]) % 4;
    return p;
}

// Action of 2x2 matrices over F_3 on the eight nonzero column vectors.
Perm f3_matrix_perm(int a, int b, int c, int d) {
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x || y) pts.emplace_back(x, y);
    Perm p(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        int x = (a * pts[i].first + b * pts[i].second) % 3;
        int y = (c * pts[i].first + d * pts[i].second) % 3;
        for (size_t j = 0; j < pts.size(); ++j)
            if (pts[j] == std::make_pair(x, y)) p[i] = static_cast<int>(j);
    }
    return p;
}

Perm shifted(const Perm& p, int offset, int degree) {
    Perm r(degree);
    for (int i = 0; i < degree; ++i) r[i] = i;
    for (size_t i = 0; i < p.size(); ++i) r[i + offset] = p[i] + offset;
    return r;
}

const Monomial kI{{0, 1}, {0, 0}};
const Monomial kX{{1, 0}, {0, 0}};
const Monomial kZ{{0, 1}, {0, 2}};
const Monomial kiX{{1, 0}, {1, 1}};
const Monomial kiZ{{0, 1}, {1, 3}};

std::map<std::string, std::vector<Perm>> build_catalog() {
    std::map<std::string, std::vector<Perm>> m;
    m["C1"] = {Perm{}};
    m["C2"] = {cyc({{1, 2}})};
    m["C3"] = {cyc({{1, 2, 3}})};
    m["C4"] = {cyc({{1, 2, 3, 4}})};
    m["C8"] = {cyc({{1, 2, 3, 4, 5, 6, 7, 8}})};
    m["V4"] = {cyc({{1, 2}}), cyc({{3, 4}})};
    m["C2^3"] = {cyc({{1, 2}}), cyc({{3, 4}}), cyc({{5, 6}})};
    m["C4xC2"] = {cyc({{1, 2, 3, 4}}), cyc({{5, 6}})};
    m["D8"] = {cyc({{1, 2, 3, 4}}), cyc({{1, 3}})};
    m["Q8"] = metacyclic_generators(4, 2, 2, 3);
    m["D16"] = metacyclic_generators(8, 2, 0, 7);
    m["Q16"] = metacyclic_generators(8, 2, 4, 7);
    m["SD16"] = metacyclic_generators(8, 2, 0, 3);
    m["M4(2)"] = metacyclic_generators(8, 2, 0, 5);
    m["S3"] = {cyc({{1, 2}}), cyc({{1, 2, 3}})};
    m["S4"] = {cyc({{1, 2, 3, 4}}), cyc({{1, 2}})};
    m["A4"] = {cyc({{1, 2, 3}}), cyc({{1, 2}, {3, 4}})};
    m["SL(2,3)"] = {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(1, 0, 1, 1)};
    m["GL(2,3)"] = {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(2, 0, 0, 1), f3_matrix_perm(0, 1, 1, 0)};
    m["D8xC2"] = {cyc({{1, 2, 3, 4}}), cyc({{1, 3}}), cyc({{5, 6}})};
    {
        auto q = metacyclic_generators(4, 2, 2, 3);
        m["Q8xC2"] = {shifted(q[0], 0, 10), shifted(q[1], 0, 10), cyc({{9, 10}})};
    }
    m["D8oD8"] = {monomial_perm(kron(kX, kI)), monomial_perm(kron(kZ, kI)), monomial_perm(kron(kI, kX)),
                  monomial_perm(kron(kI, kZ))};
    m["D8oQ8"] = {monomial_perm(kron(kX, kI)), monomial_perm(kron(kZ, kI)), monomial_perm(kron(kI, kiX)),
                  monomial_perm(kron(kI, kiZ))};
    m["C3:C4"] = metacyclic_generators(3, 4, 0, 2);
    return m;
}

const std::map<std::string, std::vector<Perm>>& catalog() {
    static const auto m = build_catalog();
    return m;
}

}  // namespace

std::vector<Perm> metacyclic_generators(int m, int s, int t, int r) {
    // Elements x^a y^b, point index a*s + b; y x = x^r y and y^s = x^t.
    auto rpow = [&](int b) {
        long v = 1;
        for (int i = 0; i < b; ++i) v = v * r % m;
        return static_cast<int>(v);
    };
    auto mul = [&](int a, int b, int c, int d) {
        int na = (a + c * rpow(b)) % m;
        int nb = b + d;
        if (nb >= s) {
            nb -= s;
            na = (na + t * rpow(nb)) % m;
        }
        return na * s + nb;
    };
    Perm gx(m * s), gy(m * s);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < s; ++b) {
            gx[a * s + b] = mul(a, b, 1 % m, 0);
            gy[a * s + b] = mul(a, b, 0, 1 % s);
        }
    return {gx, gy};
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "C1",  "C2",   "C3",  "C4",    "C8",  "V4",     "C2^3",    "C4xC2",   "D8",    "Q8",    "D16",    "Q16",
        "SD16", "M4(2)", "S3", "S4",   "A4",  "SL(2,3)", "GL(2,3)", "D8xC2", "Q8xC2", "D8oD8", "D8oQ8", "C3:C4"};
    return names;
}

std::string catalog_canonical_name(const std::string& name) {
    static const std::map<std::string, std::string> alias{
        {"(Z/2)^2", "V4"},     {"C2xC2", "V4"},       {"(Z/2)^3", "C2^3"},  {"C2xC2xC2", "C2^3"},
        {"M16", "M4(2)"},      {"SL23", "SL(2,3)"},   {"GL23", "GL(2,3)"},  {"ES32+", "D8oD8"},
        {"ES32-", "D8oQ8"},    {"Dic3", "C3:C4"}};
    if (catalog().count(name)) return name;
    auto it = alias.find(name);
    if (it != alias.end()) return it->second;
    throw group_error("unknown catalog group: " + name);
}

std::vector<Perm> catalog_generators(const std::string& name) { return catalog().at(catalog_canonical_name(name)); }

GroupTable catalog_group(const std::string& name) { return group_from_generators(catalog_generators(name)); }

}  // namespace wdp
