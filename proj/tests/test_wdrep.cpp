#include <doctest.h>

#include <map>
#include <random>

#include "wdp/catalog.hpp"
#include "wdp/gsp4.hpp"

using namespace wdp;

namespace {

// Character of a WD representation as a Laurent polynomial in the SL2 torus variable t,
// with class functions as coefficients: exponent -> values per class.
using TorusChar = std::map<int, std::vector<Cyclo>>;

TorusChar torus_char(const WDRep& phi) {
    const Group& g = *phi.group();
    TorusChar f;
    for (const auto& t : phi.terms())
        for (int k = 0; k < t.n; ++k) {
            auto& v = f[t.n - 1 - 2 * k];
            v.resize(g.num_classes());
            for (int c = 0; c < g.num_classes(); ++c) v[c] += Cyclo(t.mult) * g.value(t.irrep, c);
        }
    return f;
}

TorusChar mul(const Group& g, const TorusChar& a, const TorusChar& b) {
    TorusChar r;
    for (const auto& [ea, va] : a)
        for (const auto& [eb, vb] : b) {
            auto& v = r[ea + eb];
            v.resize(g.num_classes());
            for (int c = 0; c < g.num_classes(); ++c) v[c] += va[c] * vb[c];
        }
    return r;
}

// f(g^2, t^2)
TorusChar square_arg(const Group& g, const TorusChar& a) {
    TorusChar r;
    for (const auto& [e, v] : a) {
        auto& w = r[2 * e];
        w.resize(g.num_classes());
        for (int c = 0; c < g.num_classes(); ++c) w[c] += v[g.chars().power_class(c, 2)];
    }
    return r;
}

// Peels SL2 highest weights off each isotypic Weil component.
WDRep from_torus(const GroupPtr& g, const TorusChar& f) {
    std::map<int, std::map<int, long>> by_irrep;  // irrep -> exponent -> coefficient
    for (const auto& [e, v] : f) {
        auto d = g->decompose(v);
        for (int i = 0; i < g->num_irreps(); ++i)
            if (d[i]) by_irrep[i][e] += d[i];
    }
    WDRep r(g);
    for (auto& [i, w] : by_irrep) {
        while (true) {
            int top = 0;
            bool any = false;
            for (const auto& [e, c] : w)
                if (c != 0 && (!any || e > top)) top = e, any = true;
            if (!any) break;
            long m = w[top];
            r.add(i, top + 1, m);
            for (int k = 0; k <= top; ++k) w[top - 2 * k] -= m;
        }
    }
    return r;
}

WDRep oracle_wedge2(const WDRep& phi) {
    const Group& g = *phi.group();
    auto f = torus_char(phi);
    auto sq = mul(g, f, f);
    auto ad = square_arg(g, f);
    TorusChar w;
    for (auto& [e, v] : sq) {
        auto& x = w[e];
        x.resize(g.num_classes());
        for (int c = 0; c < g.num_classes(); ++c) x[c] = v[c] * Cyclo(mpq_class(1, 2));
    }
    for (auto& [e, v] : ad) {
        auto& x = w[e];
        x.resize(g.num_classes());
        for (int c = 0; c < g.num_classes(); ++c) x[c] -= v[c] * Cyclo(mpq_class(1, 2));
    }
    return from_torus(phi.group(), w);
}

WDRep oracle_tensor(const WDRep& a, const WDRep& b) {
    return from_torus(a.group(), mul(*a.group(), torus_char(a), torus_char(b)));
}

WDRep random_wd(const GroupPtr& g, std::mt19937& rng, long max_dim) {
    WDRep r(g);
    while (r.dim() < 2) {
        int i = rng() % g->num_irreps();
        int n = 1 + rng() % 3;
        if (r.dim() + g->degree(i) * n <= max_dim) r.add(i, n, 1);
        else if (r.dim() > 0) break;
    }
    return r;
}

int two_dim(const Group& g) {
    for (int i = 0; i < g.num_irreps(); ++i)
        if (g.degree(i) == 2) return i;
    return -1;
}

}  // namespace

TEST_CASE("Clebsch-Gordan") {
    CHECK(clebsch_gordan(2, 2) == std::vector<int>{3, 1});
    CHECK(clebsch_gordan(3, 2) == std::vector<int>{4, 2});
    auto c1 = Group::catalog("C1");
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            CHECK(wd_tensor(WDRep::term(c1, 0, a), WDRep::term(c1, 0, b)) ==
                  oracle_tensor(WDRep::term(c1, 0, a), WDRep::term(c1, 0, b)));
}

TEST_CASE("pure Weil tensor products") {
    auto g = Group::catalog("SL(2,3)");
    for (int i = 0; i < g->num_irreps(); ++i)
        for (int j = 0; j < g->num_irreps(); ++j)
            CHECK(wd_tensor(WDRep::term(g, i), WDRep::term(g, j)) ==
                  WDRep::from_char(tensor(VirtualChar::irrep(g, i), VirtualChar::irrep(g, j))));
}

TEST_CASE("wedge2 of mu x S4") {
    auto c3 = Group::catalog("C3");
    int mu = c3->linear()[1];
    auto w = wd_wedge2(WDRep::term(c3, mu, 4));
    WDRep expect(c3);
    int mu2 = c3->lin_mul(mu, mu);
    expect.add(mu2, 5, 1);
    expect.add(mu2, 1, 1);
    CHECK(w == expect);
    CHECK(w == oracle_wedge2(WDRep::term(c3, mu, 4)));
}

TEST_CASE("wedge2 of sigma x S2") {
    for (const char* n : {"D8", "Q8", "S3", "SL(2,3)"}) {
        auto g = Group::catalog(n);
        int s = two_dim(*g);
        auto w = wd_wedge2(WDRep::term(g, s, 2));
        WDRep expect = WDRep::term(g, g->det(s), 3) + WDRep::from_char(sym2(VirtualChar::irrep(g, s)));
        CHECK(w == expect);
    }
}

TEST_CASE("wedge2 of two characters is their product") {
    auto g = Group::catalog("C4xC2");
    for (int a : g->linear())
        for (int b : g->linear()) {
            if (a == b) continue;
            WDRep r = WDRep::term(g, a) + WDRep::term(g, b);
            CHECK(wd_wedge2(r) == WDRep::term(g, g->lin_mul(a, b)));
        }
}

TEST_CASE("plethysm against the torus oracle, dimensions, and the tensor square") {
    std::mt19937 rng(11);
    for (const auto& name : catalog_names()) {
        auto g = Group::catalog(name);
        for (int it = 0; it < 6; ++it) {
            WDRep phi = random_wd(g, rng, 6);
            long d = phi.dim();
            auto w = wd_wedge2(phi);
            auto s = wd_sym2(phi);
            CHECK(w.dim() == d * (d - 1) / 2);
            CHECK(s.dim() == d * (d + 1) / 2);
            CHECK(w + s == wd_tensor(phi, phi));
            CHECK(w == oracle_wedge2(phi));
            CHECK(wd_tensor(phi, phi) == oracle_tensor(phi, phi));
            // Forgetting SL2 commutes with tensor and wedge.
            CHECK(wd_tensor(phi, phi).weil_restriction() == tensor(phi.weil_restriction(), phi.weil_restriction()));
            CHECK(w.weil_restriction() == wedge2(phi.weil_restriction()));
        }
    }
}

TEST_CASE("self-dual types") {
    auto c1 = Group::catalog("C1");
    auto t = wd_dual_type(WDRep::term(c1, 0, 5));
    REQUIRE(t.size() == 1);
    CHECK(t[0].self_dual);
    CHECK(t[0].type == SelfDualType::orthogonal);
    auto q8 = Group::catalog("Q8");
    int s = two_dim(*q8);
    CHECK(wd_dual_type(WDRep::term(q8, s, 1))[0].type == SelfDualType::symplectic);
    CHECK(wd_dual_type(WDRep::term(q8, s, 2))[0].type == SelfDualType::orthogonal);
    CHECK(wd_dual_type(WDRep::term(c1, 0, 2))[0].type == SelfDualType::symplectic);
    auto c4 = Group::catalog("C4");
    int faithful = -1;
    for (int l : c4->linear())
        if (c4->lin_order(l) == 4) faithful = l;
    CHECK(wd_dual_type(WDRep::term(c4, faithful))[0].type == SelfDualType::complex);
}

TEST_CASE("types are stable under a quadratic twist fixing the component") {
    for (const auto& name : catalog_names()) {
        auto g = Group::catalog(name);
        for (int i = 0; i < g->num_irreps(); ++i)
            for (int q : g->quadratic()) {
                if (g->twist(i, q) != i) continue;
                for (int n = 1; n <= 3; ++n) {
                    auto a = wd_dual_type(WDRep::term(g, i, n));
                    auto b = wd_dual_type(wd_twist(WDRep::term(g, i, n), q));
                    CHECK(a[0].type == b[0].type);
                }
            }
    }
}

TEST_CASE("discrete series in SO_N") {
    auto c1 = Group::catalog("C1");
    CHECK(is_discrete_so(WDRep::term(c1, 0, 5), 5));
    CHECK_FALSE(is_discrete_so(WDRep::term(c1, 0, 1, 2) + WDRep::term(c1, 0, 3), 5));
    CHECK_THROWS_AS(is_discrete_so(WDRep::term(c1, 0, 4), 5), wd_error);
    // std of the faithful 4-dim irrep of an extraspecial group: five distinct quadratic characters.
    auto g = Group::catalog("D8oD8");
    int f = -1;
    for (int i = 0; i < g->num_irreps(); ++i)
        if (g->degree(i) == 4) f = i;
    auto psi = std_of(validate_param(WDRep::term(g, f)));
    auto ts = psi.terms();
    REQUIRE(ts.size() == 5);
    for (const auto& t : ts) {
        CHECK(g->is_linear(t.irrep));
        CHECK(g->lin_order(t.irrep) == 2);
        CHECK(t.mult == 1);
    }
    CHECK(is_discrete_so(psi, 5));
}

TEST_CASE("determinant of a WD representation") {
    std::mt19937 rng(13);
    for (const auto& name : catalog_names()) {
        auto g = Group::catalog(name);
        for (int it = 0; it < 4; ++it) {
            WDRep phi = random_wd(g, rng, 5);
            // det of S_n is trivial, so det phi = prod det(rho)^(n mult).
            int d = 0;
            for (const auto& t : phi.terms()) d = g->lin_mul(d, g->lin_pow(g->det(t.irrep), t.n * t.mult));
            CHECK(wd_det(phi) == d);
        }
    }
}
