#include <doctest.h>

#include <random>

#include "wdp/catalog.hpp"
#include "wdp/charalg.hpp"
#include "wdp/verify.hpp"

using namespace wdp;

namespace {

VirtualChar irr(const GroupPtr& g, int i) { return VirtualChar::irrep(g, i); }

int first_of_degree(const Group& g, int d) {
    for (int i = 0; i < g.num_irreps(); ++i)
        if (g.degree(i) == d) return i;
    return -1;
}

// (1/|G|) sum conj(eta(g)) chi(g^2), by summing over elements.
Cyclo brute_fs(const Group& g, int i, int eta) {
    Cyclo s;
    for (int x = 0; x < g.order(); ++x) s += g.value_at(eta, x).conj() * g.value_at(i, g.table().mul(x, x));
    return s * Cyclo(mpq_class(1, g.order()));
}

}  // namespace

TEST_CASE("decomposition of class functions") {
    auto c2 = Group::catalog("C2");
    auto reg = VirtualChar::from_values(c2, {Cyclo(2), Cyclo(0)});
    CHECK(reg.coeffs() == std::vector<long>{1, 1});
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        for (int i = 0; i < g->num_irreps(); ++i) {
            CHECK(inner(irr(g, i), irr(g, i)) == 1);
            CHECK(irr(g, i).is_irreducible());
        }
    }
    CHECK_THROWS_AS(VirtualChar::from_values(c2, {Cyclo(1), Cyclo(0)}), char_error);
}

TEST_CASE("D8: the 2-dim irrep squared is the sum of the four linear characters") {
    auto d8 = Group::catalog("D8");
    int s = first_of_degree(*d8, 2);
    auto t = tensor(irr(d8, s), irr(d8, s));
    for (int i = 0; i < d8->num_irreps(); ++i) CHECK(t.coeff(i) == (d8->degree(i) == 1 ? 1 : 0));
}

TEST_CASE("wedge2 of a 2-dim character is its determinant") {
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        for (int i = 0; i < g->num_irreps(); ++i) {
            if (g->degree(i) != 2) continue;
            auto w = wedge2(irr(g, i));
            CHECK(w == irr(g, det_char(irr(g, i))));
            CHECK(det_char(irr(g, i)) == g->det(i));
        }
    }
}

TEST_CASE("dimensions of wedge2 and sym2") {
    auto q = Group::catalog("Q8xC2");
    VirtualChar four = VirtualChar::zero(q);
    for (int i = 0; i < q->num_irreps(); ++i)
        if (q->degree(i) == 2) four += irr(q, i);
    REQUIRE(four.dim() == 4);
    CHECK(wedge2(four).dim() == 6);
    CHECK(sym2(four).dim() == 10);
}

TEST_CASE("det of the 2-dim irrep of S3 is the sign character") {
    auto s3 = Group::catalog("S3");
    int s = first_of_degree(*s3, 2);
    int d = det_char(irr(s3, s));
    CHECK(s3->degree(d) == 1);
    CHECK(d != 0);
    // Brute-force: det = (chi(g)^2 - chi(g^2)) / 2 at every element.
    for (int x = 0; x < 6; ++x) {
        Cyclo v = s3->value_at(s, x);
        CHECK(s3->value_at(d, x) == (v * v - s3->value_at(s, s3->table().mul(x, x))) * Cyclo(mpq_class(1, 2)));
    }
}

TEST_CASE("inducing the trivial character from index 2 gives 1 + omega_H") {
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        for (const auto& e : g->index2()) {
            const Subgroup& h = g->subgroup(e.members);
            CHECK(induce(*g, h, irr(h.group, 0)) == irr(g, 0) + irr(g, e.omega));
        }
    }
}

TEST_CASE("Frobenius reciprocity on 1000 random triples") {
    std::mt19937 rng(7);
    const auto& names = catalog_names();
    int done = 0;
    while (done < 1000) {
        auto g = Group::catalog(names[rng() % names.size()]);
        auto subs = all_subgroups(g->table());
        const Subgroup& h = g->subgroup(subs[rng() % subs.size()]);
        int i = rng() % g->num_irreps();
        int j = rng() % h.group->num_irreps();
        // Element-level sides.
        auto ind = induced_values(*g, h, j);
        Cyclo lhs;
        for (int x = 0; x < g->order(); ++x) lhs += ind[x] * g->value_at(i, x).conj();
        lhs = lhs * Cyclo(mpq_class(1, g->order()));
        Cyclo rhs;
        for (size_t a = 0; a < h.members.size(); ++a)
            rhs += h.group->value_at(j, static_cast<int>(a)) * g->value_at(i, h.members[a]).conj();
        rhs = rhs * Cyclo(mpq_class(1, static_cast<long>(h.members.size())));
        CHECK(lhs == rhs);
        CHECK(Cyclo(inner(induce(*g, h, irr(h.group, j)), irr(g, i))) == lhs);
        CHECK(Cyclo(inner(restrict_to(h, irr(g, i)), irr(h.group, j))) == rhs);
        ++done;
    }
}

TEST_CASE("a faithful character of C4 in D8 induces the 2-dim irreducible") {
    auto d8 = Group::catalog("D8");
    for (const auto& e : d8->index2()) {
        const Subgroup& h = d8->subgroup(e.members);
        if (!h.group->table().is_abelian() || h.group->table().exponent() != 4) continue;
        for (int l = 0; l < h.group->num_irreps(); ++l) {
            if (h.group->lin_order(l) != 4) continue;
            auto ind = induce(*d8, h, irr(h.group, l));
            CHECK(ind.is_irreducible());
            CHECK(ind.dim() == 2);
        }
    }
}

TEST_CASE("tensor induction of a linear character") {
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        const GroupTable& t = g->table();
        for (const auto& e : g->index2()) {
            const Subgroup& h = g->subgroup(e.members);
            int out = -1;
            for (int x = 0; x < g->order(); ++x)
                if (!h.contains(x)) {
                    out = x;
                    break;
                }
            for (int l : h.group->linear()) {
                auto m = tensor_induce_index2(*g, h, irr(h.group, l));
                REQUIRE(m.dim() == 1);
                auto v = m.values();
                for (int x = 0; x < g->order(); ++x) {
                    Cyclo val = v[g->chars().class_of(x)];
                    if (h.contains(x)) {
                        int y = t.mul(t.mul(out, x), t.inv(out));
                        CHECK(val == h.group->value_at(l, h.pos[x]) * h.group->value_at(l, h.pos[y]));
                    } else {
                        CHECK(val == h.group->value_at(l, h.pos[t.mul(x, x)]));
                    }
                }
            }
        }
    }
}

TEST_CASE("M(sigma) has dimension 4 and completes wedge2 of the induced representation") {
    for (const char* n : {"D8", "Q8", "S4", "SL(2,3)", "D8oD8"}) {
        auto g = Group::catalog(n);
        for (const auto& e : g->index2()) {
            const Subgroup& h = g->subgroup(e.members);
            for (int s = 0; s < h.group->num_irreps(); ++s) {
                if (h.group->degree(s) != 2) continue;
                auto sigma = irr(h.group, s);
                auto m = asai_lift(*g, h, sigma);
                CHECK(m.dim() == 4);
                CHECK(m.is_effective());
                CHECK(wedge2(induce(*g, h, sigma)) == induce(*g, h, irr(h.group, h.group->det(s))) + m);
                // M differs from the plain tensor induction by omega_H.
                CHECK(m == tensor(tensor_induce_index2(*g, h, sigma), irr(g, e.omega)));
            }
        }
    }
}

TEST_CASE("Frobenius-Schur indicators") {
    auto c1 = Group::catalog("C1");
    CHECK(fs_indicator(*c1, 0) == 1);
    auto q8 = Group::catalog("Q8");
    CHECK(fs_indicator(*q8, first_of_degree(*q8, 2)) == -1);
    auto d8 = Group::catalog("D8");
    CHECK(fs_indicator(*d8, first_of_degree(*d8, 2)) == 1);
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        for (int i = 0; i < g->num_irreps(); ++i)
            for (int eta : g->linear()) {
                int f = g->fs(i, eta);
                CHECK(Cyclo(f) == brute_fs(*g, i, eta));
                CHECK(fs_indicator(*g, i, eta) == f);
                // A nonzero twisted indicator puts eta inside chi (x) chi.
                if (f != 0) CHECK(tensor(irr(g, i), irr(g, i)).coeff(eta) >= 1);
                else CHECK(tensor(irr(g, i), irr(g, i)).coeff(eta) == 0);
            }
    }
}

TEST_CASE("sym2 + wedge2 = tensor square") {
    std::mt19937 rng(3);
    for (const auto& n : catalog_names()) {
        auto g = Group::catalog(n);
        for (int it = 0; it < 5; ++it) {
            std::vector<long> c(g->num_irreps());
            for (auto& x : c) x = rng() % 2;
            VirtualChar a(g, c);
            if (a.is_zero()) continue;
            CHECK(sym2(a) + wedge2(a) == tensor(a, a));
        }
    }
}

TEST_CASE("Adams operations") {
    std::mt19937 rng(5);
    for (const char* n : {"S3", "D8", "Q8", "A4", "SL(2,3)", "C8", "C3:C4"}) {
        auto g = Group::catalog(n);
        for (int it = 0; it < 4; ++it) {
            std::vector<long> ca(g->num_irreps()), cb(g->num_irreps());
            for (auto& x : ca) x = static_cast<long>(rng() % 5) - 2;
            for (auto& x : cb) x = static_cast<long>(rng() % 5) - 2;
            VirtualChar a(g, ca), b(g, cb);
            CHECK(adams(a, 1) == a);
            for (long k : {2, 3, 5}) {
                CHECK(adams(tensor(a, b), k) == tensor(adams(a, k), adams(b, k)));
                CHECK(adams(a + b, k) == adams(a, k) + adams(b, k));
            }
            // psi^2 = sym2 - wedge2
            if (a.is_effective() && !a.is_zero()) CHECK(adams(a, 2) == sym2(a) - wedge2(a));
        }
    }
}
