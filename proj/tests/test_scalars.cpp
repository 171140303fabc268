#include <doctest.h>

#include <complex>
#include <numeric>
#include <random>

#include "wdp/cyclo.hpp"

using namespace wdp;
using cplx = std::complex<long double>;

namespace {

cplx approx(const Cyclo& x) {
    const long double pi = std::acos(-1.0L);
    cplx s = 0;
    for (size_t i = 0; i < x.coeffs().size(); ++i)
        s += static_cast<long double>(x.coeffs()[i].get_d()) * std::polar(1.0L, 2 * pi * i / x.order());
    return s;
}

bool near(cplx a, cplx b) { return std::abs(a - b) < 1e-9L; }

Cyclo random_cyclo(std::mt19937& rng) {
    static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12, 24};
    int n = orders[rng() % 9];
    Cyclo x;
    int terms = 1 + rng() % 4;
    for (int t = 0; t < terms; ++t) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + rng() % 4;
        x += Cyclo(mpq_class(num, den)) * Cyclo::zeta(n, rng() % n);
    }
    return x;
}

}  // namespace

TEST_CASE("zeta4 squared is -1") { CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1)); }

TEST_CASE("primitive cube roots sum to -1") { CHECK(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1)); }

TEST_CASE("equality across ambient orders") {
    CHECK(Cyclo::zeta(6, 2) == Cyclo::zeta(3));
    CHECK(Cyclo::zeta(12, 3) == Cyclo::zeta(4));
    CHECK(Cyclo::zeta(8, 4) == Cyclo(-1));
    CHECK(Cyclo::zeta(6) != Cyclo::zeta(3));
}

TEST_CASE("field axioms on random values, checked against floating point") {
    std::mt19937 rng(20261019);
    for (int it = 0; it < 300; ++it) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Cyclo(0));
        CHECK(near(approx(a * b), approx(a) * approx(b)));
        CHECK(near(approx(a + b), approx(a) + approx(b)));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(near(approx(a / b), approx(a) / approx(b)));
        }
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(near(approx(a.conj()), std::conj(approx(a))));
    }
}

TEST_CASE("conj and Galois fix rationals") {
    Cyclo q(mpq_class(-7, 3));
    CHECK(q.conj() == q);
    for (int n : {3, 4, 5, 8, 12})
        for (int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) CHECK(q.embed(n).galois(k) == q);
}

TEST_CASE("Galois action permutes the n-th roots of unity") {
    for (int n : {3, 4, 5, 6, 8, 12}) {
        for (int k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            std::vector<bool> hit(n, false);
            for (int j = 0; j < n; ++j) {
                Cyclo img = Cyclo::zeta(n, j).galois(k);
                int found = -1;
                for (int m = 0; m < n; ++m)
                    if (img == Cyclo::zeta(n, m)) found = m;
                REQUIRE(found >= 0);
                CHECK(found == (j * k) % n);
                hit[found] = true;
            }
            CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
        }
    }
}

TEST_CASE("rational detection and inverse") {
    Cyclo s = Cyclo::zeta(8) + Cyclo::zeta(8, 7);  // sqrt 2
    CHECK_FALSE(s.is_rational());
    CHECK((s * s).is_rational());
    CHECK((s * s).to_rational() == 2);
    CHECK(s * s.inverse() == Cyclo(1));
    CHECK_THROWS_AS(s.to_rational(), cyclo_error);
    CHECK_THROWS_AS(Cyclo(0).inverse(), cyclo_error);
}

TEST_CASE("order bound is enforced") {
    int old = Cyclo::max_order();
    Cyclo::set_max_order(12);
    CHECK_THROWS_AS(Cyclo::zeta(3) * Cyclo::zeta(8), cyclo_error);
    Cyclo::set_max_order(old);
    CHECK_NOTHROW(Cyclo::zeta(3) * Cyclo::zeta(8));
}
