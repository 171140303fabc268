// Exact elements of cyclotomic fields Q(zeta_n).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wdp {

struct cyclo_error : std::runtime_error { using std::runtime_error::runtime_error; };

// Value in Q(zeta_n) stored in the power basis 1, z, ..., z^(phi(n)-1),
// reduced modulo the n-th cyclotomic polynomial. Values built at different
// orders compare equal when they are the same complex number.
class Cyclo {
public:
    Cyclo();                     // zero, order 1
    Cyclo(long v);               // NOLINT: integers convert implicitly
    explicit Cyclo(const mpq_class& q);

    static Cyclo zeta(int n, long k = 1);
    // Rebuild from the power-basis coefficients at order n.
    static Cyclo from_coeffs(int n, std::vector<mpq_class> coeffs);

    static int max_order();
    static void set_max_order(int n);

    int order() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class to_rational() const;  // throws unless is_rational()

    // Same value viewed in Q(zeta_m); m must be a multiple of order().
    Cyclo embed(int m) const;

    Cyclo conj() const;
    Cyclo galois(long k) const;  // zeta_n -> zeta_n^k, gcd(k, n) = 1
    Cyclo inverse() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Lexicographic comparison of coefficient vectors after embedding both
    // values at the common order. Used only for deterministic sorting.
    static int compare(const Cyclo& a, const Cyclo& b);

    std::string to_string() const;

private:
    int n_ = 1;
    std::vector<mpq_class> c_;

    void reduce_from(std::vector<mpq_class> full);
};

// Checked lcm for orders; throws cyclo_error past the configured bound.
int cyclo_common_order(int a, int b);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_poly(int n);

int euler_phi(int n);

}  // namespace wdp
