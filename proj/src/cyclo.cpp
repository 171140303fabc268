#include "wdp/cyclo.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace wdp {

namespace {

std::atomic<int> g_max_order{1 << 16};

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<long> compute_cyclotomic(int n) {
    std::vector<int> up, down;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int m = mobius(n / d);
        if (m == 1) up.push_back(d);
        if (m == -1) down.push_back(d);
    }
    std::vector<long> p{1};
    for (int d : up) {  // multiply by x^d - 1
        std::vector<long> q(p.size() + d, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + d] += p[i];
            q[i] -= p[i];
        }
        p = std::move(q);
    }
    for (int d : down) {  // exact division by x^d - 1
        std::vector<long> q(p.size() - d, 0);
        for (size_t i = 0; i < q.size(); ++i) q[i] = (i >= (size_t)d ? q[i - d] : 0) - p[i];
        p = std::move(q);
    }
    return p;
}

}  // namespace

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

const std::vector<long>& cyclotomic_poly(int n) {
    thread_local std::unordered_map<int, std::vector<long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, compute_cyclotomic(n)).first->second;
}

int Cyclo::max_order() { return g_max_order.load(); }
void Cyclo::set_max_order(int n) { g_max_order.store(n); }

int cyclo_common_order(int a, int b) {
    long l = std::lcm<long>(a, b);
    if (l > Cyclo::max_order())
        throw cyclo_error("cyclotomic order " + std::to_string(l) + " exceeds bound " +
                          std::to_string(Cyclo::max_order()));
    return static_cast<int>(l);
}

Cyclo::Cyclo() : n_(1), c_(1) {}
Cyclo::Cyclo(long v) : n_(1), c_{mpq_class(v)} {}
Cyclo::Cyclo(const mpq_class& q) : n_(1), c_{q} { c_[0].canonicalize(); }

Cyclo Cyclo::zeta(int n, long k) {
    if (n < 1) throw cyclo_error("zeta: order must be positive");
    if (n > max_order()) throw cyclo_error("zeta: order exceeds bound");
    Cyclo r;
    r.n_ = n;
    std::vector<mpq_class> full(n);
    long e = ((k % n) + n) % n;
    full[e] = 1;
    r.reduce_from(std::move(full));
    return r;
}

Cyclo Cyclo::from_coeffs(int n, std::vector<mpq_class> coeffs) {
    if (n < 1 || n > max_order()) throw cyclo_error("from_coeffs: bad order");
    Cyclo r;
    r.n_ = n;
    for (auto& q : coeffs) q.canonicalize();
    r.reduce_from(std::move(coeffs));
    return r;
}

void Cyclo::reduce_from(std::vector<mpq_class> full) {
    const auto& phi = cyclotomic_poly(n_);
    size_t d = phi.size() - 1;
    for (size_t i = full.size(); i-- > d;) {
        if (sgn(full[i]) == 0) continue;
        mpq_class c = full[i];
        for (size_t j = 0; j <= d; ++j) {
            if (phi[j]) full[i - d + j] -= c * phi[j];
        }
    }
    full.resize(d);
    c_ = std::move(full);
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

mpq_class Cyclo::to_rational() const {
    if (!is_rational()) throw cyclo_error("value is not rational: " + to_string());
    return c_[0];
}

Cyclo Cyclo::embed(int m) const {
    if (m == n_) return *this;
    if (m % n_) throw cyclo_error("embed: target order is not a multiple");
    if (m > max_order()) throw cyclo_error("embed: order exceeds bound");
    int step = m / n_;
    std::vector<mpq_class> full(static_cast<size_t>(step) * (c_.size() ? c_.size() - 1 : 0) + 1);
    for (size_t i = 0; i < c_.size(); ++i) full[i * step] = c_[i];
    Cyclo r;
    r.n_ = m;
    r.reduce_from(std::move(full));
    return r;
}

Cyclo Cyclo::galois(long k) const {
    if (std::gcd<long>(((k % n_) + n_) % n_, n_) != 1 && n_ > 1)
        throw cyclo_error("galois: exponent not a unit");
    if (n_ == 1) return *this;
    std::vector<mpq_class> full(n_);
    long kk = ((k % n_) + n_) % n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        full[(i * kk) % n_] += c_[i];
    }
    Cyclo r;
    r.n_ = n_;
    r.reduce_from(std::move(full));
    return r;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw cyclo_error("division by zero");
    if (is_rational()) return Cyclo(mpq_class(1) / c_[0]);
    Cyclo prod(1);
    for (long k = 2; k < n_; ++k)
        if (std::gcd<long>(k, n_) == 1) prod *= galois(k);
    Cyclo norm = *this * prod;
    return prod * Cyclo(mpq_class(1) / norm.to_rational());
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    int m = cyclo_common_order(n_, o.n_);
    if (m != n_) *this = embed(m);
    if (o.n_ == m) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        Cyclo e = o.embed(m);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += e.c_[i];
    }
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.n_ == 1) {
        for (auto& q : c_) q *= o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        mpq_class s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        return *this;
    }
    int m = cyclo_common_order(n_, o.n_);
    Cyclo a = embed(m), b = o.embed(m);
    std::vector<mpq_class> full(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (sgn(b.c_[j]) != 0) full[i + j] += a.c_[i] * b.c_[j];
    }
    n_ = m;
    reduce_from(std::move(full));
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int m = cyclo_common_order(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    int m = cyclo_common_order(a.n_, b.n_);
    Cyclo x = a.embed(m), y = b.embed(m);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (any) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        mpq_class a = abs(c_[i]);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << n_;
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

}  // namespace wdp
