#include "wdp/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wdp {

namespace {

using i64 = long long;
using Mat = std::vector<std::vector<i64>>;

i64 powmod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b %= p;
    if (b < 0) b += p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 primitive_root(i64 p) {
    std::vector<i64> fac;
    i64 m = p - 1;
    for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (i64 g = 2;; ++g) {
        bool ok = true;
        for (i64 f : fac)
            if (powmod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

// Row-reduce in place; returns pivot columns. Rows become a reduced echelon basis.
std::vector<int> rref(Mat& a, i64 p) {
    std::vector<int> piv;
    size_t rows = a.size();
    if (!rows) return piv;
    size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        i64 inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = x * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            i64 f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);
    return piv;
}

// Basis of {x : A x = 0} for a square matrix A.
Mat nullspace(Mat a, i64 p) {
    size_t n = a.size();
    auto piv = rref(a, p);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    Mat basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<i64> v(n, 0);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

int CharTable::power_class(int c, long k) const {
    int e = exponent();
    long kk = ((k % e) + e) % e;
    return powmap_[c][kk];
}

CharTable CharTable::compute(std::shared_ptr<const GroupTable> gp) {
    const GroupTable& g = *gp;
    CharTable t;
    t.group_ = gp;
    t.classes_ = conjugacy_classes(g);
    const auto& cl = t.classes_;
    const int k = cl.count();
    const int n = g.order();
    const int e = g.exponent();

    t.powmap_.assign(k, std::vector<int>(e));
    for (int c = 0; c < k; ++c) {
        int x = 0;
        for (int j = 0; j < e; ++j) {
            t.powmap_[c][j] = cl.class_of[x];
            x = g.mul(x, cl.reps[c]);
        }
    }

    // Prime p = 1 mod e, large enough to recover degrees and eigenvalue multiplicities.
    i64 bound = 2 * static_cast<i64>(std::sqrt(static_cast<double>(n))) + 2;
    bound = std::max<i64>(bound, k + 1);
    i64 p = e + 1;
    while (p <= bound || !is_prime(p)) p += e;
    t.prime_ = p;
    i64 z = powmod(primitive_root(p), (p - 1) / e, p);

    // Class multiplication coefficients: C_j C_r = sum_s a[j][r][s] C_s.
    std::vector<Mat> cm(k, Mat(k, std::vector<i64>(k, 0)));
    for (int j = 0; j < k; ++j)
        for (int s = 0; s < k; ++s) {
            int gs = cl.reps[s];
            for (int x : cl.members[j]) {
                int y = g.mul(g.inv(x), gs);
                cm[j][cl.class_of[y]][s] += 1;
            }
        }

    // Simultaneous eigenspaces of the class matrices, as reduced row bases.
    std::vector<Mat> spaces;
    {
        Mat id(k, std::vector<i64>(k, 0));
        for (int i = 0; i < k; ++i) id[i][i] = 1;
        spaces.push_back(id);
    }
    for (int j = 1; j < k; ++j) {
        bool split_done = std::all_of(spaces.begin(), spaces.end(), [](const Mat& m) { return m.size() == 1; });
        if (split_done) break;
        std::vector<Mat> next;
        for (auto& w : spaces) {
            size_t d = w.size();
            if (d == 1) {
                next.push_back(w);
                continue;
            }
            Mat tmp = w;
            auto piv = rref(tmp, p);
            w = tmp;
            // X[a][i] = (M_j w_i)[piv_a]
            Mat x(d, std::vector<i64>(d, 0));
            for (size_t i = 0; i < d; ++i) {
                for (size_t a = 0; a < d; ++a) {
                    int r = piv[a];
                    i64 acc = 0;
                    for (int s = 0; s < k; ++s) acc = (acc + cm[j][r][s] * w[i][s]) % p;
                    x[a][i] = acc;
                }
            }
            size_t found = 0;
            for (i64 lam = 0; lam < p && found < d; ++lam) {
                Mat y = x;
                for (size_t a = 0; a < d; ++a) y[a][a] = ((y[a][a] - lam) % p + p) % p;
                Mat ns = nullspace(y, p);
                if (ns.empty()) continue;
                Mat sub;
                for (const auto& c : ns) {
                    std::vector<i64> v(k, 0);
                    for (size_t i = 0; i < d; ++i)
                        if (c[i])
                            for (int s = 0; s < k; ++s) v[s] = (v[s] + c[i] * w[i][s]) % p;
                    sub.push_back(std::move(v));
                }
                rref(sub, p);
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != d) throw group_error("character table: class matrix not diagonalizable mod p");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != k) throw group_error("character table: eigenspaces did not separate");

    i64 inv_e = invmod(e, p);
    struct Row {
        int deg;
        std::vector<Cyclo> vals;
    };
    std::vector<Row> rows;
    for (auto& w : spaces) {
        std::vector<i64> om = w[0];
        if (om[0] == 0) throw group_error("character table: degenerate eigenvector");
        i64 s0 = invmod(om[0], p);
        for (auto& v : om) v = v * s0 % p;
        i64 ssum = 0;
        for (int s = 0; s < k; ++s) {
            int sbar = cl.class_of[g.inv(cl.reps[s])];
            ssum = (ssum + om[s] * om[sbar] % p * invmod(cl.size(s), p)) % p;
        }
        i64 d2 = static_cast<i64>(n) % p * invmod(ssum, p) % p;
        int deg = 0;
        for (int d = 1; static_cast<i64>(d) * d <= n; ++d)
            if (static_cast<i64>(d) * d % p == d2) {
                deg = d;
                break;
            }
        if (!deg) throw group_error("character table: degree recovery failed");
        std::vector<i64> theta(k);
        for (int s = 0; s < k; ++s) theta[s] = om[s] * deg % p * invmod(cl.size(s), p) % p;
        Row row{deg, {}};
        for (int c = 0; c < k; ++c) {
            std::vector<mpq_class> full(e);
            for (int m = 0; m < e; ++m) {
                i64 acc = 0;
                for (int l = 0; l < e; ++l) {
                    i64 val = theta[t.powmap_[c][l]];
                    acc = (acc + val * powmod(z, static_cast<i64>(e - (static_cast<i64>(m) * l) % e) % e, p)) % p;
                }
                acc = acc * inv_e % p;
                if (acc > deg) throw group_error("character table: eigenvalue multiplicity out of range");
                full[m] = static_cast<long>(acc);
            }
            row.vals.push_back(Cyclo::from_coeffs(e, std::move(full)));
        }
        rows.push_back(std::move(row));
    }

    auto is_trivial = [](const Row& r) {
        for (const auto& v : r.vals)
            if (v != Cyclo(1)) return false;
        return true;
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        for (int c = 0; c < k; ++c) {
            int cmpv = Cyclo::compare(a.vals[c], b.vals[c]);
            if (cmpv) return cmpv > 0;
        }
        return false;
    });
    long sumsq = 0;
    for (auto& r : rows) {
        sumsq += static_cast<long>(r.deg) * r.deg;
        t.degrees_.push_back(r.deg);
        t.rows_.push_back(std::move(r.vals));
    }
    if (sumsq != n) throw group_error("character table: degrees do not satisfy sum of squares");
    return t;
}

}  // namespace wdp
