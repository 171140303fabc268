#include "wdp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wdp {

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    int d = degree;
    for (const auto& c : cycles)
        for (int x : c) {
            if (x < 1) throw group_error("cycle points are 1-based positive integers");
            d = std::max(d, x);
        }
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> seen(d, false);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i] - 1;
            if (seen[a]) throw group_error("point repeated across cycles");
            seen[a] = true;
            p[a] = c[(i + 1) % c.size()] - 1;
        }
    }
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

GroupTable GroupTable::from_mul_table(int order, std::vector<uint16_t> mul) {
    if (order < 1) throw group_error("group order must be positive");
    if (mul.size() != static_cast<size_t>(order) * order) throw group_error("table has wrong size");
    GroupTable g;
    g.n_ = order;
    g.mul_ = std::move(mul);
    for (int a = 0; a < order; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a) throw group_error("element 0 is not the identity");
        for (int b = 0; b < order; ++b)
            if (g.mul(a, b) >= order) throw group_error("table entry out of range");
    }
    // Associativity: every triple for small tables, a fixed stride sample above.
    long long n = order;
    long long stride = n <= 256 ? 1 : (n * n * n) / 2000003 + 1;
    for (long long t = 0; t < n * n * n; t += stride) {
        int a = static_cast<int>(t / (n * n)), b = static_cast<int>((t / n) % n), c = static_cast<int>(t % n);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw group_error("table is not associative");
    }
    g.inv_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g.mul(a, b) == 0) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0 || g.mul(g.inv_[a], a) != 0) throw group_error("element without inverse");
    }
    g.ord_.assign(order, 0);
    g.exponent_ = 1;
    for (int a = 0; a < order; ++a) {
        int k = 1;
        for (int x = a; x != 0; x = g.mul(x, a)) ++k;
        g.ord_[a] = k;
        g.exponent_ = std::lcm(g.exponent_, k);
    }
    return g;
}

int GroupTable::pow(int a, long k) const {
    long m = ord_[a];
    k = ((k % m) + m) % m;
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> GroupTable::generating_set() const {
    std::vector<int> gens;
    std::vector<int> cur{0};
    for (int a = 1; a < n_ && static_cast<int>(cur.size()) < n_; ++a) {
        if (std::binary_search(cur.begin(), cur.end(), a)) continue;
        gens.push_back(a);
        cur = subgroup_closure(*this, gens);
    }
    return gens;
}

std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> list{0};
    in[0] = 1;
    for (size_t i = 0; i < list.size(); ++i)
        for (int s : gens) {
            int y = g.mul(list[i], s);
            if (!in[y]) {
                in[y] = 1;
                list.push_back(y);
            }
        }
    std::sort(list.begin(), list.end());
    return list;
}

GroupTable group_from_generators(const std::vector<Perm>& gens, int bound) {
    size_t deg = 0;
    for (const auto& p : gens) deg = std::max(deg, p.size());
    auto widen = [deg](Perm p) {
        size_t old = p.size();
        p.resize(deg);
        for (size_t i = old; i < deg; ++i) p[i] = static_cast<int>(i);
        return p;
    };
    std::vector<Perm> gs;
    for (const auto& p : gens) {
        Perm q = widen(p);
        std::vector<bool> hit(deg, false);
        for (int x : q) {
            if (x < 0 || static_cast<size_t>(x) >= deg || hit[x]) throw group_error("generator is not a permutation");
            hit[x] = true;
        }
        gs.push_back(std::move(q));
    }
    Perm id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::vector<int> parent{-1}, via{-1};
    std::vector<std::vector<int>> right;  // right[i][s] = elems[i] * gens[s]
    for (size_t i = 0; i < elems.size(); ++i) {
        right.emplace_back(gs.size());
        for (size_t s = 0; s < gs.size(); ++s) {
            Perm y = perm_compose(elems[i], gs[s]);
            auto it = index.find(y);
            if (it != index.end()) {
                right[i][s] = it->second;
                continue;
            }
            if (static_cast<int>(elems.size()) >= bound)
                throw group_error("closure exceeds order bound " + std::to_string(bound));
            int id_new = static_cast<int>(elems.size());
            index.emplace(y, id_new);
            elems.push_back(std::move(y));
            parent.push_back(static_cast<int>(i));
            via.push_back(static_cast<int>(s));
            right[i][s] = id_new;
        }
    }
    int n = static_cast<int>(elems.size());
    // a * b = (a * parent(b)) * gen(b); parents precede children in BFS order.
    std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        mul[static_cast<size_t>(a) * n] = static_cast<uint16_t>(a);
        for (int b = 1; b < n; ++b) {
            int ab = mul[static_cast<size_t>(a) * n + parent[b]];
            mul[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(right[ab][via[b]]);
        }
    }
    return GroupTable::from_mul_table(n, std::move(mul));
}

ClassPartition conjugacy_classes(const GroupTable& g) {
    int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> found;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        std::vector<int> mem;
        for (int x = 0; x < n; ++x) {
            int c = g.conj(a, x);
            if (cls[c] < 0) {
                cls[c] = static_cast<int>(found.size());
                mem.push_back(c);
            }
        }
        std::sort(mem.begin(), mem.end());
        found.push_back(std::move(mem));
    }
    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (found[x].size() != found[y].size()) return found[x].size() < found[y].size();
        return found[x][0] < found[y][0];
    });
    ClassPartition p;
    p.class_of.assign(n, -1);
    for (int c : order) {
        int id = static_cast<int>(p.reps.size());
        p.reps.push_back(found[c][0]);
        for (int x : found[c]) p.class_of[x] = id;
        p.members.push_back(found[c]);
    }
    return p;
}

}  // namespace wdp
