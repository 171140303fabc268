#include "wdp/charalg.hpp"

#include <algorithm>

namespace wdp {

namespace {

void same_group(const VirtualChar& a, const VirtualChar& b) {
    if (a.group() != b.group()) throw char_error("characters live on different groups");
}

std::vector<Cyclo> power_values(const VirtualChar& a, long k) {
    const Group& g = *a.group();
    auto v = a.values();
    std::vector<Cyclo> r(v.size());
    for (int c = 0; c < g.num_classes(); ++c) r[c] = v[g.chars().power_class(c, k)];
    return r;
}

}  // namespace

VirtualChar::VirtualChar(GroupPtr g, std::vector<long> coeffs) : g_(std::move(g)), c_(std::move(coeffs)) {
    if (!g_) throw char_error("character without a group");
    if (static_cast<int>(c_.size()) != g_->num_irreps()) throw char_error("coefficient vector has wrong length");
}

VirtualChar VirtualChar::irrep(GroupPtr g, int i) {
    if (i < 0 || i >= g->num_irreps()) throw char_error("irrep index out of range");
    std::vector<long> c(g->num_irreps(), 0);
    c[i] = 1;
    return VirtualChar(std::move(g), std::move(c));
}

VirtualChar VirtualChar::zero(GroupPtr g) {
    std::vector<long> c(g->num_irreps(), 0);
    return VirtualChar(std::move(g), std::move(c));
}

VirtualChar VirtualChar::from_values(GroupPtr g, const std::vector<Cyclo>& values) {
    try {
        auto c = g->decompose(values);
        return VirtualChar(std::move(g), std::move(c));
    } catch (const group_error&) {
        throw char_error("not a virtual character");
    }
}

long VirtualChar::dim() const {
    long d = 0;
    for (size_t i = 0; i < c_.size(); ++i) d += c_[i] * g_->degree(static_cast<int>(i));
    return d;
}

bool VirtualChar::is_effective() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x >= 0; });
}

bool VirtualChar::is_irreducible() const {
    long s = 0;
    for (long x : c_) {
        if (x < 0 || x > 1) return false;
        s += x;
    }
    return s == 1;
}

bool VirtualChar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
}

std::vector<Cyclo> VirtualChar::values() const { return g_->values(c_); }

VirtualChar& VirtualChar::operator+=(const VirtualChar& o) {
    same_group(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

VirtualChar& VirtualChar::operator-=(const VirtualChar& o) {
    same_group(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

VirtualChar operator*(long k, VirtualChar a) {
    for (auto& x : a.c_) x *= k;
    return a;
}

bool operator==(const VirtualChar& a, const VirtualChar& b) { return a.g_ == b.g_ && a.c_ == b.c_; }

long inner(const VirtualChar& a, const VirtualChar& b) {
    same_group(a, b);
    long s = 0;
    for (size_t i = 0; i < a.coeffs().size(); ++i) s += a.coeff(static_cast<int>(i)) * b.coeff(static_cast<int>(i));
    return s;
}

VirtualChar tensor(const VirtualChar& a, const VirtualChar& b) {
    same_group(a, b);
    const Group& g = *a.group();
    const int k = g.num_irreps();
    std::vector<long> r(k, 0);
    for (int i = 0; i < k; ++i) {
        if (!a.coeff(i)) continue;
        for (int j = 0; j < k; ++j) {
            if (!b.coeff(j)) continue;
            long m = a.coeff(i) * b.coeff(j);
            const auto& t = g.tensor(i, j);
            for (int l = 0; l < k; ++l) r[l] += m * t[l];
        }
    }
    return VirtualChar(a.group(), std::move(r));
}

VirtualChar dual(const VirtualChar& a) {
    const Group& g = *a.group();
    std::vector<long> r(g.num_irreps(), 0);
    for (int i = 0; i < g.num_irreps(); ++i) r[g.dual(i)] += a.coeff(i);
    return VirtualChar(a.group(), std::move(r));
}

VirtualChar adams(const VirtualChar& a, long k) { return VirtualChar::from_values(a.group(), power_values(a, k)); }

VirtualChar wedge2(const VirtualChar& a) {
    if (!a.is_effective()) throw char_error("wedge2 needs an effective character");
    auto v = a.values();
    auto p = power_values(a, 2);
    Cyclo half(mpq_class(1, 2));
    for (size_t c = 0; c < v.size(); ++c) v[c] = (v[c] * v[c] - p[c]) * half;
    return VirtualChar::from_values(a.group(), v);
}

VirtualChar sym2(const VirtualChar& a) {
    if (!a.is_effective()) throw char_error("sym2 needs an effective character");
    auto v = a.values();
    auto p = power_values(a, 2);
    Cyclo half(mpq_class(1, 2));
    for (size_t c = 0; c < v.size(); ++c) v[c] = (v[c] * v[c] + p[c]) * half;
    return VirtualChar::from_values(a.group(), v);
}

int det_char(const VirtualChar& a) {
    if (!a.is_effective()) throw char_error("det_char needs an effective character");
    const Group& g = *a.group();
    const long d = a.dim();
    const int k = g.num_classes();
    std::vector<std::vector<Cyclo>> e(d + 1, std::vector<Cyclo>(k));
    for (int c = 0; c < k; ++c) e[0][c] = Cyclo(1);
    std::vector<std::vector<Cyclo>> p(d + 1);
    for (long m = 1; m <= d; ++m) p[m] = power_values(a, m);
    for (long m = 1; m <= d; ++m) {
        Cyclo inv_m(mpq_class(1, m));
        for (int c = 0; c < k; ++c) {
            Cyclo acc;
            for (long j = 1; j <= m; ++j) {
                Cyclo t = e[m - j][c] * p[j][c];
                if (j % 2) acc += t;
                else acc -= t;
            }
            e[m][c] = acc * inv_m;
        }
    }
    auto r = VirtualChar::from_values(a.group(), e[d]);
    if (!r.is_irreducible() || r.dim() != 1) throw char_error("determinant is not a linear character");
    for (int i = 0; i < g.num_irreps(); ++i)
        if (r.coeff(i)) return i;
    throw char_error("unreachable");
}

VirtualChar induce(const Group& g, const Subgroup& h, const VirtualChar& chi) {
    if (chi.group() != h.group) throw char_error("character does not live on the subgroup");
    const GroupTable& t = g.table();
    const Group& hg = *h.group;
    auto hv = chi.values();
    const auto& hcl = hg.chars().classes();
    const auto& gcl = g.chars().classes();
    std::vector<Cyclo> v(g.num_classes());
    Cyclo scale(mpq_class(1, static_cast<long>(h.members.size())));
    for (int c = 0; c < g.num_classes(); ++c) {
        int gc = gcl.reps[c];
        Cyclo s;
        for (int x = 0; x < g.order(); ++x) {
            int y = t.conj(gc, x);
            int p = h.pos[y];
            if (p >= 0) s += hv[hcl.class_of[p]];
        }
        v[c] = s * scale;
    }
    return VirtualChar::from_values(g.shared_from_this(), v);
}

VirtualChar restrict_to(const Subgroup& h, const VirtualChar& chi) {
    auto gv = chi.values();
    const Group& hg = *h.group;
    std::vector<Cyclo> v(hg.num_classes());
    for (int c = 0; c < hg.num_classes(); ++c) v[c] = gv[h.fusion[c]];
    return VirtualChar::from_values(h.group, v);
}

VirtualChar tensor_induce_index2(const Group& g, const Subgroup& h, const VirtualChar& sigma) {
    if (h.index != 2) throw char_error("tensor induction needs an index-2 subgroup");
    if (sigma.group() != h.group) throw char_error("character does not live on the subgroup");
    if (!sigma.is_effective()) throw char_error("tensor induction needs an effective character");
    const GroupTable& t = g.table();
    const Group& hg = *h.group;
    auto hv = sigma.values();
    const auto& hcl = hg.chars().classes();
    auto at = [&](int x) { return hv[hcl.class_of[h.pos[x]]]; };
    std::vector<int> outside;
    for (int x = 0; x < g.order(); ++x)
        if (!h.contains(x)) outside.push_back(x);
    const auto& gcl = g.chars().classes();
    std::vector<Cyclo> v(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) {
        int x = gcl.reps[c];
        if (h.contains(x)) {
            // Every coset representative must give the same value.
            Cyclo first;
            for (size_t i = 0; i < outside.size(); ++i) {
                int s = outside[i];
                Cyclo val = at(x) * at(t.mul(t.mul(s, x), t.inv(s)));
                if (i == 0) first = val;
                else if (val != first) throw char_error("tensor induction depends on the coset representative");
            }
            v[c] = first;
        } else {
            v[c] = at(t.mul(x, x));
        }
    }
    return VirtualChar::from_values(g.shared_from_this(), v);
}

VirtualChar asai_lift(const Group& g, const Subgroup& h, const VirtualChar& sigma) {
    auto t = tensor_induce_index2(g, h, sigma);
    for (const auto& e : g.index2())
        if (e.members == h.members) return tensor(t, VirtualChar::irrep(t.group(), e.omega));
    throw char_error("subgroup is not in the index-2 list");
}

int fs_indicator(const Group& g, int irrep, int eta) {
    if (!g.is_linear(eta)) throw char_error("indicator twist must be linear");
    return g.fs(irrep, eta);
}

int fs_indicator(const VirtualChar& chi, int eta) {
    if (!chi.is_irreducible()) throw char_error("indicator is defined per irreducible");
    for (int i = 0; i < chi.group()->num_irreps(); ++i)
        if (chi.coeff(i)) return fs_indicator(*chi.group(), i, eta);
    throw char_error("unreachable");
}

std::vector<std::pair<int, long>> constituents(const VirtualChar& a) {
    std::vector<std::pair<int, long>> r;
    for (int i = 0; i < static_cast<int>(a.coeffs().size()); ++i)
        if (a.coeff(i)) r.emplace_back(i, a.coeff(i));
    return r;
}

}  // namespace wdp
