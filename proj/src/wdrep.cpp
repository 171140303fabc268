#include "wdp/wdrep.hpp"

#include <sstream>

namespace wdp {

const char* type_name(SelfDualType t) {
    switch (t) {
        case SelfDualType::orthogonal: return "orthogonal";
        case SelfDualType::symplectic: return "symplectic";
        default: return "complex";
    }
}

WDRep WDRep::term(GroupPtr g, int irrep, int n, long mult) {
    WDRep r(std::move(g));
    r.add(irrep, n, mult);
    return r;
}

WDRep WDRep::from_char(const VirtualChar& v, int n) {
    WDRep r(v.group());
    for (int i = 0; i < static_cast<int>(v.coeffs().size()); ++i) r.add(i, n, v.coeff(i));
    return r;
}

std::vector<WDTerm> WDRep::terms() const {
    std::vector<WDTerm> r;
    for (const auto& [k, m] : t_) r.push_back({k.second, k.first, m});
    return r;
}

long WDRep::mult(int irrep, int n) const {
    auto it = t_.find({n, irrep});
    return it == t_.end() ? 0 : it->second;
}

long WDRep::dim() const {
    long d = 0;
    for (const auto& [k, m] : t_) d += m * g_->degree(k.second) * k.first;
    return d;
}

bool WDRep::is_effective() const {
    for (const auto& kv : t_)
        if (kv.second < 0) return false;
    return true;
}

bool WDRep::is_pure_weil() const {
    for (const auto& kv : t_)
        if (kv.first.first != 1) return false;
    return true;
}

long WDRep::length() const {
    long s = 0;
    for (const auto& kv : t_) s += kv.second;
    return s;
}

void WDRep::add(int irrep, int n, long mult) {
    if (!g_) throw wd_error("WD representation without a group");
    if (irrep < 0 || irrep >= g_->num_irreps()) throw wd_error("irrep index out of range");
    if (n < 1) throw wd_error("S_n needs n >= 1");
    if (!mult) return;
    auto key = std::make_pair(n, irrep);
    long v = (t_[key] += mult);
    if (!v) t_.erase(key);
}

WDRep& WDRep::operator+=(const WDRep& o) {
    if (!g_) g_ = o.g_;
    if (o.g_ && o.g_ != g_) throw wd_error("WD representations over different groups");
    for (const auto& [k, m] : o.t_) add(k.second, k.first, m);
    return *this;
}

WDRep& WDRep::operator-=(const WDRep& o) {
    if (!g_) g_ = o.g_;
    if (o.g_ && o.g_ != g_) throw wd_error("WD representations over different groups");
    for (const auto& [k, m] : o.t_) add(k.second, k.first, -m);
    return *this;
}

VirtualChar WDRep::weil_restriction() const {
    std::vector<long> c(g_->num_irreps(), 0);
    for (const auto& [k, m] : t_) c[k.second] += m * k.first;
    return VirtualChar(g_, std::move(c));
}

std::string WDRep::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.mult != 1) os << t.mult << "*";
        os << "chi" << t.irrep;
        if (t.n != 1) os << "xS" << t.n;
    }
    return os.str();
}

std::vector<int> clebsch_gordan(int a, int b) {
    std::vector<int> r;
    for (int k = a + b - 1; k >= std::abs(a - b) + 1; k -= 2) r.push_back(k);
    return r;
}

std::vector<int> sym2_sl2(int n) {
    std::vector<int> r;
    for (int k = 2 * n - 1; k >= 1; k -= 4) r.push_back(k);
    return r;
}

std::vector<int> wedge2_sl2(int n) {
    std::vector<int> r;
    for (int k = 2 * n - 3; k >= 1; k -= 4) r.push_back(k);
    return r;
}

namespace {

void check_same(const WDRep& a, const WDRep& b) {
    if (a.group() != b.group()) throw wd_error("WD representations over different groups");
}

// m * (V_i x S_a) (x) (V_j x S_b) accumulated into r.
void add_product(WDRep& r, const Group& g, int i, int a, int j, int b, long m) {
    const auto& t = g.tensor(i, j);
    auto ns = clebsch_gordan(a, b);
    for (int l = 0; l < g.num_irreps(); ++l)
        if (t[l])
            for (int n : ns) r.add(l, n, m * t[l]);
}

void add_layer(WDRep& r, const std::vector<long>& weil, const std::vector<int>& ns, long m) {
    for (size_t l = 0; l < weil.size(); ++l)
        if (weil[l])
            for (int n : ns) r.add(static_cast<int>(l), n, m * weil[l]);
}

WDRep square_part(const WDRep& phi, bool alternating) {
    if (!phi.is_effective()) throw wd_error("exterior/symmetric square needs an effective input");
    const Group& g = *phi.group();
    WDRep r(phi.group());
    auto ts = phi.terms();
    for (size_t a = 0; a < ts.size(); ++a) {
        const auto& x = ts[a];
        long m = x.mult;
        const auto& w = g.wedge2(x.irrep);
        const auto& s = g.sym2(x.irrep);
        if (alternating) {
            add_layer(r, w, sym2_sl2(x.n), m);
            add_layer(r, s, wedge2_sl2(x.n), m);
        } else {
            add_layer(r, s, sym2_sl2(x.n), m);
            add_layer(r, w, wedge2_sl2(x.n), m);
        }
        if (m > 1) add_product(r, g, x.irrep, x.n, x.irrep, x.n, m * (m - 1) / 2);
        for (size_t b = a + 1; b < ts.size(); ++b) add_product(r, g, x.irrep, x.n, ts[b].irrep, ts[b].n, m * ts[b].mult);
    }
    return r;
}

}  // namespace

WDRep wd_tensor(const WDRep& a, const WDRep& b) {
    check_same(a, b);
    const Group& g = *a.group();
    WDRep r(a.group());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) add_product(r, g, x.irrep, x.n, y.irrep, y.n, x.mult * y.mult);
    return r;
}

WDRep wd_wedge2(const WDRep& phi) { return square_part(phi, true); }
WDRep wd_sym2(const WDRep& phi) { return square_part(phi, false); }

WDRep wd_dual(const WDRep& phi) {
    WDRep r(phi.group());
    for (const auto& x : phi.terms()) r.add(phi.group()->dual(x.irrep), x.n, x.mult);
    return r;
}

WDRep wd_twist(const WDRep& phi, int lin) {
    const Group& g = *phi.group();
    WDRep r(phi.group());
    for (const auto& x : phi.terms()) r.add(g.twist(x.irrep, lin), x.n, x.mult);
    return r;
}

WDRep wd_induce(const Group& g, const Subgroup& h, const WDRep& phi) {
    if (phi.group() != h.group) throw wd_error("WD representation does not live on the subgroup");
    WDRep r(g.shared_from_this());
    for (const auto& x : phi.terms()) add_layer(r, h.ind[x.irrep], {x.n}, x.mult);
    return r;
}

int wd_det(const WDRep& phi) {
    const Group& g = *phi.group();
    int d = 0;
    for (const auto& x : phi.terms()) {
        if (x.mult < 0) throw wd_error("determinant of a virtual representation");
        d = g.lin_mul(d, g.lin_pow(g.det(x.irrep), static_cast<long>(x.n) * x.mult));
    }
    return d;
}

SelfDualType term_type(const Group& g, int irrep, int n, int eta) {
    int f = g.fs(irrep, eta);
    if (f == 0) return SelfDualType::complex;
    if (n % 2 == 0) f = -f;
    return f > 0 ? SelfDualType::orthogonal : SelfDualType::symplectic;
}

std::vector<IsotypicType> wd_dual_type(const WDRep& phi) {
    const Group& g = *phi.group();
    std::vector<IsotypicType> r;
    for (const auto& x : phi.terms()) {
        bool sd = g.dual(x.irrep) == x.irrep;
        r.push_back({x.irrep, x.n, x.mult, sd, term_type(g, x.irrep, x.n)});
    }
    return r;
}

bool is_discrete_so(const WDRep& psi, long N) {
    if (!psi.is_effective()) throw wd_error("not effective");
    if (psi.dim() != N) throw wd_error("wrong dimension");
    if (wd_dual(psi) != psi) throw wd_error("not self-dual");
    if (wd_det(psi) != 0) throw wd_error("determinant is not trivial");
    for (const auto& t : wd_dual_type(psi))
        if (t.mult != 1 || t.type != SelfDualType::orthogonal) return false;
    return true;
}

}  // namespace wdp
