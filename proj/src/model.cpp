#include "wdp/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wdp/catalog.hpp"

namespace wdp {

namespace {

std::vector<Cyclo> shifted_values(const CharTable& ct, int i, int k) {
    std::vector<Cyclo> v(ct.num_classes());
    for (int c = 0; c < ct.num_classes(); ++c) v[c] = ct.value(i, ct.power_class(c, k));
    return v;
}

int find_row(const CharTable& ct, const std::vector<Cyclo>& vals) {
    for (int i = 0; i < ct.num_irreps(); ++i)
        if (ct.row(i) == vals) return i;
    return -1;
}

std::string member_label(const std::vector<int>& m) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << '}';
    return os.str();
}

}  // namespace

GroupPtr Group::create(GroupTable t, std::string name) {
    std::shared_ptr<Group> g(new Group());
    g->name_ = std::move(name);
    g->table_ = std::make_shared<const GroupTable>(std::move(t));
    g->build();
    return g;
}

GroupPtr Group::catalog(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, GroupPtr> cache;
    std::string canon = catalog_canonical_name(name);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(canon);
        if (it != cache.end()) return it->second;
    }
    GroupPtr g = create(catalog_group(canon), canon);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(canon, g).first->second;
}

void Group::build() {
    ct_ = CharTable::compute(table_);
    const int k = ct_.num_irreps();
    const int n = order();

    wconj_.assign(k, std::vector<Cyclo>(k));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) wconj_[i][c] = ct_.value(i, c).conj() * Cyclo(mpq_class(ct_.class_size(c), n));

    dual_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        std::vector<Cyclo> v(k);
        for (int c = 0; c < k; ++c) v[c] = ct_.value(i, c).conj();
        dual_[i] = find_row(ct_, v);
        if (dual_[i] < 0) throw group_error("dual character not found");
    }

    lin_pos_.assign(k, -1);
    for (int i = 0; i < k; ++i)
        if (ct_.degree(i) == 1) {
            lin_pos_[i] = static_cast<int>(linear_.size());
            linear_.push_back(i);
        }

    tensor_.assign(k, std::vector<std::vector<long>>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::vector<Cyclo> v(k);
            for (int c = 0; c < k; ++c) v[c] = ct_.value(i, c) * ct_.value(j, c);
            tensor_[i][j] = decompose(v);
            tensor_[j][i] = tensor_[i][j];
        }

    adams2_.resize(k);
    sym2_.resize(k);
    wedge2_.resize(k);
    for (int i = 0; i < k; ++i) {
        adams2_[i] = decompose(shifted_values(ct_, i, 2));
        sym2_[i].resize(k);
        wedge2_[i].resize(k);
        for (int j = 0; j < k; ++j) {
            long a = tensor_[i][i][j], b = adams2_[i][j];
            if ((a + b) % 2) throw group_error("symmetric square is not integral");
            sym2_[i][j] = (a + b) / 2;
            wedge2_[i][j] = (a - b) / 2;
        }
    }

    // Determinant via Newton's identities on power sums.
    det_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        int d = ct_.degree(i);
        std::vector<std::vector<Cyclo>> e(d + 1, std::vector<Cyclo>(k));
        for (int c = 0; c < k; ++c) e[0][c] = Cyclo(1);
        std::vector<std::vector<Cyclo>> p(d + 1);
        for (int m = 1; m <= d; ++m) p[m] = shifted_values(ct_, i, m);
        for (int m = 1; m <= d; ++m)
            for (int c = 0; c < k; ++c) {
                Cyclo acc;
                for (int j = 1; j <= m; ++j) {
                    Cyclo term = e[m - j][c] * p[j][c];
                    if (j % 2) acc += term;
                    else acc -= term;
                }
                e[m][c] = acc * Cyclo(mpq_class(1, m));
            }
        det_[i] = find_row(ct_, e[d]);
        if (det_[i] < 0 || ct_.degree(det_[i]) != 1) throw group_error("determinant is not a linear character");
    }

    fs_.assign(k, std::vector<int>(linear_.size()));
    for (int i = 0; i < k; ++i) {
        auto sq = shifted_values(ct_, i, 2);
        for (size_t l = 0; l < linear_.size(); ++l) {
            Cyclo s;
            for (int c = 0; c < k; ++c) s += sq[c] * wconj_[linear_[l]][c];
            if (!s.is_rational()) throw group_error("indicator is not rational");
            mpq_class q = s.to_rational();
            if (q != 0 && q != 1 && q != -1) throw group_error("indicator out of range");
            fs_[i][l] = static_cast<int>(q.get_num().get_si());
        }
    }

    size_t nl = linear_.size();
    lin_mul_.assign(nl, std::vector<int>(nl));
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = 0; b < nl; ++b) {
            const auto& t = tensor_[linear_[a]][linear_[b]];
            int r = -1;
            for (int j = 0; j < k; ++j)
                if (t[j]) r = j;
            lin_mul_[a][b] = r;
        }
    for (int a : linear_)
        if (a != 0 && lin_mul(a, a) == 0) quadratic_.push_back(a);

    for (int w : quadratic_) index2_.push_back({kernel(w), w});
    std::sort(index2_.begin(), index2_.end(), [](const Index2& a, const Index2& b) { return a.members < b.members; });
}

std::vector<mpq_class> Group::inner_products(const std::vector<Cyclo>& f) const {
    const int k = num_irreps();
    if (static_cast<int>(f.size()) != k) throw group_error("class function has wrong length");
    std::vector<mpq_class> r(k);
    for (int i = 0; i < k; ++i) {
        Cyclo s;
        for (int c = 0; c < k; ++c) s += f[c] * wconj_[i][c];
        if (!s.is_rational()) throw group_error("not a virtual character: irrational inner product");
        r[i] = s.to_rational();
    }
    return r;
}

std::vector<long> Group::decompose(const std::vector<Cyclo>& f) const {
    auto q = inner_products(f);
    std::vector<long> r(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw group_error("not a virtual character: non-integral multiplicity");
        r[i] = q[i].get_num().get_si();
    }
    return r;
}

std::vector<Cyclo> Group::values(const std::vector<long>& coeffs) const {
    const int k = num_irreps();
    std::vector<Cyclo> v(k);
    for (int i = 0; i < k; ++i) {
        if (!coeffs[i]) continue;
        Cyclo m(coeffs[i]);
        for (int c = 0; c < k; ++c) v[c] += m * ct_.value(i, c);
    }
    return v;
}

int Group::lin_mul(int a, int b) const {
    if (lin_pos_[a] < 0 || lin_pos_[b] < 0) throw group_error("lin_mul on a non-linear character");
    return lin_mul_[lin_pos_[a]][lin_pos_[b]];
}

int Group::lin_pow(int a, long k) const {
    long o = lin_order(a);
    k = ((k % o) + o) % o;
    int r = 0;
    for (long i = 0; i < k; ++i) r = lin_mul(r, a);
    return r;
}

int Group::lin_order(int a) const {
    int o = 1;
    for (int x = a; x != 0; x = lin_mul(x, a)) ++o;
    return o;
}

int Group::twist(int i, int lin) const {
    if (lin_pos_[lin] < 0) throw group_error("twist by a non-linear character");
    const auto& t = tensor_[i][lin];
    for (int j = 0; j < num_irreps(); ++j)
        if (t[j]) return j;
    throw group_error("twist produced nothing");
}

std::vector<int> Group::kernel(int lin) const {
    std::vector<int> r;
    for (int g = 0; g < order(); ++g)
        if (value_at(lin, g) == Cyclo(1)) r.push_back(g);
    return r;
}

std::vector<int> Group::common_kernel(const std::vector<int>& lins) const {
    std::vector<int> r;
    for (int g = 0; g < order(); ++g) {
        bool in = true;
        for (int l : lins)
            if (value_at(l, g) != Cyclo(1)) {
                in = false;
                break;
            }
        if (in) r.push_back(g);
    }
    return r;
}

bool Group::is_normal(const std::vector<int>& members) const {
    std::vector<char> in(order(), 0);
    for (int x : members) in[x] = 1;
    const auto& cl = ct_.classes();
    for (int x : members)
        for (int y : cl.members[cl.class_of[x]])
            if (!in[y]) return false;
    return true;
}

const Subgroup& Group::subgroup(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = subs_.find(members);
        if (it != subs_.end()) return *it->second;
    }
    const GroupTable& g = table();
    if (members.empty() || members[0] != 0) throw group_error("subgroup must contain the identity");
    for (int x : members)
        if (x < 0 || x >= order()) throw group_error("subgroup member out of range");
    auto sub = std::make_unique<Subgroup>();
    sub->members = members;
    sub->pos.assign(order(), -1);
    const int m = static_cast<int>(members.size());
    for (int i = 0; i < m; ++i) sub->pos[members[i]] = i;
    if (order() % m) throw group_error("subgroup order does not divide group order");
    std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = sub->pos[g.mul(members[i], members[j])];
            if (p < 0) throw group_error("member set is not closed under multiplication");
            mul[static_cast<size_t>(i) * m + j] = static_cast<uint16_t>(p);
        }
    sub->index = order() / m;
    sub->normal = is_normal(members);
    sub->group = create(GroupTable::from_mul_table(m, std::move(mul)), name_ + member_label(members));
    const Group& h = *sub->group;
    const int kh = h.num_irreps();
    sub->fusion.resize(kh);
    for (int c = 0; c < kh; ++c) sub->fusion[c] = ct_.class_of(members[h.chars().classes().reps[c]]);
    const int kg = num_irreps();
    sub->res.resize(kg);
    for (int i = 0; i < kg; ++i) {
        std::vector<Cyclo> v(kh);
        for (int c = 0; c < kh; ++c) v[c] = ct_.value(i, sub->fusion[c]);
        sub->res[i] = h.decompose(v);
    }
    sub->ind.assign(kh, std::vector<long>(kg));
    for (int i = 0; i < kg; ++i)
        for (int j = 0; j < kh; ++j) sub->ind[j][i] = sub->res[i][j];

    std::lock_guard<std::mutex> lk(mu_);
    auto it = subs_.find(members);
    if (it != subs_.end()) return *it->second;
    return *subs_.emplace(members, std::move(sub)).first->second;
}

const Subgroup& Group::subgroup_generated(const std::vector<int>& gens) const {
    for (int x : gens)
        if (x < 0 || x >= order()) throw group_error("generator index out of range");
    return subgroup(subgroup_closure(table(), gens));
}

int Group::conjugate_irrep(const Subgroup& h, int j, int g) const {
    if (!h.normal) throw group_error("conjugation action needs a normal subgroup");
    const Group& hg = *h.group;
    const auto& hcl = hg.chars().classes();
    const int kh = hg.num_irreps();
    int ginv = table().inv(g);
    std::vector<Cyclo> v(kh);
    for (int c = 0; c < kh; ++c) {
        int x = h.members[hcl.reps[c]];
        int y = table().conj(x, ginv);  // g x g^-1
        v[c] = hg.value(j, hcl.class_of[h.pos[y]]);
    }
    int r = find_row(hg.chars(), v);
    if (r < 0) throw group_error("conjugate character not found");
    return r;
}

std::vector<std::vector<int>> Group::normal_subgroups_small_index() const {
    const int k = num_irreps();
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < k; ++i) {
        std::vector<int> ker;
        Cyclo d(degree(i));
        for (int g = 0; g < order(); ++g)
            if (value_at(i, g) == d) ker.push_back(g);
        if (found.insert(ker).second) frontier.push_back(ker);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        std::vector<std::vector<int>> all(found.begin(), found.end());
        for (const auto& a : frontier)
            for (const auto& b : all) {
                std::vector<int> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (found.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> r;
    for (const auto& s : found)
        if (static_cast<int>(s.size()) * 4 >= order()) r.push_back(s);
    return r;
}

bool Group::two_part_is_klein() const {
    int ab = abelianization_order();
    int two = 1;
    while (ab % 2 == 0) {
        ab /= 2;
        two *= 2;
    }
    return two == 4 && quadratic_.size() == 3;
}

Quotient quotient(const Group& g, const std::vector<int>& normal_members) {
    if (!g.is_normal(normal_members)) throw group_error("quotient by a non-normal subgroup");
    const GroupTable& t = g.table();
    const int n = g.order();
    std::vector<int> rep(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (rep[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : normal_members) rep[t.mul(x, h)] = id;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[static_cast<size_t>(a) * m + b] = static_cast<uint16_t>(rep[t.mul(reps[a], reps[b])]);
    Quotient q;
    q.coset_of = rep;
    q.group = Group::create(GroupTable::from_mul_table(m, std::move(mul)), g.name() + "/" + member_label(normal_members));
    const Group& qg = *q.group;
    const int kq = qg.num_irreps();
    q.inflation.resize(kq);
    for (int i = 0; i < kq; ++i) {
        std::vector<Cyclo> v(g.num_classes());
        for (int c = 0; c < g.num_classes(); ++c) v[c] = qg.value_at(i, rep[g.chars().classes().reps[c]]);
        q.inflation[i] = find_row(g.chars(), v);
        if (q.inflation[i] < 0) throw group_error("inflated character not irreducible");
    }
    return q;
}

}  // namespace wdp
