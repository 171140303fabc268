// A finite group together with its character table and integer ring tables.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wdp/chartable.hpp"

namespace wdp {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Subgroup {
    std::vector<int> members;  // sorted parent element indices
    int index = 1;
    bool normal = false;
    GroupPtr group;              // H with element i = members[i]
    std::vector<int> pos;        // parent element -> H element, or -1
    std::vector<int> fusion;     // H class -> G class
    std::vector<std::vector<long>> res;  // [G irrep] -> multiplicities over H irreps
    std::vector<std::vector<long>> ind;  // [H irrep] -> multiplicities over G irreps
    bool contains(int g) const { return pos[g] >= 0; }
};

class Group : public std::enable_shared_from_this<Group> {
public:
    static GroupPtr create(GroupTable t, std::string name);
    static GroupPtr catalog(const std::string& name);  // memoized by canonical name

    const std::string& name() const { return name_; }
    const GroupTable& table() const { return *table_; }
    const CharTable& chars() const { return ct_; }
    int order() const { return table_->order(); }
    int num_irreps() const { return ct_.num_irreps(); }
    int num_classes() const { return ct_.num_classes(); }
    int degree(int i) const { return ct_.degree(i); }

    // Ring structure, as multiplicity vectors over the irreducibles.
    const std::vector<long>& tensor(int i, int j) const { return tensor_[i][j]; }
    const std::vector<long>& sym2(int i) const { return sym2_[i]; }
    const std::vector<long>& wedge2(int i) const { return wedge2_[i]; }
    const std::vector<long>& adams2(int i) const { return adams2_[i]; }  // virtual
    int dual(int i) const { return dual_[i]; }
    int det(int i) const { return det_[i]; }  // index of the determinant character
    // (1/|G|) sum conj(eta(g)) chi_i(g^2); eta is an irrep index of degree 1.
    int fs(int i, int eta = 0) const { return fs_[i][lin_pos_[eta]]; }

    // Linear characters, listed by irrep index in table order; index 0 is trivial.
    const std::vector<int>& linear() const { return linear_; }
    bool is_linear(int i) const { return lin_pos_[i] >= 0; }
    int linear_position(int i) const { return lin_pos_[i]; }
    int lin_mul(int a, int b) const;  // irrep index of the product
    int lin_inv(int a) const { return dual_[a]; }
    int lin_pow(int a, long k) const;
    int lin_order(int a) const;
    int twist(int i, int lin) const;  // irrep index of chi_i (x) lin
    const std::vector<int>& quadratic() const { return quadratic_; }  // nontrivial, order 2

    // Class function helpers.
    const Cyclo& value(int i, int cls) const { return ct_.value(i, cls); }
    Cyclo value_at(int i, int g) const { return ct_.value(i, ct_.class_of(g)); }
    std::vector<long> decompose(const std::vector<Cyclo>& f) const;   // throws if not virtual
    std::vector<mpq_class> inner_products(const std::vector<Cyclo>& f) const;
    std::vector<Cyclo> values(const std::vector<long>& coeffs) const;

    // Subgroup machinery. Members need not be sorted; closure is verified.
    const Subgroup& subgroup(std::vector<int> members) const;
    const Subgroup& subgroup_generated(const std::vector<int>& gens) const;
    std::vector<int> kernel(int lin) const;
    // Common kernel of a set of linear characters.
    std::vector<int> common_kernel(const std::vector<int>& lins) const;
    bool is_normal(const std::vector<int>& members) const;
    // Irrep of normal H obtained by conjugating H-irrep j by g: psi^g(h) = psi(g h g^-1).
    int conjugate_irrep(const Subgroup& h, int j, int g) const;

    // Index-2 subgroups in canonical (member-set lexicographic) order, with omega_H.
    struct Index2 {
        std::vector<int> members;
        int omega;
    };
    const std::vector<Index2>& index2() const { return index2_; }
    // Normal subgroups of index at most 4, canonical order.
    std::vector<std::vector<int>> normal_subgroups_small_index() const;
    // Order of the abelianization, and the number of characters of order dividing 2.
    int abelianization_order() const { return static_cast<int>(linear_.size()); }
    bool two_part_is_klein() const;

private:
    Group() = default;
    void build();

    std::string name_;
    std::shared_ptr<const GroupTable> table_;
    CharTable ct_;
    std::vector<std::vector<std::vector<long>>> tensor_;
    std::vector<std::vector<long>> sym2_, wedge2_, adams2_;
    std::vector<int> dual_, det_;
    std::vector<std::vector<int>> fs_;
    std::vector<int> linear_, lin_pos_, quadratic_;
    std::vector<std::vector<int>> lin_mul_;
    std::vector<Index2> index2_;
    std::vector<std::vector<Cyclo>> wconj_;  // |c|/|G| * conj(chi_i(c))

    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, std::unique_ptr<Subgroup>> subs_;
};

// Quotient G/N for normal N, with the inflation map from irreps of G/N to irreps of G.
struct Quotient {
    GroupPtr group;
    std::vector<int> inflation;
    std::vector<int> coset_of;  // G element -> G/N element
};
Quotient quotient(const Group& g, const std::vector<int>& normal_members);

}  // namespace wdp
