// Finite groups given by full multiplication tables.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdp {

struct group_error : std::runtime_error { using std::runtime_error::runtime_error; };

using Perm = std::vector<int>;  // 0-based image list

constexpr int kDefaultOrderBound = 4096;

// Cycles use 1-based points, as written by hand: {{1,2,3},{4,5}}.
Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree = 0);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b

class GroupTable {
public:
    // mul is row-major order*order; element 0 must be the identity.
    static GroupTable from_mul_table(int order, std::vector<uint16_t> mul);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const { return ord_[a]; }
    int pow(int a, long k) const;
    int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
    int exponent() const { return exponent_; }
    bool is_abelian() const;

    // Greedy generating set in index order (deterministic).
    std::vector<int> generating_set() const;

private:
    int n_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<int> inv_, ord_;
    int exponent_ = 1;
};

// Breadth-first closure: element 0 is the identity, new elements are
// appended as products x*g over the queue, generators in the given order.
GroupTable group_from_generators(const std::vector<Perm>& gens, int bound = kDefaultOrderBound);

// Closure of a set of elements inside a table; returns sorted members.
std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& gens);

struct ClassPartition {
    std::vector<std::vector<int>> members;  // sorted by (size, representative)
    std::vector<int> reps;                  // smallest element index of each class
    std::vector<int> class_of;              // element -> class
    int count() const { return static_cast<int>(reps.size()); }
    int size(int c) const { return static_cast<int>(members[c].size()); }
};

ClassPartition conjugacy_classes(const GroupTable& g);

}  // namespace wdp
