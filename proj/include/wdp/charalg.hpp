// Virtual characters and the representation-ring operations on them.
#pragma once

#include <stdexcept>
#include <vector>

#include "wdp/model.hpp"

namespace wdp {

struct char_error : std::runtime_error { using std::runtime_error::runtime_error; };

class VirtualChar {
public:
    VirtualChar() = default;
    VirtualChar(GroupPtr g, std::vector<long> coeffs);
    static VirtualChar irrep(GroupPtr g, int i);
    static VirtualChar zero(GroupPtr g);
    // Decomposes a class function; throws char_error if it is not a virtual character.
    static VirtualChar from_values(GroupPtr g, const std::vector<Cyclo>& values);

    const GroupPtr& group() const { return g_; }
    const std::vector<long>& coeffs() const { return c_; }
    long coeff(int i) const { return c_[i]; }
    long dim() const;
    bool is_effective() const;
    bool is_irreducible() const;
    bool is_zero() const;
    std::vector<Cyclo> values() const;  // per class of the group

    VirtualChar& operator+=(const VirtualChar& o);
    VirtualChar& operator-=(const VirtualChar& o);
    friend VirtualChar operator+(VirtualChar a, const VirtualChar& b) { return a += b; }
    friend VirtualChar operator-(VirtualChar a, const VirtualChar& b) { return a -= b; }
    friend VirtualChar operator*(long k, VirtualChar a);
    friend bool operator==(const VirtualChar& a, const VirtualChar& b);
    friend bool operator!=(const VirtualChar& a, const VirtualChar& b) { return !(a == b); }

private:
    GroupPtr g_;
    std::vector<long> c_;
};

// <a, b> = (1/|G|) sum a(g) conj(b(g)).
long inner(const VirtualChar& a, const VirtualChar& b);

VirtualChar tensor(const VirtualChar& a, const VirtualChar& b);
VirtualChar dual(const VirtualChar& a);
VirtualChar wedge2(const VirtualChar& a);  // effective input only
VirtualChar sym2(const VirtualChar& a);
VirtualChar adams(const VirtualChar& a, long k);
// Top exterior power via Newton's identities; returns the irrep index of the linear character.
int det_char(const VirtualChar& a);

VirtualChar induce(const Group& g, const Subgroup& h, const VirtualChar& chi);
VirtualChar restrict_to(const Subgroup& h, const VirtualChar& chi);

// Tensor induction from an index-2 subgroup: sigma(x) sigma(t x t^-1) on H, sigma(x^2) off H.
VirtualChar tensor_induce_index2(const Group& g, const Subgroup& h, const VirtualChar& sigma);
// The extension of sigma (x) sigma^t that sits inside wedge2(Ind sigma): omega_H times the tensor induction.
VirtualChar asai_lift(const Group& g, const Subgroup& h, const VirtualChar& sigma);

// Twisted Frobenius-Schur indicator of an irreducible (by index) against linear eta.
int fs_indicator(const Group& g, int irrep, int eta = 0);
int fs_indicator(const VirtualChar& chi, int eta = 0);

// Multiset view: (irrep index, multiplicity) with multiplicity != 0.
std::vector<std::pair<int, long>> constituents(const VirtualChar& a);

}  // namespace wdp
