// Weil-Deligne representations: formal sums of (irrep of the finite model) x S_n.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdp/charalg.hpp"

namespace wdp {

struct WDTerm {
    int irrep;
    int n;
    long mult;
    bool operator==(const WDTerm&) const = default;
};

enum class SelfDualType { orthogonal, symplectic, complex };
const char* type_name(SelfDualType t);

class WDRep {
public:
    WDRep() = default;
    explicit WDRep(GroupPtr g) : g_(std::move(g)) {}
    static WDRep term(GroupPtr g, int irrep, int n = 1, long mult = 1);
    static WDRep from_char(const VirtualChar& v, int n = 1);

    const GroupPtr& group() const { return g_; }
    // Canonical order: by (n, irrep); zero multiplicities never stored.
    std::vector<WDTerm> terms() const;
    long mult(int irrep, int n) const;
    long dim() const;
    bool is_effective() const;
    bool is_zero() const { return t_.empty(); }
    bool is_pure_weil() const;  // every term has n = 1
    // Sum of multiplicities, counted with sign.
    long length() const;

    void add(int irrep, int n, long mult);
    WDRep& operator+=(const WDRep& o);
    WDRep& operator-=(const WDRep& o);
    friend WDRep operator+(WDRep a, const WDRep& b) { return a += b; }
    friend WDRep operator-(WDRep a, const WDRep& b) { return a -= b; }
    friend bool operator==(const WDRep& a, const WDRep& b) { return a.g_ == b.g_ && a.t_ == b.t_; }
    friend bool operator!=(const WDRep& a, const WDRep& b) { return !(a == b); }
    bool operator<(const WDRep& o) const { return t_ < o.t_; }

    // Weil layer with S_n replaced by n copies of the trivial SL2 action.
    VirtualChar weil_restriction() const;
    std::string to_string() const;

private:
    GroupPtr g_;
    std::map<std::pair<int, int>, long> t_;  // (n, irrep) -> mult
};

// Clebsch-Gordan: S_a (x) S_b as a list of n's.
std::vector<int> clebsch_gordan(int a, int b);
std::vector<int> sym2_sl2(int n);
std::vector<int> wedge2_sl2(int n);

WDRep wd_tensor(const WDRep& a, const WDRep& b);
WDRep wd_wedge2(const WDRep& phi);
WDRep wd_sym2(const WDRep& phi);
WDRep wd_dual(const WDRep& phi);
WDRep wd_twist(const WDRep& phi, int lin);  // twist by a linear character
WDRep wd_induce(const Group& g, const Subgroup& h, const WDRep& phi);

// Linear character of the Weil layer of det(phi): prod det(rho)^(n*mult) adjusted for S_n.
int wd_det(const WDRep& phi);

struct IsotypicType {
    int irrep;
    int n;
    long mult;
    bool self_dual;
    SelfDualType type;
};
std::vector<IsotypicType> wd_dual_type(const WDRep& phi);
// Type of rho x S_n relative to a linear twist eta (eta = 0 for the untwisted case).
SelfDualType term_type(const Group& g, int irrep, int n, int eta = 0);

struct wd_error : std::runtime_error { using std::runtime_error::runtime_error; };

// Multiplicity-free with every constituent self-dual orthogonal. Preconditions are
// checked separately and reported with distinct messages.
bool is_discrete_so(const WDRep& psi, long N);

}  // namespace wdp
