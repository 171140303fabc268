// Named small groups used as finite models.
#pragma once

#include <string>
#include <vector>

#include "wdp/group.hpp"

namespace wdp {

// Canonical names in catalog order.
const std::vector<std::string>& catalog_names();

// Accepts canonical names and a few aliases (e.g. "(Z/2)^2", "M16").
std::string catalog_canonical_name(const std::string& name);

std::vector<Perm> catalog_generators(const std::string& name);
GroupTable catalog_group(const std::string& name);

// Regular permutation action of <x, y | x^m, y^s = x^t, y x y^-1 = x^r>.
std::vector<Perm> metacyclic_generators(int m, int s, int t, int r);

}  // namespace wdp
