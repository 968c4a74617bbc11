#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ninf/lattice.hpp"

namespace ninf {

/// A transfer system: pairs K -> L (K <= L) beyond the reflexive ones,
/// closed under conjugation, restriction and composition. Pairs are sorted.
struct TransferSystem {
  std::vector<std::pair<SubgroupId, SubgroupId>> transfers;

  friend bool operator==(const TransferSystem &, const TransferSystem &) = default;
  friend auto operator<=>(const TransferSystem &, const TransferSystem &) = default;
};

/// Every transfer system on the lattice, ordered by size and then by pair
/// list. Throws ResourceError when the lattice has more than `cap` subgroups.
std::vector<TransferSystem> enumerate_transfer_systems(
    const SubgroupLattice &lattice, std::size_t cap = Caps{}.transfer_subgroup_cap);

/// Graphviz rendering, one cluster per system.
std::string transfer_systems_dot(const SubgroupLattice &lattice,
                                 const std::vector<TransferSystem> &systems);

} // namespace ninf
