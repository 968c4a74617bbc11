#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ninf/permutation.hpp"

namespace ninf {

/// Size limits shared by every module. Values are read from the
/// environment by the CLI (see from_environment()).
struct Caps {
  std::size_t order_cap = 10000;          ///< elements of a FiniteGroup
  std::size_t lattice_order_cap = 1000;   ///< |G| for subgroup enumeration
  std::size_t n_max = 8;                  ///< family materialization
  std::size_t transfer_subgroup_cap = 20; ///< subgroups for transfer systems

  /// Overrides defaults from NINF_ORDER_CAP, NINF_LATTICE_CAP, NINF_NMAX and
  /// NINF_TRANSFER_CAP when set.
  static Caps from_environment();
};

using ElementId = int;

/// A finite group given by permutation generators, with every element
/// enumerated. Elements are sorted lexicographically by image vector, so the
/// identity always has id 0.
class FiniteGroup {
public:
  /// Closes `generators` under composition. Throws ResourceError once the
  /// closure exceeds `order_cap`, DomainError on mixed degrees.
  static FiniteGroup generated_by(std::vector<Permutation> generators,
                                  std::string name = "G",
                                  std::size_t order_cap = Caps{}.order_cap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string &name() const { return name_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(ElementId id) const { return elements_[id]; }

  static constexpr ElementId identity() { return 0; }

  std::optional<ElementId> find(const Permutation &p) const;
  /// find() that throws DomainError for non-members.
  ElementId index_of(const Permutation &p) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  /// g * h * g^-1
  ElementId conjugate(ElementId h, ElementId g) const {
    return multiply(multiply(g, h), inverses_[g]);
  }
  std::size_t element_order(ElementId a) const { return element_orders_[a]; }

  bool is_abelian() const;

  void rename(std::string name) { name_ = std::move(name); }

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::size_t> element_orders_;
  // Dense multiplication table, only kept for small groups.
  std::vector<ElementId> table_;
};

/// Catalog names (case-insensitive): Cn, Dn (order 2n), Sn and An for
/// n <= 5, Q8. Throws ParseError for unknown names, ResourceError when the
/// order would exceed `caps.order_cap`.
FiniteGroup catalog_group(std::string_view name, const Caps &caps = {});

/// Accepts either a catalog name or a comma-separated list of generators in
/// cycle notation, e.g. "(0 1)(2 3), (0 2)(1 3)".
FiniteGroup parse_group(std::string_view spec, const Caps &caps = {});

/// Every catalog group of order at most `max_order`, in a fixed order
/// (cyclic, dihedral, symmetric, alternating, Q8). Isomorphic duplicates such
/// as D1/C2 or S3/D3 are kept: they are distinct catalog entries.
std::vector<std::string> catalog_names(std::size_t max_order);

} // namespace ninf
