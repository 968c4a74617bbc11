#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ninf/group.hpp"

namespace ninf {

using SubgroupId = int;
using ClassId = int;

/// Packed membership bitset over the elements of a parent group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  void insert(ElementId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool contains(ElementId x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  bool is_subset_of(const ElementSet &other) const;
  ElementSet operator&(const ElementSet &other) const;
  std::size_t count() const;
  std::size_t universe() const { return universe_; }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;

  struct Hash {
    std::size_t operator()(const ElementSet &s) const noexcept;
  };

private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

/// A subgroup of a FiniteGroup, as a sorted list of element ids.
class Subgroup {
public:
  Subgroup(std::vector<ElementId> members, std::vector<ElementId> generators,
           std::size_t universe);

  std::size_t order() const { return members_.size(); }
  const std::vector<ElementId> &members() const { return members_; }
  const std::vector<ElementId> &generators() const { return generators_; }
  const ElementSet &set() const { return set_; }
  bool contains(ElementId x) const { return set_.contains(x); }

private:
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
  ElementSet set_;
};

/// Closure of `generators` inside `group`.
Subgroup generate_subgroup(const FiniteGroup &group,
                           std::span<const ElementId> generators);

/// All subgroups of a finite group with their conjugacy classes, inclusion
/// order, normalizers and Möbius function.
///
/// Subgroups are sorted by (order, member list), and so are classes by their
/// representative, which is the lexicographically least member list in the
/// class. Subgroup 0 is the trivial group; the last one is G itself.
class SubgroupLattice {
public:
  /// Throws ResourceError if |G| exceeds `caps.lattice_order_cap`.
  static SubgroupLattice enumerate(std::shared_ptr<const FiniteGroup> group,
                                   const Caps &caps = {});

  const FiniteGroup &group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup> &group_ptr() const { return group_; }

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup &subgroup(SubgroupId id) const { return subgroups_[id]; }
  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(size()) - 1; }

  std::size_t num_classes() const { return class_members_.size(); }
  ClassId class_of(SubgroupId id) const { return class_of_[id]; }
  SubgroupId representative(ClassId c) const { return class_members_[c].front(); }
  const std::vector<SubgroupId> &class_members(ClassId c) const {
    return class_members_[c];
  }

  /// Whether `small` <= `big`.
  bool contains(SubgroupId big, SubgroupId small) const {
    return contains_[static_cast<std::size_t>(big) * size() + small];
  }
  /// Whether some member of class `small` is contained in the representative
  /// of class `big`.
  bool subconjugate(ClassId small, ClassId big) const {
    return subconjugate_[static_cast<std::size_t>(big) * num_classes() + small];
  }

  /// g H g^-1
  SubgroupId conjugate(SubgroupId h, ElementId g) const {
    return conjugates_[static_cast<std::size_t>(h) * group_->order() + g];
  }
  SubgroupId normalizer(SubgroupId h) const { return normalizers_[h]; }
  SubgroupId intersection(SubgroupId a, SubgroupId b) const;
  std::optional<SubgroupId> find(const ElementSet &members) const;

  /// Subgroups K with K <= h, in id order.
  std::vector<SubgroupId> subgroups_of(SubgroupId h) const;
  /// Canonical representative of the h-conjugacy class of k <= h.
  SubgroupId canonical_within(SubgroupId h, SubgroupId k) const;

  /// Möbius function of the inclusion order. Throws DomainError unless
  /// k <= h.
  std::int64_t mobius(SubgroupId k, SubgroupId h) const;

  /// Human-readable class labels such as "1", "C2", "V4a", "S3".
  const std::string &class_label(ClassId c) const { return labels_[c]; }
  /// Resolves a label, "#<class index>", "e", or the group's name.
  /// Throws ParseError for unknown labels.
  ClassId class_by_label(std::string_view label) const;

  /// Graphviz Hasse diagram of the full subgroup lattice.
  std::string hasse_dot() const;

private:
  SubgroupLattice() = default;

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSet::Hash> index_;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<SubgroupId>> class_members_;
  std::vector<bool> contains_;
  std::vector<bool> subconjugate_;
  std::vector<SubgroupId> conjugates_;
  std::vector<SubgroupId> normalizers_;
  std::vector<std::int64_t> mobius_;
  std::vector<std::string> labels_;
};

/// N_G(H)/H together with the map from normalizer elements to its elements.
struct WeylGroup {
  FiniteGroup group;
  SubgroupId subgroup;
  SubgroupId normalizer;
  /// Left cosets nH of H in N_G(H); point i of the permutation action.
  std::vector<std::vector<ElementId>> cosets;
  /// For each element of G in N_G(H), its image in `group`; -1 otherwise.
  std::vector<ElementId> image;
};

/// N_G(H)/H acting on the left cosets of H in N_G(H).
WeylGroup weyl_group(const SubgroupLattice &lattice, SubgroupId h);

/// Structural name of a subgroup: "1", "Cn", "V4", "S3", "Dn", "Q8", "A4",
/// "S4", abelian invariants like "C2xC4", or "H<order>" otherwise.
std::string structure_label(const FiniteGroup &group, const Subgroup &h);

} // namespace ninf
