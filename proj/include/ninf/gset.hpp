#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ninf/lattice.hpp"

namespace ninf {

/// A finite G-set given by its full action table.
class GSet {
public:
  /// `action[g * points + p]` is g·p. Throws DomainError unless this is a
  /// group action (identity acts trivially, generators compose correctly).
  GSet(std::shared_ptr<const FiniteGroup> group, std::size_t points,
       std::vector<int> action, std::string label = {});

  /// G/K with points the left cosets xK, ordered by least element.
  static GSet cosets(const SubgroupLattice &lattice, SubgroupId k);
  static GSet disjoint_union(const GSet &a, const GSet &b);
  /// The empty G-set.
  static GSet empty(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup &group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup> &group_ptr() const { return group_; }
  std::size_t size() const { return points_; }
  const std::string &label() const { return label_; }
  int act(ElementId g, int point) const {
    return action_[static_cast<std::size_t>(g) * points_ + point];
  }

  /// Orbits as sorted point lists, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  /// Stabilizer of `point`, as sorted element ids.
  std::vector<ElementId> stabilizer(int point) const;

private:
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t points_;
  std::vector<int> action_;
  std::string label_;
};

/// X^H with the residual action of the Weyl group N_G(H)/H.
struct FixedPointSet {
  /// Indices into X of the H-fixed points, ascending.
  std::vector<int> points;
  std::shared_ptr<const WeylGroup> weyl;
  /// Action of weyl->group on `points` (point i of residual is points[i]).
  GSet residual;
};

/// Throws DomainError if X is not over the lattice's group.
FixedPointSet fixed_points(const SubgroupLattice &lattice, const GSet &x,
                           SubgroupId h);

/// An H-set of cardinality n up to isomorphism, recorded as its orbit types.
///
/// Each orbit H/K stores the canonical representative of K's H-conjugacy
/// class (see SubgroupLattice::canonical_within). Orbits are sorted by
/// descending subgroup id, so fixed points come first.
struct HSetStructure {
  SubgroupId h = 0;
  std::size_t n = 0;
  std::vector<SubgroupId> orbits;

  bool is_trivial() const;
  friend bool operator==(const HSetStructure &, const HSetStructure &) = default;
  friend auto operator<=>(const HSetStructure &, const HSetStructure &) = default;
};

/// Canonical structure of an explicit action of subgroup `h` on `points`
/// points; `images[i]` is the permutation for h's i-th member.
HSetStructure structure_of(const SubgroupLattice &lattice, SubgroupId h,
                           const std::vector<std::vector<int>> &images);

/// Every H-set of cardinality n, up to isomorphism. Trivial set first.
std::vector<HSetStructure> hset_structures(const SubgroupLattice &lattice,
                                           SubgroupId h, std::size_t n);

/// The single orbit H/K (K is canonicalized).
HSetStructure orbit_structure(const SubgroupLattice &lattice, SubgroupId h,
                              SubgroupId k);

/// n copies of H/H.
HSetStructure trivial_structure(SubgroupId h, std::size_t n);

/// T restricted to a subgroup L <= H. Throws DomainError otherwise.
HSetStructure restrict_structure(const SubgroupLattice &lattice,
                                 const HSetStructure &t, SubgroupId l);

/// gTg^-1 as a (gHg^-1)-set.
HSetStructure conjugate_structure(const SubgroupLattice &lattice,
                                  const HSetStructure &t, ElementId g);

/// Disjoint union of two H-sets over the same H.
HSetStructure union_structure(const HSetStructure &a, const HSetStructure &b);

/// The homomorphism H -> Σn encoding T, indexed like H's member list.
/// Orbits occupy consecutive blocks in stored order; within an orbit H/K the
/// points are the left cosets of K ordered by least element.
std::vector<Permutation> structure_homomorphism(const SubgroupLattice &lattice,
                                                const HSetStructure &t);

/// Text form such as "[C2/1]" or "[C2/C2 + C2/C2]".
std::string describe(const SubgroupLattice &lattice, const HSetStructure &t);

/// Γ_T = {(h, f(h))} <= G × Σn for the homomorphism f encoding T.
struct GraphSubgroup {
  HSetStructure structure;
  std::vector<std::pair<ElementId, Permutation>> elements;

  std::size_t order() const { return elements.size(); }
  /// p_G(Γ).
  SubgroupId projection() const { return structure.h; }
  /// Γ ∩ ({e} × Σn) = {(e, e)}.
  bool meets_symmetric_trivially() const;
  /// Γ = p_G(Γ) × {e}.
  bool is_product() const;
};

GraphSubgroup graph_subgroup(const SubgroupLattice &lattice,
                             const HSetStructure &t);

} // namespace ninf
