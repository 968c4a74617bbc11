#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ninf/gset.hpp"

namespace ninf {

/// Sum of permutation representations R[S], each with infinite
/// multiplicity. The trivial summand is always implicitly present.
struct PermutationUniverse {
  std::vector<GSet> generators;

  /// Universe generated by the orbits G/J for the given subgroups.
  static PermutationUniverse from_orbits(const SubgroupLattice &lattice,
                                         const std::vector<SubgroupId> &stabilizers);
};

enum class OperadKind { MinimalEInfinity, MaximalEInfinity, Geometric, Custom };

std::string to_string(OperadKind kind);

/// Decides admissibility of a whole H-set for a Custom operad.
using AdmissibilityOracle =
    std::function<bool(const SubgroupLattice &, const HSetStructure &)>;

/// An N∞-operad, retained only through its admissible H-sets.
///
/// The built-in kinds are decided orbit by orbit: an H-set is admissible iff
/// each of its orbits is. Answers are memoized; the memo is shared between
/// copies and safe to fill from several threads.
class OperadModel {
public:
  /// E∞ with only trivial H-sets admissible.
  static OperadModel minimal(std::shared_ptr<const SubgroupLattice> lattice);
  /// E∞ with every H-set admissible.
  static OperadModel maximal(std::shared_ptr<const SubgroupLattice> lattice);
  /// Little discs / linear isometries on a permutation universe: an orbit
  /// H/K is admissible iff it embeds H-equivariantly in the universe.
  static OperadModel geometric(std::shared_ptr<const SubgroupLattice> lattice,
                               PermutationUniverse universe);
  static OperadModel custom(std::shared_ptr<const SubgroupLattice> lattice,
                            AdmissibilityOracle oracle, std::string name);

  OperadKind kind() const { return kind_; }
  const std::string &name() const { return name_; }
  const SubgroupLattice &lattice() const { return *lattice_; }
  const std::shared_ptr<const SubgroupLattice> &lattice_ptr() const {
    return lattice_;
  }
  const PermutationUniverse *universe() const {
    return universe_ ? universe_.get() : nullptr;
  }

  bool admissible(const HSetStructure &t) const;
  /// Admissibility of the single orbit H/K.
  bool admissible_orbit(SubgroupId h, SubgroupId k) const;

private:
  struct Memo;

  OperadModel(OperadKind kind, std::shared_ptr<const SubgroupLattice> lattice,
              std::string name);

  bool decide_orbit(SubgroupId h, SubgroupId k) const;

  OperadKind kind_;
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::string name_;
  std::shared_ptr<const PermutationUniverse> universe_;
  // orbit_counts_[generator][subgroup] = number of L-orbits on the generator.
  std::vector<std::vector<std::size_t>> orbit_counts_;
  AdmissibilityOracle oracle_;
  std::shared_ptr<Memo> memo_;
};

/// Admissible members of F_n(O) up to conjugacy in G × Σn: graph subgroups
/// Γ_T for admissible (H, T) with |T| = n, H a class representative and T
/// taken up to the action of N_G(H). Throws ResourceError if n > n_max.
std::vector<GraphSubgroup> family(const OperadModel &op, std::size_t n,
                                  std::size_t n_max = Caps{}.n_max);

struct ValidationReport {
  std::size_t n_max = 0;
  std::size_t structures_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the closure properties of the admissible sets up to size n_max:
/// trivial sets, suborbits, restriction, conjugation, disjoint union, and
/// (for the minimal kind) that nothing nontrivial slipped in.
ValidationReport validate_indexing_system(const OperadModel &op,
                                          std::size_t n_max);

} // namespace ninf
