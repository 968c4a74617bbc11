#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ninf/isotropy.hpp"
#include "ninf/operad.hpp"

namespace ninf {

enum class CheckMode { OrbitReduction, DirectPerN };

std::string to_string(CheckMode mode);

/// A subgroup H in the isotropy admitting the nontrivial orbit H/K, first
/// seen at cardinality n.
struct Violation {
  SubgroupId h;
  SubgroupId k;
  std::size_t n;

  friend bool operator==(const Violation &, const Violation &) = default;
};

struct CompatibilityReport {
  bool compatible = true;
  std::vector<Violation> violations;
  CheckMode method = CheckMode::OrbitReduction;
  /// Largest cardinality examined; 0 in orbit-reduction mode.
  std::size_t n_checked = 0;
};

/// Whether E is O-compatible: no admissible Γ over a subgroup in Ig(E) has a
/// nontrivial Σn part.
///
/// OrbitReduction tests every orbit H/K with H in Ig(E) and K < H, which is
/// exact when the admissible sets are closed under suborbits. DirectPerN
/// materializes F_n(O) for n <= n_max and inspects every graph subgroup.
/// Throws DomainError when O and E live over different lattices.
CompatibilityReport check_compatibility(const OperadModel &op,
                                        const SpectrumExpr &e, CheckMode mode,
                                        std::size_t n_max = 6);

/// {Γ ∈ F_n(O) : p_G Γ ∈ Ig(E)} up to conjugacy.
std::vector<GraphSubgroup> relevant_subgroups(const OperadModel &op,
                                              const SpectrumExpr &e,
                                              std::size_t n,
                                              std::size_t n_max = Caps{}.n_max);

/// A norm N_1^K available on O-algebras whose underlying spectrum is
/// E-locally contractible: the free orbit K/1 at level |K|.
struct NormWitness {
  SubgroupId k;
  std::size_t level;
};

/// Present iff (1) is not in Ig(E) and some K in Ig(E) has K/1 admissible.
/// K is the first class representative (in class order) that qualifies.
std::optional<NormWitness> norm_witness(const OperadModel &op,
                                        const SpectrumExpr &e);

enum class VerdictTag { GuaranteedCompatible, GuaranteedRational, Obstructed, Unknown };

std::string to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag;
  std::string citation;
  std::optional<NormWitness> witness;
};

/// Whether the E-local model structure lifts to O-algebras: rational sphere
/// first, then compatibility, then a norm obstruction, else unknown.
Verdict lifting_verdict(const OperadModel &op, const SpectrumExpr &e);

} // namespace ninf
