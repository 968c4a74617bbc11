#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ninf/lattice.hpp"

namespace ninf {

/// Expressions built from orbit spectra, idempotent spheres, the rational
/// sphere and the point, using wedge and smash.
class SpectrumExpr {
public:
  enum class Kind { Orbit, IdempotentSphere, RationalSphere, Point, Wedge, Smash };

  /// Σ∞ G/K₊
  static SpectrumExpr orbit(std::shared_ptr<const SubgroupLattice> lattice,
                            SubgroupId k);
  /// e_(H) S_Q
  static SpectrumExpr idempotent(std::shared_ptr<const SubgroupLattice> lattice,
                                 ClassId h);
  static SpectrumExpr rational_sphere(std::shared_ptr<const SubgroupLattice> lattice);
  static SpectrumExpr point(std::shared_ptr<const SubgroupLattice> lattice);
  static SpectrumExpr wedge(SpectrumExpr a, SpectrumExpr b);
  static SpectrumExpr smash(SpectrumExpr a, SpectrumExpr b);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return kind() != Kind::Wedge && kind() != Kind::Smash; }
  /// Leaves only.
  const std::shared_ptr<const SubgroupLattice> &lattice_ptr() const {
    return node_->lattice;
  }
  SubgroupId subgroup() const { return node_->subgroup; }
  ClassId class_id() const { return node_->class_id; }
  const SpectrumExpr &left() const { return *node_->left; }
  const SpectrumExpr &right() const { return *node_->right; }

  /// Lattice shared by every leaf; throws DomainError if leaves disagree.
  const SubgroupLattice &lattice() const;
  const std::shared_ptr<const SubgroupLattice> &common_lattice() const;

  /// Text in the parser's syntax.
  std::string to_string() const;

private:
  struct Node {
    Kind kind;
    std::shared_ptr<const SubgroupLattice> lattice;
    SubgroupId subgroup = -1;
    ClassId class_id = -1;
    std::shared_ptr<const SpectrumExpr> left, right;
  };
  explicit SpectrumExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses `orbit:G/K`, `idem:(H)`, `SQ`, `pt`, infix `v` (wedge) and `^`
/// (smash, binding tighter), with parentheses. Subgroup names are class
/// labels of the lattice. Throws ParseError with a position.
SpectrumExpr parse_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                            std::string_view text);

/// Conjugation-closed set of subgroups, as a mask over classes.
class IsotropySet {
public:
  explicit IsotropySet(std::size_t num_classes) : mask_(num_classes, false) {}

  void insert(ClassId c) { mask_[c] = true; }
  bool contains(ClassId c) const { return mask_[c]; }
  bool empty() const;
  std::size_t num_classes() const { return mask_.size(); }
  std::vector<ClassId> members() const;

  IsotropySet operator|(const IsotropySet &other) const;
  IsotropySet operator&(const IsotropySet &other) const;
  friend bool operator==(const IsotropySet &, const IsotropySet &) = default;

private:
  std::vector<bool> mask_;
};

/// Geometric isotropy {H : Φ^H X ≄ *}.
IsotropySet isotropy(const SpectrumExpr &x);

/// Isotropy contained in {(1)}.
bool is_free(const SpectrumExpr &x);

} // namespace ninf
