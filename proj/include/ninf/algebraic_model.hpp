#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ninf/gset.hpp"
#include "ninf/isotropy.hpp"

namespace ninf {

/// One factor Ch(Q[W_G H]) of the algebraic model.
struct ModelFactor {
  ClassId class_id;
  SubgroupId representative;
  std::shared_ptr<const WeylGroup> weyl;
  std::string label;
};

/// The product over subgroup classes (H) of Ch(Q[W_G H]), in class order.
struct AlgebraicModelDescriptor {
  std::vector<ModelFactor> factors;
};

AlgebraicModelDescriptor algebraic_model(const SubgroupLattice &lattice);

/// Geometric H-fixed points of a wedge of orbit spectra, in degree 0:
/// the W_G H-set ⊔ (G/K)^H.
struct FixedPointModule {
  ClassId class_id;
  SubgroupId representative;
  std::shared_ptr<const WeylGroup> weyl;
  GSet wset;

  std::size_t dimension() const { return wset.size(); }
  std::size_t orbit_count() const { return wset.orbits().size(); }
};

/// The orbit spectra Σ∞G/K₊ of a wedge, left to right. Point contributes
/// nothing. Throws DomainError for any other leaf or for smash nodes.
std::vector<SubgroupId> wedge_orbits(const SpectrumExpr &x);

FixedPointModule fixed_point_module(const SpectrumExpr &x, ClassId h);

/// Sum over classes (H) of the number of W_G H-orbits on Φ^H X.
std::size_t pi0_rank(const SpectrumExpr &x);

} // namespace ninf
