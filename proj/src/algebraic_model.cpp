#include "ninf/algebraic_model.hpp"

#include "ninf/error.hpp"

namespace ninf {

AlgebraicModelDescriptor algebraic_model(const SubgroupLattice &lattice) {
  AlgebraicModelDescriptor model;
  for (ClassId c = 0; c < static_cast<ClassId>(lattice.num_classes()); ++c) {
    const SubgroupId h = lattice.representative(c);
    auto weyl = std::make_shared<const WeylGroup>(weyl_group(lattice, h));
    model.factors.push_back(
        {c, h, std::move(weyl),
         "Ch(Q[W_G " + lattice.class_label(c) + "])"});
  }
  return model;
}

namespace {

void collect(const SpectrumExpr &x, std::vector<SubgroupId> &out) {
  switch (x.kind()) {
  case SpectrumExpr::Kind::Orbit:
    out.push_back(x.subgroup());
    return;
  case SpectrumExpr::Kind::Point:
    return;
  case SpectrumExpr::Kind::Wedge:
    collect(x.left(), out);
    collect(x.right(), out);
    return;
  default:
    throw DomainError("fixed-point modules need a wedge of orbit spectra, got " +
                      x.to_string());
  }
}

} // namespace

std::vector<SubgroupId> wedge_orbits(const SpectrumExpr &x) {
  x.common_lattice();
  std::vector<SubgroupId> out;
  collect(x, out);
  return out;
}

FixedPointModule fixed_point_module(const SpectrumExpr &x, ClassId h) {
  const SubgroupLattice &lat = x.lattice();
  if (h < 0 || static_cast<std::size_t>(h) >= lat.num_classes())
    throw DomainError("class index out of range");
  const SubgroupId rep = lat.representative(h);
  GSet total = GSet::empty(lat.group_ptr());
  for (SubgroupId k : wedge_orbits(x))
    total = GSet::disjoint_union(total, GSet::cosets(lat, k));
  FixedPointSet fp = fixed_points(lat, total, rep);
  return FixedPointModule{h, rep, std::move(fp.weyl), std::move(fp.residual)};
}

std::size_t pi0_rank(const SpectrumExpr &x) {
  const SubgroupLattice &lat = x.lattice();
  wedge_orbits(x);
  std::size_t rank = 0;
  for (ClassId c = 0; c < static_cast<ClassId>(lat.num_classes()); ++c)
    rank += fixed_point_module(x, c).orbit_count();
  return rank;
}

} // namespace ninf
