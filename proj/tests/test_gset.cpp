#include <doctest.h>

#include <memory>

#include "ninf/error.hpp"
#include "ninf/gset.hpp"
#include "oracles.hpp"

using namespace ninf;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string &name) {
  auto g = std::make_shared<const FiniteGroup>(catalog_group(name));
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

} // namespace

TEST_CASE("coset spaces") {
  auto c6 = lattice_of("C6");
  const GSet x = GSet::cosets(*c6, c6->representative(1));
  CHECK(x.size() == 3);
  CHECK(x.orbits().size() == 1);
  CHECK(x.stabilizer(0) == c6->subgroup(c6->representative(1)).members());
  const GSet two = GSet::disjoint_union(x, x);
  CHECK(two.size() == 6);
  CHECK(two.orbits().size() == 2);
  CHECK(GSet::empty(c6->group_ptr()).size() == 0);
}

TEST_CASE("invalid actions are rejected") {
  auto c2 = lattice_of("C2");
  CHECK_THROWS_AS(GSet(c2->group_ptr(), 2, {1, 0, 1, 0}), DomainError);
  CHECK_THROWS_AS(GSet(c2->group_ptr(), 2, {0, 1, 0, 0}), DomainError);
  CHECK_NOTHROW(GSet(c2->group_ptr(), 2, {0, 1, 1, 0}));
}

TEST_CASE("fixed points") {
  auto c6 = lattice_of("C6");
  const SubgroupId c2 = c6->representative(1);
  const SubgroupId c3 = c6->representative(2);
  const GSet x = GSet::cosets(*c6, c2);
  const FixedPointSet fp = fixed_points(*c6, x, c2);
  CHECK(fp.points.size() == 3);
  CHECK(fp.weyl->group.order() == 3);
  CHECK(fp.residual.orbits().size() == 1);
  CHECK(fixed_points(*c6, x, c3).points.empty());
  CHECK(fixed_points(*c6, x, c6->trivial()).points.size() == 3);

  auto s3 = lattice_of("S3");
  const GSet y = GSet::cosets(*s3, s3->trivial());
  CHECK(fixed_points(*s3, y, s3->representative(1)).points.empty());
  CHECK_THROWS_AS(fixed_points(*s3, x, s3->trivial()), DomainError);
}

TEST_CASE("fixed point counts match marks") {
  for (const std::string name : {"S3", "D4", "A4", "C12", "Q8"}) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    for (ClassId a = 0; a < static_cast<ClassId>(lat->num_classes()); ++a) {
      const GSet x = GSet::cosets(*lat, lat->representative(a));
      for (SubgroupId h = 0; h < static_cast<SubgroupId>(lat->size()); ++h) {
        const auto fp = fixed_points(*lat, x, h);
        CHECK(static_cast<std::int64_t>(fp.points.size()) ==
              oracle::fixed_cosets(lat->group(),
                                   lat->subgroup(lat->representative(a)).members(),
                                   lat->subgroup(h).members()));
        CHECK(fp.residual.size() == fp.points.size());
      }
    }
  }
}

TEST_CASE("H-set counts") {
  auto c2 = lattice_of("C2");
  CHECK(hset_structures(*c2, c2->whole(), 2).size() == 2);
  CHECK_THROWS_AS(hset_structures(*c2, c2->whole(), 0), DomainError);
  auto c3 = lattice_of("C3");
  CHECK(hset_structures(*c3, c3->whole(), 2).size() == 1);
  CHECK(hset_structures(*c3, c3->whole(), 3).size() == 2);
  const auto sets = hset_structures(*c2, c2->whole(), 3);
  CHECK(sets.front().is_trivial());
  CHECK(describe(*c2, orbit_structure(*c2, c2->whole(), c2->trivial())) == "[C2/1]");
  CHECK(describe(*c2, trivial_structure(c2->whole(), 2)) == "[C2/C2 + C2/C2]");
}

TEST_CASE("H-set counts match homomorphism classes") {
  for (const auto &name : catalog_names(8)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    for (ClassId c = 0; c < static_cast<ClassId>(lat->num_classes()); ++c) {
      const SubgroupId h = lat->representative(c);
      for (std::size_t n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(hset_structures(*lat, h, n).size() ==
              oracle::hom_classes(lat->group(), lat->subgroup(h).members(), n));
      }
    }
  }
}

TEST_CASE("structure operations") {
  auto s3 = lattice_of("S3");
  const SubgroupId g = s3->whole();
  const SubgroupId c3 = s3->representative(2);
  const HSetStructure t = orbit_structure(*s3, g, s3->representative(1));
  CHECK(t.n == 3);
  // S3/C2 restricted to C3 is the free C3-orbit.
  const HSetStructure r = restrict_structure(*s3, t, c3);
  CHECK(r == orbit_structure(*s3, c3, s3->trivial()));
  // Restricted to a C2 it splits as a point plus a free orbit.
  const SubgroupId c2 = s3->class_members(1)[0];
  const HSetStructure r2 = restrict_structure(*s3, t, c2);
  CHECK(r2.orbits.size() == 2);
  CHECK(r2.orbits.front() == c2);
  CHECK_THROWS_AS(restrict_structure(*s3, orbit_structure(*s3, c3, s3->trivial()), c2),
                  DomainError);
  const HSetStructure u = union_structure(t, trivial_structure(g, 1));
  CHECK(u.n == 4);
  CHECK(u.orbits.front() == g);
  for (ElementId x = 0; x < 6; ++x) {
    const HSetStructure conj = conjugate_structure(*s3, orbit_structure(*s3, c2, s3->trivial()), x);
    CHECK(conj.h == s3->conjugate(c2, x));
    CHECK(conj.n == 2);
  }
}

TEST_CASE("structure_of inverts structure_homomorphism") {
  for (const std::string name : {"S3", "D4", "C6", "A4"}) {
    auto lat = lattice_of(name);
    for (SubgroupId h = 0; h < static_cast<SubgroupId>(lat->size()); ++h) {
      for (const auto &t : hset_structures(*lat, h, 4)) {
        const auto f = structure_homomorphism(*lat, t);
        const auto &members = lat->subgroup(h).members();
        REQUIRE(f.size() == members.size());
        std::vector<std::vector<int>> images;
        for (std::size_t i = 0; i < f.size(); ++i) {
          images.push_back(f[i].extended(4).images());
          for (std::size_t j = 0; j < f.size(); ++j) {
            const ElementId prod = lat->group().multiply(members[i], members[j]);
            const auto at = std::find(members.begin(), members.end(), prod) - members.begin();
            CHECK((f[i] * f[j]).extended(4) == f[at].extended(4));
          }
        }
        CHECK(structure_of(*lat, h, images) == t);
      }
    }
  }
}

TEST_CASE("graph subgroups") {
  auto c6 = lattice_of("C6");
  for (SubgroupId h = 0; h < static_cast<SubgroupId>(c6->size()); ++h) {
    for (const auto &t : hset_structures(*c6, h, 3)) {
      const GraphSubgroup gamma = graph_subgroup(*c6, t);
      CHECK(gamma.meets_symmetric_trivially());
      CHECK(gamma.order() == c6->subgroup(h).order());
      CHECK(gamma.projection() == h);
      CHECK(gamma.is_product() == t.is_trivial());
    }
  }
}
