#include <doctest.h>

#include <memory>

#include "ninf/error.hpp"
#include "ninf/lattice.hpp"
#include "oracles.hpp"

using namespace ninf;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string &name) {
  auto g = std::make_shared<const FiniteGroup>(catalog_group(name));
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

} // namespace

TEST_CASE("subgroup counts for small groups") {
  auto trivial = lattice_of("C1");
  CHECK(trivial->size() == 1);
  CHECK(trivial->num_classes() == 1);

  auto c6 = lattice_of("C6");
  CHECK(c6->size() == 4);
  CHECK(c6->num_classes() == 4);
  CHECK(c6->class_label(0) == "1");
  CHECK(c6->class_label(1) == "C2");
  CHECK(c6->class_label(2) == "C3");
  CHECK(c6->class_label(3) == "C6");

  auto s3 = lattice_of("S3");
  CHECK(s3->size() == 6);
  CHECK(s3->num_classes() == 4);
  CHECK(s3->class_members(1).size() == 3);
  CHECK(s3->class_label(2) == "C3");
}

TEST_CASE("enumeration matches the brute-force oracle for |G| <= 24") {
  for (const auto &name : catalog_names(24)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    const auto expected = oracle::subgroups(lat->group());
    REQUIRE(lat->size() == expected.size());
    for (std::size_t i = 0; i < lat->size(); ++i) {
      const auto &members = lat->subgroup(static_cast<SubgroupId>(i)).members();
      CHECK(std::find(expected.begin(), expected.end(), members) != expected.end());
    }
    CHECK(lat->num_classes() ==
          oracle::conjugacy_classes(lat->group(), expected).size());
  }
}

TEST_CASE("lattice invariants") {
  for (const auto &name : catalog_names(24)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    const FiniteGroup &g = lat->group();
    std::size_t covered = 0;
    for (ClassId c = 0; c < static_cast<ClassId>(lat->num_classes()); ++c) {
      covered += lat->class_members(c).size();
      // Representative is the least member list of its class.
      for (SubgroupId h : lat->class_members(c))
        CHECK(lat->subgroup(lat->representative(c)).members() <=
              lat->subgroup(h).members());
    }
    CHECK(covered == lat->size());
    for (SubgroupId h = 0; h < static_cast<SubgroupId>(lat->size()); ++h) {
      CHECK(g.order() % lat->subgroup(h).order() == 0);
      for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x)
        CHECK(lat->class_of(lat->conjugate(h, x)) == lat->class_of(h));
      const SubgroupId n = lat->normalizer(h);
      CHECK(lat->contains(n, h));
      CHECK(lat->subgroup(n).members() ==
            oracle::normalizer(g, lat->subgroup(h).members()));
      const WeylGroup w = weyl_group(*lat, h);
      CHECK(w.group.order() * lat->subgroup(h).order() == lat->subgroup(n).order());
    }
  }
}

TEST_CASE("class ordering ascends by order") {
  auto lat = lattice_of("S4");
  CHECK(lat->num_classes() == 11);
  for (ClassId c = 1; c < static_cast<ClassId>(lat->num_classes()); ++c)
    CHECK(lat->subgroup(lat->representative(c - 1)).order() <=
          lat->subgroup(lat->representative(c)).order());
  // Duplicated structure names get suffixes.
  CHECK_NOTHROW(lat->class_by_label("C2a"));
  CHECK_NOTHROW(lat->class_by_label("V4b"));
  CHECK(lat->class_by_label("S4") == 10);
  CHECK(lat->class_by_label("#3") == 3);
  CHECK(lat->class_by_label("e") == 0);
  CHECK_THROWS_AS(lat->class_by_label("C2"), ParseError);
  CHECK_THROWS_AS(lat->class_by_label("C7"), ParseError);
  CHECK_THROWS_AS(lat->class_by_label("#99"), ParseError);
}

TEST_CASE("structure labels") {
  CHECK(lattice_of("Q8")->class_label(lattice_of("Q8")->num_classes() - 1) == "Q8");
  auto d4 = lattice_of("D4");
  CHECK(d4->class_label(d4->num_classes() - 1) == "D4");
  auto a4 = lattice_of("A4");
  CHECK(a4->class_label(1) == "C2");
  CHECK(a4->class_label(2) == "C3");
  CHECK(a4->class_label(3) == "V4");
  auto d6 = lattice_of("D6");
  CHECK_NOTHROW(d6->class_by_label("C6"));
  CHECK_NOTHROW(d6->class_by_label("S3a"));
  auto g = std::make_shared<const FiniteGroup>(parse_group("(0 1), (2 3), (4 5)"));
  auto lat = SubgroupLattice::enumerate(g);
  CHECK(lat.class_label(lat.num_classes() - 1) == "C2xC2xC2");
  auto h = std::make_shared<const FiniteGroup>(parse_group("(0 1 2 3), (4 5)"));
  CHECK(SubgroupLattice::enumerate(h).class_label(
            SubgroupLattice::enumerate(h).num_classes() - 1) == "C2xC4");
}

TEST_CASE("Weyl groups") {
  auto s3 = lattice_of("S3");
  CHECK(weyl_group(*s3, s3->trivial()).group.order() == 6);
  CHECK(weyl_group(*s3, s3->whole()).group.order() == 1);
  CHECK(weyl_group(*s3, s3->representative(1)).group.order() == 1);
  CHECK(weyl_group(*s3, s3->representative(2)).group.order() == 2);
  // W(1) acts regularly on G.
  const WeylGroup w = weyl_group(*s3, s3->trivial());
  CHECK(w.group.degree() == 6);
  CHECK_THROWS_AS(weyl_group(*s3, 42), DomainError);
}

TEST_CASE("Möbius function") {
  auto c4 = lattice_of("C4");
  CHECK(c4->mobius(0, 0) == 1);
  CHECK(c4->mobius(0, 1) == -1);
  CHECK(c4->mobius(0, 2) == 0);
  auto c3 = lattice_of("C3");
  CHECK(c3->mobius(0, 1) == -1);
  // μ(1, S3) = 3 (Hall).
  auto s3 = lattice_of("S3");
  CHECK(s3->mobius(s3->trivial(), s3->whole()) == 3);
  CHECK_THROWS_AS(s3->mobius(s3->whole(), s3->trivial()), DomainError);
  CHECK_THROWS_AS(s3->mobius(1, 2), DomainError);
}

TEST_CASE("Möbius recursion and chain oracle") {
  for (const std::string name : {"C12", "D4", "S3", "A4", "Q8", "D6", "S4"}) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    std::vector<oracle::ElementSetStd> subs;
    for (std::size_t i = 0; i < lat->size(); ++i)
      subs.push_back(lat->subgroup(static_cast<SubgroupId>(i)).members());
    for (SubgroupId k = 0; k < static_cast<SubgroupId>(lat->size()); ++k) {
      for (SubgroupId h = 0; h < static_cast<SubgroupId>(lat->size()); ++h) {
        if (!lat->contains(h, k))
          continue;
        if (k != h) {
          std::int64_t sum = 0;
          for (SubgroupId m = 0; m < static_cast<SubgroupId>(lat->size()); ++m)
            if (lat->contains(m, k) && lat->contains(h, m))
              sum += lat->mobius(k, m);
          CHECK(sum == 0);
        }
        if (lat->size() <= 16)
          CHECK(lat->mobius(k, h) == oracle::mobius_by_chains(subs, k, h));
      }
    }
  }
}

TEST_CASE("lattice cap and DOT") {
  auto g = std::make_shared<const FiniteGroup>(catalog_group("S5"));
  Caps caps;
  caps.lattice_order_cap = 100;
  CHECK_THROWS_AS(SubgroupLattice::enumerate(g, caps), ResourceError);
  auto s5 = SubgroupLattice::enumerate(g);
  CHECK(s5.size() == 156);
  CHECK(s5.num_classes() == 19);
  const std::string dot = lattice_of("C4")->hasse_dot();
  CHECK(dot.find("s0 -> s1") != std::string::npos);
  CHECK(dot.find("s1 -> s2") != std::string::npos);
  CHECK(dot.find("s0 -> s2") == std::string::npos);
}
