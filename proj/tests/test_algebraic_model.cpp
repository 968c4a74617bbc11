#include <doctest.h>

#include <memory>

#include "ninf/algebraic_model.hpp"
#include "ninf/burnside.hpp"
#include "ninf/error.hpp"
#include "oracles.hpp"

using namespace ninf;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string &name) {
  auto g = std::make_shared<const FiniteGroup>(catalog_group(name));
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

std::vector<std::size_t> weyl_orders(const AlgebraicModelDescriptor &m) {
  std::vector<std::size_t> out;
  for (const auto &f : m.factors)
    out.push_back(f.weyl->group.order());
  return out;
}

} // namespace

TEST_CASE("model factors") {
  const auto trivial = algebraic_model(*lattice_of("C1"));
  CHECK(trivial.factors.size() == 1);
  CHECK(trivial.factors[0].weyl->group.order() == 1);
  CHECK(weyl_orders(algebraic_model(*lattice_of("C6"))) ==
        std::vector<std::size_t>{6, 3, 2, 1});
  const auto s3 = algebraic_model(*lattice_of("S3"));
  CHECK(weyl_orders(s3) == std::vector<std::size_t>{6, 1, 2, 1});
  CHECK(s3.factors[2].label == "Ch(Q[W_G C3])");
}

TEST_CASE("factor count matches the mark matrix rank") {
  for (const auto &name : catalog_names(24)) {
    auto lat = lattice_of(name);
    const auto model = algebraic_model(*lat);
    const auto tom = table_of_marks(*lat);
    // Lower triangular with nonzero diagonal, so the rank is its size.
    CHECK(model.factors.size() == tom->size());
    for (const auto &f : model.factors)
      CHECK(f.weyl->group.order() * lat->subgroup(f.representative).order() ==
            lat->subgroup(lat->normalizer(f.representative)).order());
  }
}

TEST_CASE("fixed point modules") {
  auto s3 = lattice_of("S3");
  const auto top = parse_spectrum(s3, "orbit:S3/S3");
  for (ClassId c = 0; c < 4; ++c) {
    const auto m = fixed_point_module(top, c);
    CHECK(m.dimension() == 1);
    CHECK(m.orbit_count() == 1);
  }
  const auto x = parse_spectrum(s3, "orbit:S3/C2");
  const auto m1 = fixed_point_module(x, 0);
  CHECK(m1.dimension() == 3);
  CHECK(m1.orbit_count() == 1);
  CHECK(fixed_point_module(x, 2).dimension() == 0);
  CHECK(fixed_point_module(parse_spectrum(s3, "pt"), 0).dimension() == 0);
  CHECK(fixed_point_module(parse_spectrum(s3, "orbit:S3/C2 v orbit:S3/C3"), 0).dimension() == 5);
  CHECK_THROWS_AS(fixed_point_module(parse_spectrum(s3, "SQ"), 0), DomainError);
  CHECK_THROWS_AS(fixed_point_module(parse_spectrum(s3, "orbit:S3/C2 ^ pt"), 0), DomainError);
}

TEST_CASE("pi0 rank") {
  auto s3 = lattice_of("S3");
  CHECK(pi0_rank(parse_spectrum(s3, "orbit:S3/S3")) == 4);
  CHECK(pi0_rank(parse_spectrum(s3, "orbit:S3/C2")) == 2);
  CHECK(pi0_rank(parse_spectrum(s3, "pt")) == 0);
  CHECK(pi0_rank(parse_spectrum(s3, "orbit:S3/C2 v orbit:S3/S3")) == 6);
}

TEST_CASE("rank identity and marks") {
  for (const auto &name : catalog_names(12)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    const auto tom = table_of_marks(*lat);
    for (ClassId k = 0; k < static_cast<ClassId>(lat->num_classes()); ++k) {
      const auto x = SpectrumExpr::orbit(lat, lat->representative(k));
      CHECK(pi0_rank(x) == oracle::subgroup_class_count(
                               lat->group(), lat->subgroup(lat->representative(k)).members()));
      for (ClassId h = 0; h < static_cast<ClassId>(lat->num_classes()); ++h)
        CHECK(static_cast<std::int64_t>(fixed_point_module(x, h).dimension()) ==
              tom->marks[k][h]);
      const auto y = SpectrumExpr::orbit(lat, lat->representative(0));
      CHECK(pi0_rank(SpectrumExpr::wedge(x, y)) == pi0_rank(x) + pi0_rank(y));
    }
  }
}
