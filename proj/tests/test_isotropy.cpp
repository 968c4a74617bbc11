#include <doctest.h>

#include <memory>

#include "ninf/error.hpp"
#include "ninf/isotropy.hpp"

using namespace ninf;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string &name) {
  auto g = std::make_shared<const FiniteGroup>(catalog_group(name));
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

std::vector<ClassId> iso(const std::shared_ptr<const SubgroupLattice> &lat,
                         const std::string &text) {
  return isotropy(parse_spectrum(lat, text)).members();
}

} // namespace

TEST_CASE("leaf rules") {
  auto c6 = lattice_of("C6");
  CHECK(iso(c6, "orbit:C6/C2") == std::vector<ClassId>{0, 1});
  CHECK(iso(c6, "pt").empty());
  CHECK(iso(c6, "idem:(C3)") == std::vector<ClassId>{2});
  auto s3 = lattice_of("S3");
  CHECK(iso(s3, "SQ") == std::vector<ClassId>{0, 1, 2, 3});
  CHECK(iso(s3, "idem:(C2) ^ orbit:S3/C3").empty());
  CHECK(iso(s3, "idem:(C2) v orbit:S3/C3") == std::vector<ClassId>{0, 1, 2});
  CHECK(iso(s3, "orbit:S3/S3") == std::vector<ClassId>{0, 1, 2, 3});
}

TEST_CASE("freeness") {
  auto s3 = lattice_of("S3");
  CHECK(is_free(parse_spectrum(s3, "orbit:S3/1")));
  CHECK_FALSE(is_free(parse_spectrum(s3, "orbit:S3/S3")));
  CHECK(is_free(parse_spectrum(s3, "idem:(1)")));
  CHECK(is_free(parse_spectrum(s3, "pt")));
  CHECK_FALSE(is_free(parse_spectrum(s3, "SQ")));
  auto c1 = lattice_of("C1");
  CHECK(is_free(parse_spectrum(c1, "orbit:C1/C1")));
}

TEST_CASE("parser") {
  auto s3 = lattice_of("S3");
  const SpectrumExpr e = parse_spectrum(s3, "orbit:S3/C2 v idem:(C3) ^ SQ");
  CHECK(e.kind() == SpectrumExpr::Kind::Wedge);
  CHECK(e.right().kind() == SpectrumExpr::Kind::Smash);
  CHECK(e.to_string() == "(orbit:S3/C2 v (idem:(C3) ^ SQ))");
  CHECK(parse_spectrum(s3, "(orbit:S3/C2 v idem:(C3)) ^ SQ").kind() ==
        SpectrumExpr::Kind::Smash);
  CHECK(parse_spectrum(s3, "idem:(#1)").class_id() == 1);
  CHECK(parse_spectrum(s3, "orbit:G/e").kind() == SpectrumExpr::Kind::Orbit);
  CHECK_THROWS_AS(parse_spectrum(s3, "orbit:S3/C7"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(s3, "idem:C2"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(s3, "SQ v"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(s3, "(SQ"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(s3, "SQ pt"), ParseError);
  CHECK_THROWS_AS(parse_spectrum(s3, "orbit:C6/C2"), ParseError);
  try {
    parse_spectrum(s3, "SQ v bogus");
    FAIL("expected a parse error");
  } catch (const ParseError &err) {
    CHECK(err.position() == 5);
  }
}

TEST_CASE("mixed groups are rejected") {
  auto a = lattice_of("C2");
  auto b = lattice_of("C2");
  const SpectrumExpr mixed = SpectrumExpr::wedge(SpectrumExpr::rational_sphere(a),
                                                 SpectrumExpr::point(b));
  CHECK_THROWS_AS(isotropy(mixed), DomainError);
}

TEST_CASE("unit laws and closure") {
  for (const std::string name : {"S3", "D4", "A4", "C12"}) {
    auto lat = lattice_of(name);
    std::vector<SpectrumExpr> exprs = {SpectrumExpr::rational_sphere(lat),
                                       SpectrumExpr::point(lat)};
    for (ClassId c = 0; c < static_cast<ClassId>(lat->num_classes()); ++c) {
      exprs.push_back(SpectrumExpr::orbit(lat, lat->representative(c)));
      exprs.push_back(SpectrumExpr::idempotent(lat, c));
      CHECK(isotropy(SpectrumExpr::idempotent(lat, c)).members().size() == 1);
      const auto down = isotropy(SpectrumExpr::orbit(lat, lat->representative(c)));
      for (ClassId d = 0; d < static_cast<ClassId>(lat->num_classes()); ++d)
        CHECK(down.contains(d) == lat->subconjugate(d, c));
    }
    for (const auto &x : exprs) {
      CHECK(isotropy(SpectrumExpr::wedge(x, SpectrumExpr::point(lat))) == isotropy(x));
      CHECK(isotropy(SpectrumExpr::smash(x, SpectrumExpr::rational_sphere(lat))) ==
            isotropy(x));
      for (const auto &y : exprs) {
        CHECK(isotropy(SpectrumExpr::wedge(x, y)) == (isotropy(x) | isotropy(y)));
        CHECK(isotropy(SpectrumExpr::smash(x, y)) == (isotropy(x) & isotropy(y)));
      }
    }
  }
}
