#include <doctest.h>

#include <memory>

#include "ninf/burnside.hpp"
#include "ninf/error.hpp"
#include "oracles.hpp"

using namespace ninf;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string &name) {
  auto g = std::make_shared<const FiniteGroup>(catalog_group(name));
  return std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(g));
}

} // namespace

TEST_CASE("table of marks for C2 and S3") {
  const TablePtr c2 = table_of_marks(*lattice_of("C2"));
  CHECK(c2->marks == std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}});

  const TablePtr s3 = table_of_marks(*lattice_of("S3"));
  CHECK(s3->marks == std::vector<std::vector<std::int64_t>>{
                         {6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}});
  CHECK(s3->labels == std::vector<std::string>{"1", "C2", "C3", "S3"});
}

TEST_CASE("marks agree with fixed coset counts") {
  for (const auto &name : catalog_names(24)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    const TablePtr tom = table_of_marks(*lat);
    for (std::size_t i = 0; i < tom->size(); ++i) {
      const auto &hi = lat->subgroup(tom->representatives[i]).members();
      CHECK(tom->marks[i][i] > 0);
      CHECK(tom->marks[i][0] * static_cast<std::int64_t>(hi.size()) ==
            static_cast<std::int64_t>(tom->group_order));
      for (std::size_t j = 0; j < tom->size(); ++j) {
        const auto &hj = lat->subgroup(tom->representatives[j]).members();
        CHECK(tom->marks[i][j] == oracle::fixed_cosets(lat->group(), hi, hj));
        if (j > i)
          CHECK(tom->marks[i][j] == 0);
      }
    }
  }
}

TEST_CASE("C2 idempotents") {
  const TablePtr tom = table_of_marks(*lattice_of("C2"));
  const auto e = idempotents(tom);
  CHECK(e[0].coefficients() == std::vector<Rational>{Rational(1, 2), Rational(0)});
  CHECK(e[1].coefficients() == std::vector<Rational>{Rational(-1, 2), Rational(1)});
}

TEST_CASE("idempotent identities") {
  for (const auto &name : catalog_names(24)) {
    CAPTURE(name);
    const TablePtr tom = table_of_marks(*lattice_of(name));
    const auto e = idempotents(tom);
    BurnsideElement total(tom);
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(burnside_product(e[i], e[i]) == e[i]);
      for (std::size_t j = i + 1; j < e.size(); ++j)
        CHECK(burnside_product(e[i], e[j]).is_zero());
      total = total + e[i];
    }
    CHECK(total == BurnsideElement::one(tom));
  }
}

TEST_CASE("orbit products match the product decomposition") {
  for (const auto &name : catalog_names(12)) {
    CAPTURE(name);
    auto lat = lattice_of(name);
    const TablePtr tom = table_of_marks(*lat);
    std::vector<oracle::ElementSetStd> reps;
    for (SubgroupId r : tom->representatives)
      reps.push_back(lat->subgroup(r).members());
    for (ClassId a = 0; a < static_cast<ClassId>(tom->size()); ++a) {
      for (ClassId b = 0; b < static_cast<ClassId>(tom->size()); ++b) {
        const auto product = burnside_product(BurnsideElement::basis(tom, a),
                                              BurnsideElement::basis(tom, b));
        const auto counts =
            oracle::product_decomposition(lat->group(), reps[a], reps[b], reps);
        for (std::size_t c = 0; c < tom->size(); ++c)
          CHECK(product[static_cast<ClassId>(c)] == Rational(counts[c]));
      }
    }
  }
}

TEST_CASE("ring arithmetic") {
  const TablePtr tom = table_of_marks(*lattice_of("C2"));
  const auto free = BurnsideElement::basis(tom, 0);
  CHECK(burnside_product(free, free) == free * Rational(2));
  const auto one = BurnsideElement::one(tom);
  CHECK(burnside_product(one, free) == free);
  CHECK((free - free).is_zero());
  CHECK(BurnsideElement::from_marks(tom, free.marks()) == free);
  CHECK(free.marks() == std::vector<Rational>{Rational(2), Rational(0)});
}

TEST_CASE("mismatched parents are rejected") {
  const TablePtr a = table_of_marks(*lattice_of("C2"));
  const TablePtr b = table_of_marks(*lattice_of("C2"));
  CHECK_THROWS_AS(BurnsideElement::one(a) + BurnsideElement::one(b), DomainError);
  CHECK_THROWS_AS(burnside_product(BurnsideElement::one(a), BurnsideElement::one(b)),
                  DomainError);
  CHECK_THROWS_AS(BurnsideElement(a, {Rational(1)}), DomainError);
}
