#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ninf/lattice.hpp"
#include "ninf/rational.hpp"

namespace ninf {

/// Marks m[i][j] = |(G/H_i)^{H_j}| over the subgroup classes of G, in the
/// lattice's class order (ascending subgroup order). The matrix is lower
/// triangular with positive diagonal.
struct TableOfMarks {
  std::size_t group_order = 0;
  std::vector<SubgroupId> representatives;
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> marks;

  std::size_t size() const { return representatives.size(); }
};

using TablePtr = std::shared_ptr<const TableOfMarks>;

TablePtr table_of_marks(const SubgroupLattice &lattice);

/// An element of the rational Burnside ring, written in the basis [G/H_i].
class BurnsideElement {
public:
  /// Zero element.
  explicit BurnsideElement(TablePtr parent);
  BurnsideElement(TablePtr parent, std::vector<Rational> coefficients);

  static BurnsideElement one(TablePtr parent);
  static BurnsideElement basis(TablePtr parent, ClassId c);
  /// The unique element with the given mark vector.
  static BurnsideElement from_marks(TablePtr parent,
                                    const std::vector<Rational> &marks);

  const TablePtr &parent() const { return parent_; }
  const std::vector<Rational> &coefficients() const { return coefficients_; }
  const Rational &operator[](ClassId c) const { return coefficients_[c]; }

  /// mark_j = sum_i c_i m[i][j]
  std::vector<Rational> marks() const;

  bool is_zero() const;

  BurnsideElement operator+(const BurnsideElement &other) const;
  BurnsideElement operator-(const BurnsideElement &other) const;
  BurnsideElement operator*(const Rational &scalar) const;

  /// Equal parents and coefficients.
  friend bool operator==(const BurnsideElement &a, const BurnsideElement &b);

private:
  void check_same_parent(const BurnsideElement &other) const;

  TablePtr parent_;
  std::vector<Rational> coefficients_;
};

/// e_(H) for every class (H), in class order: the element whose mark vector
/// is the indicator of (H).
std::vector<BurnsideElement> idempotents(const TablePtr &tom);

/// Ring product via pointwise multiplication of mark vectors. Throws
/// DomainError when the parents differ.
BurnsideElement burnside_product(const BurnsideElement &a,
                                 const BurnsideElement &b);

} // namespace ninf
