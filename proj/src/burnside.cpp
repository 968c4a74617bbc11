#include "ninf/burnside.hpp"

#include "ninf/error.hpp"

namespace ninf {

TablePtr table_of_marks(const SubgroupLattice &lattice) {
  auto tom = std::make_shared<TableOfMarks>();
  const FiniteGroup &g = lattice.group();
  const std::size_t n = lattice.num_classes();
  tom->group_order = g.order();
  tom->marks.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    tom->representatives.push_back(lattice.representative(static_cast<ClassId>(c)));
    tom->labels.push_back(lattice.class_label(static_cast<ClassId>(c)));
  }
  // |(G/H_i)^{H_j}| = #{x in G : x^-1 H_j x <= H_i} / |H_i|
  for (std::size_t i = 0; i < n; ++i) {
    const SubgroupId hi = tom->representatives[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const SubgroupId hj = tom->representatives[j];
      std::int64_t count = 0;
      for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x)
        if (lattice.contains(hi, lattice.conjugate(hj, x)))
          ++count;
      tom->marks[i][j] =
          count / static_cast<std::int64_t>(lattice.subgroup(hi).order());
    }
  }
  return tom;
}

BurnsideElement::BurnsideElement(TablePtr parent)
    : parent_(std::move(parent)), coefficients_(parent_->size()) {}

BurnsideElement::BurnsideElement(TablePtr parent,
                                 std::vector<Rational> coefficients)
    : parent_(std::move(parent)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != parent_->size())
    throw DomainError("coefficient vector length does not match the table");
}

BurnsideElement BurnsideElement::one(TablePtr parent) {
  const ClassId top = static_cast<ClassId>(parent->size()) - 1;
  return basis(std::move(parent), top);
}

BurnsideElement BurnsideElement::basis(TablePtr parent, ClassId c) {
  BurnsideElement e(std::move(parent));
  if (c < 0 || static_cast<std::size_t>(c) >= e.coefficients_.size())
    throw DomainError("class index out of range");
  e.coefficients_[c] = 1;
  return e;
}

BurnsideElement BurnsideElement::from_marks(TablePtr parent,
                                            const std::vector<Rational> &marks) {
  const auto &m = parent->marks;
  const std::size_t n = parent->size();
  if (marks.size() != n)
    throw DomainError("mark vector length does not match the table");
  // Back substitution: marks_j = sum_{i >= j} c_i m[i][j].
  std::vector<Rational> c(n);
  for (std::size_t j = n; j-- > 0;) {
    Rational rest = marks[j];
    for (std::size_t i = j + 1; i < n; ++i)
      if (m[i][j] != 0)
        rest -= c[i] * m[i][j];
    c[j] = rest / m[j][j];
  }
  return BurnsideElement(std::move(parent), std::move(c));
}

std::vector<Rational> BurnsideElement::marks() const {
  const auto &m = parent_->marks;
  std::vector<Rational> out(parent_->size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0)
      continue;
    for (std::size_t j = 0; j <= i; ++j)
      if (m[i][j] != 0)
        out[j] += coefficients_[i] * m[i][j];
  }
  return out;
}

bool BurnsideElement::is_zero() const {
  for (const auto &c : coefficients_)
    if (c != 0)
      return false;
  return true;
}

void BurnsideElement::check_same_parent(const BurnsideElement &other) const {
  if (parent_ != other.parent_)
    throw DomainError("Burnside elements belong to different tables of marks");
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement &other) const {
  check_same_parent(other);
  BurnsideElement r = *this;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    r.coefficients_[i] += other.coefficients_[i];
  return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement &other) const {
  check_same_parent(other);
  BurnsideElement r = *this;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    r.coefficients_[i] -= other.coefficients_[i];
  return r;
}

BurnsideElement BurnsideElement::operator*(const Rational &scalar) const {
  BurnsideElement r = *this;
  for (auto &c : r.coefficients_)
    c *= scalar;
  return r;
}

bool operator==(const BurnsideElement &a, const BurnsideElement &b) {
  return a.parent_ == b.parent_ && a.coefficients_ == b.coefficients_;
}

std::vector<BurnsideElement> idempotents(const TablePtr &tom) {
  std::vector<BurnsideElement> out;
  for (std::size_t c = 0; c < tom->size(); ++c) {
    std::vector<Rational> indicator(tom->size());
    indicator[c] = 1;
    out.push_back(BurnsideElement::from_marks(tom, indicator));
  }
  return out;
}

BurnsideElement burnside_product(const BurnsideElement &a,
                                 const BurnsideElement &b) {
  if (a.parent() != b.parent())
    throw DomainError("Burnside elements belong to different tables of marks");
  auto ma = a.marks();
  const auto mb = b.marks();
  for (std::size_t j = 0; j < ma.size(); ++j)
    ma[j] *= mb[j];
  return BurnsideElement::from_marks(a.parent(), ma);
}

} // namespace ninf
