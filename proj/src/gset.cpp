#include "ninf/gset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "ninf/error.hpp"

namespace ninf {

GSet::GSet(std::shared_ptr<const FiniteGroup> group, std::size_t points,
           std::vector<int> action, std::string label)
    : group_(std::move(group)), points_(points), action_(std::move(action)),
      label_(std::move(label)) {
  const FiniteGroup &g = *group_;
  if (action_.size() != g.order() * points_)
    throw DomainError("action table has the wrong size");
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<bool> hit(points_, false);
    for (std::size_t p = 0; p < points_; ++p) {
      const int q = action_[x * points_ + p];
      if (q < 0 || static_cast<std::size_t>(q) >= points_ || hit[q])
        throw DomainError("group element does not act by a bijection");
      hit[q] = true;
    }
  }
  for (std::size_t p = 0; p < points_; ++p)
    if (act(FiniteGroup::identity(), static_cast<int>(p)) != static_cast<int>(p))
      throw DomainError("identity does not act trivially");
  // Compatibility with products against each generator determines the rest.
  for (const auto &gen : g.generators()) {
    const ElementId s = g.index_of(gen);
    for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
      const ElementId xs = g.multiply(x, s);
      for (std::size_t p = 0; p < points_; ++p)
        if (act(xs, static_cast<int>(p)) != act(x, act(s, static_cast<int>(p))))
          throw DomainError("action is not compatible with composition");
    }
  }
}

GSet GSet::cosets(const SubgroupLattice &lattice, SubgroupId k) {
  const FiniteGroup &g = lattice.group();
  const Subgroup &sub = lattice.subgroup(k);
  std::vector<int> coset_of(g.order(), -1);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
    if (coset_of[x] >= 0)
      continue;
    for (ElementId y : sub.members())
      coset_of[g.multiply(x, y)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<int> action(g.order() * reps.size());
  for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x)
    for (std::size_t c = 0; c < reps.size(); ++c)
      action[x * reps.size() + c] = coset_of[g.multiply(x, reps[c])];
  const std::string label =
      g.name() + "/" + lattice.class_label(lattice.class_of(k));
  return GSet(lattice.group_ptr(), reps.size(), std::move(action), label);
}

GSet GSet::disjoint_union(const GSet &a, const GSet &b) {
  if (a.group_ != b.group_)
    throw DomainError("disjoint union of G-sets over different groups");
  const std::size_t n = a.points_ + b.points_;
  const std::size_t order = a.group().order();
  std::vector<int> action(order * n);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t p = 0; p < a.points_; ++p)
      action[x * n + p] = a.action_[x * a.points_ + p];
    for (std::size_t p = 0; p < b.points_; ++p)
      action[x * n + a.points_ + p] =
          static_cast<int>(a.points_) + b.action_[x * b.points_ + p];
  }
  std::string label = a.label_.empty() ? b.label_
                      : b.label_.empty() ? a.label_
                                         : a.label_ + " + " + b.label_;
  return GSet(a.group_, n, std::move(action), std::move(label));
}

GSet GSet::empty(std::shared_ptr<const FiniteGroup> group) {
  return GSet(std::move(group), 0, {}, "");
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(points_, false);
  for (std::size_t p = 0; p < points_; ++p) {
    if (seen[p])
      continue;
    std::vector<int> orbit;
    for (ElementId x = 0; x < static_cast<ElementId>(group_->order()); ++x) {
      const int q = act(x, static_cast<int>(p));
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<ElementId> GSet::stabilizer(int point) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < static_cast<ElementId>(group_->order()); ++x)
    if (act(x, point) == point)
      out.push_back(x);
  return out;
}

FixedPointSet fixed_points(const SubgroupLattice &lattice, const GSet &x,
                           SubgroupId h) {
  if (x.group_ptr() != lattice.group_ptr())
    throw DomainError("G-set and subgroup lattice are over different groups");
  const Subgroup &sub = lattice.subgroup(h);
  std::vector<int> points;
  std::vector<int> position(x.size(), -1);
  for (std::size_t p = 0; p < x.size(); ++p) {
    const bool fixed = std::all_of(
        sub.members().begin(), sub.members().end(),
        [&](ElementId y) { return x.act(y, static_cast<int>(p)) == static_cast<int>(p); });
    if (fixed) {
      position[p] = static_cast<int>(points.size());
      points.push_back(static_cast<int>(p));
    }
  }
  auto weyl = std::make_shared<const WeylGroup>(weyl_group(lattice, h));
  const std::size_t w_order = weyl->group.order();
  std::vector<int> action(w_order * points.size());
  std::vector<bool> done(w_order, false);
  for (ElementId n : lattice.subgroup(weyl->normalizer).members()) {
    const ElementId w = weyl->image[n];
    if (done[w])
      continue;
    done[w] = true;
    for (std::size_t i = 0; i < points.size(); ++i)
      action[w * points.size() + i] = position[x.act(n, points[i])];
  }
  auto wgroup = std::shared_ptr<const FiniteGroup>(weyl, &weyl->group);
  GSet residual(wgroup, points.size(), std::move(action),
                x.label().empty() ? "" : "(" + x.label() + ")^H");
  return FixedPointSet{std::move(points), std::move(weyl), std::move(residual)};
}

bool HSetStructure::is_trivial() const {
  return std::all_of(orbits.begin(), orbits.end(),
                     [&](SubgroupId k) { return k == h; });
}

namespace {

std::size_t member_index(const Subgroup &sub, ElementId x) {
  auto it = std::lower_bound(sub.members().begin(), sub.members().end(), x);
  assert(it != sub.members().end() && *it == x);
  return static_cast<std::size_t>(it - sub.members().begin());
}

void sort_orbits(std::vector<SubgroupId> &orbits) {
  std::sort(orbits.begin(), orbits.end(), std::greater<>());
}

// Canonical H-class representatives of subgroups of H, descending by id.
std::vector<SubgroupId> subgroup_classes_within(const SubgroupLattice &lattice,
                                                SubgroupId h) {
  std::vector<SubgroupId> reps;
  for (SubgroupId k : lattice.subgroups_of(h))
    reps.push_back(lattice.canonical_within(h, k));
  sort_orbits(reps);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

} // namespace

HSetStructure structure_of(const SubgroupLattice &lattice, SubgroupId h,
                           const std::vector<std::vector<int>> &images) {
  const Subgroup &sub = lattice.subgroup(h);
  if (images.size() != sub.order())
    throw DomainError("need one image per subgroup member");
  const std::size_t n = images.empty() ? 0 : images.front().size();
  HSetStructure t{h, n, {}};
  std::vector<bool> seen(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p])
      continue;
    ElementSet stab(lattice.group().order());
    for (std::size_t i = 0; i < images.size(); ++i) {
      seen[images[i][p]] = true;
      if (images[i][p] == static_cast<int>(p))
        stab.insert(sub.members()[i]);
    }
    auto k = lattice.find(stab);
    if (!k)
      throw DomainError("images do not define an action");
    t.orbits.push_back(lattice.canonical_within(h, *k));
  }
  sort_orbits(t.orbits);
  return t;
}

std::vector<HSetStructure> hset_structures(const SubgroupLattice &lattice,
                                           SubgroupId h, std::size_t n) {
  if (n == 0)
    throw DomainError("H-set cardinality must be positive");
  const auto reps = subgroup_classes_within(lattice, h);
  const std::size_t order = lattice.subgroup(h).order();
  std::vector<HSetStructure> out;
  std::vector<SubgroupId> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from,
                                                              std::size_t left) {
    if (left == 0) {
      out.push_back(HSetStructure{h, n, current});
      return;
    }
    for (std::size_t i = from; i < reps.size(); ++i) {
      const std::size_t index = order / lattice.subgroup(reps[i]).order();
      if (index > left)
        continue;
      current.push_back(reps[i]);
      extend(i, left - index);
      current.pop_back();
    }
  };
  extend(0, n);
  return out;
}

HSetStructure orbit_structure(const SubgroupLattice &lattice, SubgroupId h,
                              SubgroupId k) {
  if (!lattice.contains(h, k))
    throw DomainError("orbit H/K requires K <= H");
  const SubgroupId c = lattice.canonical_within(h, k);
  return HSetStructure{
      h, lattice.subgroup(h).order() / lattice.subgroup(c).order(), {c}};
}

HSetStructure trivial_structure(SubgroupId h, std::size_t n) {
  return HSetStructure{h, n, std::vector<SubgroupId>(n, h)};
}

std::vector<Permutation> structure_homomorphism(const SubgroupLattice &lattice,
                                                const HSetStructure &t) {
  const FiniteGroup &g = lattice.group();
  const Subgroup &sub = lattice.subgroup(t.h);
  std::vector<std::vector<int>> images(sub.order(), std::vector<int>(t.n));
  std::size_t offset = 0;
  for (SubgroupId k : t.orbits) {
    const Subgroup &ks = lattice.subgroup(k);
    std::vector<int> coset_of(g.order(), -1);
    std::vector<ElementId> reps;
    for (ElementId x : sub.members()) {
      if (coset_of[x] >= 0)
        continue;
      for (ElementId y : ks.members())
        coset_of[g.multiply(x, y)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    for (std::size_t i = 0; i < sub.order(); ++i)
      for (std::size_t c = 0; c < reps.size(); ++c)
        images[i][offset + c] = static_cast<int>(offset) +
                                coset_of[g.multiply(sub.members()[i], reps[c])];
    offset += reps.size();
  }
  if (offset != t.n)
    throw DomainError("orbit sizes do not sum to the H-set cardinality");
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (auto &img : images)
    out.emplace_back(std::move(img));
  return out;
}

HSetStructure restrict_structure(const SubgroupLattice &lattice,
                                 const HSetStructure &t, SubgroupId l) {
  if (!lattice.contains(t.h, l))
    throw DomainError("restriction requires L <= H");
  const auto f = structure_homomorphism(lattice, t);
  const Subgroup &hs = lattice.subgroup(t.h);
  const Subgroup &ls = lattice.subgroup(l);
  std::vector<std::vector<int>> images;
  images.reserve(ls.order());
  for (ElementId x : ls.members())
    images.push_back(f[member_index(hs, x)].images());
  if (t.n == 0)
    return HSetStructure{l, 0, {}};
  return structure_of(lattice, l, images);
}

HSetStructure conjugate_structure(const SubgroupLattice &lattice,
                                  const HSetStructure &t, ElementId g) {
  HSetStructure r{lattice.conjugate(t.h, g), t.n, {}};
  for (SubgroupId k : t.orbits)
    r.orbits.push_back(lattice.canonical_within(r.h, lattice.conjugate(k, g)));
  sort_orbits(r.orbits);
  return r;
}

HSetStructure union_structure(const HSetStructure &a, const HSetStructure &b) {
  if (a.h != b.h)
    throw DomainError("disjoint union of H-sets over different subgroups");
  HSetStructure r{a.h, a.n + b.n, a.orbits};
  r.orbits.insert(r.orbits.end(), b.orbits.begin(), b.orbits.end());
  sort_orbits(r.orbits);
  return r;
}

std::string describe(const SubgroupLattice &lattice, const HSetStructure &t) {
  const auto reps = subgroup_classes_within(lattice, t.h);
  const std::string hl = lattice.class_label(lattice.class_of(t.h));
  std::string out = "[";
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    const SubgroupId k = t.orbits[i];
    std::string kl = lattice.class_label(lattice.class_of(k));
    const bool ambiguous = std::any_of(reps.begin(), reps.end(), [&](SubgroupId r) {
      return r != k && lattice.class_of(r) == lattice.class_of(k);
    });
    if (ambiguous)
      kl += "[s" + std::to_string(k) + "]";
    out += (i ? " + " : "") + hl + "/" + kl;
  }
  return out + "]";
}

bool GraphSubgroup::meets_symmetric_trivially() const {
  return std::none_of(elements.begin(), elements.end(), [](const auto &e) {
    return e.first == FiniteGroup::identity() && !e.second.is_identity();
  });
}

bool GraphSubgroup::is_product() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const auto &e) { return e.second.is_identity(); });
}

GraphSubgroup graph_subgroup(const SubgroupLattice &lattice,
                             const HSetStructure &t) {
  const auto f = structure_homomorphism(lattice, t);
  const Subgroup &sub = lattice.subgroup(t.h);
  GraphSubgroup gamma{t, {}};
  gamma.elements.reserve(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i)
    gamma.elements.emplace_back(sub.members()[i], f[i]);
  assert(gamma.meets_symmetric_trivially());
  return gamma;
}

} // namespace ninf
