#include "ninf/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "ninf/error.hpp"

namespace ninf {

bool ElementSet::is_subset_of(const ElementSet &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet &other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] & other.words_[i];
  return r;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t ElementSet::Hash::operator()(const ElementSet &s) const noexcept {
  std::size_t h = s.universe_;
  for (auto w : s.words_)
    h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ull;
  return h;
}

Subgroup::Subgroup(std::vector<ElementId> members,
                   std::vector<ElementId> generators, std::size_t universe)
    : members_(std::move(members)), generators_(std::move(generators)),
      set_(universe) {
  std::sort(members_.begin(), members_.end());
  for (ElementId x : members_)
    set_.insert(x);
}

Subgroup generate_subgroup(const FiniteGroup &group,
                           std::span<const ElementId> generators) {
  ElementSet seen(group.order());
  std::vector<ElementId> members{FiniteGroup::identity()};
  seen.insert(FiniteGroup::identity());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId s : generators) {
      const ElementId next = group.multiply(members[i], s);
      if (!seen.contains(next)) {
        seen.insert(next);
        members.push_back(next);
      }
    }
  }
  std::vector<ElementId> gens;
  for (ElementId s : generators)
    if (s != FiniteGroup::identity() &&
        std::find(gens.begin(), gens.end(), s) == gens.end())
      gens.push_back(s);
  return Subgroup(std::move(members), std::move(gens), group.order());
}

namespace {

// Number of elements whose order divides d.
std::size_t count_dividing(const FiniteGroup &g, const Subgroup &h,
                           std::size_t d) {
  std::size_t n = 0;
  for (ElementId x : h.members())
    if (d % g.element_order(x) == 0)
      ++n;
  return n;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

std::string abelian_label(const FiniteGroup &g, const Subgroup &h) {
  // Invariant factors from the counts of p^k-torsion elements.
  std::vector<std::size_t> factors;
  for (std::size_t p : prime_factors(h.order())) {
    std::size_t e = 0;
    for (std::size_t m = h.order(); m % p == 0; m /= p)
      ++e;
    std::vector<std::size_t> log_counts{0};
    std::size_t pk = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      pk *= p;
      std::size_t c = count_dividing(g, h, pk), l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      log_counts.push_back(l);
    }
    // at_least[k] = number of cyclic p-factors of exponent >= k.
    std::vector<std::size_t> exps;
    for (std::size_t k = 1; k <= e; ++k) {
      const std::size_t at_least = log_counts[k] - log_counts[k - 1];
      const std::size_t above =
          k < e ? log_counts[k + 1] - log_counts[k] : 0;
      for (std::size_t j = above; j < at_least; ++j)
        exps.push_back(k);
    }
    std::sort(exps.rbegin(), exps.rend());
    if (factors.size() < exps.size())
      factors.resize(exps.size(), 1);
    for (std::size_t j = 0; j < exps.size(); ++j)
      for (std::size_t k = 0; k < exps[j]; ++k)
        factors[j] *= p;
  }
  std::sort(factors.begin(), factors.end());
  if (factors == std::vector<std::size_t>{2, 2})
    return "V4";
  std::string out;
  for (std::size_t f : factors)
    out += (out.empty() ? "C" : "xC") + std::to_string(f);
  return out;
}

} // namespace

std::string structure_label(const FiniteGroup &g, const Subgroup &h) {
  const std::size_t n = h.order();
  if (n == 1)
    return "1";
  for (ElementId x : h.members())
    if (g.element_order(x) == n)
      return "C" + std::to_string(n);
  bool abelian = true;
  for (ElementId a : h.generators())
    for (ElementId b : h.generators())
      if (g.multiply(a, b) != g.multiply(b, a))
        abelian = false;
  if (abelian)
    return abelian_label(g, h);

  std::size_t involutions = 0;
  bool has_order4 = false, has_order6 = false;
  for (ElementId x : h.members()) {
    involutions += g.element_order(x) == 2;
    has_order4 |= g.element_order(x) == 4;
    has_order6 |= g.element_order(x) == 6;
  }
  if (n == 6)
    return "S3";
  if (n == 8 && involutions == 1)
    return "Q8";
  // Dihedral: a cyclic subgroup of index 2 whose complement is all involutions.
  if (n % 2 == 0) {
    for (ElementId r : h.members()) {
      if (g.element_order(r) != n / 2)
        continue;
      const ElementId gens[] = {r};
      const Subgroup rot = generate_subgroup(g, gens);
      bool dihedral = true;
      for (ElementId x : h.members())
        if (!rot.contains(x) && g.element_order(x) != 2)
          dihedral = false;
      if (dihedral)
        return "D" + std::to_string(n / 2);
      break;
    }
  }
  if (n == 12 && involutions == 3 && !has_order6)
    return "A4";
  if (n == 24 && involutions == 9 && has_order4)
    return "S4";
  if (n == 60 && involutions == 15 && !has_order6)
    return "A5";
  if (n == 120 && involutions == 25 && has_order6)
    return "S5";
  return "H" + std::to_string(n);
}

SubgroupLattice SubgroupLattice::enumerate(std::shared_ptr<const FiniteGroup> group,
                                           const Caps &caps) {
  const FiniteGroup &g = *group;
  if (g.order() > caps.lattice_order_cap)
    throw ResourceError("subgroup enumeration of a group of order " +
                        std::to_string(g.order()) + " exceeds cap of " +
                        std::to_string(caps.lattice_order_cap));
  const std::size_t order = g.order();

  // Layer 0: cyclic subgroups. Later layers: joins with a cyclic subgroup.
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, SubgroupId, ElementSet::Hash> index;
  auto add = [&](Subgroup s) -> bool {
    if (index.count(s.set()))
      return false;
    index.emplace(s.set(), static_cast<SubgroupId>(found.size()));
    found.push_back(std::move(s));
    return true;
  };
  std::vector<ElementId> cyclic_gens;
  for (ElementId x = 0; x < static_cast<ElementId>(order); ++x) {
    const ElementId gens[] = {x};
    if (add(generate_subgroup(g, gens)))
      cyclic_gens.push_back(x);
  }
  std::vector<SubgroupId> frontier(found.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  while (!frontier.empty()) {
    std::vector<SubgroupId> next;
    for (SubgroupId s : frontier) {
      for (ElementId c : cyclic_gens) {
        if (found[s].contains(c))
          continue;
        std::vector<ElementId> gens = found[s].generators();
        gens.push_back(c);
        if (add(generate_subgroup(g, gens)))
          next.push_back(static_cast<SubgroupId>(found.size()) - 1);
      }
    }
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });

  SubgroupLattice lat;
  lat.group_ = std::move(group);
  lat.subgroups_ = std::move(found);
  const std::size_t s = lat.subgroups_.size();
  for (std::size_t i = 0; i < s; ++i)
    lat.index_.emplace(lat.subgroups_[i].set(), static_cast<SubgroupId>(i));

  lat.conjugates_.resize(s * order);
  for (std::size_t h = 0; h < s; ++h) {
    const Subgroup &sub = lat.subgroups_[h];
    for (ElementId x = 0; x < static_cast<ElementId>(order); ++x) {
      ElementSet image(order);
      for (ElementId m : sub.members())
        image.insert(g.conjugate(m, x));
      lat.conjugates_[h * order + x] = lat.index_.at(image);
    }
  }

  // Classes: ids are sorted, so the first unassigned subgroup found in a
  // left-to-right scan is its class's lexicographically least member.
  lat.class_of_.assign(s, -1);
  for (std::size_t h = 0; h < s; ++h) {
    if (lat.class_of_[h] >= 0)
      continue;
    const ClassId c = static_cast<ClassId>(lat.class_members_.size());
    std::vector<SubgroupId> members;
    for (ElementId x = 0; x < static_cast<ElementId>(order); ++x) {
      const SubgroupId k = lat.conjugates_[h * order + x];
      if (lat.class_of_[k] < 0) {
        lat.class_of_[k] = c;
        members.push_back(k);
      }
    }
    std::sort(members.begin(), members.end());
    lat.class_members_.push_back(std::move(members));
  }

  lat.contains_.assign(s * s, false);
  for (std::size_t big = 0; big < s; ++big)
    for (std::size_t small = 0; small <= big; ++small)
      if (lat.subgroups_[small].order() <= lat.subgroups_[big].order() &&
          lat.subgroups_[small].set().is_subset_of(lat.subgroups_[big].set()))
        lat.contains_[big * s + small] = true;

  const std::size_t nc = lat.class_members_.size();
  lat.subconjugate_.assign(nc * nc, false);
  for (std::size_t big = 0; big < nc; ++big) {
    const SubgroupId rep = lat.representative(static_cast<ClassId>(big));
    for (std::size_t k = 0; k < s; ++k)
      if (lat.contains(rep, static_cast<SubgroupId>(k)))
        lat.subconjugate_[big * nc + lat.class_of_[k]] = true;
  }

  lat.normalizers_.resize(s);
  for (std::size_t h = 0; h < s; ++h) {
    ElementSet norm(order);
    for (ElementId x = 0; x < static_cast<ElementId>(order); ++x)
      if (lat.conjugates_[h * order + x] == static_cast<SubgroupId>(h))
        norm.insert(x);
    lat.normalizers_[h] = lat.index_.at(norm);
  }

  lat.mobius_.assign(s * s, 0);
  for (std::size_t k = 0; k < s; ++k) {
    lat.mobius_[k * s + k] = 1;
    for (std::size_t h = k + 1; h < s; ++h) {
      if (!lat.contains_[h * s + k])
        continue;
      std::int64_t sum = 0;
      for (std::size_t m = k; m < h; ++m)
        if (lat.contains_[m * s + k] && lat.contains_[h * s + m])
          sum += lat.mobius_[k * s + m];
      lat.mobius_[k * s + h] = -sum;
    }
  }

  std::vector<std::string> base(nc);
  for (std::size_t c = 0; c < nc; ++c)
    base[c] = structure_label(g, lat.subgroups_[lat.representative(static_cast<ClassId>(c))]);
  if (g.name() != "G")
    base[nc - 1] = g.name();
  std::map<std::string, int> total, seen;
  for (const auto &b : base)
    ++total[b];
  lat.labels_.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    if (total[base[c]] == 1) {
      lat.labels_[c] = base[c];
      continue;
    }
    const int k = seen[base[c]]++;
    lat.labels_[c] = base[c] + (k < 26 ? std::string(1, static_cast<char>('a' + k))
                                       : "_" + std::to_string(k));
  }
  return lat;
}

SubgroupId SubgroupLattice::intersection(SubgroupId a, SubgroupId b) const {
  return index_.at(subgroups_[a].set() & subgroups_[b].set());
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet &members) const {
  auto it = index_.find(members);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<SubgroupId> SubgroupLattice::subgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  for (SubgroupId k = 0; k <= h; ++k)
    if (contains(h, k))
      out.push_back(k);
  return out;
}

SubgroupId SubgroupLattice::canonical_within(SubgroupId h, SubgroupId k) const {
  SubgroupId best = k;
  for (ElementId x : subgroups_[h].members())
    best = std::min(best, conjugate(k, x));
  return best;
}

std::int64_t SubgroupLattice::mobius(SubgroupId k, SubgroupId h) const {
  if (!contains(h, k))
    throw DomainError("mobius(K, H) requires K <= H");
  return mobius_[static_cast<std::size_t>(k) * size() + h];
}

ClassId SubgroupLattice::class_by_label(std::string_view label) const {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char &c : out)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  if (!label.empty() && label.front() == '#') {
    const std::string digits(label.substr(1));
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 6 || std::stoul(digits) >= num_classes())
      throw ParseError("no subgroup class '" + std::string(label) + "'", 0);
    return static_cast<ClassId>(std::stoul(digits));
  }
  for (std::size_t c = 0; c < labels_.size(); ++c)
    if (labels_[c] == label)
      return static_cast<ClassId>(c);
  const std::string key = lower(label);
  if (key == "e" || key == "1")
    return class_of(trivial());
  if (key == lower(group_->name()) || key == "g")
    return class_of(whole());
  std::optional<ClassId> match;
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (lower(labels_[c]) == key) {
      if (match)
        throw ParseError("ambiguous subgroup label '" + std::string(label) + "'", 0);
      match = static_cast<ClassId>(c);
    }
  }
  if (!match)
    throw ParseError("no subgroup class '" + std::string(label) + "' in " +
                         group_->name(),
                     0);
  return *match;
}

std::string SubgroupLattice::hasse_dot() const {
  std::ostringstream out;
  out << "digraph subgroups {\n  rankdir=BT;\n";
  for (std::size_t h = 0; h < size(); ++h)
    out << "  s" << h << " [label=\"" << labels_[class_of_[h]] << "\"];\n";
  for (std::size_t big = 0; big < size(); ++big) {
    for (std::size_t small = 0; small < big; ++small) {
      if (!contains(static_cast<SubgroupId>(big), static_cast<SubgroupId>(small)))
        continue;
      bool cover = true;
      for (std::size_t mid = small + 1; mid < big && cover; ++mid)
        if (subgroups_[mid].order() != subgroups_[small].order() &&
            contains(static_cast<SubgroupId>(big), static_cast<SubgroupId>(mid)) &&
            contains(static_cast<SubgroupId>(mid), static_cast<SubgroupId>(small)))
          cover = false;
      if (cover)
        out << "  s" << small << " -> s" << big << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

WeylGroup weyl_group(const SubgroupLattice &lattice, SubgroupId h) {
  if (h < 0 || static_cast<std::size_t>(h) >= lattice.size())
    throw DomainError("subgroup id out of range");
  const FiniteGroup &g = lattice.group();
  const Subgroup &sub = lattice.subgroup(h);
  const SubgroupId n = lattice.normalizer(h);
  const Subgroup &norm = lattice.subgroup(n);

  std::vector<int> coset_of(g.order(), -1);
  std::vector<std::vector<ElementId>> cosets;
  for (ElementId x : norm.members()) {
    if (coset_of[x] >= 0)
      continue;
    std::vector<ElementId> coset;
    for (ElementId y : sub.members()) {
      const ElementId z = g.multiply(x, y);
      coset_of[z] = static_cast<int>(cosets.size());
      coset.push_back(z);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }

  auto action = [&](ElementId x) {
    std::vector<int> images(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c)
      images[c] = coset_of[g.multiply(x, cosets[c].front())];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElementId x : norm.generators())
    gens.push_back(action(x));
  if (gens.empty())
    gens.push_back(Permutation(cosets.size()));

  FiniteGroup quotient = FiniteGroup::generated_by(gens, "W", g.order());
  std::vector<ElementId> image(g.order(), -1);
  for (ElementId x : norm.members())
    image[x] = quotient.index_of(action(x));
  return WeylGroup{std::move(quotient), h, n, std::move(cosets), std::move(image)};
}

} // namespace ninf
