#include "ninf/operad.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ninf/error.hpp"

namespace ninf {

struct OperadModel::Memo {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, bool> orbits;
  std::map<HSetStructure, bool> sets;
};

PermutationUniverse PermutationUniverse::from_orbits(
    const SubgroupLattice &lattice, const std::vector<SubgroupId> &stabilizers) {
  PermutationUniverse u;
  for (SubgroupId j : stabilizers)
    u.generators.push_back(GSet::cosets(lattice, j));
  return u;
}

std::string to_string(OperadKind kind) {
  switch (kind) {
  case OperadKind::MinimalEInfinity:
    return "e1";
  case OperadKind::MaximalEInfinity:
    return "eG";
  case OperadKind::Geometric:
    return "geometric";
  case OperadKind::Custom:
    return "custom";
  }
  return "unknown";
}

OperadModel::OperadModel(OperadKind kind,
                         std::shared_ptr<const SubgroupLattice> lattice,
                         std::string name)
    : kind_(kind), lattice_(std::move(lattice)), name_(std::move(name)),
      memo_(std::make_shared<Memo>()) {}

OperadModel OperadModel::minimal(std::shared_ptr<const SubgroupLattice> lattice) {
  return OperadModel(OperadKind::MinimalEInfinity, std::move(lattice), "E∞^1");
}

OperadModel OperadModel::maximal(std::shared_ptr<const SubgroupLattice> lattice) {
  return OperadModel(OperadKind::MaximalEInfinity, std::move(lattice), "E∞^G");
}

OperadModel OperadModel::geometric(std::shared_ptr<const SubgroupLattice> lattice,
                                   PermutationUniverse universe) {
  if (universe.generators.empty())
    throw DomainError("a permutation universe needs at least one generator");
  std::string name = "geometric(";
  for (std::size_t i = 0; i < universe.generators.size(); ++i) {
    const GSet &s = universe.generators[i];
    if (s.group_ptr() != lattice->group_ptr())
      throw DomainError("universe generator is over a different group");
    name += (i ? "," : "") + (s.label().empty() ? "X" : s.label());
  }
  name += ")";
  OperadModel op(OperadKind::Geometric, lattice, std::move(name));
  for (const GSet &s : universe.generators) {
    std::vector<std::size_t> counts(lattice->size());
    for (std::size_t l = 0; l < lattice->size(); ++l) {
      const Subgroup &sub = lattice->subgroup(static_cast<SubgroupId>(l));
      std::vector<bool> seen(s.size(), false);
      std::size_t orbits = 0;
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (seen[p])
          continue;
        ++orbits;
        for (ElementId x : sub.members())
          seen[s.act(x, static_cast<int>(p))] = true;
      }
      counts[l] = orbits;
    }
    op.orbit_counts_.push_back(std::move(counts));
  }
  op.universe_ = std::make_shared<const PermutationUniverse>(std::move(universe));
  return op;
}

OperadModel OperadModel::custom(std::shared_ptr<const SubgroupLattice> lattice,
                                AdmissibilityOracle oracle, std::string name) {
  OperadModel op(OperadKind::Custom, std::move(lattice), std::move(name));
  op.oracle_ = std::move(oracle);
  return op;
}

bool OperadModel::decide_orbit(SubgroupId h, SubgroupId k) const {
  if (h == k)
    return true;
  switch (kind_) {
  case OperadKind::MinimalEInfinity:
    return false;
  case OperadKind::MaximalEInfinity:
    return true;
  case OperadKind::Geometric: {
    // H/K embeds iff some vector has stabilizer exactly K, i.e. for every
    // K < L <= H the L-fixed subspace is strictly smaller than the K-fixed
    // one in some summand. dim R[S]^L is the number of L-orbits on S.
    const SubgroupLattice &lat = *lattice_;
    for (SubgroupId l = k + 1; l <= h; ++l) {
      if (!lat.contains(h, l) || !lat.contains(l, k))
        continue;
      const bool drops = std::any_of(
          orbit_counts_.begin(), orbit_counts_.end(),
          [&](const auto &counts) { return counts[l] < counts[k]; });
      if (!drops)
        return false;
    }
    return true;
  }
  case OperadKind::Custom:
    return oracle_(*lattice_, orbit_structure(*lattice_, h, k));
  }
  return false;
}

bool OperadModel::admissible_orbit(SubgroupId h, SubgroupId k) const {
  if (!lattice_->contains(h, k))
    throw DomainError("orbit H/K requires K <= H");
  k = lattice_->canonical_within(h, k);
  const std::uint64_t key =
      (static_cast<std::uint64_t>(h) << 32) | static_cast<std::uint32_t>(k);
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->orbits.find(key);
    if (it != memo_->orbits.end())
      return it->second;
  }
  const bool answer = decide_orbit(h, k);
  std::lock_guard lock(memo_->mutex);
  memo_->orbits.emplace(key, answer);
  return answer;
}

bool OperadModel::admissible(const HSetStructure &t) const {
  if (kind_ != OperadKind::Custom) {
    return std::all_of(t.orbits.begin(), t.orbits.end(),
                       [&](SubgroupId k) { return admissible_orbit(t.h, k); });
  }
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->sets.find(t);
    if (it != memo_->sets.end())
      return it->second;
  }
  const bool answer = oracle_(*lattice_, t);
  std::lock_guard lock(memo_->mutex);
  memo_->sets.emplace(t, answer);
  return answer;
}

std::vector<GraphSubgroup> family(const OperadModel &op, std::size_t n,
                                  std::size_t n_max) {
  if (n == 0)
    throw DomainError("family index n must be positive");
  if (n > n_max)
    throw ResourceError("family F_" + std::to_string(n) + " exceeds n_max = " +
                        std::to_string(n_max));
  const SubgroupLattice &lat = op.lattice();
  std::vector<GraphSubgroup> out;
  for (ClassId c = 0; c < static_cast<ClassId>(lat.num_classes()); ++c) {
    const SubgroupId h = lat.representative(c);
    const Subgroup &norm = lat.subgroup(lat.normalizer(h));
    for (const HSetStructure &t : hset_structures(lat, h, n)) {
      if (!op.admissible(t))
        continue;
      const bool canonical = std::all_of(
          norm.members().begin(), norm.members().end(),
          [&](ElementId g) { return !(conjugate_structure(lat, t, g) < t); });
      if (canonical)
        out.push_back(graph_subgroup(lat, t));
    }
  }
  return out;
}

ValidationReport validate_indexing_system(const OperadModel &op,
                                          std::size_t n_max) {
  const SubgroupLattice &lat = op.lattice();
  const FiniteGroup &g = lat.group();
  ValidationReport report;
  report.n_max = n_max;
  auto violation = [&](const std::string &rule, const HSetStructure &t,
                       const std::string &detail) {
    report.violations.push_back(rule + ": " + describe(lat, t) +
                                (detail.empty() ? "" : " " + detail));
  };

  for (SubgroupId h = 0; h < static_cast<SubgroupId>(lat.size()); ++h) {
    std::vector<HSetStructure> admissible_sets;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const HSetStructure &t : hset_structures(lat, h, n)) {
        ++report.structures_checked;
        const bool ok = op.admissible(t);
        if (t.is_trivial() && !ok)
          violation("trivial", t, "is not admissible");
        if (!ok)
          continue;
        admissible_sets.push_back(t);
        if (op.kind() == OperadKind::MinimalEInfinity && !t.is_trivial())
          violation("minimal", t, "is nontrivial but admissible");
        // Suborbits: dropping any single orbit keeps admissibility; smaller
        // sets are checked in their own right.
        for (std::size_t i = 0; i < t.orbits.size(); ++i) {
          if (i > 0 && t.orbits[i] == t.orbits[i - 1])
            continue;
          if (!op.admissible(orbit_structure(lat, h, t.orbits[i])))
            violation("suborbit", t,
                      "has a non-admissible orbit " +
                          describe(lat, orbit_structure(lat, h, t.orbits[i])));
          if (t.orbits.size() == 1)
            continue;
          HSetStructure rest = t;
          rest.orbits.erase(rest.orbits.begin() + static_cast<std::ptrdiff_t>(i));
          rest.n -= lat.subgroup(h).order() / lat.subgroup(t.orbits[i]).order();
          if (!op.admissible(rest))
            violation("suborbit", t, "has a non-admissible subset " + describe(lat, rest));
        }
        for (SubgroupId l : lat.subgroups_of(h)) {
          const HSetStructure r = restrict_structure(lat, t, l);
          if (!op.admissible(r))
            violation("restriction", t, "restricts to " + describe(lat, r));
        }
        for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
          const HSetStructure c = conjugate_structure(lat, t, x);
          if (!op.admissible(c))
            violation("conjugation", t, "conjugates to " + describe(lat, c));
        }
      }
    }
    for (std::size_t i = 0; i < admissible_sets.size(); ++i) {
      for (std::size_t j = i; j < admissible_sets.size(); ++j) {
        if (admissible_sets[i].n + admissible_sets[j].n > n_max)
          continue;
        const HSetStructure u = union_structure(admissible_sets[i], admissible_sets[j]);
        if (!op.admissible(u))
          violation("union", u, "is not admissible");
      }
    }
  }
  return report;
}

} // namespace ninf
