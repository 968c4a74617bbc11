#include "ninf/transfer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ninf/error.hpp"

namespace ninf {

namespace {

using Relation = std::vector<bool>;

struct RelationHash {
  std::size_t operator()(const Relation &r) const noexcept {
    return std::hash<std::vector<bool>>{}(r);
  }
};

class Closure {
public:
  explicit Closure(const SubgroupLattice &lattice)
      : lat_(lattice), s_(lattice.size()) {}

  std::size_t index(SubgroupId k, SubgroupId l) const {
    return static_cast<std::size_t>(k) * s_ + l;
  }

  // Smallest transfer system containing `r` plus the pair (k, l).
  Relation close(Relation r, SubgroupId k, SubgroupId l) const {
    std::deque<std::pair<SubgroupId, SubgroupId>> work;
    auto add = [&](SubgroupId a, SubgroupId b) {
      if (a == b || r[index(a, b)])
        return;
      r[index(a, b)] = true;
      work.emplace_back(a, b);
    };
    add(k, l);
    while (!work.empty()) {
      const auto [a, b] = work.front();
      work.pop_front();
      const auto order = static_cast<ElementId>(lat_.group().order());
      for (ElementId x = 0; x < order; ++x)
        add(lat_.conjugate(a, x), lat_.conjugate(b, x));
      for (SubgroupId m : lat_.subgroups_of(b))
        add(lat_.intersection(a, m), m);
      for (std::size_t c = 0; c < s_; ++c) {
        const auto sc = static_cast<SubgroupId>(c);
        if (r[index(b, sc)])
          add(a, sc);
        if (r[index(sc, a)])
          add(sc, b);
      }
    }
    return r;
  }

private:
  const SubgroupLattice &lat_;
  std::size_t s_;
};

} // namespace

std::vector<TransferSystem> enumerate_transfer_systems(
    const SubgroupLattice &lattice, std::size_t cap) {
  const std::size_t s = lattice.size();
  if (s > cap)
    throw ResourceError("transfer-system enumeration on " + std::to_string(s) +
                        " subgroups exceeds cap of " + std::to_string(cap));
  const Closure closure(lattice);

  // Candidate generators: one proper inclusion per conjugacy orbit of pairs.
  std::vector<std::pair<SubgroupId, SubgroupId>> candidates;
  {
    std::set<std::pair<SubgroupId, SubgroupId>> seen;
    for (SubgroupId l = 0; l < static_cast<SubgroupId>(s); ++l) {
      for (SubgroupId k = 0; k < l; ++k) {
        if (!lattice.contains(l, k) || seen.count({k, l}))
          continue;
        candidates.emplace_back(k, l);
        for (ElementId x = 0; x < static_cast<ElementId>(lattice.group().order()); ++x)
          seen.emplace(lattice.conjugate(k, x), lattice.conjugate(l, x));
      }
    }
  }

  // Every system is the closure of its own pairs, so adding one generator
  // at a time from the empty system reaches all of them.
  std::unordered_set<Relation, RelationHash> found;
  std::deque<Relation> queue;
  Relation empty(s * s, false);
  found.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    const Relation r = std::move(queue.front());
    queue.pop_front();
    for (const auto &[k, l] : candidates) {
      if (r[closure.index(k, l)])
        continue;
      Relation next = closure.close(r, k, l);
      if (found.insert(next).second)
        queue.push_back(std::move(next));
    }
  }

  std::vector<TransferSystem> out;
  out.reserve(found.size());
  for (const Relation &r : found) {
    TransferSystem t;
    for (SubgroupId k = 0; k < static_cast<SubgroupId>(s); ++k)
      for (SubgroupId l = 0; l < static_cast<SubgroupId>(s); ++l)
        if (r[closure.index(k, l)])
          t.transfers.emplace_back(k, l);
    std::sort(t.transfers.begin(), t.transfers.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const TransferSystem &a, const TransferSystem &b) {
    if (a.transfers.size() != b.transfers.size())
      return a.transfers.size() < b.transfers.size();
    return a.transfers < b.transfers;
  });
  return out;
}

std::string transfer_systems_dot(const SubgroupLattice &lattice,
                                 const std::vector<TransferSystem> &systems) {
  std::ostringstream out;
  out << "digraph transfer_systems {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < systems.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n    label=\"#" << i << "\";\n";
    for (std::size_t h = 0; h < lattice.size(); ++h)
      out << "    t" << i << "_" << h << " [label=\""
          << lattice.class_label(lattice.class_of(static_cast<SubgroupId>(h)))
          << "\"];\n";
    for (const auto &[k, l] : systems[i].transfers)
      out << "    t" << i << "_" << k << " -> t" << i << "_" << l << ";\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace ninf
