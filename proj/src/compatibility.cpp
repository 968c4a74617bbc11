#include "ninf/compatibility.hpp"

#include <algorithm>

#include "ninf/error.hpp"

namespace ninf {

namespace {

// Anchors into the source literature for each verdict.
struct Citations {
  static constexpr const char *rational = "Cor A.4";
  static constexpr const char *compatible = "Thm 4.4";
  static constexpr const char *minimal = "Cor 4.5";
  static constexpr const char *free = "Example 3.2";
  static constexpr const char *geometric = "Example 3.3";
  static constexpr const char *definition = "Def 3.1";
  static constexpr const char *obstructed = "Sec 7 Remark";
  static constexpr const char *unknown = "Remark 4.7";
};

const SubgroupLattice &shared_lattice(const OperadModel &op, const SpectrumExpr &e) {
  if (e.common_lattice() != op.lattice_ptr())
    throw DomainError("operad and spectrum are over different groups");
  return op.lattice();
}

} // namespace

std::string to_string(CheckMode mode) {
  return mode == CheckMode::OrbitReduction ? "orbit-reduction" : "direct-per-n";
}

std::string to_string(VerdictTag tag) {
  switch (tag) {
  case VerdictTag::GuaranteedCompatible:
    return "GuaranteedCompatible";
  case VerdictTag::GuaranteedRational:
    return "GuaranteedRational";
  case VerdictTag::Obstructed:
    return "Obstructed";
  case VerdictTag::Unknown:
    return "Unknown";
  }
  return "Unknown";
}

CompatibilityReport check_compatibility(const OperadModel &op,
                                        const SpectrumExpr &e, CheckMode mode,
                                        std::size_t n_max) {
  const SubgroupLattice &lat = shared_lattice(op, e);
  const IsotropySet iso = isotropy(e);
  CompatibilityReport report;
  report.method = mode;

  if (mode == CheckMode::OrbitReduction) {
    for (ClassId c : iso.members()) {
      const SubgroupId h = lat.representative(c);
      std::vector<SubgroupId> seen;
      for (SubgroupId k : lat.subgroups_of(h)) {
        if (k == h)
          continue;
        const SubgroupId canon = lat.canonical_within(h, k);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end())
          continue;
        seen.push_back(canon);
        if (op.admissible(orbit_structure(lat, h, canon)))
          report.violations.push_back(
              {h, canon, lat.subgroup(h).order() / lat.subgroup(canon).order()});
      }
    }
  } else {
    report.n_checked = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const GraphSubgroup &gamma : family(op, n, std::max(n_max, n))) {
        const SubgroupId h = gamma.projection();
        if (!iso.contains(lat.class_of(h)) || gamma.is_product())
          continue;
        // Report each nontrivial orbit type once, at its first cardinality.
        for (SubgroupId k : gamma.structure.orbits) {
          if (k == h)
            continue;
          const bool known = std::any_of(
              report.violations.begin(), report.violations.end(),
              [&](const Violation &v) { return v.h == h && v.k == k; });
          if (!known)
            report.violations.push_back({h, k, n});
        }
      }
    }
  }
  report.compatible = report.violations.empty();
  return report;
}

std::vector<GraphSubgroup> relevant_subgroups(const OperadModel &op,
                                              const SpectrumExpr &e,
                                              std::size_t n, std::size_t n_max) {
  const SubgroupLattice &lat = shared_lattice(op, e);
  const IsotropySet iso = isotropy(e);
  std::vector<GraphSubgroup> out;
  for (GraphSubgroup &gamma : family(op, n, n_max))
    if (iso.contains(lat.class_of(gamma.projection())))
      out.push_back(std::move(gamma));
  return out;
}

std::optional<NormWitness> norm_witness(const OperadModel &op,
                                        const SpectrumExpr &e) {
  const SubgroupLattice &lat = shared_lattice(op, e);
  const IsotropySet iso = isotropy(e);
  if (iso.contains(lat.class_of(lat.trivial())))
    return std::nullopt;
  for (ClassId c : iso.members()) {
    const SubgroupId k = lat.representative(c);
    if (op.admissible(orbit_structure(lat, k, lat.trivial())))
      return NormWitness{k, lat.subgroup(k).order()};
  }
  return std::nullopt;
}

Verdict lifting_verdict(const OperadModel &op, const SpectrumExpr &e) {
  shared_lattice(op, e);
  if (e.kind() == SpectrumExpr::Kind::RationalSphere)
    return {VerdictTag::GuaranteedRational, Citations::rational, std::nullopt};
  if (check_compatibility(op, e, CheckMode::OrbitReduction).compatible) {
    const char *reason = Citations::definition;
    if (op.kind() == OperadKind::MinimalEInfinity)
      reason = Citations::minimal;
    else if (is_free(e))
      reason = Citations::free;
    else if (op.kind() == OperadKind::Geometric)
      reason = Citations::geometric;
    return {VerdictTag::GuaranteedCompatible,
            std::string(Citations::compatible) + "; " + reason, std::nullopt};
  }
  if (auto w = norm_witness(op, e))
    return {VerdictTag::Obstructed, Citations::obstructed, w};
  return {VerdictTag::Unknown, Citations::unknown, std::nullopt};
}

} // namespace ninf
