#pragma once

// Brute-force reference computations used by the tests. Everything here
// works from raw element sets and the group's multiplication only, so it
// shares no code path with the library's lattice, marks or operad logic.

#include <cstdint>
#include <set>
#include <vector>

#include "ninf/group.hpp"

namespace oracle {

using ElementSetStd = std::vector<int>; // sorted element ids

bool is_subgroup(const ninf::FiniteGroup &g, const ElementSetStd &s);

/// All subgroups. Exhaustive over subsets for |G| <= 16, otherwise the
/// closures of every set of at most three elements.
std::vector<ElementSetStd> subgroups(const ninf::FiniteGroup &g);

/// g H g^-1 as a sorted set.
ElementSetStd conjugate(const ninf::FiniteGroup &g, const ElementSetStd &h, int x);

/// Partition of `subs` into conjugacy classes; each class sorted, classes
/// ordered by their least member.
std::vector<std::vector<ElementSetStd>> conjugacy_classes(
    const ninf::FiniteGroup &g, const std::vector<ElementSetStd> &subs);

ElementSetStd normalizer(const ninf::FiniteGroup &g, const ElementSetStd &h);

/// |(G/A)^B| by listing the cosets xA and testing b·xA = xA.
std::int64_t fixed_cosets(const ninf::FiniteGroup &g, const ElementSetStd &a,
                          const ElementSetStd &b);

/// Orbit decomposition of G/A × G/B: for each class representative in
/// `reps`, the number of orbits with stabilizer conjugate to it.
std::vector<std::int64_t> product_decomposition(
    const ninf::FiniteGroup &g, const ElementSetStd &a, const ElementSetStd &b,
    const std::vector<ElementSetStd> &reps);

/// Number of Σn-conjugacy classes of homomorphisms from the subgroup `h`
/// into Σn, by enumerating images of a generating set.
std::size_t hom_classes(const ninf::FiniteGroup &g, const ElementSetStd &h,
                        std::size_t n);

/// Transfer systems on a subgroup list by testing every subset of the
/// proper inclusions against the axioms.
std::size_t naive_transfer_systems(const ninf::FiniteGroup &g,
                                   const std::vector<ElementSetStd> &subs);

/// Möbius value by summing (-1)^length over all strict chains from k to h.
std::int64_t mobius_by_chains(const std::vector<ElementSetStd> &subs,
                              std::size_t k, std::size_t h);

/// Number of conjugacy classes of subgroups of the group generated by
/// the given elements, treated as a group in its own right.
std::size_t subgroup_class_count(const ninf::FiniteGroup &g, const ElementSetStd &k);

} // namespace oracle
