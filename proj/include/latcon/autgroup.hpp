#pragma once

// Automorphism groups and isomorphism testing by individualization and
// colour refinement on the cover graph, plus exhaustive generation of small
// lattices up to isomorphism and a seeded random lattice generator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

using Perm = std::vector<Elem>;

struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;  // coset representatives along a stabilizer chain
  std::uint64_t order = 1;
};

/// Throws SizeLimitExceeded when |L| > max_size or the order overflows.
PermGroup automorphisms(const FiniteLattice& l, std::size_t max_size = kDefaultMaxSize);
bool is_rigid(const FiniteLattice& l);
bool is_automorphism(const FiniteLattice& l, const Perm& p);
/// "(a b)(c d)", or "()" for the identity.
std::string cycle_notation(const FiniteLattice& l, const Perm& p);

/// An order isomorphism a -> b (as an id map), if one exists.
std::optional<Perm> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);
bool isomorphic(const Poset& a, const Poset& b);

/// Order and element-order multiset. Comparing these is only a heuristic for
/// group isomorphism.
struct GroupProfile {
  std::uint64_t order = 1;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // element order -> count
  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};

/// Enumerates the group by closure; nullopt when the order exceeds max_order.
std::optional<GroupProfile> group_profile(const PermGroup& g, std::uint64_t max_order = 5040);

/// All lattices with exactly n elements, one per isomorphism class, in a
/// deterministic order. Practical up to n = 10 or so.
std::vector<FiniteLattice> all_lattices(std::size_t n);

/// Up to `count` pairwise non-isomorphic rigid simple lattices with at least
/// 3 and at most max_size elements, smallest first. Throws NotEnoughFound.
std::vector<FiniteLattice> find_rigid_simple(std::size_t max_size, std::size_t count);

/// A random lattice with exactly n elements: a meet-semilattice grown by
/// random maximal extensions, plus a top. Uses only raw engine output, so the
/// result for a given seed is the same on every platform.
FiniteLattice random_lattice(std::size_t n, std::mt19937_64& rng);

}  // namespace latcon
