#pragma once

// Lattice constructions: glued sums, the W-gadget and its tower, atom-interval
// replacement, the M3-cap, the composite with 2^m * 3^n congruences, and
// products of chains with their coordinate congruences.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

/// Hall-Dilworth gluing: the top of `lower` is identified with the bottom of
/// `upper`. Ids of `lower` are kept; id j of `upper` becomes j + |lower| - 1.
/// Labels get "s0." / "s1." prefixes.
FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper);
/// Left-to-right glued sum with prefixes "s0.", "s1.", ...
FiniteLattice glued_sum(std::span<const FiniteLattice> summands);

/// New bottom and top around K plus two atom-coatoms incomparable to K.
/// Ids: new bottom 0, K shifted by one, then u, v, new top.
FiniteLattice w_gadget(const FiniteLattice& k);

struct TowerStage {
  std::size_t index = 0;
  FiniteLattice lattice;
  /// Ids of the stage bottoms 0..index in `lattice`; a chain descending in id
  /// as the stage grows.
  std::vector<Elem> chain;
  /// stage_tops[j] is the top of stage j, so stage j is [chain[j], stage_tops[j]].
  std::vector<Elem> stage_tops;
};

struct TowerOptions {
  std::size_t max_size = kDefaultMaxSize;
  std::function<void(const std::string&)> on_warning;
};

/// Applies w_gadget `stages` times. Warns when the seed is not simple; throws
/// SizeLimitExceeded when a stage would exceed max_size.
TowerStage tower(const FiniteLattice& seed, std::size_t stages, const TowerOptions& opts = {});

/// Splices K(a) into each prime interval [0, a]. Ids: 0, the inner elements
/// of each K(a) by ascending atom, then the remaining elements of L in order.
/// Inner labels are "a/x". Throws NotAnAtom and UnboundedReplacement (a
/// replacement whose bounds coincide).
FiniteLattice replace_atom_intervals(const FiniteLattice& l, const std::map<Elem, FiniteLattice>& replacement);

struct M3Cap {
  FiniteLattice lattice;
  std::vector<Elem> lp_embedding;  // Lp id -> cap id
  std::vector<Elem> h_embedding;   // H id -> cap id
  Elem u = 0;
  Elem v = 0;
  Elem top = 0;
};

/// Lp with a new top 1 and a complement u of every nonzero element of Lp,
/// and H spliced in with 0_H = 0 and 1_H = v, v a coatom. Ids: 0, Lp, H, u, 1.
/// Throws TooSmall when |Lp| < 3 or |H| < 2.
M3Cap m3_cap(const FiniteLattice& lp, const FiniteLattice& h);

/// Every congruence other than nabla keeps the bottom in a singleton block.
bool zero_separated(const FiniteLattice& h);

/// n copies of w_gadget(Sub(F_p^dim)), then boolean(m-1) when m >= 2, then
/// Sub(F_p^dim) when m >= 1, glued in that order. Throws InvalidParameters.
FiniteLattice freese_composite(unsigned p, std::size_t dim, std::size_t m, std::size_t n);

/// n-tuples over the chain 0 < 1 < ... < h, componentwise order, ids in
/// lexicographic tuple order. Throws SizeLimitExceeded.
FiniteLattice product_of_chains(std::size_t n, std::size_t h, std::size_t max_size = kDefaultMaxSize);
/// Tuples agreeing on every coordinate in X. Throws IndexOutOfRange.
Congruence theta_of(std::size_t n, std::size_t h, std::span<const std::size_t> coordinates);

}  // namespace latcon
