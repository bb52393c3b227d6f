#pragma once

// Lattice congruences: principal congruence generation by worklist closure,
// the full congruence lattice, the ordered set of principal congruences,
// quotients, and restriction to sublattices.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// A partition of the element ids 0..size()-1 in canonical form: blocks are
/// numbered in order of their least member, so two values are equal iff they
/// are the same partition. Ordering is lexicographic on the block vector.
class Congruence {
 public:
  Congruence() = default;
  /// Canonicalizes an arbitrary block labelling.
  explicit Congruence(std::span<const Elem> block_labels);

  static Congruence identity(std::size_t n);
  static Congruence all(std::size_t n);

  std::size_t size() const { return block_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  Elem block_of(Elem x) const { return block_[x]; }
  bool same_block(Elem x, Elem y) const { return block_[x] == block_[y]; }
  const std::vector<Elem>& block_vector() const { return block_; }
  std::vector<std::vector<Elem>> blocks() const;

  bool is_identity() const { return num_blocks_ == block_.size(); }
  bool is_all() const { return num_blocks_ <= 1; }
  /// Inclusion of congruences as sets of pairs.
  bool refines(const Congruence& coarser) const;

  /// Non-singleton blocks as "{0,a,c}{b,1}", or "Delta" for the identity.
  std::string to_string(const FiniteLattice& l) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.block_ <=> b.block_; }

 private:
  std::vector<Elem> block_;
  std::size_t num_blocks_ = 0;
};

struct CongruenceHash {
  std::size_t operator()(const Congruence& c) const;
};

bool is_compatible(const FiniteLattice& l, const Congruence& theta);

/// Least congruence containing every given pair.
Congruence generated_by(const FiniteLattice& l, std::span<const CoverPair> pairs);
/// cg(a, b); principal(l, a, a) is the identity.
Congruence principal(const FiniteLattice& l, Elem a, Elem b);

Congruence con_meet(const Congruence& a, const Congruence& b);
/// Transitive-closure join; the result is re-checked for compatibility.
Congruence con_join(const FiniteLattice& l, const Congruence& a, const Congruence& b);

struct AllCongruencesOptions {
  std::size_t cap = std::size_t{1} << 20;
};

/// Con(L): `congruences[i]` is the congruence at element id i of `lattice`.
/// Congruences are ordered finest first (block count descending), ties broken
/// lexicographically on the canonical block vector.
struct ConLattice {
  std::vector<Congruence> congruences;
  FiniteLattice lattice;

  std::size_t size() const { return congruences.size(); }
  /// Element id of a congruence, or size() if absent.
  std::size_t index_of(const Congruence& c) const;
};

ConLattice all_congruences(const FiniteLattice& l, const AllCongruencesOptions& opts = {});

/// Princ(L) with, for each member, one comparable pair a <= b generating it.
struct PrincPoset {
  std::vector<Congruence> congruences;
  std::vector<CoverPair> generators;
  Poset order;
};

PrincPoset princ_poset(const FiniteLattice& l);

bool is_simple(const FiniteLattice& l);
/// L / theta; elements are the blocks labelled by their members.
FiniteLattice quotient(const FiniteLattice& l, const Congruence& theta);
/// theta restricted to the sublattice on `sub_elements`. The result is indexed
/// by position in the sorted element list, which matches sublattice() ids.
/// Throws NotASublattice.
Congruence restrict_map(const FiniteLattice& l, std::vector<Elem> sub_elements, const Congruence& theta);
std::vector<Congruence> join_irreducible_congruences(const FiniteLattice& l);

struct CfiProfile {
  std::size_t con_count = 0;
  std::size_t filt_count = 0;
  std::size_t id_count = 0;

  friend bool operator==(const CfiProfile&, const CfiProfile&) = default;
};

CfiProfile cfi_profile(const FiniteLattice& l);

}  // namespace latcon
