#pragma once

// Finite lattices: validated construction from a cover relation, O(1)
// order/meet/join queries, duality, intervals and sublattices, and the stock
// lattices used throughout (chains, boolean lattices, M3, N5, hexagon).
//
// Element ids are dense integers 0..size()-1 that always follow a linear
// extension of the order: x <= y implies x <= y as integers. Hence bottom() is
// 0 and top() is size()-1. Builders keep the caller's element order whenever it
// already is a linear extension, so ids handed in stay valid.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latcon/bitset.hpp"
#include "latcon/error.hpp"

namespace latcon {

using Elem = std::uint32_t;
using CoverPair = std::pair<Elem, Elem>;

inline constexpr std::size_t kDefaultMaxSize = 5000;

struct BuildOptions {
  // Reject redundant (transitively implied) cover pairs. When false they are
  // dropped and reported through on_warning.
  bool strict = true;
  std::size_t max_size = kDefaultMaxSize;
  std::function<void(const std::string&)> on_warning;
};

class FiniteLattice {
 public:
  /// Empty placeholder; only meaningful once assigned from a builder.
  FiniteLattice() = default;

  std::size_t size() const { return labels_.size(); }
  Elem bottom() const { return 0; }
  Elem top() const { return static_cast<Elem>(size() - 1); }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Element id for a label; throws UnknownLabel.
  Elem at(std::string_view label) const;

  bool leq(Elem x, Elem y) const { return up_[x].test(y); }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
  bool covers(Elem lower, Elem upper) const;

  const std::vector<CoverPair>& cover_pairs() const { return covers_; }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_[x]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_[x]; }
  const Bitset& down_set(Elem x) const { return down_[x]; }
  const Bitset& up_set(Elem x) const { return up_[x]; }

  int height(Elem x) const { return height_[x]; }
  int depth(Elem x) const { return depth_[x]; }
  int length() const { return height_.back(); }

  std::vector<Elem> atoms() const { return upper_covers(bottom()); }
  std::vector<Elem> coatoms() const { return lower_covers(top()); }
  bool is_atom(Elem x) const { return lower_[x].size() == 1 && lower_[x][0] == bottom(); }

  /// Structural identity: same labels, same covers, same id order.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  friend FiniteLattice build_from_cover_ids(std::vector<std::string>, std::vector<CoverPair>, const BuildOptions&);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<Elem>> upper_, lower_;
  std::vector<Bitset> up_, down_;
  std::vector<Elem> meet_, join_;
  std::vector<int> height_, depth_;
};

/// Validates a cover relation given by element ids and synthesizes the order
/// and meet/join tables. Ids are renumbered into a linear extension (smallest
/// available id first), so an input already in linear-extension order keeps
/// its ids.
FiniteLattice build_from_cover_ids(std::vector<std::string> labels, std::vector<CoverPair> covers,
                                   const BuildOptions& opts = {});

FiniteLattice build_from_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const BuildOptions& opts = {});

/// Builds a lattice from a full order predicate (covers are derived).
FiniteLattice build_from_order(std::vector<std::string> labels, const std::function<bool(Elem, Elem)>& leq,
                               const BuildOptions& opts = {});

// Stock lattices.
FiniteLattice chain(std::size_t n);
FiniteLattice boolean(std::size_t m);
FiniteLattice m3();
FiniteLattice n5();
FiniteLattice hexagon();
/// "chain:N", "boolean:M", "m3", "n5", "hexagon".
FiniteLattice stock(std::string_view spec);

FiniteLattice dual(const FiniteLattice& l);
/// The sublattice [a, b]; throws NotComparable unless a <= b.
FiniteLattice interval(const FiniteLattice& l, Elem a, Elem b);

struct Sublattice {
  FiniteLattice lattice;
  std::vector<Elem> embedding;  // sublattice id -> id in the parent
};

bool is_sublattice(const FiniteLattice& l, std::span<const Elem> elements);
/// Throws NotASublattice when `elements` is not closed under meet and join.
Sublattice sublattice(const FiniteLattice& l, std::vector<Elem> elements);

int height(const FiniteLattice& l, Elem x);
int depth(const FiniteLattice& l, Elem x);
/// Nonzero elements with exactly one lower cover, in id order.
std::vector<Elem> join_irreducibles(const FiniteLattice& l);
std::vector<Elem> meet_irreducibles(const FiniteLattice& l);

/// A finite poset given by its full order relation.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const Bitset& up_set(std::size_t x) const { return up_[x]; }
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
  bool is_chain() const;
  bool is_antichain() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> up_;
};

Poset induced_poset(const FiniteLattice& l, std::span<const Elem> elements);
Poset as_poset(const FiniteLattice& l);

}  // namespace latcon
