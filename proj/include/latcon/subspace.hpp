#pragma once

// Subspaces of F_p^n in reduced row-echelon form, and the subspace lattice
// Sub(F_p^n) ordered by inclusion.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

using GfRow = std::vector<std::uint8_t>;

bool is_prime(unsigned p);

/// A subspace of F_p^n. The basis is the unique reduced row-echelon matrix of
/// the subspace (leading 1s, strictly increasing pivots, zeros above pivots),
/// so equality of values is equality of subspaces.
class Subspace {
 public:
  /// The zero subspace of F_p^n.
  Subspace(unsigned p, std::size_t n);

  unsigned p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GfRow>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const GfRow& v) const;
  /// Inclusion: *this is a subspace of `other`.
  bool is_subspace_of(const Subspace& other) const;

  /// "[110,001]" (entries dot-separated when p > 10); "[]" for the zero space.
  std::string to_string() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace canonicalize(unsigned, std::size_t, std::span<const GfRow>);
  friend Subspace from_echelon(unsigned, std::size_t, std::vector<GfRow>);

  unsigned p_;
  std::size_t n_;
  std::vector<GfRow> basis_;
  std::vector<std::size_t> pivots_;
};

/// Echelon form of the span. Throws NotPrime, DimensionMismatch, or
/// InvalidParameter for entries outside 0..p-1.
Subspace canonicalize(unsigned p, std::size_t n, std::span<const GfRow> vectors);
inline Subspace canonicalize(unsigned p, std::size_t n, const std::vector<GfRow>& vectors) {
  return canonicalize(p, n, std::span<const GfRow>(vectors));
}

/// span{e_i : i in indices}; throws IndexOutOfRange.
Subspace unit_span(unsigned p, std::size_t n, std::span<const std::size_t> indices);

Subspace sum(const Subspace& a, const Subspace& b);
/// Intersection through the kernel of [basis(a); basis(b)]^T.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Number of k-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, unsigned p);
std::uint64_t subspace_count(unsigned p, std::size_t n);

/// All subspaces, by dimension, generated directly as echelon matrices
/// (pivot pattern, then free entries). No duplicates.
std::vector<Subspace> enumerate_subspaces(unsigned p, std::size_t n);

struct SubspaceLattice {
  FiniteLattice lattice;
  std::vector<Subspace> subspaces;  // indexed by lattice element id

  std::optional<Elem> find(const Subspace& s) const;
};

/// Sub(F_p^n); element labels are the echelon matrices. Throws
/// SizeLimitExceeded when the subspace count exceeds max_size.
SubspaceLattice sub_lattice(unsigned p, std::size_t n, std::size_t max_size = kDefaultMaxSize);

}  // namespace latcon
