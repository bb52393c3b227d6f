#pragma once

// Ideals and filters of finite lattices. Members are bitsets over element ids.
//
// ideals()/filters() do not assume principality: every candidate is produced
// by closure (down/up-closing and join/meet-closing until a fixpoint), and the
// principal generator is then read off and checked.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcon/bitset.hpp"
#include "latcon/lattice.hpp"
#include "latcon/subspace.hpp"

namespace latcon {

enum class SetKind { Ideal, Filter };

struct IdealOrFilter {
  SetKind kind = SetKind::Ideal;
  Bitset members;
  std::optional<Elem> generator;  // max of an ideal / min of a filter, when principal

  std::size_t size() const { return members.count(); }
  bool contains(Elem x) const { return members.test(x); }
  friend bool operator==(const IdealOrFilter&, const IdealOrFilter&) = default;
};

bool is_ideal(const FiniteLattice& l, const Bitset& s);
bool is_filter(const FiniteLattice& l, const Bitset& s);

/// Ideal (filter) generated by S, computed by closure. Throws EmptyGeneratorSet.
IdealOrFilter ideal_closure(const FiniteLattice& l, std::span<const Elem> generators);
IdealOrFilter filter_closure(const FiniteLattice& l, std::span<const Elem> generators);

/// Principal forms: down-set of the join of S / up-set of the meet of S.
/// Throws EmptyGeneratorSet.
IdealOrFilter ideal_gen(const FiniteLattice& l, std::span<const Elem> generators);
IdealOrFilter filter_gen(const FiniteLattice& l, std::span<const Elem> generators);
IdealOrFilter principal_ideal(const FiniteLattice& l, Elem x);
IdealOrFilter principal_filter(const FiniteLattice& l, Elem x);

/// All ideals (filters), one per element for a finite lattice, in generator
/// id order. Throws std::logic_error if a closure ever yields a non-principal
/// set.
std::vector<IdealOrFilter> ideals(const FiniteLattice& l);
std::vector<IdealOrFilter> filters(const FiniteLattice& l);

/// Ideal of Sub(F_p^n) of all subspaces of span{e_i : i in basis_indices}.
/// Throws IndexOutOfRange.
IdealOrFilter subspace_ideal(const SubspaceLattice& sub, std::span<const std::size_t> basis_indices);

struct FilterPrincipalityReport {
  bool exhaustive = false;           // every nonempty generator subset was tried
  std::size_t generator_sets_tried = 0;
  std::size_t filter_count = 0;      // distinct filters found
  bool all_principal = false;
  std::vector<Elem> generators;      // least element of each filter found, ascending
  // Finite lattices have no non-principal filters, so the statement that each
  // one is generated by a filter of a DCC-violating ideal holds vacuously.
  bool nonprincipal_clause_vacuous = true;
};

/// Closes every nonempty subset (when |L| <= exhaustive_limit, else every
/// subset of size <= 2) into a filter and checks that each is principal.
FilterPrincipalityReport check_filter_principality(const FiniteLattice& l, std::size_t exhaustive_limit = 16);

std::string to_string(const FiniteLattice& l, const IdealOrFilter& s);

}  // namespace latcon
