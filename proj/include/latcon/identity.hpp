#pragma once

// Lattice terms and identities, exhaustive identity checking, and the
// standard lattice-class predicates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

/// A term tree stored in postfix order; the root is the last node.
class Term {
 public:
  enum class Op : std::uint8_t { Var, Meet, Join };
  struct Node {
    Op op;
    std::size_t var;  // variable index for Var nodes
    friend bool operator==(const Node&, const Node&) = default;
  };

  static Term var(std::size_t index);
  static Term meet(const Term& a, const Term& b);
  static Term join(const Term& a, const Term& b);

  const std::vector<Node>& nodes() const { return nodes_; }
  /// One more than the largest variable index used.
  std::size_t arity() const;
  Term dual() const;
  /// Variable i becomes variable mapping[i].
  Term renamed(const std::vector<std::size_t>& mapping) const;
  Elem eval(const FiniteLattice& l, const std::vector<Elem>& assignment) const;
  std::string to_string(const std::vector<std::string>& var_names) const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  static Term combine(Op op, const Term& a, const Term& b);
  std::vector<Node> nodes_;
};

struct Identity {
  Term lhs, rhs;
  std::vector<std::string> var_names;  // index -> name, sorted by name

  std::size_t arity() const { return var_names.size(); }
  Identity dual() const { return {lhs.dual(), rhs.dual(), var_names}; }
  /// "(= lhs rhs)" in the prefix syntax accepted by parse_identity.
  std::string to_string() const;
};

/// Parses "(= t1 t2)" where a term is a variable name or "(meet t t)" /
/// "(join t t)". Variables are indexed in sorted name order.
/// Throws ParseError.
Identity parse_identity(std::string_view text);

Identity modular_law();
Identity distributive_law();

struct HoldsResult {
  bool holds = true;
  std::optional<std::vector<Elem>> counterexample;  // first failing assignment in lexicographic order
  std::uint64_t assignments_checked = 0;
};

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

/// Evaluates both sides under every assignment. The cost is counted as two
/// term evaluations per assignment; throws BudgetExceeded when |L|^k * 2
/// would exceed the budget.
HoldsResult holds_in(const FiniteLattice& l, const Identity& id, std::uint64_t budget = kDefaultEvalBudget);

bool is_modular(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);
bool is_complemented(const FiniteLattice& l);
bool is_relatively_complemented(const FiniteLattice& l);
bool is_selfdual(const FiniteLattice& l);

/// Forbidden-sublattice tests, independent of the identity route.
bool has_n5_sublattice(const FiniteLattice& l);
bool has_m3_sublattice(const FiniteLattice& l);

struct TransferReport {
  bool in_a = false;
  bool in_b = false;
  bool in_sum = false;
  /// in_sum == (in_a && in_b)
  bool consistent() const { return in_sum == (in_a && in_b); }
};

TransferReport identity_transfer_check(const FiniteLattice& a, const FiniteLattice& b, const Identity& id,
                                       std::uint64_t budget = kDefaultEvalBudget);

}  // namespace latcon
