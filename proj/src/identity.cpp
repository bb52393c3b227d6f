#include "latcon/identity.hpp"

#include <algorithm>
#include <cctype>

#include "latcon/autgroup.hpp"
#include "latcon/construct.hpp"

namespace latcon {

Term Term::var(std::size_t index) {
  Term t;
  t.nodes_.push_back({Op::Var, index});
  return t;
}

Term Term::combine(Op op, const Term& a, const Term& b) {
  Term t;
  t.nodes_ = a.nodes_;
  t.nodes_.insert(t.nodes_.end(), b.nodes_.begin(), b.nodes_.end());
  t.nodes_.push_back({op, 0});
  return t;
}

Term Term::meet(const Term& a, const Term& b) { return combine(Op::Meet, a, b); }
Term Term::join(const Term& a, const Term& b) { return combine(Op::Join, a, b); }

std::size_t Term::arity() const {
  std::size_t k = 0;
  for (const auto& n : nodes_)
    if (n.op == Op::Var) k = std::max(k, n.var + 1);
  return k;
}

Term Term::dual() const {
  Term t = *this;
  for (auto& n : t.nodes_) {
    if (n.op == Op::Meet)
      n.op = Op::Join;
    else if (n.op == Op::Join)
      n.op = Op::Meet;
  }
  return t;
}

Term Term::renamed(const std::vector<std::size_t>& mapping) const {
  Term t = *this;
  for (auto& n : t.nodes_)
    if (n.op == Op::Var) n.var = mapping[n.var];
  return t;
}

Elem Term::eval(const FiniteLattice& l, const std::vector<Elem>& assignment) const {
  Elem stack[64]{};
  std::vector<Elem> heap;
  // Deep terms fall back to a heap stack.
  const bool small = nodes_.size() <= 64;
  if (!small) heap.resize(nodes_.size());
  Elem* st = small ? stack : heap.data();
  std::size_t top = 0;
  for (const auto& n : nodes_) {
    switch (n.op) {
      case Op::Var:
        st[top++] = assignment[n.var];
        break;
      case Op::Meet:
        --top;
        st[top - 1] = l.meet(st[top - 1], st[top]);
        break;
      case Op::Join:
        --top;
        st[top - 1] = l.join(st[top - 1], st[top]);
        break;
    }
  }
  return st[0];
}

std::string Term::to_string(const std::vector<std::string>& var_names) const {
  std::vector<std::string> st;
  for (const auto& n : nodes_) {
    if (n.op == Op::Var) {
      st.push_back(n.var < var_names.size() ? var_names[n.var] : "x" + std::to_string(n.var));
      continue;
    }
    std::string b = std::move(st.back());
    st.pop_back();
    st.back() = std::string(n.op == Op::Meet ? "(meet " : "(join ") + st.back() + " " + b + ")";
  }
  return st.empty() ? "" : st.back();
}

std::string Identity::to_string() const {
  return "(= " + lhs.to_string(var_names) + " " + rhs.to_string(var_names) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Identity identity() {
    expect('(');
    if (word() != "=") fail("expected '='");
    Identity id;
    id.lhs = term();
    id.rhs = term();
    expect(')');
    skip_space();
    if (pos_ != s_.size()) fail("trailing input");
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> mapping;
    for (const auto& name : names_)
      mapping.push_back(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), name) - sorted.begin()));
    id.lhs = id.lhs.renamed(mapping);
    id.rhs = id.rhs.renamed(mapping);
    id.var_names = std::move(sorted);
    return id;
  }

 private:
  Term term() {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      const std::string op = word();
      if (op != "meet" && op != "join") fail("unknown operator '" + op + "'");
      Term a = term();
      Term b = term();
      expect(')');
      return op == "meet" ? Term::meet(a, b) : Term::join(a, b);
    }
    const std::string name = word();
    if (name.empty()) fail("expected a term");
    if (name == "meet" || name == "join" || name == "=") fail("'" + name + "' is not a variable");
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      names_.push_back(name);
      return Term::var(names_.size() - 1);
    }
    return Term::var(static_cast<std::size_t>(it - names_.begin()));
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).identity(); }

Identity modular_law() { return parse_identity("(= (join (meet x z) (meet y z)) (meet (join (meet x z) y) z))"); }

Identity distributive_law() { return parse_identity("(= (meet x (join y z)) (join (meet x y) (meet x z)))"); }

HoldsResult holds_in(const FiniteLattice& l, const Identity& id, std::uint64_t budget) {
  const std::size_t k = std::max({id.arity(), id.lhs.arity(), id.rhs.arity()});
  const std::uint64_t n = l.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / n) throw Error(Errc::BudgetExceeded, "identity check needs more than " +
                                                                  std::to_string(budget) + " evaluations");
    total *= n;
  }
  if (total > budget / 2)
    throw Error(Errc::BudgetExceeded, "identity check needs more than " + std::to_string(budget) + " evaluations");

  HoldsResult r;
  std::vector<Elem> a(k, 0);
  while (true) {
    ++r.assignments_checked;
    if (id.lhs.eval(l, a) != id.rhs.eval(l, a)) {
      r.holds = false;
      r.counterexample = a;
      return r;
    }
    std::size_t i = k;
    while (i > 0 && a[i - 1] + 1 == n) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return r;
}

bool is_modular(const FiniteLattice& l) { return holds_in(l, modular_law()).holds; }
bool is_distributive(const FiniteLattice& l) { return holds_in(l, distributive_law()).holds; }

bool is_complemented(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x) {
    bool found = false;
    for (Elem y = 0; y < l.size() && !found; ++y) found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!found) return false;
  }
  return true;
}

bool is_relatively_complemented(const FiniteLattice& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a; b < l.size(); ++b) {
      if (!l.leq(a, b)) continue;
      const Bitset in = l.up_set(a) & l.down_set(b);
      bool ok = true;
      in.for_each([&](std::size_t x) {
        if (!ok) return;
        bool found = false;
        in.for_each([&](std::size_t y) {
          if (!found && l.meet(static_cast<Elem>(x), static_cast<Elem>(y)) == a &&
              l.join(static_cast<Elem>(x), static_cast<Elem>(y)) == b)
            found = true;
        });
        ok = found;
      });
      if (!ok) return false;
    }
  return true;
}

bool is_selfdual(const FiniteLattice& l) { return isomorphic(l, dual(l)); }

bool has_n5_sublattice(const FiniteLattice& l) {
  // a < c and b with a ∧ b = c ∧ b and a ∨ b = c ∨ b span a pentagon.
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      if (!l.lt(a, c)) continue;
      for (Elem b = 0; b < n; ++b)
        if (l.meet(a, b) == l.meet(c, b) && l.join(a, b) == l.join(c, b)) return true;
    }
  return false;
}

bool has_m3_sublattice(const FiniteLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (l.comparable(x, y)) continue;
      const Elem m = l.meet(x, y), j = l.join(x, y);
      for (Elem z = y + 1; z < n; ++z)
        if (l.meet(x, z) == m && l.meet(y, z) == m && l.join(x, z) == j && l.join(y, z) == j) return true;
    }
  return false;
}

TransferReport identity_transfer_check(const FiniteLattice& a, const FiniteLattice& b, const Identity& id,
                                       std::uint64_t budget) {
  return {holds_in(a, id, budget).holds, holds_in(b, id, budget).holds, holds_in(glued_sum(a, b), id, budget).holds};
}

}  // namespace latcon
