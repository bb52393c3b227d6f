#include <gtest/gtest.h>

#include "latcon/construct.hpp"
#include "latcon/identity.hpp"
#include "latcon/subspace.hpp"
#include "latcon/verify.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

const std::vector<verify::CorpusEntry>& corpus() {
  static const auto c = verify::corpus();
  return c;
}

// Distributivity and modularity checked directly on the order, without terms.
bool brute_distributive(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      for (Elem z = 0; z < l.size(); ++z)
        if (oracle::glb(l, x, oracle::lub(l, y, z)) != oracle::lub(l, oracle::glb(l, x, y), oracle::glb(l, x, z)))
          return false;
  return true;
}

bool brute_modular(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      for (Elem z = 0; z < l.size(); ++z)
        if (l.leq(x, z) && oracle::lub(l, x, oracle::glb(l, y, z)) != oracle::glb(l, oracle::lub(l, x, y), z))
          return false;
  return true;
}

}  // namespace

TEST(Parse, RoundTripAndSortedVariables) {
  auto id = parse_identity("(= (meet y x) (meet x y))");
  EXPECT_EQ(id.var_names, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(id.arity(), 2u);
  EXPECT_EQ(parse_identity(id.to_string()).to_string(), id.to_string());
  EXPECT_EQ(id.to_string(), "(= (meet y x) (meet x y))");
  auto m = modular_law();
  EXPECT_EQ(parse_identity(m.to_string()).lhs, m.lhs);
  EXPECT_EQ(m.arity(), 3u);
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "(= x)", "(= x y", "(meet x y)", "(= (meet x) y)", "(= (foo x y) x)", "(= x y) z",
                          "(= (join x y z) x)"}) {
    try {
      parse_identity(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
}

TEST(Dual, SwapsOperations) {
  auto d = distributive_law().dual();
  EXPECT_EQ(d.to_string(), "(= (join x (meet y z)) (meet (join x y) (join x z)))");
  EXPECT_EQ(d.dual().lhs, distributive_law().lhs);
}

TEST(Holds, PentagonCounterexample) {
  auto r = holds_in(n5(), modular_law());
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  auto l = n5();
  std::vector<Elem> want{l.at("a"), l.at("b"), l.at("c")};
  EXPECT_EQ(*r.counterexample, want);
  EXPECT_TRUE(holds_in(m3(), modular_law()).holds);
  EXPECT_FALSE(holds_in(m3(), distributive_law()).holds);
  auto b = holds_in(boolean(3), distributive_law());
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.assignments_checked, 512u);
}

TEST(Holds, BudgetExceeded) {
  try {
    holds_in(sub_lattice(2, 4).lattice, modular_law(), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Predicates, Examples) {
  auto s = sub_lattice(2, 3).lattice;
  EXPECT_TRUE(is_modular(s));
  EXPECT_FALSE(is_distributive(s));
  EXPECT_TRUE(is_complemented(s));
  EXPECT_TRUE(is_relatively_complemented(s));
  EXPECT_FALSE(has_n5_sublattice(s));
  EXPECT_TRUE(has_m3_sublattice(s));
  EXPECT_TRUE(is_selfdual(s));
  EXPECT_TRUE(is_complemented(n5()));
  EXPECT_FALSE(is_relatively_complemented(n5()));
  EXPECT_FALSE(is_complemented(chain(3)));
  EXPECT_TRUE(is_selfdual(n5()));
  EXPECT_FALSE(is_selfdual(glued_sum(boolean(2), chain(3))));
  auto w = w_gadget(m3());
  EXPECT_FALSE(is_modular(w));
  EXPECT_FALSE(is_relatively_complemented(w));
}

TEST(Transfer, Examples) {
  auto r = identity_transfer_check(chain(2), m3(), distributive_law());
  EXPECT_TRUE(r.in_a);
  EXPECT_FALSE(r.in_b);
  EXPECT_FALSE(r.in_sum);
  auto s = identity_transfer_check(n5(), chain(2), modular_law());
  EXPECT_FALSE(s.in_a);
  EXPECT_TRUE(s.in_b);
  EXPECT_FALSE(s.in_sum);
}

class IdentityCorpus : public ::testing::TestWithParam<std::size_t> {};

TEST_P(IdentityCorpus, ShortcutsAgreeWithTermsAndOrder) {
  const auto& l = corpus()[GetParam()].lattice;
  const bool mod = holds_in(l, modular_law()).holds;
  const bool dist = holds_in(l, distributive_law()).holds;
  EXPECT_EQ(is_modular(l), mod);
  EXPECT_EQ(is_distributive(l), dist);
  EXPECT_EQ(mod, !has_n5_sublattice(l));
  EXPECT_EQ(dist, mod && !has_m3_sublattice(l));
  if (l.size() <= 10) {
    EXPECT_EQ(mod, brute_modular(l));
    EXPECT_EQ(dist, brute_distributive(l));
  }
  if (dist) EXPECT_TRUE(mod);
}

TEST_P(IdentityCorpus, DualIdentityHoldsInDual) {
  const auto& l = corpus()[GetParam()].lattice;
  const auto d = dual(l);
  for (const auto& id : {modular_law(), distributive_law(), parse_identity("(= (meet x (join x y)) x)")})
    EXPECT_EQ(holds_in(l, id).holds, holds_in(d, id.dual()).holds);
  EXPECT_TRUE(holds_in(l, parse_identity("(= (join x (meet x y)) x)")).holds);
}

INSTANTIATE_TEST_SUITE_P(All, IdentityCorpus, ::testing::Range<std::size_t>(0, corpus().size()));
