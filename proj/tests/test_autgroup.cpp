#include <gtest/gtest.h>

#include <random>

#include "latcon/autgroup.hpp"
#include "latcon/congruence.hpp"
#include "latcon/construct.hpp"
#include "latcon/subspace.hpp"
#include "latcon/verify.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

const std::vector<verify::CorpusEntry>& corpus() {
  static const auto c = verify::corpus();
  return c;
}

}  // namespace

TEST(Automorphisms, Orders) {
  EXPECT_EQ(automorphisms(chain(7)).order, 1u);
  EXPECT_EQ(automorphisms(m3()).order, 6u);
  EXPECT_EQ(automorphisms(boolean(3)).order, 6u);
  EXPECT_EQ(automorphisms(boolean(4)).order, 24u);
  EXPECT_EQ(automorphisms(n5()).order, 1u);
  EXPECT_EQ(automorphisms(hexagon()).order, 2u);
  EXPECT_EQ(automorphisms(sub_lattice(2, 3).lattice).order, 168u);
  EXPECT_EQ(automorphisms(sub_lattice(2, 4).lattice).order, 20160u);
  EXPECT_TRUE(is_rigid(n5()));
  EXPECT_FALSE(is_rigid(m3()));
}

TEST(Automorphisms, ProfileAndNotation) {
  auto g = automorphisms(m3());
  auto prof = group_profile(g);
  ASSERT_TRUE(prof.has_value());
  EXPECT_EQ(prof->order, 6u);
  EXPECT_EQ(prof->element_orders, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_FALSE(group_profile(automorphisms(sub_lattice(2, 4).lattice)).has_value());
  auto l = m3();
  Perm id{0, 1, 2, 3, 4};
  EXPECT_EQ(cycle_notation(l, id), "()");
  Perm swap{0, 2, 1, 3, 4};
  EXPECT_TRUE(is_automorphism(l, swap));
  EXPECT_EQ(cycle_notation(l, swap), "(a b)");
  Perm bad{4, 1, 2, 3, 0};
  EXPECT_FALSE(is_automorphism(l, bad));
}

TEST(Automorphisms, SizeLimit) {
  try {
    automorphisms(boolean(4), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimitExceeded);
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(isomorphic(sub_lattice(2, 2).lattice, m3()));
  EXPECT_FALSE(isomorphic(m3(), n5()));
  EXPECT_FALSE(isomorphic(chain(3), chain(4)));
  auto f = find_isomorphism(dual(n5()), n5());
  ASSERT_TRUE(f.has_value());
  auto d = dual(n5());
  auto n = n5();
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) EXPECT_EQ(d.leq(x, y), n.leq((*f)[x], (*f)[y]));
}

TEST(AllLattices, Counts) {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(all_lattices(n).size(), expected[n - 1]) << n;
}

TEST(AllLattices, PairwiseNonIsomorphicByOracle) {
  auto six = all_lattices(6);
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) ASSERT_FALSE(oracle::isomorphic(six[i], six[j]));
}

TEST(RigidSimple, Examples) {
  auto found = find_rigid_simple(10, 3);
  ASSERT_EQ(found.size(), 3u);
  EXPECT_EQ(found[0].size(), 7u);
  for (const auto& l : found) {
    EXPECT_TRUE(is_rigid(l));
    EXPECT_TRUE(is_simple(l));
    EXPECT_GE(l.size(), 3u);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j) EXPECT_FALSE(isomorphic(found[i], found[j]));
  EXPECT_TRUE(find_rigid_simple(10, 0).empty());
  try {
    find_rigid_simple(6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEnoughFound);
  }
}

TEST(RigidSimple, AtomReplacementBreaksSymmetry) {
  auto l = m3();
  auto r = replace_atom_intervals(l, {{l.at("a"), chain(3)}});
  EXPECT_EQ(automorphisms(r).order, 2u);
  auto r2 = replace_atom_intervals(l, {{l.at("a"), chain(3)}, {l.at("b"), chain(4)}});
  EXPECT_TRUE(is_rigid(r2));
  EXPECT_EQ(oracle::automorphisms(r2).size(), 1u);
}

TEST(RandomLattice, DeterministicAndValid) {
  std::mt19937_64 a(7), b(7);
  auto x = random_lattice(9, a);
  auto y = random_lattice(9, b);
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.size(), 9u);
  for (Elem i = 0; i < x.size(); ++i)
    for (Elem j = 0; j < x.size(); ++j) ASSERT_EQ(x.meet(i, j), oracle::glb(x, i, j));
}

class AutCorpus : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AutCorpus, GroupMatchesBruteForce) {
  const auto& l = corpus()[GetParam()].lattice;
  if (l.size() > 8) GTEST_SKIP() << "oracle enumerates n! permutations";
  EXPECT_EQ(automorphisms(l).order, oracle::automorphisms(l).size());
}

TEST_P(AutCorpus, GeneratorsPreserveStructure) {
  const auto& l = corpus()[GetParam()].lattice;
  for (const auto& g : automorphisms(l).generators) {
    ASSERT_TRUE(is_automorphism(l, g));
    for (Elem x = 0; x < l.size(); ++x) {
      ASSERT_EQ(l.height(g[x]), l.height(x));
      ASSERT_EQ(l.depth(g[x]), l.depth(x));
      for (Elem y = 0; y < l.size(); ++y) {
        ASSERT_EQ(g[l.meet(x, y)], l.meet(g[x], g[y]));
        ASSERT_EQ(g[l.join(x, y)], l.join(g[x], g[y]));
      }
    }
  }
}

TEST_P(AutCorpus, DualHasSameGroupOrder) {
  const auto& l = corpus()[GetParam()].lattice;
  EXPECT_EQ(automorphisms(l).order, automorphisms(dual(l)).order);
}

TEST_P(AutCorpus, IsomorphismAgreesWithOracle) {
  const auto& l = corpus()[GetParam()].lattice;
  if (l.size() > 8) GTEST_SKIP();
  const auto& other = corpus()[(GetParam() * 7 + 3) % corpus().size()].lattice;
  EXPECT_EQ(isomorphic(l, other), oracle::isomorphic(l, other));
  EXPECT_TRUE(isomorphic(l, dual(dual(l))));
}

INSTANTIATE_TEST_SUITE_P(All, AutCorpus, ::testing::Range<std::size_t>(0, corpus().size()));
