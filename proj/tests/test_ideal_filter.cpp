#include <gtest/gtest.h>

#include "latcon/ideal_filter.hpp"
#include "latcon/verify.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

std::uint64_t mask_of(const Bitset& b) {
  std::uint64_t m = 0;
  b.for_each([&](std::size_t x) { m |= std::uint64_t{1} << x; });
  return m;
}

const std::vector<verify::CorpusEntry>& corpus() {
  static const auto c = verify::corpus();
  return c;
}

}  // namespace

TEST(Ideals, BooleanOnePerElement) {
  auto b3 = boolean(3);
  auto id = ideals(b3);
  ASSERT_EQ(id.size(), 8u);
  for (Elem x = 0; x < 8; ++x) {
    EXPECT_EQ(*id[x].generator, x);
    EXPECT_EQ(id[x].members, b3.down_set(x));
  }
}

TEST(Filters, GeneratedAndChains) {
  auto l = m3();
  const Elem ab[] = {l.at("a"), l.at("b")};
  auto f = filter_gen(l, ab);
  EXPECT_EQ(f.size(), 5u);
  EXPECT_EQ(*f.generator, l.bottom());
  EXPECT_EQ(filter_closure(l, ab), f);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(filters(chain(n)).size(), n);
  try {
    ideal_gen(l, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyGeneratorSet);
  }
  EXPECT_THROW(filter_closure(l, {}), Error);
}

TEST(Ideals, GeneratedIsDownSetOfJoin) {
  auto b3 = boolean(3);
  const Elem gens[] = {b3.at("{1}"), b3.at("{2}")};
  auto i = ideal_gen(b3, gens);
  EXPECT_EQ(*i.generator, b3.at("{1,2}"));
  EXPECT_EQ(i, ideal_closure(b3, gens));
  EXPECT_TRUE(is_ideal(b3, i.members));
  EXPECT_FALSE(is_filter(b3, i.members));
}

TEST(SubspaceIdeal, Examples) {
  auto s = sub_lattice(2, 3);
  auto empty = subspace_ideal(s, {});
  EXPECT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty.contains(s.lattice.bottom()));
  const std::size_t all[] = {0, 1, 2};
  EXPECT_EQ(subspace_ideal(s, all).size(), 16u);
  const std::size_t bad[] = {3};
  try {
    subspace_ideal(s, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(SubspaceIdeal, InjectiveInX) {
  for (unsigned p : {2u, 3u})
    for (std::size_t n = 1; n <= 4; ++n) {
      if (p == 3 && n == 4) continue;  // 212 elements, same shape as below
      auto s = sub_lattice(p, n);
      std::set<Bitset> seen;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> x;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U) x.push_back(i);
        auto id = subspace_ideal(s, x);
        EXPECT_TRUE(is_ideal(s.lattice, id.members));
        seen.insert(id.members);
      }
      EXPECT_EQ(seen.size(), std::size_t{1} << n);
    }
}

TEST(SubspaceIdeal, EveryIdealIsSubspacesOfOneW) {
  auto s = sub_lattice(3, 2);
  for (const auto& id : ideals(s.lattice)) {
    std::size_t matches = 0;
    for (const auto& w : s.subspaces) {
      bool same = true;
      for (Elem x = 0; x < s.lattice.size(); ++x) same = same && id.contains(x) == s.subspaces[x].is_subspace_of(w);
      matches += same ? 1 : 0;
    }
    EXPECT_EQ(matches, 1u);
  }
}

TEST(FilterPrincipality, Examples) {
  auto r = check_filter_principality(chain(4));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.all_principal);
  EXPECT_EQ(r.filter_count, 4u);
  auto s = check_filter_principality(sub_lattice(2, 2).lattice);
  EXPECT_EQ(s.filter_count, 5u);
  auto b = check_filter_principality(boolean(3));
  EXPECT_EQ(b.filter_count, 8u);
  EXPECT_EQ(b.generators.size(), 8u);
  EXPECT_TRUE(b.nonprincipal_clause_vacuous);
  EXPECT_TRUE(check_filter_principality(sub_lattice(2, 3).lattice).exhaustive);
  auto big = check_filter_principality(sub_lattice(2, 4).lattice);
  EXPECT_FALSE(big.exhaustive);
  EXPECT_TRUE(big.all_principal);
  EXPECT_EQ(big.filter_count, 67u);
}

class IdealCorpus : public ::testing::TestWithParam<std::size_t> {};

TEST_P(IdealCorpus, AllPrincipalAndCountEqualsSize) {
  const auto& l = corpus()[GetParam()].lattice;
  const auto id = ideals(l);
  const auto fi = filters(l);
  EXPECT_EQ(id.size(), l.size());
  EXPECT_EQ(fi.size(), l.size());
  if (l.size() <= 12) {
    std::set<std::uint64_t> fast;
    for (const auto& s : id) fast.insert(mask_of(s.members));
    EXPECT_EQ(fast, oracle::ideals(l));
  }
}

TEST_P(IdealCorpus, FiltersAreDualIdeals) {
  const auto& l = corpus()[GetParam()].lattice;
  const auto d = dual(l);
  const auto fi = filters(l);
  const auto id = ideals(d);
  ASSERT_EQ(fi.size(), id.size());
  const auto n = static_cast<Elem>(l.size());
  // dual() reverses ids
  for (std::size_t i = 0; i < fi.size(); ++i) {
    const auto& f = fi[i];
    const auto& g = id[n - 1 - *f.generator];
    EXPECT_EQ(*g.generator, n - 1 - *f.generator);
    EXPECT_EQ(f.size(), g.size());
  }
}

INSTANTIATE_TEST_SUITE_P(All, IdealCorpus, ::testing::Range<std::size_t>(0, corpus().size()));
