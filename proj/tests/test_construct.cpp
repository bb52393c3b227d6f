#include <gtest/gtest.h>

#include "latcon/autgroup.hpp"
#include "latcon/construct.hpp"
#include "latcon/identity.hpp"
#include "latcon/subspace.hpp"
#include "latcon/verify.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::FormatError;
}

std::size_t con_size(const FiniteLattice& l) { return all_congruences(l).size(); }

const std::vector<verify::CorpusEntry>& small_corpus() {
  static const auto c = [] {
    std::vector<verify::CorpusEntry> out;
    for (auto& e : verify::corpus())
      if (e.lattice.size() <= 6) out.push_back(e);
    return out;
  }();
  return c;
}

}  // namespace

TEST(GluedSum, IdsLabelsAndCongruences) {
  auto g = glued_sum(chain(2), m3());
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.label(0), "s0.0");
  EXPECT_EQ(g.label(1), "s0.1");
  EXPECT_EQ(g.atoms().size(), 1u);
  EXPECT_EQ(con_size(glued_sum(m3(), m3())), 4u);
  const FiniteLattice parts[] = {chain(2), chain(2), chain(2)};
  EXPECT_TRUE(oracle::isomorphic(glued_sum(parts), chain(4)));
}

TEST(GluedSum, CongruenceCountIsMultiplicative) {
  const auto& c = small_corpus();
  for (std::size_t i = 0; i < c.size(); i += 3)
    for (std::size_t j = 0; j < c.size(); j += 4) {
      const auto& a = c[i].lattice;
      const auto& b = c[j].lattice;
      if (a.size() + b.size() - 1 > 12) continue;
      ASSERT_EQ(con_size(glued_sum(a, b)), con_size(a) * con_size(b)) << c[i].name << " + " << c[j].name;
    }
}

TEST(WGadget, Shape) {
  auto w = w_gadget(m3());
  ASSERT_EQ(w.size(), 9u);
  EXPECT_EQ(w.label(0), "0'");
  EXPECT_EQ(w.label(8), "1'");
  EXPECT_EQ(w.label(6), "u");
  EXPECT_EQ(w.label(7), "v");
  EXPECT_EQ(w.atoms().size(), 3u);
  EXPECT_EQ(con_size(w), 3u);
  EXPECT_FALSE(is_modular(w));
  EXPECT_FALSE(is_relatively_complemented(w));
}

TEST(WGadget, AddsOneCongruenceToSimpleLattices) {
  for (const auto& k : {m3(), sub_lattice(3, 2).lattice, sub_lattice(2, 3).lattice, chain(2)}) {
    const auto con = all_congruences(w_gadget(k));
    EXPECT_EQ(con.size(), 3u);
    EXPECT_TRUE(as_poset(con.lattice).is_chain());
  }
}

TEST(WGadget, TrivialSeedGivesM3) {
  EXPECT_TRUE(oracle::isomorphic(w_gadget(chain(1)), m3()));
  EXPECT_EQ(glued_sum(m3(), boolean(2)).size(), 8u);
  EXPECT_TRUE(oracle::isomorphic(glued_sum(chain(2), chain(2)), chain(3)));
}

TEST(WGadget, LabelCollisionsArePrimed) {
  auto k = build_from_covers({"u", "0'"}, {{"u", "0'"}});
  auto w = w_gadget(k);
  EXPECT_EQ(w.label(0), "0''");
  EXPECT_TRUE(w.find("u'").has_value());
}

TEST(Tower, ConIsChain) {
  for (std::size_t i = 0; i <= 4; ++i) {
    auto t = tower(m3(), i);
    EXPECT_EQ(t.index, i);
    EXPECT_EQ(t.lattice.size(), 5 + 4 * i);
    const auto con = all_congruences(t.lattice);
    EXPECT_EQ(con.size(), 2 + i);
    EXPECT_TRUE(as_poset(con.lattice).is_chain());
    ASSERT_EQ(t.chain.size(), i + 1);
    ASSERT_EQ(t.stage_tops.size(), i + 1);
    EXPECT_EQ(t.chain.back(), t.lattice.bottom());
    EXPECT_EQ(t.stage_tops.back(), t.lattice.top());
  }
}

TEST(Tower, NontrivialCongruencesCollapseExactlyOneStage) {
  auto t = tower(m3(), 3);
  const auto& l = t.lattice;
  std::set<std::vector<Elem>> stages;
  for (std::size_t j = 0; j < t.chain.size(); ++j) {
    std::vector<Elem> s;
    for (Elem x = 0; x < l.size(); ++x)
      if (l.leq(t.chain[j], x) && l.leq(x, t.stage_tops[j])) s.push_back(x);
    stages.insert(s);
  }
  for (const auto& theta : all_congruences(l).congruences) {
    if (theta.is_identity() || theta.is_all()) continue;
    std::vector<std::vector<Elem>> big;
    for (const auto& b : theta.blocks())
      if (b.size() > 1) big.push_back(b);
    ASSERT_EQ(big.size(), 1u);
    EXPECT_TRUE(stages.count(big[0])) << theta.to_string(l);
  }
}

TEST(Tower, WarningsAndLimits) {
  std::vector<std::string> warnings;
  TowerOptions o;
  o.on_warning = [&](const std::string& w) { warnings.push_back(w); };
  tower(n5(), 1, o);
  EXPECT_EQ(warnings.size(), 1u);
  o.max_size = 12;
  EXPECT_EQ(code_of([&] { tower(m3(), 3, o); }), Errc::SizeLimitExceeded);
}

TEST(ReplaceAtoms, Examples) {
  auto l = m3();
  auto r = replace_atom_intervals(l, {{l.at("a"), chain(3)}});
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r.label(1), "a/1");
  EXPECT_EQ(all_congruences(r).size(), oracle::congruences(r).size());
  EXPECT_TRUE(replace_atom_intervals(l, {}) == l);
  EXPECT_EQ(code_of([&] { replace_atom_intervals(l, {{l.top(), chain(3)}}); }), Errc::NotAnAtom);
  EXPECT_EQ(code_of([&] { replace_atom_intervals(l, {{l.at("a"), chain(1)}}); }), Errc::UnboundedReplacement);
}

TEST(ReplaceAtoms, ChainReplacementKeepsLatticeAxioms) {
  auto b3 = boolean(3);
  std::map<Elem, FiniteLattice> rep;
  for (Elem a : b3.atoms()) rep.emplace(a, chain(3));
  auto r = replace_atom_intervals(b3, rep);
  EXPECT_EQ(r.size(), 11u);
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y) {
      ASSERT_EQ(r.meet(x, y), oracle::glb(r, x, y));
      ASSERT_EQ(r.join(x, y), oracle::lub(r, x, y));
    }
}

TEST(M3Cap, EmbeddingsAndErrors) {
  auto cap = m3_cap(m3(), n5());
  const auto& l = cap.lattice;
  EXPECT_EQ(l.size(), 1 + 4 + 4 + 2);
  EXPECT_EQ(cap.lp_embedding.size(), 5u);
  EXPECT_EQ(cap.h_embedding.size(), 5u);
  EXPECT_EQ(cap.lp_embedding[0], l.bottom());
  EXPECT_EQ(cap.h_embedding[0], l.bottom());
  EXPECT_EQ(cap.h_embedding[4], cap.v);
  EXPECT_EQ(cap.top, l.top());
  EXPECT_TRUE(l.covers(cap.v, cap.top));
  for (Elem x = 1; x < 5; ++x) {
    EXPECT_EQ(l.meet(cap.lp_embedding[x], cap.u), l.bottom());
    EXPECT_EQ(l.join(cap.lp_embedding[x], cap.u), l.top());
  }
  auto n = n5();
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) {
      EXPECT_EQ(cap.h_embedding[n.meet(x, y)], l.meet(cap.h_embedding[x], cap.h_embedding[y]));
      EXPECT_EQ(cap.h_embedding[n.join(x, y)], l.join(cap.h_embedding[x], cap.h_embedding[y]));
    }
  EXPECT_EQ(code_of([] { m3_cap(chain(2), n5()); }), Errc::TooSmall);
  EXPECT_EQ(code_of([] { m3_cap(m3(), chain(1)); }), Errc::TooSmall);
}

TEST(M3Cap, CongruencesMatchTheBrokenPart) {
  for (const auto& lp : {m3(), sub_lattice(3, 2).lattice}) {
    EXPECT_EQ(con_size(m3_cap(lp, chain(2)).lattice), 2u);
    EXPECT_EQ(con_size(m3_cap(lp, n5()).lattice), 3u);
    EXPECT_EQ(con_size(m3_cap(lp, hexagon()).lattice), 5u);
  }
}

TEST(M3Cap, ZeroSeparatedBaseIsTransported) {
  for (const auto& e : small_corpus()) {
    const auto& h = e.lattice;
    if (h.size() < 2 || !zero_separated(h)) continue;
    auto cap = m3_cap(m3(), h);
    EXPECT_TRUE(isomorphic(all_congruences(cap.lattice).lattice, all_congruences(h).lattice)) << e.name;
  }
}

TEST(ZeroSeparated, Examples) {
  EXPECT_TRUE(zero_separated(chain(2)));
  EXPECT_TRUE(zero_separated(m3()));
  EXPECT_FALSE(zero_separated(n5()));
  EXPECT_FALSE(zero_separated(boolean(2)));
  EXPECT_FALSE(zero_separated(chain(3)));
  // cg(0,a) collapses only {0,a,b} and {c,d,1}
  EXPECT_FALSE(zero_separated(hexagon()));
}

TEST(Composite, CongruenceCounts) {
  const std::tuple<std::size_t, std::size_t, std::size_t> cases[] = {
      {1, 0, 2}, {0, 1, 3}, {1, 1, 6}, {2, 0, 4}, {2, 1, 12}, {0, 2, 9}};
  for (auto [m, n, expected] : cases) EXPECT_EQ(con_size(freese_composite(2, 2, m, n)), expected) << m << "," << n;
  EXPECT_EQ(con_size(freese_composite(3, 2, 1, 1)), 6u);
  EXPECT_EQ(code_of([] { freese_composite(2, 2, 0, 0); }), Errc::InvalidParameters);
  EXPECT_EQ(code_of([] { freese_composite(2, 1, 1, 0); }), Errc::InvalidParameters);
}

TEST(ProductOfChains, ShapeAndCoordinateCongruences) {
  auto l = product_of_chains(2, 1);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l.label(0), "(0,0)");
  EXPECT_EQ(l.label(1), "(0,1)");
  EXPECT_TRUE(oracle::isomorphic(l, boolean(2)));
  EXPECT_EQ(con_size(l), 4u);
  auto p = product_of_chains(2, 2);
  const auto con = all_congruences(p);
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    std::vector<std::size_t> x;
    for (std::size_t i = 0; i < 2; ++i)
      if (mask >> i & 1U) x.push_back(i);
    auto theta = theta_of(2, 2, x);
    EXPECT_TRUE(is_compatible(p, theta));
    std::size_t blocks = 1;
    for (std::size_t i = 0; i < x.size(); ++i) blocks *= 3;
    EXPECT_EQ(theta.num_blocks(), blocks);
    EXPECT_LT(con.index_of(theta), con.size());
  }
  const std::size_t both[] = {0, 1};
  EXPECT_TRUE(theta_of(2, 2, both).is_identity());
  EXPECT_TRUE(theta_of(2, 2, {}).is_all());
  const std::size_t bad[] = {2};
  EXPECT_EQ(code_of([&] { theta_of(2, 2, bad); }), Errc::IndexOutOfRange);
  EXPECT_EQ(code_of([] { product_of_chains(5, 3, 100); }), Errc::SizeLimitExceeded);
}

TEST(Transfer, GluedSumSatisfiesIdentityIffBothDo) {
  EXPECT_EQ(identity_transfer_check(chain(2), m3(), distributive_law()).in_sum, false);
  const auto& c = small_corpus();
  for (const auto& id : {modular_law(), distributive_law()})
    for (std::size_t i = 0; i < c.size(); i += 2)
      for (std::size_t j = 1; j < c.size(); j += 5) {
        auto r = identity_transfer_check(c[i].lattice, c[j].lattice, id);
        ASSERT_TRUE(r.consistent()) << c[i].name << " + " << c[j].name;
        ASSERT_EQ(r.in_sum, r.in_a && r.in_b);
      }
}
