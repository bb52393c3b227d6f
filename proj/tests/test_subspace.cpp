#include <gtest/gtest.h>

#include "latcon/autgroup.hpp"
#include "latcon/subspace.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

std::set<GfRow> vectors_of(const Subspace& s) { return oracle::span(s.p(), s.ambient_dim(), s.basis()); }

}  // namespace

TEST(Canonicalize, Examples) {
  const std::vector<GfRow> one{{1, 1}};
  auto s = canonicalize(2, 2, one);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis(), one);

  const std::vector<GfRow> two{{1, 0}, {1, 1}};
  EXPECT_EQ(canonicalize(2, 2, two).dim(), 2u);

  const std::vector<GfRow> scaled{{2, 2}};
  EXPECT_EQ(canonicalize(3, 2, scaled).basis(), (std::vector<GfRow>{{1, 1}}));

  EXPECT_EQ(canonicalize(5, 3, std::vector<GfRow>{}).dim(), 0u);
  EXPECT_EQ(canonicalize(5, 3, std::vector<GfRow>{}).to_string(), "[]");
}

TEST(Canonicalize, Errors) {
  const std::vector<GfRow> v{{1, 0}};
  try {
    canonicalize(4, 2, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  try {
    canonicalize(2, 3, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
  EXPECT_THROW(Subspace(257, 2), Error);
}

TEST(Canonicalize, EqualSpansGiveEqualForms) {
  // Every pair of vectors in F_3^3: canonical forms agree iff spans agree.
  std::vector<GfRow> all;
  for (int i = 0; i < 27; ++i) all.push_back({static_cast<std::uint8_t>(i / 9), static_cast<std::uint8_t>(i / 3 % 3),
                                              static_cast<std::uint8_t>(i % 3)});
  std::vector<Subspace> forms;
  std::vector<std::set<GfRow>> spans;
  for (const auto& a : all)
    for (const auto& b : all) {
      const std::vector<GfRow> v{a, b};
      forms.push_back(canonicalize(3, 3, v));
      spans.push_back(oracle::span(3, 3, v));
    }
  for (std::size_t i = 0; i < forms.size(); i += 7)
    for (std::size_t j = 0; j < forms.size(); j += 5) ASSERT_EQ(forms[i] == forms[j], spans[i] == spans[j]);
}

TEST(SumIntersect, DistinctLines) {
  auto a = canonicalize(2, 2, std::vector<GfRow>{{1, 0}});
  auto b = canonicalize(2, 2, std::vector<GfRow>{{1, 1}});
  EXPECT_EQ(intersect(a, b).dim(), 0u);
  EXPECT_EQ(sum(a, b).dim(), 2u);
  EXPECT_THROW(sum(a, Subspace(3, 2)), Error);
}

TEST(SumIntersect, DimensionEquationAndOracle) {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    auto subs = enumerate_subspaces(p, n);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        auto s = sum(a, b), m = intersect(a, b);
        ASSERT_EQ(s.dim() + m.dim(), a.dim() + b.dim());
        if (n > 3) continue;
        auto va = vectors_of(a), vb = vectors_of(b);
        std::set<GfRow> common;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::inserter(common, common.end()));
        ASSERT_EQ(vectors_of(m), common);
      }
  }
}

TEST(Enumerate, CountsMatchGaussianBinomials) {
  EXPECT_EQ(gaussian_binomial(3, 1, 2), 7u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto subs = enumerate_subspaces(p, n);
      EXPECT_EQ(subs.size(), subspace_count(p, n));
      std::set<Subspace> unique(subs.begin(), subs.end());
      EXPECT_EQ(unique.size(), subs.size());
    }
}

TEST(SubLattice, Examples) {
  auto s22 = sub_lattice(2, 2);
  EXPECT_EQ(s22.lattice.size(), 5u);
  EXPECT_TRUE(isomorphic(s22.lattice, m3()));
  EXPECT_EQ(sub_lattice(2, 3).lattice.size(), 16u);
  auto s32 = sub_lattice(3, 2).lattice;
  EXPECT_EQ(s32.size(), 6u);
  EXPECT_EQ(s32.atoms().size(), 4u);
  EXPECT_EQ(s32.atoms(), s32.coatoms());
  EXPECT_EQ(sub_lattice(2, 4).lattice.size(), 67u);
  try {
    sub_lattice(2, 6, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimitExceeded);
  }
}

TEST(SubLattice, GradedAtomsAndTables) {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}}) {
    auto s = sub_lattice(p, n);
    const auto& l = s.lattice;
    std::size_t expected_atoms = 0, pw = 1;
    for (std::size_t i = 0; i < n; ++i) pw *= p;
    expected_atoms = (pw - 1) / (p - 1);
    EXPECT_EQ(l.atoms().size(), expected_atoms);
    for (auto [a, b] : l.cover_pairs()) EXPECT_EQ(s.subspaces[b].dim(), s.subspaces[a].dim() + 1);
    for (Elem x = 0; x < l.size(); ++x) {
      EXPECT_EQ(static_cast<std::size_t>(l.height(x)), s.subspaces[x].dim());
      for (Elem y = 0; y < l.size(); ++y) {
        ASSERT_EQ(s.subspaces[l.meet(x, y)], intersect(s.subspaces[x], s.subspaces[y]));
        ASSERT_EQ(s.subspaces[l.join(x, y)], sum(s.subspaces[x], s.subspaces[y]));
      }
    }
  }
}

TEST(SubLattice, LabelsCarryEchelonMatrices) {
  auto s = sub_lattice(2, 2);
  EXPECT_EQ(s.lattice.label(s.lattice.bottom()), "[]");
  EXPECT_EQ(s.lattice.label(s.lattice.top()), "[10,01]");
  EXPECT_TRUE(s.lattice.find("[11]").has_value());
}
