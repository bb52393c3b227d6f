#pragma once

// Brute-force oracles, the fixed-seed test corpus, and the acceptance
// checks shared by the acceptance binary and `latcon paper-check`.

#include <cstdint>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"

namespace latcon::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Every compatible partition, found by scanning all set partitions
/// (restricted growth strings). Sorted. Throws SizeLimitExceeded above 10 elements.
std::vector<Congruence> brute_force_congruences(const FiniteLattice& l);

/// The least member of `all` collapsing a and b, found by intersecting
/// every member that does.
Congruence brute_force_principal(const FiniteLattice& l, const std::vector<Congruence>& all, Elem a, Elem b);

struct CorpusEntry {
  std::string name;
  FiniteLattice lattice;
};

/// `count` random lattices with 2..max_size elements.
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count = 50, std::size_t max_size = 10);

/// Stock lattices, small subspace lattices, every lattice with at most 6
/// elements, and random_corpus(seed).
std::vector<CorpusEntry> corpus(std::uint64_t seed = kDefaultSeed);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kCriterionCount = 11;

/// Runs criterion `id` (1-based). A check that exceeds its time limit fails.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

}  // namespace latcon::verify
