#include "latcon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "latcon/autgroup.hpp"
#include "latcon/construct.hpp"
#include "latcon/identity.hpp"
#include "latcon/ideal_filter.hpp"
#include "latcon/subspace.hpp"

namespace latcon::verify {

std::vector<Congruence> brute_force_congruences(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n > 10) throw Error(Errc::SizeLimitExceeded, "brute-force congruence scan is limited to 10 elements");
  std::vector<Congruence> out;
  // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Elem> rgs(n, 0), prefix_max(n, 0);
  while (true) {
    Congruence c(rgs);
    if (is_compatible(l, c)) out.push_back(std::move(c));
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Congruence brute_force_principal(const FiniteLattice& l, const std::vector<Congruence>& all, Elem a, Elem b) {
  std::optional<Congruence> least;
  for (const auto& c : all) {
    if (!c.same_block(a, b)) continue;
    least = least ? con_meet(*least, c) : c;
  }
  return least.value_or(Congruence::all(l.size()));
}

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng() % (max_size - 1);
    out.push_back({"random" + std::to_string(i) + "(" + std::to_string(n) + ")", random_lattice(n, rng)});
  }
  return out;
}

std::vector<CorpusEntry> corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (const char* s : {"chain:1", "chain:2", "chain:3", "chain:5", "boolean:2", "boolean:3", "m3", "n5", "hexagon"})
    out.push_back({s, stock(s)});
  out.push_back({"sub:2:2", sub_lattice(2, 2).lattice});
  out.push_back({"sub:3:2", sub_lattice(3, 2).lattice});
  out.push_back({"sub:2:3", sub_lattice(2, 3).lattice});
  for (std::size_t n = 4; n <= 6; ++n) {
    auto all = all_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({"small" + std::to_string(n) + "." + std::to_string(i), std::move(all[i])});
  }
  for (auto& e : random_corpus(seed)) out.push_back(std::move(e));
  return out;
}

namespace {

// Collects failures; keeps the first few messages for the report.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 4) msgs_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ - failures_ << "/" << checks_ << " checks";
    for (const auto& m : msgs_) s << "; " << m;
    if (failures_ > msgs_.size()) s << "; ...";
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> msgs_;
};

std::size_t con_count(const FiniteLattice& l) { return all_congruences(l).size(); }

bool power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

void subspace_counts(Checker& c, std::uint64_t) {
  const struct {
    unsigned p;
    std::size_t n, size;
  } cases[] = {{2, 2, 5}, {2, 3, 16}, {2, 4, 67}, {3, 2, 6}};
  for (auto [p, n, size] : cases) {
    const auto l = sub_lattice(p, n).lattice;
    const std::string tag = "Sub(F_" + std::to_string(p) + "^" + std::to_string(n) + ")";
    c.expect(l.size() == size, tag + " has " + std::to_string(l.size()) + " elements");
    c.expect(is_simple(l), tag + " not simple");
    c.expect(is_relatively_complemented(l), tag + " not relatively complemented");
    c.expect(is_modular(l), tag + " not modular");
    c.expect(!is_distributive(l), tag + " distributive");
  }
}

void boolean_congruences(Checker& c, std::uint64_t) {
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto k = con_count(boolean(m));
    c.expect(k == std::size_t{1} << m, "|Con(B" + std::to_string(m) + ")| = " + std::to_string(k));
  }
}

void glued_multiplicativity(Checker& c, std::uint64_t seed) {
  const auto rc = random_corpus(seed);
  std::vector<std::size_t> counts;
  for (const auto& e : rc) counts.push_back(con_count(e.lattice));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Identity laws[] = {modular_law(), distributive_law()};
  for (int k = 0; k < 200; ++k) {
    const std::size_t i = rng() % rc.size(), j = rng() % rc.size();
    const auto& a = rc[i].lattice;
    const auto& b = rc[j].lattice;
    const auto glued = con_count(glued_sum(a, b));
    c.expect(glued == counts[i] * counts[j], rc[i].name + "+" + rc[j].name + ": " + std::to_string(glued) +
                                                 " != " + std::to_string(counts[i]) + "*" + std::to_string(counts[j]));
    for (const auto& law : laws)
      c.expect(identity_transfer_check(a, b, law).consistent(), "identity transfer fails for " + rc[i].name + "+" +
                                                                    rc[j].name);
  }
}

void tower_law(Checker& c, std::uint64_t) {
  const std::pair<std::string, FiniteLattice> seeds[] = {{"M3", m3()}, {"Sub(F_2^2)", sub_lattice(2, 2).lattice}};
  for (const auto& [name, seed] : seeds)
    for (std::size_t i = 0; i <= 6; ++i) {
      const auto con = all_congruences(tower(seed, i).lattice);
      const std::string tag = "tower(" + name + "," + std::to_string(i) + ")";
      c.expect(con.size() == 2 + i, tag + " has " + std::to_string(con.size()) + " congruences");
      c.expect(as_poset(con.lattice).is_chain(), tag + " Con is not a chain");
    }
}

void composite_counts(Checker& c, std::uint64_t) {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {0, 2}};
  for (auto [m, n] : cases) {
    std::size_t expected = std::size_t{1} << m;
    for (std::size_t i = 0; i < n; ++i) expected *= 3;
    const auto k = con_count(freese_composite(2, 2, m, n));
    c.expect(k == expected, "composite(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ") has " +
                                std::to_string(k) + " congruences, expected " + std::to_string(expected));
  }
}

// phi(theta) = theta restricted to H, as a map Con(cap) -> Con(H) by index.
std::vector<std::size_t> restriction_indices(const M3Cap& cap, const ConLattice& con_cap, const ConLattice& con_h) {
  std::vector<std::size_t> phi;
  for (const auto& theta : con_cap.congruences)
    phi.push_back(con_h.index_of(restrict_map(cap.lattice, cap.h_embedding, theta)));
  return phi;
}

void cap_transport(Checker& c, std::uint64_t seed) {
  std::vector<std::pair<std::string, FiniteLattice>> hs = {{"hexagon", hexagon()}, {"chain(2)", chain(2)}};
  for (auto& e : corpus(seed))
    if (e.lattice.size() >= 2 && is_simple(e.lattice)) hs.emplace_back(e.name, e.lattice);
  const std::pair<std::string, FiniteLattice> bases[] = {{"Sub(F_2^2)", sub_lattice(2, 2).lattice}, {"M3", m3()}};

  for (const auto& [lname, lp] : bases) {
    for (const auto& [hname, h] : hs) {
      const std::string tag = "cap(" + lname + "," + hname + ")";
      c.expect(zero_separated(h), hname + " is not zero-separated");
      const auto cap = m3_cap(lp, h);
      const auto con_cap = all_congruences(cap.lattice);
      const auto con_h = all_congruences(h);
      // order isomorphism through the restriction map
      const auto phi = restriction_indices(cap, con_cap, con_h);
      std::set<std::size_t> image(phi.begin(), phi.end());
      bool order_iso = phi.size() == con_h.size() && image.size() == phi.size();
      for (std::size_t i = 0; order_iso && i < phi.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j)
          if (con_cap.congruences[i].refines(con_cap.congruences[j]) !=
              con_h.congruences[phi[i]].refines(con_h.congruences[phi[j]]))
            order_iso = false;
      c.expect(order_iso, tag + ": restriction is not an order isomorphism (|Con| " +
                              std::to_string(con_cap.size()) + " vs " + std::to_string(con_h.size()) + ")");
      c.expect(isomorphic(con_cap.lattice, con_h.lattice), tag + ": Con not isomorphic to Con(H)");
      const auto princ_cap = princ_poset(cap.lattice);
      c.expect(isomorphic(princ_cap.order, princ_poset(h).order), tag + ": Princ not isomorphic to Princ(H)");
      std::set<Congruence> prime_generated;
      for (auto [a, b] : h.cover_pairs())
        prime_generated.insert(principal(cap.lattice, cap.h_embedding[a], cap.h_embedding[b]));
      for (const auto& theta : princ_cap.congruences)
        if (!theta.is_identity())
          c.expect(prime_generated.contains(theta), tag + ": principal congruence " + theta.to_string(cap.lattice) +
                                                        " not generated by a prime interval of H");
    }
    // N5 breaks zero separation: phi stays injective but misses congruences.
    const auto h = n5();
    const auto cap = m3_cap(lp, h);
    const auto con_cap = all_congruences(cap.lattice);
    const auto con_h = all_congruences(h);
    const auto phi = restriction_indices(cap, con_cap, con_h);
    const std::set<std::size_t> image(phi.begin(), phi.end());
    const std::string tag = "cap(" + lname + ",N5)";
    c.expect(!zero_separated(h), "N5 reported zero-separated");
    c.expect(image.size() == phi.size(), tag + ": restriction not injective");
    c.expect(image.size() < con_h.size(), tag + ": restriction surjective");
    c.expect(con_cap.size() == 3, tag + " has " + std::to_string(con_cap.size()) + " congruences");
  }
}

void oracle_equivalence(Checker& c, std::uint64_t seed) {
  for (const auto& e : corpus(seed)) {
    const auto& l = e.lattice;
    if (l.size() > 8) continue;
    const auto brute = brute_force_congruences(l);
    auto fast = all_congruences(l).congruences;
    std::sort(fast.begin(), fast.end());
    c.expect(fast == brute, e.name + ": " + std::to_string(fast.size()) + " congruences vs " +
                                std::to_string(brute.size()) + " by brute force");
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b)
        c.expect(principal(l, a, b) == brute_force_principal(l, brute, a, b),
                 e.name + ": cg(" + l.label(a) + "," + l.label(b) + ") is not minimal");
  }
}

void ideal_filter_principality(Checker& c, std::uint64_t seed) {
  for (const auto& e : corpus(seed)) {
    const auto& l = e.lattice;
    const auto id = ideals(l);
    const auto fi = filters(l);
    c.expect(id.size() == l.size() && fi.size() == l.size(), e.name + ": |Id| or |Filt| differs from |L|");
    for (const auto& s : id) c.expect(s.generator && s.members == l.down_set(*s.generator), e.name + ": ideal");
    for (const auto& s : fi) c.expect(s.generator && s.members == l.up_set(*s.generator), e.name + ": filter");
    const auto report = check_filter_principality(l);
    c.expect(report.all_principal && report.filter_count == l.size(), e.name + ": filter principality report");
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto sub = sub_lattice(2, n);
    std::set<Bitset> seen;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> x;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) x.push_back(i);
      seen.insert(subspace_ideal(sub, x).members);
    }
    c.expect(seen.size() == (std::size_t{1} << n), "subspace_ideal not injective for n=" + std::to_string(n));
  }
}

void theta_family(Checker& c, std::uint64_t) {
  const std::pair<std::size_t, std::size_t> cases[] = {{3, 1}, {2, 2}};
  for (auto [n, h] : cases) {
    const auto l = product_of_chains(n, h);
    std::set<Congruence> seen;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> x;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) x.push_back(i);
      const auto theta = theta_of(n, h, x);
      c.expect(is_compatible(l, theta), "theta_of is not a congruence");
      seen.insert(theta);
    }
    c.expect(seen.size() == (std::size_t{1} << n),
             "theta_of(" + std::to_string(n) + "," + std::to_string(h) + ") not pairwise distinct");
  }
}

void rigidity_pipeline(Checker& c, std::uint64_t) {
  const auto found = find_rigid_simple(10, 3);
  c.expect(found.size() >= 3, "fewer than 3 rigid simple lattices");
  for (std::size_t i = 0; i < found.size(); ++i) {
    c.expect(is_rigid(found[i]) && is_simple(found[i]), "returned lattice not rigid simple");
    for (std::size_t j = i + 1; j < found.size(); ++j)
      c.expect(!isomorphic(found[i], found[j]), "returned lattices are isomorphic");
  }
  if (found.size() < 3) return;
  const auto sub = sub_lattice(2, 2).lattice;
  std::map<Elem, FiniteLattice> repl;
  const auto atoms = sub.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) repl.emplace(atoms[i], found[i]);
  const auto lp = replace_atom_intervals(sub, repl);
  c.expect(is_rigid(lp), "atom replacement is not rigid");
  const auto cap = m3_cap(lp, hexagon());
  const auto a = automorphisms(cap.lattice).order, b = automorphisms(hexagon()).order;
  c.expect(a == b, "|Aut(cap)| = " + std::to_string(a) + ", |Aut(hexagon)| = " + std::to_string(b));
}

void modularity_obstruction(Checker& c, std::uint64_t seed) {
  for (const auto& e : corpus(seed)) {
    const auto& l = e.lattice;
    if (is_modular(l)) {
      const auto k = con_count(l);
      c.expect(power_of_two(k), e.name + " is modular with " + std::to_string(k) + " congruences");
    }
    bool inner_chain = false;
    for (auto [a, b] : l.cover_pairs())
      if (a != l.bottom() && b != l.top()) inner_chain = true;
    if (inner_chain) c.expect(!is_modular(w_gadget(l)), "w_gadget(" + e.name + ") is modular");
  }
}

struct Spec {
  const char* title;
  double limit_seconds;
  void (*run)(Checker&, std::uint64_t);
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"subspace lattice counts and properties", 10, subspace_counts},
    {"boolean congruence counts", 5, boolean_congruences},
    {"glued-sum multiplicativity and identity transfer", 120, glued_multiplicativity},
    {"tower congruence law", 60, tower_law},
    {"composite congruence counts", 120, composite_counts},
    {"M3-cap congruence transport", 60, cap_transport},
    {"congruence oracle equivalence", 300, oracle_equivalence},
    {"ideal/filter principality and injection", 60, ideal_filter_principality},
    {"coordinate congruence family", 10, theta_family},
    {"rigidity pipeline", 300, rigidity_pipeline},
    {"modularity obstruction", 60, modularity_obstruction},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw Error(Errc::InvalidParameter, "no criterion " + std::to_string(id));
  const Spec& spec = kSpecs[id - 1];
  CriterionResult r{id, spec.title, false, "", 0, spec.limit_seconds};
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(c, seed);
    r.detail = c.summary();
    r.passed = c.ok();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += "; exceeded the time limit";
  }
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace latcon::verify
