#include "latcon/construct.hpp"

#include <algorithm>
#include <unordered_set>

#include "latcon/subspace.hpp"

namespace latcon {

namespace {

// `base` with primes appended until it avoids every label in `taken`.
std::string fresh_label(std::string base, std::unordered_set<std::string>& taken) {
  while (taken.contains(base)) base += '\'';
  taken.insert(base);
  return base;
}

BuildOptions sized(std::size_t n) {
  BuildOptions o;
  o.max_size = std::max(kDefaultMaxSize, n);
  return o;
}

}  // namespace

FiniteLattice glued_sum(std::span<const FiniteLattice> summands) {
  if (summands.empty()) throw Error(Errc::InvalidParameter, "glued sum of no lattices");
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  Elem offset = 0;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    const std::string prefix = "s" + std::to_string(i) + ".";
    // The bottom of every later summand is the previous top, already labelled.
    for (Elem x = i == 0 ? 0 : 1; x < s.size(); ++x) labels.push_back(prefix + s.label(x));
    for (auto [a, b] : s.cover_pairs()) covers.emplace_back(a + offset, b + offset);
    offset += static_cast<Elem>(s.size() - 1);
  }
  const auto n = labels.size();
  return build_from_cover_ids(std::move(labels), std::move(covers), sized(n));
}

FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const FiniteLattice parts[] = {lower, upper};
  return glued_sum(parts);
}

FiniteLattice w_gadget(const FiniteLattice& k) {
  const auto n = static_cast<Elem>(k.size());
  std::unordered_set<std::string> taken(k.labels().begin(), k.labels().end());
  std::vector<std::string> labels;
  labels.push_back(fresh_label("0'", taken));
  for (const auto& s : k.labels()) labels.push_back(s);
  const Elem u = n + 1, v = n + 2, top = n + 3;
  labels.push_back(fresh_label("u", taken));
  labels.push_back(fresh_label("v", taken));
  labels.push_back(fresh_label("1'", taken));

  std::vector<CoverPair> covers{{0, k.bottom() + 1}, {k.top() + 1, top}, {0, u}, {u, top}, {0, v}, {v, top}};
  for (auto [a, b] : k.cover_pairs()) covers.emplace_back(a + 1, b + 1);
  return build_from_cover_ids(std::move(labels), std::move(covers), sized(k.size() + 4));
}

TowerStage tower(const FiniteLattice& seed, std::size_t stages, const TowerOptions& opts) {
  if (opts.on_warning && !is_simple(seed)) opts.on_warning("tower seed is not simple");
  if (seed.size() + 4 * stages > opts.max_size)
    throw Error(Errc::SizeLimitExceeded, "tower stage " + std::to_string(stages) + " exceeds the limit of " +
                                             std::to_string(opts.max_size) + " elements");
  TowerStage t{0, seed, {0}, {seed.top()}};
  for (std::size_t i = 1; i <= stages; ++i) {
    t.lattice = w_gadget(t.lattice);
    // Every earlier stage shifts up by the new bottom.
    for (auto& c : t.chain) ++c;
    for (auto& c : t.stage_tops) ++c;
    t.chain.push_back(0);
    t.stage_tops.push_back(t.lattice.top());
    t.index = i;
  }
  return t;
}

FiniteLattice replace_atom_intervals(const FiniteLattice& l, const std::map<Elem, FiniteLattice>& replacement) {
  for (const auto& [a, k] : replacement) {
    if (a >= l.size() || !l.is_atom(a))
      throw Error(Errc::NotAnAtom, (a < l.size() ? l.label(a) : std::to_string(a)) + " is not an atom");
    if (k.size() < 2)
      throw Error(Errc::UnboundedReplacement, "replacement for " + l.label(a) + " has coinciding bounds");
  }
  std::vector<std::string> labels{l.label(0)};
  std::vector<CoverPair> covers;
  // new id of each old non-bottom element of L, assigned after all inner elements
  std::size_t inner = 0;
  for (const auto& [a, k] : replacement) inner += k.size() - 2;
  auto old_id = [&](Elem x) { return x == 0 ? Elem{0} : static_cast<Elem>(x + inner); };

  for (const auto& [a, k] : replacement) {
    const auto base = static_cast<Elem>(labels.size());
    auto id = [&](Elem x) {
      if (x == k.bottom()) return Elem{0};
      if (x == k.top()) return old_id(a);
      return static_cast<Elem>(base + x - 1);
    };
    for (Elem x = 1; x + 1 < k.size(); ++x) labels.push_back(l.label(a) + "/" + k.label(x));
    for (auto [x, y] : k.cover_pairs()) covers.emplace_back(id(x), id(y));
  }
  for (Elem x = 1; x < l.size(); ++x) labels.push_back(l.label(x));
  for (auto [x, y] : l.cover_pairs())
    if (!(x == 0 && replacement.contains(y))) covers.emplace_back(old_id(x), old_id(y));
  const auto n = labels.size();
  return build_from_cover_ids(std::move(labels), std::move(covers), sized(n));
}

M3Cap m3_cap(const FiniteLattice& lp, const FiniteLattice& h) {
  if (lp.size() < 3) throw Error(Errc::TooSmall, "base lattice needs at least 3 elements");
  if (h.size() < 2) throw Error(Errc::TooSmall, "H needs at least 2 elements");
  M3Cap cap;
  std::vector<std::string> labels{"0"};
  cap.lp_embedding.push_back(0);
  for (Elem x = 1; x < lp.size(); ++x) {
    cap.lp_embedding.push_back(static_cast<Elem>(labels.size()));
    labels.push_back("p:" + lp.label(x));
  }
  cap.h_embedding.push_back(0);
  for (Elem x = 1; x < h.size(); ++x) {
    cap.h_embedding.push_back(static_cast<Elem>(labels.size()));
    labels.push_back("h:" + h.label(x));
  }
  cap.v = cap.h_embedding[h.top()];
  cap.u = static_cast<Elem>(labels.size());
  labels.push_back("u");
  cap.top = static_cast<Elem>(labels.size());
  labels.push_back("1");

  std::vector<CoverPair> covers{{0, cap.u}, {cap.u, cap.top}, {cap.lp_embedding[lp.top()], cap.top}, {cap.v, cap.top}};
  for (auto [a, b] : lp.cover_pairs()) covers.emplace_back(cap.lp_embedding[a], cap.lp_embedding[b]);
  for (auto [a, b] : h.cover_pairs()) covers.emplace_back(cap.h_embedding[a], cap.h_embedding[b]);
  const auto n = labels.size();
  cap.lattice = build_from_cover_ids(std::move(labels), std::move(covers), sized(n));
  return cap;
}

bool zero_separated(const FiniteLattice& h) {
  // A non-singleton bottom block is convex, so it contains an atom.
  for (Elem a : h.atoms())
    if (!principal(h, h.bottom(), a).is_all()) return false;
  return true;
}

FiniteLattice freese_composite(unsigned p, std::size_t dim, std::size_t m, std::size_t n) {
  if (m + n == 0) throw Error(Errc::InvalidParameters, "m + n must be at least 1");
  if (dim < 2) throw Error(Errc::InvalidParameters, "dimension must be at least 2");
  const FiniteLattice sub = sub_lattice(p, dim).lattice;
  std::vector<FiniteLattice> parts;
  if (n > 0) {
    const FiniteLattice w = w_gadget(sub);
    parts.assign(n, w);
  }
  if (m >= 2) parts.push_back(boolean(m - 1));
  if (m >= 1) parts.push_back(sub);
  return glued_sum(parts);
}

FiniteLattice product_of_chains(std::size_t n, std::size_t h, std::size_t max_size) {
  if (n == 0 || h == 0) throw Error(Errc::InvalidParameter, "product of chains needs n >= 1 and h >= 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= h + 1;
    if (total > max_size)
      throw Error(Errc::SizeLimitExceeded, "product of " + std::to_string(n) + " chains of height " +
                                               std::to_string(h) + " exceeds " + std::to_string(max_size));
  }
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  std::vector<std::size_t> digits(n, 0);
  for (Elem id = 0; id < total; ++id) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) s += ',';
      s += std::to_string(digits[i]);
    }
    labels.push_back(s + ")");
    // Coordinate i has place value (h+1)^(n-1-i).
    std::size_t place = 1;
    for (std::size_t i = n; i-- > 0;) {
      if (digits[i] < h) covers.emplace_back(id, static_cast<Elem>(id + place));
      place *= h + 1;
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] <= h) break;
      digits[i] = 0;
    }
  }
  BuildOptions o;
  o.max_size = max_size;
  return build_from_cover_ids(std::move(labels), std::move(covers), o);
}

Congruence theta_of(std::size_t n, std::size_t h, std::span<const std::size_t> coordinates) {
  std::vector<bool> keep(n, false);
  for (auto c : coordinates) {
    if (c >= n) throw Error(Errc::IndexOutOfRange, "coordinate " + std::to_string(c) + " >= " + std::to_string(n));
    keep[c] = true;
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= h + 1;
  std::vector<Elem> block(total);
  for (std::size_t id = 0; id < total; ++id) {
    std::size_t rest = id, key = 0, place = 1;
    for (std::size_t i = n; i-- > 0;) {
      if (keep[i]) key += (rest % (h + 1)) * place;
      rest /= h + 1;
      place *= h + 1;
    }
    block[id] = static_cast<Elem>(key);
  }
  return Congruence(block);
}

}  // namespace latcon
