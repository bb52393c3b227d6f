#include "latcon/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "latcon/congruence.hpp"

namespace latcon {

namespace {

using Color = std::uint32_t;

struct Graph {
  std::vector<std::vector<Elem>> up, down;
  std::vector<std::vector<long>> key;  // initial invariant per vertex
};

Graph graph_of(const FiniteLattice& l) {
  Graph g;
  for (Elem x = 0; x < l.size(); ++x) {
    g.up.push_back(l.upper_covers(x));
    g.down.push_back(l.lower_covers(x));
    g.key.push_back({l.height(x), l.depth(x), static_cast<long>(l.down_set(x).count()),
                     static_cast<long>(l.up_set(x).count())});
  }
  return g;
}

Graph graph_of(const Poset& p) {
  Graph g;
  const std::size_t n = p.size();
  g.up.resize(n);
  g.down.resize(n);
  for (auto [a, b] : p.cover_pairs()) {
    g.up[a].push_back(static_cast<Elem>(b));
    g.down[b].push_back(static_cast<Elem>(a));
  }
  for (std::size_t x = 0; x < n; ++x) {
    long below = 0;
    for (std::size_t y = 0; y < n; ++y) below += p.leq(y, x) ? 1 : 0;
    g.key.push_back({below, static_cast<long>(p.up_set(x).count())});
  }
  return g;
}

// Joint refinement on the disjoint union of two graphs: vertices [0, n) are
// the first graph and [n, 2n) the second. Colour ids are shared, so a colour
// class is consistent only when it has as many vertices on both sides.
class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : n_(a.up.size()) {
    for (const Graph* g : {&a, &b}) {
      const auto shift = static_cast<Elem>(up_.size());
      for (std::size_t x = 0; x < g->up.size(); ++x) {
        up_.emplace_back();
        down_.emplace_back();
        for (Elem y : g->up[x]) up_.back().push_back(y + shift);
        for (Elem y : g->down[x]) down_.back().push_back(y + shift);
      }
    }
    std::map<std::vector<long>, Color> ids;
    for (const Graph* g : {&a, &b})
      for (const auto& k : g->key) ids.emplace(k, 0);
    Color next = 0;
    for (auto& [k, c] : ids) c = next++;
    for (const Graph* g : {&a, &b})
      for (const auto& k : g->key) initial_.push_back(ids.at(k));
  }

  std::size_t n() const { return n_; }
  const std::vector<Color>& initial() const { return initial_; }

  // Refines to an equitable colouring; false if the two sides disagree.
  bool refine(std::vector<Color>& c) const {
    std::size_t classes = std::set<Color>(c.begin(), c.end()).size();
    using Sig = std::tuple<Color, std::vector<Color>, std::vector<Color>>;
    while (true) {
      std::vector<Sig> sigs(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        auto& [own, ups, downs] = sigs[v];
        own = c[v];
        for (Elem u : up_[v]) ups.push_back(c[u]);
        for (Elem u : down_[v]) downs.push_back(c[u]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
      }
      std::map<Sig, Color> ids;
      for (const auto& s : sigs) ids.emplace(s, 0);
      Color next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (std::size_t v = 0; v < c.size(); ++v) c[v] = ids.at(sigs[v]);
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    std::vector<std::size_t> count(classes, 0);
    for (std::size_t v = 0; v < n_; ++v) ++count[c[v]];
    for (std::size_t v = n_; v < c.size(); ++v)
      if (count[c[v]]-- == 0) return false;
    return true;
  }

  // Smallest colour class with more than one vertex per side, if any.
  std::optional<Color> target_cell(const std::vector<Color>& c) const {
    std::unordered_map<Color, std::size_t> count;
    for (std::size_t v = 0; v < n_; ++v) ++count[c[v]];
    std::optional<Color> best;
    for (std::size_t v = 0; v < n_; ++v) {
      const std::size_t k = count[c[v]];
      if (k > 1 && (!best || k < count[*best] || (k == count[*best] && c[v] < *best))) best = c[v];
    }
    return best;
  }

  std::optional<Perm> search(std::vector<Color> c) const {
    if (!refine(c)) return std::nullopt;
    auto cell = target_cell(c);
    if (!cell) return discrete_map(c);
    const Color fresh = *std::max_element(c.begin(), c.end()) + 1;
    const std::size_t x = first_in(c, *cell, 0);
    for (std::size_t y = n_; y < 2 * n_; ++y) {
      if (c[y] != *cell) continue;
      auto c2 = c;
      c2[x] = c2[y] = fresh;
      if (auto p = search(std::move(c2))) return p;
    }
    return std::nullopt;
  }

  std::size_t first_in(const std::vector<Color>& c, Color cell, std::size_t from) const {
    std::size_t v = from;
    while (c[v] != cell) ++v;
    return v;
  }

 private:
  std::optional<Perm> discrete_map(const std::vector<Color>& c) const {
    std::unordered_map<Color, Elem> image;
    for (std::size_t v = n_; v < 2 * n_; ++v) image[c[v]] = static_cast<Elem>(v - n_);
    Perm p(n_);
    for (std::size_t v = 0; v < n_; ++v) p[v] = image.at(c[v]);
    // Covers map onto covers; equal cover counts make this a bijection on covers.
    for (std::size_t v = 0; v < n_; ++v)
      for (Elem u : up_[v]) {
        const auto& targets = up_[p[v] + n_];
        if (std::find(targets.begin(), targets.end(), p[u] + n_) == targets.end()) return std::nullopt;
      }
    return p;
  }

  std::size_t n_;
  std::vector<std::vector<Elem>> up_, down_;
  std::vector<Color> initial_;
};

std::optional<Perm> match(const Graph& a, const Graph& b) {
  if (a.up.size() != b.up.size()) return std::nullopt;
  Matcher m(a, b);
  return m.search(m.initial());
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// Meet-semilattices with 0 as down-set masks over ids in a linear extension.
using Semilattice = std::vector<std::uint32_t>;

bool valid_extension(const Semilattice& s, std::uint32_t d) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((d >> i & 1U) && (s[i] & ~d) != 0) return false;  // not down-closed
  }
  // t ∧ x must exist: d ∩ ↓x has a greatest element.
  for (std::size_t x = 0; x < s.size(); ++x) {
    const std::uint32_t m = d & s[x];
    bool has_max = false;
    for (std::size_t y = 0; y < s.size() && !has_max; ++y)
      if ((m >> y & 1U) && (m & ~s[y]) == 0) has_max = true;
    if (!has_max) return false;
  }
  return true;
}

FiniteLattice with_top(const Semilattice& s) {
  const std::size_t k = s.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
  std::vector<CoverPair> covers;
  std::uint32_t below_something = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t strict = s[i] & ~(std::uint32_t{1} << i);
    below_something |= strict;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(strict >> j & 1U)) continue;
      // j is a lower cover of i unless some element strictly between exists
      bool between = false;
      for (std::size_t m = 0; m < k && !between; ++m)
        if (m != j && (strict >> m & 1U) && (s[m] >> j & 1U)) between = true;
      if (!between) covers.emplace_back(static_cast<Elem>(j), static_cast<Elem>(i));
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!(below_something >> i & 1U)) covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(k));
  return build_from_cover_ids(std::move(labels), std::move(covers));
}

std::vector<int> invariant_key(const FiniteLattice& l) {
  std::vector<std::tuple<int, int, int, int>> v;
  for (Elem x = 0; x < l.size(); ++x)
    v.emplace_back(l.height(x), l.depth(x), static_cast<int>(l.upper_covers(x).size()),
                   static_cast<int>(l.lower_covers(x).size()));
  std::sort(v.begin(), v.end());
  std::vector<int> key;
  for (auto [a, b, c, d] : v) key.insert(key.end(), {a, b, c, d});
  return key;
}

}  // namespace

PermGroup automorphisms(const FiniteLattice& l, std::size_t max_size) {
  if (l.size() > max_size)
    throw Error(Errc::SizeLimitExceeded, std::to_string(l.size()) + " elements exceeds the limit of " +
                                             std::to_string(max_size));
  const Graph g = graph_of(l);
  Matcher m(g, g);
  const std::size_t n = m.n();
  PermGroup group;
  group.degree = n;
  auto c = m.initial();
  while (true) {
    m.refine(c);
    auto cell = m.target_cell(c);
    if (!cell) break;
    const Color fresh = *std::max_element(c.begin(), c.end()) + 1;
    const std::size_t x = m.first_in(c, *cell, 0);
    std::uint64_t orbit = 0;
    for (std::size_t y = n; y < 2 * n; ++y) {
      if (c[y] != *cell) continue;
      auto c2 = c;
      c2[x] = c2[y] = fresh;
      if (auto p = m.search(std::move(c2))) {
        ++orbit;
        if (y - n != x) group.generators.push_back(std::move(*p));
      }
    }
    if (group.order > UINT64_MAX / orbit) throw Error(Errc::SizeLimitExceeded, "automorphism group order overflows");
    group.order *= orbit;
    c[x] = c[x + n] = fresh;
  }
  return group;
}

bool is_rigid(const FiniteLattice& l) { return automorphisms(l).order == 1; }

bool is_automorphism(const FiniteLattice& l, const Perm& p) {
  if (p.size() != l.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (Elem y : p) {
    if (y >= p.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (p[l.meet(x, y)] != l.meet(p[x], p[y]) || p[l.join(x, y)] != l.join(p[x], p[y])) return false;
  return true;
}

std::string cycle_notation(const FiniteLattice& l, const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (Elem i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (Elem j = i; !seen[j]; j = p[j]) {
      if (j != i) out += ' ';
      out += l.label(j);
      seen[j] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::optional<Perm> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return match(graph_of(a), graph_of(b));
}

bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) { return find_isomorphism(a, b).has_value(); }

bool isomorphic(const Poset& a, const Poset& b) { return match(graph_of(a), graph_of(b)).has_value(); }

std::optional<GroupProfile> group_profile(const PermGroup& g, std::uint64_t max_order) {
  if (g.order > max_order) return std::nullopt;
  Perm id(g.degree);
  std::iota(id.begin(), id.end(), Elem{0});
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& s : g.generators) {
        Perm q(g.degree);
        for (std::size_t i = 0; i < g.degree; ++i) q[i] = s[p[i]];
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  GroupProfile prof;
  prof.order = seen.size();
  for (const auto& p : seen) ++prof.element_orders[element_order(p)];
  return prof;
}

std::vector<FiniteLattice> all_lattices(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidParameter, "lattices have at least one element");
  if (n > 32) throw Error(Errc::SizeLimitExceeded, "exhaustive generation is limited to 32 elements");
  if (n == 1) return {chain(1)};
  // Removing the top leaves a meet-semilattice with 0, and every such
  // semilattice of size k+1 arises from one of size k by adding a maximal element.
  std::vector<Semilattice> level{{1U}};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::vector<Semilattice> next;
    std::map<std::vector<int>, std::vector<FiniteLattice>> buckets;
    for (const auto& s : level) {
      for (std::uint32_t d = 1; d < (std::uint32_t{1} << k); d += 2) {
        if (!valid_extension(s, d)) continue;
        Semilattice t = s;
        t.push_back(d | std::uint32_t{1} << k);
        FiniteLattice l = with_top(t);
        auto& bucket = buckets[invariant_key(l)];
        if (std::any_of(bucket.begin(), bucket.end(), [&](const FiniteLattice& o) { return isomorphic(o, l); }))
          continue;
        bucket.push_back(std::move(l));
        next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  std::vector<FiniteLattice> out;
  for (const auto& s : level) out.push_back(with_top(s));
  return out;
}

std::vector<FiniteLattice> find_rigid_simple(std::size_t max_size, std::size_t count) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 3; n <= max_size && out.size() < count; ++n)
    for (auto& l : all_lattices(n)) {
      if (out.size() == count) break;
      if (is_simple(l) && is_rigid(l)) out.push_back(std::move(l));
    }
  if (out.size() < count)
    throw Error(Errc::NotEnoughFound, "only " + std::to_string(out.size()) + " rigid simple lattices with at most " +
                                          std::to_string(max_size) + " elements");
  return out;
}

FiniteLattice random_lattice(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(Errc::InvalidParameter, "lattices have at least one element");
  if (n > 32) throw Error(Errc::SizeLimitExceeded, "random lattices are limited to 32 elements");
  if (n == 1) return chain(1);
  Semilattice s{1U};
  while (s.size() + 1 < n) {
    const std::size_t k = s.size();
    std::uint32_t d = 0;
    for (int attempt = 0; attempt < 32 && d == 0; ++attempt) {
      std::uint32_t pick = 1;
      for (std::size_t i = 0; i < k; ++i)
        if (rng() % 3 == 0) pick |= s[i];
      if (valid_extension(s, pick)) d = pick;
    }
    if (d == 0) d = s[rng() % k];  // a principal down-set always extends
    s.push_back(d | std::uint32_t{1} << k);
  }
  return with_top(s);
}

}  // namespace latcon
