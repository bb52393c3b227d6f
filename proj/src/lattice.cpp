#include "latcon/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>

namespace latcon {

std::optional<Elem> FiniteLattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteLattice::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(Errc::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

bool FiniteLattice::covers(Elem lower, Elem upper) const {
  const auto& ups = upper_[lower];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

namespace {

std::string pair_text(const std::vector<std::string>& labels, Elem x, Elem y) {
  return "(" + labels[x] + ", " + labels[y] + ")";
}

}  // namespace

FiniteLattice build_from_cover_ids(std::vector<std::string> labels, std::vector<CoverPair> covers,
                                   const BuildOptions& opts) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(Errc::NoBoundsError, "empty element set has no bounds");
  if (n > opts.max_size)
    throw Error(Errc::SizeLimitExceeded,
                std::to_string(n) + " elements exceeds the limit of " + std::to_string(opts.max_size));
  {
    std::unordered_map<std::string, Elem> seen;
    for (Elem i = 0; i < n; ++i)
      if (!seen.emplace(labels[i], i).second) throw Error(Errc::DuplicateLabel, "label '" + labels[i] + "'");
  }
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw Error(Errc::IndexOutOfRange, "cover pair references an unknown element");
    if (a == b) throw Error(Errc::CycleDetected, "self cover on '" + labels[a] + "'");
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  // Kahn's algorithm, smallest id first.
  std::vector<std::vector<Elem>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : covers) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
  for (Elem i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<Elem> order;
  order.reserve(n);
  while (!ready.empty()) {
    Elem x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Elem y : succ[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (order.size() != n) {
    for (Elem i = 0; i < n; ++i)
      if (indeg[i] != 0) throw Error(Errc::CycleDetected, "cover relation has a cycle through '" + labels[i] + "'");
  }
  std::vector<Elem> rank(n);
  for (Elem i = 0; i < n; ++i) rank[order[i]] = i;

  FiniteLattice l;
  l.labels_.resize(n);
  for (Elem i = 0; i < n; ++i) l.labels_[rank[i]] = std::move(labels[i]);
  for (auto& [a, b] : covers) {
    a = rank[a];
    b = rank[b];
  }
  std::sort(covers.begin(), covers.end());

  std::vector<std::vector<Elem>> upper(n), lower(n);
  for (auto [a, b] : covers) {
    upper[a].push_back(b);
    lower[b].push_back(a);
  }
  l.up_.assign(n, Bitset(n));
  l.down_.assign(n, Bitset(n));
  for (Elem x = static_cast<Elem>(n); x-- > 0;) {
    l.up_[x].set(x);
    for (Elem y : upper[x]) l.up_[x] |= l.up_[y];
  }
  for (Elem x = 0; x < n; ++x) {
    l.down_[x].set(x);
    for (Elem y : lower[x]) l.down_[x] |= l.down_[y];
  }

  // A cover a<b is redundant when b is reachable from a through another upper cover.
  std::vector<CoverPair> reduced;
  reduced.reserve(covers.size());
  for (auto [a, b] : covers) {
    bool redundant = false;
    for (Elem c : upper[a])
      if (c != b && l.up_[c].test(b)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      reduced.push_back({a, b});
      continue;
    }
    if (opts.strict)
      throw Error(Errc::NotTransitivelyReduced, "cover " + pair_text(l.labels_, a, b) + " is implied by others");
    if (opts.on_warning) opts.on_warning("dropping redundant cover " + pair_text(l.labels_, a, b));
  }
  l.covers_ = std::move(reduced);
  l.upper_.assign(n, {});
  l.lower_.assign(n, {});
  for (auto [a, b] : l.covers_) {
    l.upper_[a].push_back(b);
    l.lower_[b].push_back(a);
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      Bitset common = l.down_[x] & l.down_[y];
      std::size_t z = common.find_last();
      if (z == Bitset::npos || !common.is_subset_of(l.down_[z]))
        throw Error(Errc::MeetUndefined, pair_text(l.labels_, x, y) + " has no greatest lower bound");
      l.meet_[x * n + y] = l.meet_[y * n + x] = static_cast<Elem>(z);
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      Bitset common = l.up_[x] & l.up_[y];
      std::size_t z = common.find_first();
      if (z == Bitset::npos || !common.is_subset_of(l.up_[z]))
        throw Error(Errc::JoinUndefined, pair_text(l.labels_, x, y) + " has no least upper bound");
      l.join_[x * n + y] = l.join_[y * n + x] = static_cast<Elem>(z);
    }
  }

  l.height_.assign(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y : l.lower_[x]) l.height_[x] = std::max(l.height_[x], l.height_[y] + 1);
  l.depth_.assign(n, 0);
  for (Elem x = static_cast<Elem>(n); x-- > 0;)
    for (Elem y : l.upper_[x]) l.depth_[x] = std::max(l.depth_[x], l.depth_[y] + 1);

  for (Elem i = 0; i < n; ++i) l.index_.emplace(l.labels_[i], i);
  return l;
}

FiniteLattice build_from_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const BuildOptions& opts) {
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw Error(Errc::DuplicateLabel, "label '" + labels[i] + "'");
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(Errc::UnknownLabel, "cover pair references unknown element '" + s + "'");
    return it->second;
  };
  std::vector<CoverPair> ids;
  ids.reserve(covers.size());
  for (const auto& [a, b] : covers) ids.emplace_back(lookup(a), lookup(b));
  return build_from_cover_ids(labels, std::move(ids), opts);
}

FiniteLattice build_from_order(std::vector<std::string> labels, const std::function<bool(Elem, Elem)>& leq,
                               const BuildOptions& opts) {
  const auto n = static_cast<Elem>(labels.size());
  if (n > opts.max_size)
    throw Error(Errc::SizeLimitExceeded,
                std::to_string(n) + " elements exceeds the limit of " + std::to_string(opts.max_size));
  std::vector<Bitset> strict_up(n, Bitset(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && leq(x, y)) strict_up[x].set(y);
  std::vector<CoverPair> covers;
  for (Elem x = 0; x < n; ++x) {
    Bitset above_above(n);
    strict_up[x].for_each([&](std::size_t z) { above_above |= strict_up[z]; });
    strict_up[x].for_each([&](std::size_t y) {
      if (!above_above.test(y)) covers.emplace_back(x, static_cast<Elem>(y));
    });
  }
  return build_from_cover_ids(std::move(labels), std::move(covers), opts);
}

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidParameter, "chain length must be at least 1");
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(i));
  }
  return build_from_cover_ids(std::move(labels), std::move(covers));
}

FiniteLattice boolean(std::size_t m) {
  if (m > 12) throw Error(Errc::SizeLimitExceeded, "boolean lattice of rank " + std::to_string(m));
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (s.size() > 1) s += ',';
      s += std::to_string(i + 1);
      covers.emplace_back(static_cast<Elem>(mask & ~(std::size_t{1} << i)), static_cast<Elem>(mask));
    }
    labels.push_back(s + "}");
  }
  return build_from_cover_ids(std::move(labels), std::move(covers));
}

FiniteLattice m3() {
  return build_from_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice n5() {
  return build_from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

FiniteLattice hexagon() {
  return build_from_covers({"0", "a", "b", "c", "d", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"}, {"d", "1"}});
}

FiniteLattice stock(std::string_view spec) {
  auto param = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto rest = spec.substr(prefix.size());
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size())
      throw Error(Errc::InvalidParameter, "bad stock parameter in '" + std::string(spec) + "'");
    return v;
  };
  if (spec == "m3") return m3();
  if (spec == "n5") return n5();
  if (spec == "hexagon") return hexagon();
  if (auto n = param("chain:")) return chain(*n);
  if (auto m = param("boolean:")) return boolean(*m);
  throw Error(Errc::InvalidParameter, "unknown stock lattice '" + std::string(spec) + "'");
}

FiniteLattice dual(const FiniteLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) labels[n - 1 - x] = l.label(x);
  std::vector<CoverPair> covers;
  for (auto [a, b] : l.cover_pairs()) covers.emplace_back(n - 1 - b, n - 1 - a);
  return build_from_cover_ids(std::move(labels), std::move(covers));
}

FiniteLattice interval(const FiniteLattice& l, Elem a, Elem b) {
  if (!l.leq(a, b))
    throw Error(Errc::NotComparable, "interval [" + l.label(a) + ", " + l.label(b) + "] is empty");
  Bitset members = l.up_set(a) & l.down_set(b);
  std::vector<Elem> old_to_new(l.size(), 0);
  std::vector<std::string> labels;
  members.for_each([&](std::size_t x) {
    old_to_new[x] = static_cast<Elem>(labels.size());
    labels.push_back(l.label(static_cast<Elem>(x)));
  });
  // Intervals are convex, so covers restrict.
  std::vector<CoverPair> covers;
  for (auto [x, y] : l.cover_pairs())
    if (members.test(x) && members.test(y)) covers.emplace_back(old_to_new[x], old_to_new[y]);
  return build_from_cover_ids(std::move(labels), std::move(covers));
}

bool is_sublattice(const FiniteLattice& l, std::span<const Elem> elements) {
  if (elements.empty()) return false;
  Bitset in(l.size());
  for (Elem x : elements) in.set(x);
  for (Elem x : elements)
    for (Elem y : elements)
      if (!in.test(l.meet(x, y)) || !in.test(l.join(x, y))) return false;
  return true;
}

Sublattice sublattice(const FiniteLattice& l, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_sublattice(l, elements)) throw Error(Errc::NotASublattice, "element set is not closed under meet and join");
  std::vector<std::string> labels;
  for (Elem x : elements) labels.push_back(l.label(x));
  auto sub = build_from_order(std::move(labels), [&](Elem i, Elem j) { return l.leq(elements[i], elements[j]); });
  return {std::move(sub), std::move(elements)};
}

int height(const FiniteLattice& l, Elem x) { return l.height(x); }
int depth(const FiniteLattice& l, Elem x) { return l.depth(x); }

std::vector<Elem> join_irreducibles(const FiniteLattice& l) {
  std::vector<Elem> out;
  for (Elem x = 1; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Elem> meet_irreducibles(const FiniteLattice& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x + 1 < l.size(); ++x)
    if (l.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

Poset::Poset(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  up_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x == y || leq(x, y)) up_[x].set(y);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    Bitset strict = up_[x];
    strict.reset(x);
    Bitset above_above(n);
    strict.for_each([&](std::size_t z) {
      Bitset s = up_[z];
      s.reset(z);
      above_above |= s;
    });
    strict.for_each([&](std::size_t y) {
      if (!above_above.test(y)) out.emplace_back(x, y);
    });
  }
  return out;
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

bool Poset::is_antichain() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (x != y && leq(x, y)) return false;
  return true;
}

Poset induced_poset(const FiniteLattice& l, std::span<const Elem> elements) {
  std::vector<std::string> labels;
  for (Elem x : elements) labels.push_back(l.label(x));
  std::vector<Elem> e(elements.begin(), elements.end());
  return Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return l.leq(e[i], e[j]); });
}

Poset as_poset(const FiniteLattice& l) {
  return Poset(l.labels(), [&](std::size_t i, std::size_t j) {
    return l.leq(static_cast<Elem>(i), static_cast<Elem>(j));
  });
}

}  // namespace latcon
