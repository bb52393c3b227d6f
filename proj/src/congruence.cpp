#include "latcon/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "latcon/ideal_filter.hpp"

namespace latcon {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }
  Congruence freeze() {
    std::vector<Elem> roots(parent_.size());
    for (Elem i = 0; i < parent_.size(); ++i) roots[i] = find(i);
    return Congruence(roots);
  }

 private:
  std::vector<Elem> parent_;
};

// Closes the partition held in `uf` under meet/join compatibility. `work`
// holds the pairs whose union built the current partition; each recorded pair
// is closed against every z, which makes the whole transitive closure
// compatible.
Congruence close(const FiniteLattice& l, UnionFind& uf, std::deque<CoverPair>& work) {
  const auto n = static_cast<Elem>(l.size());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (Elem z = 0; z < n; ++z) {
      Elem mx = l.meet(x, z), my = l.meet(y, z);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
      Elem jx = l.join(x, z), jy = l.join(y, z);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
    }
  }
  return uf.freeze();
}

}  // namespace

Congruence::Congruence(std::span<const Elem> block_labels) : block_(block_labels.size()) {
  Elem max_label = 0;
  for (Elem b : block_labels) max_label = std::max(max_label, b);
  std::vector<Elem> remap(block_labels.empty() ? 0 : std::size_t{max_label} + 1, static_cast<Elem>(-1));
  for (std::size_t i = 0; i < block_labels.size(); ++i) {
    Elem& id = remap[block_labels[i]];
    if (id == static_cast<Elem>(-1)) id = static_cast<Elem>(num_blocks_++);
    block_[i] = id;
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return Congruence(v);
}

Congruence Congruence::all(std::size_t n) { return Congruence(std::vector<Elem>(n, 0)); }

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(num_blocks_);
  for (Elem x = 0; x < block_.size(); ++x) out[block_[x]].push_back(x);
  return out;
}

bool Congruence::refines(const Congruence& coarser) const {
  // Every block maps into a single coarser block.
  std::vector<Elem> image(num_blocks_, static_cast<Elem>(-1));
  for (Elem x = 0; x < block_.size(); ++x) {
    Elem& img = image[block_[x]];
    if (img == static_cast<Elem>(-1))
      img = coarser.block_[x];
    else if (img != coarser.block_[x])
      return false;
  }
  return true;
}

std::string Congruence::to_string(const FiniteLattice& l) const {
  std::string s;
  for (const auto& b : blocks()) {
    if (b.size() < 2) continue;
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) s += ',';
      s += l.label(b[i]);
    }
    s += '}';
  }
  return s.empty() ? "Delta" : s;
}

std::size_t CongruenceHash::operator()(const Congruence& c) const {
  std::size_t h = c.size();
  for (Elem b : c.block_vector()) h = h * 1000003U ^ b;
  return h;
}

bool is_compatible(const FiniteLattice& l, const Congruence& theta) {
  if (theta.size() != l.size()) return false;
  const auto n = static_cast<Elem>(l.size());
  // Compatibility of the pairs (x, first member of x's block) suffices by transitivity.
  std::vector<Elem> first(theta.num_blocks(), static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x)
    if (first[theta.block_of(x)] == static_cast<Elem>(-1)) first[theta.block_of(x)] = x;
  for (Elem x = 0; x < n; ++x) {
    Elem r = first[theta.block_of(x)];
    if (r == x) continue;
    for (Elem z = 0; z < n; ++z) {
      if (!theta.same_block(l.meet(x, z), l.meet(r, z))) return false;
      if (!theta.same_block(l.join(x, z), l.join(r, z))) return false;
    }
  }
  return true;
}

Congruence generated_by(const FiniteLattice& l, std::span<const CoverPair> pairs) {
  UnionFind uf(l.size());
  std::deque<CoverPair> work;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  return close(l, uf, work);
}

Congruence principal(const FiniteLattice& l, Elem a, Elem b) {
  const CoverPair p{a, b};
  return generated_by(l, std::span<const CoverPair>(&p, 1));
}

Congruence con_meet(const Congruence& a, const Congruence& b) {
  std::unordered_map<std::uint64_t, Elem> ids;
  std::vector<Elem> labels(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    const std::uint64_t key = std::uint64_t{a.block_of(x)} << 32 | b.block_of(x);
    labels[x] = ids.try_emplace(key, static_cast<Elem>(ids.size())).first->second;
  }
  return Congruence(labels);
}

Congruence con_join(const FiniteLattice& l, const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (const Congruence* c : {&a, &b}) {
    std::vector<Elem> first(c->num_blocks(), static_cast<Elem>(-1));
    for (Elem x = 0; x < c->size(); ++x) {
      Elem& f = first[c->block_of(x)];
      if (f == static_cast<Elem>(-1))
        f = x;
      else
        uf.unite(f, x);
    }
  }
  Congruence j = uf.freeze();
  if (!is_compatible(l, j)) throw std::logic_error("join of congruences is not compatible");
  return j;
}

std::size_t ConLattice::index_of(const Congruence& c) const {
  auto it = std::find(congruences.begin(), congruences.end(), c);
  return static_cast<std::size_t>(it - congruences.begin());
}

ConLattice all_congruences(const FiniteLattice& l, const AllCongruencesOptions& opts) {
  // Every congruence of a finite lattice is a join of congruences generated
  // by prime intervals, so those generate Con(L) under join.
  std::vector<Congruence> gens;
  {
    std::unordered_set<Congruence, CongruenceHash> seen;
    for (auto [a, b] : l.cover_pairs()) {
      Congruence c = principal(l, a, b);
      if (seen.insert(c).second) gens.push_back(std::move(c));
    }
  }
  std::unordered_set<Congruence, CongruenceHash> all;
  all.insert(Congruence::identity(l.size()));
  std::vector<Congruence> frontier;
  for (const auto& g : gens)
    if (all.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& theta : frontier) {
      for (const auto& g : gens) {
        if (g.refines(theta)) continue;
        Congruence j = con_join(l, theta, g);
        if (all.insert(j).second) {
          if (all.size() > opts.cap)
            throw Error(Errc::SizeLimitExceeded,
                        "more than " + std::to_string(opts.cap) + " congruences");
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }

  ConLattice out;
  out.congruences.assign(all.begin(), all.end());
  std::sort(out.congruences.begin(), out.congruences.end(), [](const Congruence& a, const Congruence& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
    return a < b;
  });
  std::vector<std::string> labels;
  for (const auto& c : out.congruences) labels.push_back(c.to_string(l));
  const auto& cs = out.congruences;
  BuildOptions bo;
  bo.max_size = std::max(kDefaultMaxSize, cs.size());
  out.lattice = build_from_order(std::move(labels), [&](Elem i, Elem j) { return cs[i].refines(cs[j]); }, bo);
  return out;
}

PrincPoset princ_poset(const FiniteLattice& l) {
  PrincPoset out;
  std::vector<std::pair<Congruence, CoverPair>> found;
  std::unordered_set<Congruence, CongruenceHash> seen;
  for (Elem a = 0; a < l.size(); ++a)
    l.up_set(a).for_each([&](std::size_t b) {
      Congruence c = principal(l, a, static_cast<Elem>(b));
      if (seen.insert(c).second) found.emplace_back(std::move(c), CoverPair{a, static_cast<Elem>(b)});
    });
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first.num_blocks() != y.first.num_blocks()) return x.first.num_blocks() > y.first.num_blocks();
    return x.first < y.first;
  });
  std::vector<std::string> labels;
  for (auto& [c, g] : found) {
    labels.push_back(c.to_string(l));
    out.congruences.push_back(std::move(c));
    out.generators.push_back(g);
  }
  const auto& cs = out.congruences;
  out.order = Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return cs[i].refines(cs[j]); });
  return out;
}

bool is_simple(const FiniteLattice& l) {
  if (l.size() < 2) return false;
  for (auto [a, b] : l.cover_pairs())
    if (!principal(l, a, b).is_all()) return false;
  return true;
}

FiniteLattice quotient(const FiniteLattice& l, const Congruence& theta) {
  if (!is_compatible(l, theta)) throw Error(Errc::InvalidParameter, "partition is not a congruence");
  auto blocks = theta.blocks();
  std::vector<std::string> labels;
  for (const auto& b : blocks) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) s += ',';
      s += l.label(b[i]);
    }
    labels.push_back(s + "}");
  }
  return build_from_order(std::move(labels), [&](Elem i, Elem j) {
    return theta.block_of(l.meet(blocks[i][0], blocks[j][0])) == i;
  });
}

Congruence restrict_map(const FiniteLattice& l, std::vector<Elem> sub_elements, const Congruence& theta) {
  std::sort(sub_elements.begin(), sub_elements.end());
  sub_elements.erase(std::unique(sub_elements.begin(), sub_elements.end()), sub_elements.end());
  if (!is_sublattice(l, sub_elements))
    throw Error(Errc::NotASublattice, "element set is not closed under meet and join");
  std::vector<Elem> labels;
  for (Elem x : sub_elements) labels.push_back(theta.block_of(x));
  return Congruence(labels);
}

std::vector<Congruence> join_irreducible_congruences(const FiniteLattice& l) {
  auto con = all_congruences(l);
  std::vector<Congruence> out;
  for (Elem j : join_irreducibles(con.lattice)) out.push_back(con.congruences[j]);
  return out;
}

CfiProfile cfi_profile(const FiniteLattice& l) {
  return {all_congruences(l).size(), filters(l).size(), ideals(l).size()};
}

}  // namespace latcon
