#include "latcon/ideal_filter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latcon {

namespace {

struct Ops {
  SetKind kind;
  const FiniteLattice& l;

  const Bitset& closure_of(Elem x) const { return kind == SetKind::Ideal ? l.down_set(x) : l.up_set(x); }
  Elem combine(Elem x, Elem y) const { return kind == SetKind::Ideal ? l.join(x, y) : l.meet(x, y); }
};

bool is_closed(const Ops& ops, const Bitset& s) {
  if (s.none()) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!ok) return;
    if (!ops.closure_of(static_cast<Elem>(x)).is_subset_of(s)) ok = false;
    s.for_each([&](std::size_t y) {
      if (!s.test(ops.combine(static_cast<Elem>(x), static_cast<Elem>(y)))) ok = false;
    });
  });
  return ok;
}

// Generator of a closed set: the element whose down (up) closure is the whole set.
std::optional<Elem> principal_generator(const Ops& ops, const Bitset& s) {
  std::optional<Elem> g;
  s.for_each([&](std::size_t x) {
    if (!g && ops.closure_of(static_cast<Elem>(x)) == s) g = static_cast<Elem>(x);
  });
  return g;
}

IdealOrFilter closure(const Ops& ops, std::span<const Elem> generators) {
  if (generators.empty()) throw Error(Errc::EmptyGeneratorSet, "generator set is empty");
  Bitset s(ops.l.size());
  for (Elem g : generators) s |= ops.closure_of(g);
  while (true) {
    Bitset next = s;
    s.for_each([&](std::size_t x) {
      s.for_each([&](std::size_t y) {
        next |= ops.closure_of(ops.combine(static_cast<Elem>(x), static_cast<Elem>(y)));
      });
    });
    if (next == s) break;
    s = std::move(next);
  }
  return {ops.kind, s, principal_generator(ops, s)};
}

IdealOrFilter generated(const Ops& ops, std::span<const Elem> generators) {
  if (generators.empty()) throw Error(Errc::EmptyGeneratorSet, "generator set is empty");
  Elem g = generators[0];
  for (Elem x : generators) g = ops.combine(g, x);
  return {ops.kind, ops.closure_of(g), g};
}

std::vector<IdealOrFilter> enumerate(const Ops& ops) {
  std::vector<IdealOrFilter> out;
  std::set<Bitset> seen;
  for (Elem x = 0; x < ops.l.size(); ++x) {
    const Elem gen[] = {x};
    auto s = closure(ops, gen);
    if (!s.generator) throw std::logic_error("closure produced a non-principal set");
    if (seen.insert(s.members).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return *a.generator < *b.generator; });
  return out;
}

}  // namespace

bool is_ideal(const FiniteLattice& l, const Bitset& s) { return is_closed({SetKind::Ideal, l}, s); }
bool is_filter(const FiniteLattice& l, const Bitset& s) { return is_closed({SetKind::Filter, l}, s); }

IdealOrFilter ideal_closure(const FiniteLattice& l, std::span<const Elem> g) { return closure({SetKind::Ideal, l}, g); }
IdealOrFilter filter_closure(const FiniteLattice& l, std::span<const Elem> g) {
  return closure({SetKind::Filter, l}, g);
}

IdealOrFilter ideal_gen(const FiniteLattice& l, std::span<const Elem> g) { return generated({SetKind::Ideal, l}, g); }
IdealOrFilter filter_gen(const FiniteLattice& l, std::span<const Elem> g) {
  return generated({SetKind::Filter, l}, g);
}

IdealOrFilter principal_ideal(const FiniteLattice& l, Elem x) { return {SetKind::Ideal, l.down_set(x), x}; }
IdealOrFilter principal_filter(const FiniteLattice& l, Elem x) { return {SetKind::Filter, l.up_set(x), x}; }

std::vector<IdealOrFilter> ideals(const FiniteLattice& l) { return enumerate({SetKind::Ideal, l}); }
std::vector<IdealOrFilter> filters(const FiniteLattice& l) { return enumerate({SetKind::Filter, l}); }

IdealOrFilter subspace_ideal(const SubspaceLattice& sub, std::span<const std::size_t> basis_indices) {
  const auto& any = sub.subspaces.front();
  Subspace w = unit_span(any.p(), any.ambient_dim(), basis_indices);
  Bitset members(sub.lattice.size());
  for (Elem x = 0; x < sub.subspaces.size(); ++x)
    if (sub.subspaces[x].is_subspace_of(w)) members.set(x);
  return {SetKind::Ideal, members, sub.find(w)};
}

FilterPrincipalityReport check_filter_principality(const FiniteLattice& l, std::size_t exhaustive_limit) {
  const Ops ops{SetKind::Filter, l};
  const std::size_t n = l.size();
  FilterPrincipalityReport report;
  report.exhaustive = n <= exhaustive_limit && n < 63;
  report.all_principal = true;
  std::set<Bitset> found;
  std::set<Elem> gens;
  auto visit = [&](std::span<const Elem> s) {
    ++report.generator_sets_tried;
    auto f = closure(ops, s);
    if (!found.insert(f.members).second) return;
    if (f.generator)
      gens.insert(*f.generator);
    else
      report.all_principal = false;
  };
  if (report.exhaustive) {
    std::vector<Elem> subset;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      subset.clear();
      for (Elem i = 0; i < n; ++i)
        if (mask >> i & 1U) subset.push_back(i);
      visit(subset);
    }
  } else {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x; y < n; ++y) {
        const Elem s[] = {x, y};
        visit(std::span<const Elem>(s, x == y ? 1 : 2));
      }
  }
  report.filter_count = found.size();
  report.generators.assign(gens.begin(), gens.end());
  return report;
}

std::string to_string(const FiniteLattice& l, const IdealOrFilter& s) {
  std::string out = s.kind == SetKind::Ideal ? "ideal{" : "filter{";
  bool first = true;
  s.members.for_each([&](std::size_t x) {
    if (!first) out += ',';
    first = false;
    out += l.label(static_cast<Elem>(x));
  });
  return out + "}";
}

}  // namespace latcon
