#include "latcon/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace latcon {

namespace {

unsigned gf_pow(unsigned a, unsigned e, unsigned p) {
  unsigned r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

unsigned gf_inv(unsigned a, unsigned p) { return gf_pow(a, p - 2, p); }

void check_field(unsigned p) {
  if (p >= 256 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not a prime below 256");
}

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
std::vector<std::size_t> row_reduce(unsigned p, std::size_t ncols, std::vector<GfRow>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const unsigned inv = gf_inv(rows[r][c], p);
    for (auto& v : rows[r]) v = static_cast<std::uint8_t>(v * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (p - f) * rows[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.p() != b.p() || a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Subspace::Subspace(unsigned p, std::size_t n) : p_(p), n_(n) { check_field(p); }

bool Subspace::contains(const GfRow& v) const {
  if (v.size() != n_) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
  // In echelon form, v lies in the row space iff v equals sum_i v[pivot_i] * row_i.
  GfRow acc(n_, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const unsigned coef = v[pivots_[i]];
    if (coef == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) acc[j] = static_cast<std::uint8_t>((acc[j] + coef * basis_[i][j]) % p_);
  }
  return acc == v;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  check_same_ambient(*this, other);
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(), [&](const GfRow& r) { return other.contains(r); });
}

std::string Subspace::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i > 0) s += ',';
    for (std::size_t j = 0; j < n_; ++j) {
      if (p_ > 10 && j > 0) s += '.';
      s += std::to_string(basis_[i][j]);
    }
  }
  return s + "]";
}

Subspace canonicalize(unsigned p, std::size_t n, std::span<const GfRow> vectors) {
  Subspace s(p, n);
  std::vector<GfRow> rows(vectors.begin(), vectors.end());
  for (const auto& r : rows) {
    if (r.size() != n)
      throw Error(Errc::DimensionMismatch,
                  "vector of length " + std::to_string(r.size()) + " in F_p^" + std::to_string(n));
    for (auto v : r)
      if (v >= p) throw Error(Errc::InvalidParameter, "entry " + std::to_string(v) + " is not reduced mod p");
  }
  s.pivots_ = row_reduce(p, n, rows);
  s.basis_ = std::move(rows);
  return s;
}

Subspace from_echelon(unsigned p, std::size_t n, std::vector<GfRow> rows) {
  Subspace s(p, n);
  for (const auto& r : rows) {
    auto lead = std::find_if(r.begin(), r.end(), [](auto v) { return v != 0; });
    s.pivots_.push_back(static_cast<std::size_t>(lead - r.begin()));
  }
  s.basis_ = std::move(rows);
  return s;
}

Subspace unit_span(unsigned p, std::size_t n, std::span<const std::size_t> indices) {
  std::vector<GfRow> rows;
  for (auto i : indices) {
    if (i >= n) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(i) + " >= " + std::to_string(n));
    GfRow r(n, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return canonicalize(p, n, rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<GfRow> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return canonicalize(a.p(), a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  const unsigned p = a.p();
  const std::size_t n = a.ambient_dim();
  const std::size_t k = a.dim();
  const std::size_t m = k + b.dim();
  if (k == 0 || b.dim() == 0) return Subspace(p, n);
  // Columns of `mt` are the basis vectors of a then b; its kernel holds the
  // coefficient vectors c with sum_i c_i a_i + sum_j c_{k+j} b_j = 0.
  std::vector<GfRow> mt(n, GfRow(m, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) mt[i][j] = a.basis()[j][i];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) mt[i][k + j] = b.basis()[j][i];
  auto pivots = row_reduce(p, m, mt);
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<GfRow> vectors;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    GfRow c(m, 0);
    c[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = static_cast<std::uint8_t>((p - mt[r][f]) % p);
    GfRow v(n, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((v[i] + c[j] * a.basis()[j][i]) % p);
    }
    vectors.push_back(std::move(v));
  }
  return canonicalize(p, n, vectors);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, unsigned p) {
  if (k > n) return 0;
  // prod_{i<k} (p^(n-i) - 1) / (p^(i+1) - 1), computed as an exact running quotient.
  std::uint64_t num = 1, den = 1;
  auto pw = [p](std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p;
    return r;
  };
  for (std::size_t i = 0; i < k; ++i) {
    num *= pw(n - i) - 1;
    den *= pw(i + 1) - 1;
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

std::uint64_t subspace_count(unsigned p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
  return total;
}

std::vector<Subspace> enumerate_subspaces(unsigned p, std::size_t n) {
  check_field(p);
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation over a sorted-descending mask walks pivot sets in lexicographic order.
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < n; ++c)
        if (choose[c]) pivots.push_back(c);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!choose[c]) free.emplace_back(r, c);
      std::vector<unsigned> digits(free.size(), 0);
      while (true) {
        std::vector<GfRow> rows(k, GfRow(n, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free.size(); ++i)
          rows[free[i].first][free[i].second] = static_cast<std::uint8_t>(digits[i]);
        out.push_back(from_echelon(p, n, std::move(rows)));
        std::size_t i = free.size();
        while (i > 0 && digits[i - 1] + 1 == p) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return out;
}

std::optional<Elem> SubspaceLattice::find(const Subspace& s) const {
  auto it = std::find(subspaces.begin(), subspaces.end(), s);
  if (it == subspaces.end()) return std::nullopt;
  return static_cast<Elem>(it - subspaces.begin());
}

SubspaceLattice sub_lattice(unsigned p, std::size_t n, std::size_t max_size) {
  check_field(p);
  if (n == 0) throw Error(Errc::InvalidParameter, "ambient dimension must be at least 1");
  if (n > 16 || subspace_count(p, n) > max_size)
    throw Error(Errc::SizeLimitExceeded, "Sub(F_" + std::to_string(p) + "^" + std::to_string(n) +
                                             ") exceeds the limit of " + std::to_string(max_size) + " elements");
  auto subs = enumerate_subspaces(p, n);
  std::vector<std::string> labels;
  for (const auto& s : subs) labels.push_back(s.to_string());
  // Enumeration is by dimension, a linear extension of inclusion; covers are
  // the inclusions with dimension gap one.
  std::vector<CoverPair> covers;
  for (Elem i = 0; i < subs.size(); ++i)
    for (Elem j = i + 1; j < subs.size(); ++j)
      if (subs[j].dim() == subs[i].dim() + 1 && subs[i].is_subspace_of(subs[j])) covers.emplace_back(i, j);
  BuildOptions opts;
  opts.max_size = max_size;
  auto lattice = build_from_cover_ids(std::move(labels), std::move(covers), opts);
  return {std::move(lattice), std::move(subs)};
}

}  // namespace latcon
