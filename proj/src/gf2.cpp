#include "polarwords/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "polarwords/errors.hpp"

namespace polarwords {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw PreconditionError("GF(2) dimension " + std::to_string(dim) + " outside 0..32");
}

std::uint32_t low_mask(int dim) {
  return dim >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << dim) - 1);
}

// Reduces `rows` (arbitrary vectors) to the canonical reduced-echelon form,
// rows sorted descending, i.e. pivots increasing.
std::vector<std::uint32_t> reduce_rows(std::span<const std::uint32_t> input) {
  std::vector<std::uint32_t> rows;
  for (std::uint32_t v : input) {
    for (std::uint32_t r : rows) {
      std::uint32_t pivot = std::bit_floor(r);
      if (v & pivot) v ^= r;
    }
    if (v == 0) continue;
    std::uint32_t pivot = std::bit_floor(v);
    for (std::uint32_t& r : rows)
      if (r & pivot) r ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return rows;
}

}  // namespace

Gf2Vector::Gf2Vector(int dim, std::uint32_t bits) : bits_(bits), dim_(static_cast<std::uint8_t>(dim)) {
  check_dim(dim);
  if ((bits & ~low_mask(dim)) != 0)
    throw PreconditionError("vector bits exceed dimension " + std::to_string(dim));
}

Gf2Vector Gf2Vector::unit(int dim, int i) {
  if (i < 1 || i > dim) throw PreconditionError("unit vector index out of range");
  return Gf2Vector(dim, std::uint32_t{1} << (dim - i));
}

Gf2Vector Gf2Vector::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDim))
    throw PreconditionError("vector text longer than 32 coordinates");
  std::uint32_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw PreconditionError("vector text must be 0/1: " + std::string(text));
    bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return Gf2Vector(static_cast<int>(text.size()), bits);
}

bool Gf2Vector::coord(int i) const {
  if (i < 1 || i > dim_) throw PreconditionError("coordinate index out of range");
  return (bits_ & bit_of(i)) != 0;
}

Gf2Vector Gf2Vector::with_coord(int i, bool value) const {
  if (i < 1 || i > dim_) throw PreconditionError("coordinate index out of range");
  Gf2Vector out = *this;
  if (value)
    out.bits_ |= bit_of(i);
  else
    out.bits_ &= ~bit_of(i);
  return out;
}

int Gf2Vector::weight() const { return std::popcount(bits_); }

int Gf2Vector::alpha() const {
  if (bits_ == 0) throw PreconditionError("alpha of the zero vector");
  return dim_ - (std::bit_width(bits_) - 1);
}

int Gf2Vector::beta() const {
  if (bits_ == 0) throw PreconditionError("beta of the zero vector");
  return dim_ - std::countr_zero(bits_);
}

std::vector<int> Gf2Vector::support() const {
  std::vector<int> out;
  for (int i = 1; i <= dim_; ++i)
    if (bits_ & bit_of(i)) out.push_back(i);
  return out;
}

std::string Gf2Vector::to_string() const {
  std::string s(dim_, '0');
  for (int i = 1; i <= dim_; ++i)
    if (bits_ & bit_of(i)) s[i - 1] = '1';
  return s;
}

Gf2Vector Gf2Vector::operator+(const Gf2Vector& other) const {
  Gf2Vector out = *this;
  out += other;
  return out;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  if (dim_ != other.dim_) throw PreconditionError("vector dimension mismatch");
  bits_ ^= other.bits_;
  return *this;
}

bool order_gt(const Gf2Vector& u, const Gf2Vector& v) {
  if (u.dim() != v.dim()) throw PreconditionError("order_gt: dimension mismatch");
  return u.bits() > v.bits();
}

// ---------------------------------------------------------------------------

Gf2Subspace::Gf2Subspace(int ambient_dim) : ambient_(ambient_dim) { check_dim(ambient_dim); }

Gf2Subspace Gf2Subspace::span(std::span<const Gf2Vector> vectors, int ambient_dim) {
  return canonicalize(vectors, ambient_dim);
}

Gf2Subspace Gf2Subspace::full(int ambient_dim) {
  std::vector<Gf2Vector> units;
  for (int i = 1; i <= ambient_dim; ++i) units.push_back(Gf2Vector::unit(ambient_dim, i));
  return canonicalize(units, ambient_dim);
}

Gf2Subspace Gf2Subspace::parse(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty subspace text needs an explicit ambient dimension");
  std::size_t end = text.find(';');
  return parse(text, static_cast<int>(end == std::string_view::npos ? text.size() : end));
}

Gf2Subspace Gf2Subspace::parse(std::string_view text, int ambient_dim) {
  std::vector<Gf2Vector> rows;
  while (!text.empty()) {
    std::size_t end = text.find(';');
    std::string_view row = text.substr(0, end);
    Gf2Vector v = Gf2Vector::parse(row);
    if (v.dim() != ambient_dim)
      throw PreconditionError("subspace row '" + std::string(row) + "' has wrong length");
    rows.push_back(v);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return canonicalize(rows, ambient_dim);
}

bool Gf2Subspace::contains(const Gf2Vector& v) const {
  if (v.dim() != ambient_) throw PreconditionError("contains: dimension mismatch");
  std::uint32_t bits = v.bits();
  for (const Gf2Vector& r : basis_)
    if (bits & std::bit_floor(r.bits())) bits ^= r.bits();
  return bits == 0;
}

bool Gf2Subspace::contains(const Gf2Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Gf2Vector& v) { return contains(v); });
}

std::uint32_t Gf2Subspace::support_bits() const {
  std::uint32_t u = 0;
  for (const Gf2Vector& v : basis_) u |= v.bits();
  return u;
}

bool Gf2Subspace::in_support(int i) const {
  if (i < 1 || i > ambient_) throw PreconditionError("support index out of range");
  return (support_bits() >> (ambient_ - i)) & 1u;
}

std::vector<Gf2Vector> Gf2Subspace::elements() const {
  std::vector<Gf2Vector> out;
  const std::uint32_t count = std::uint32_t{1} << basis_.size();
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (mask >> j & 1u) bits ^= basis_[j].bits();
    out.emplace_back(ambient_, bits);
  }
  return out;
}

std::string Gf2Subspace::to_string() const {
  if (basis_.empty()) return Gf2Vector::zero(ambient_).to_string();
  std::string s;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (j) s += ';';
    s += basis_[j].to_string();
  }
  return s;
}

std::strong_ordering operator<=>(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  for (std::size_t j = 0; j < a.basis_.size(); ++j)
    if (auto c = a.basis_[j].bits() <=> b.basis_[j].bits(); c != 0) return c;
  return std::strong_ordering::equal;
}

Gf2Subspace canonicalize(std::span<const Gf2Vector> vectors, int ambient_dim) {
  Gf2Subspace out(ambient_dim);
  std::vector<std::uint32_t> bits;
  bits.reserve(vectors.size());
  for (const Gf2Vector& v : vectors) {
    if (v.dim() != ambient_dim) throw PreconditionError("canonicalize: vector dimension mismatch");
    bits.push_back(v.bits());
  }
  std::vector<Gf2Vector> basis;
  for (std::uint32_t r : reduce_rows(bits)) basis.emplace_back(ambient_dim, r);
  out.basis_ = std::move(basis);
  return out;
}

int rank(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  const int dim = vectors.front().dim();
  for (const Gf2Vector& v : vectors)
    if (v.dim() != dim) throw PreconditionError("rank: vectors of mixed dimension");
  return canonicalize(vectors, dim).dim();
}

Gf2Subspace sum(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("sum: dimension mismatch");
  std::vector<Gf2Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return canonicalize(all, a.ambient_dim());
}

Gf2Subspace intersect(const Gf2Subspace& a, const Gf2Subspace& b) {
  const int m = a.ambient_dim();
  if (m != b.ambient_dim()) throw PreconditionError("intersect: dimension mismatch");
  // Zassenhaus: rows (u | u) for u in a, (w | 0) for w in b. After echelon
  // reduction the rows with zero left half span the intersection.
  std::vector<std::uint64_t> rows;
  for (const Gf2Vector& u : a.basis())
    rows.push_back((std::uint64_t{u.bits()} << m) | u.bits());
  for (const Gf2Vector& w : b.basis()) rows.push_back(std::uint64_t{w.bits()} << m);
  std::vector<std::uint64_t> echelon;
  for (std::uint64_t v : rows) {
    for (std::uint64_t r : echelon)
      if (v & std::bit_floor(r)) v ^= r;
    if (v == 0) continue;
    const std::uint64_t pivot = std::bit_floor(v);
    for (std::uint64_t& r : echelon)
      if (r & pivot) r ^= v;
    echelon.push_back(v);
  }
  const std::uint64_t right = m >= 32 ? 0xffffffffULL : ((std::uint64_t{1} << m) - 1);
  std::vector<Gf2Vector> out;
  for (std::uint64_t r : echelon)
    if ((r >> m) == 0) out.emplace_back(m, static_cast<std::uint32_t>(r & right));
  return canonicalize(out, m);
}

Gf2Subspace delete_coordinate(const Gf2Subspace& v, int i) {
  const int n = v.ambient_dim();
  if (i < 1 || i > n) throw PreconditionError("delete_coordinate: index out of range");
  const int shift = n - i;  // bit index of coordinate i
  std::vector<Gf2Vector> rows;
  for (const Gf2Vector& r : v.basis()) {
    const std::uint32_t b = r.bits();
    const std::uint32_t high = shift + 1 >= 32 ? 0 : (b >> (shift + 1));
    const std::uint32_t low = b & low_mask(shift);
    rows.emplace_back(n - 1, (high << shift) | low);
  }
  return canonicalize(rows, n - 1);
}

Gf2Subspace insert_zero_coordinate(const Gf2Subspace& v, int i) {
  const int n = v.ambient_dim();
  if (i < 1 || i > n + 1) throw PreconditionError("insert_zero_coordinate: index out of range");
  if (n + 1 > kMaxDim) throw PreconditionError("insert_zero_coordinate: dimension would exceed 32");
  const int shift = n + 1 - i;  // bit index of the new coordinate
  std::vector<Gf2Vector> rows;
  for (const Gf2Vector& r : v.basis()) {
    const std::uint32_t b = r.bits();
    const std::uint32_t high = b >> shift;
    const std::uint32_t low = b & low_mask(shift);
    rows.emplace_back(n + 1, (high << (shift + 1)) | low);
  }
  return canonicalize(rows, n + 1);
}

std::uint64_t gaussian_binomial2(int n, int k) {
  check_guard("gaussian_binomial2", n, 0, 14);
  if (k < 0 || k > n) return 0;
  // [n,k] = [n-1,k-1] + 2^k [n-1,k]
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    t[m][0] = 1;
    for (int j = 1; j <= m; ++j) t[m][j] = t[m - 1][j - 1] + (std::uint64_t{1} << j) * t[m - 1][j];
  }
  return t[n][k];
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct SubspaceGenerator {
  int n;
  int k;
  std::optional<int> first_pivot;
  const SubspaceVisitor& visit;
  std::vector<std::uint32_t> rows;

  void run() {
    rows.clear();
    if (k == 0) {
      if (!first_pivot) visit(Gf2Subspace(n));
      return;
    }
    extend(0, 0, 0);
  }

  // Row j takes pivot p > prev_pivot. Its free bits are the columns right of
  // p; later pivots must avoid every chosen row's support. Values are tried in
  // ascending order so the stream is lexicographic on the row sequence.
  void extend(int j, int prev_pivot, std::uint32_t used) {
    if (j == k) {
      std::vector<Gf2Vector> basis;
      basis.reserve(rows.size());
      for (std::uint32_t r : rows) basis.emplace_back(n, r);
      visit(canonicalize(basis, n));
      return;
    }
    const int remaining = k - j - 1;
    for (int p = n; p > prev_pivot; --p) {
      if (j == 0 && first_pivot && p != *first_pivot) continue;
      const std::uint32_t pivot_bit = std::uint32_t{1} << (n - p);
      if (used & pivot_bit) continue;
      const std::uint32_t free_cols = pivot_bit - 1;
      if (std::popcount(free_cols & ~used) < remaining) continue;
      for (std::uint32_t low = 0; low <= free_cols; ++low) {
        if (std::popcount(free_cols & ~used & ~low) < remaining) continue;
        rows.push_back(pivot_bit | low);
        extend(j + 1, p, used | pivot_bit | low);
        rows.pop_back();
        if (low == free_cols) break;
      }
    }
  }
};

}  // namespace

void for_each_subspace(int n, int k, const SubspaceVisitor& visit, std::optional<int> first_pivot) {
  check_dim(n);
  if (k < 0 || k > n) return;
  SubspaceGenerator gen{n, k, first_pivot, visit, {}};
  gen.run();
}

void for_each_subspace(int n, const SubspaceVisitor& visit, std::optional<int> dim_filter) {
  check_guard("enumerate_subspaces", n, 1, 12);
  for (int k = 0; k <= n; ++k) {
    if (dim_filter && *dim_filter != k) continue;
    for_each_subspace(n, k, visit);
  }
}

std::vector<Gf2Subspace> enumerate_subspaces(int n, std::optional<int> dim_filter) {
  std::vector<Gf2Subspace> out;
  for_each_subspace(n, [&out](const Gf2Subspace& s) { out.push_back(s); }, dim_filter);
  return out;
}

std::vector<Gf2Subspace> collect_subspaces_if(int n, int k,
                                              const std::function<bool(const Gf2Subspace&)>& keep,
                                              int threads) {
  check_dim(n);
  if (k < 0 || k > n) return {};
  if (k == 0) {
    Gf2Subspace zero(n);
    return keep(zero) ? std::vector<Gf2Subspace>{zero} : std::vector<Gf2Subspace>{};
  }
  // Block b holds first pivot n - b; blocks in index order give the stream order.
  const int blocks = n;
  std::vector<std::vector<Gf2Subspace>> parts(blocks);
  auto run_block = [&](int b) {
    for_each_subspace(
        n, k,
        [&](const Gf2Subspace& s) {
          if (keep(s)) parts[b].push_back(s);
        },
        n - b);
  };
  const int workers = std::clamp(threads, 1, blocks);
  if (workers == 1) {
    for (int b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int b = next++; b < blocks; b = next++) run_block(b);
      });
  }
  std::vector<Gf2Subspace> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::size_t Gf2SubspaceHash::operator()(const Gf2Subspace& v) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(v.ambient_dim());
  for (const Gf2Vector& r : v.basis()) {
    h ^= r.bits();
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace polarwords
