#pragma once

// Packed vectors and subspaces over GF(2) in dimension at most 32.
//
// Coordinates are numbered 1..dim. Coordinate 1 is stored in the most
// significant used bit, so comparing the packed words as unsigned integers
// is exactly the total order u > v ("first differing coordinate is 1 in u").

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polarwords {

inline constexpr int kMaxDim = 32;

class Gf2Vector {
 public:
  constexpr Gf2Vector() = default;
  Gf2Vector(int dim, std::uint32_t bits);

  /// The standard basis vector x_i of F_2^dim.
  static Gf2Vector unit(int dim, int i);
  static Gf2Vector zero(int dim) { return Gf2Vector(dim, 0); }
  /// Parses a '0'/'1' string, coordinate 1 first.
  static Gf2Vector parse(std::string_view text);

  int dim() const { return dim_; }
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  bool coord(int i) const;
  Gf2Vector with_coord(int i, bool value) const;
  Gf2Vector flipped(int i) const { return with_coord(i, !coord(i)); }

  int weight() const;
  /// min supp(v); v must be nonzero.
  int alpha() const;
  /// max supp(v); v must be nonzero.
  int beta() const;
  std::vector<int> support() const;

  std::string to_string() const;

  Gf2Vector operator+(const Gf2Vector& other) const;
  Gf2Vector& operator+=(const Gf2Vector& other);

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::uint32_t bit_of(int i) const { return std::uint32_t{1} << (dim_ - i); }

  std::uint32_t bits_ = 0;
  std::uint8_t dim_ = 0;
};

/// u > v in the coordinate-1-first total order. Throws on dimension mismatch.
bool order_gt(const Gf2Vector& u, const Gf2Vector& v);

/// A subspace of F_2^n held as its unique reduced-echelon basis, ordered
/// v_1 > v_2 > ... (pivots strictly increasing). Equality is basis equality.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(int ambient_dim = 0);

  static Gf2Subspace span(std::span<const Gf2Vector> vectors, int ambient_dim);
  static Gf2Subspace span(std::initializer_list<Gf2Vector> vectors, int ambient_dim) {
    return span(std::span<const Gf2Vector>(vectors.begin(), vectors.size()), ambient_dim);
  }
  /// Whole space F_2^n.
  static Gf2Subspace full(int ambient_dim);
  /// Parses rows joined by ';'. All-zero rows are ignored, so "000" is the
  /// zero subspace of F_2^3.
  static Gf2Subspace parse(std::string_view text);
  /// parse() for text whose rows may be omitted entirely (empty string).
  static Gf2Subspace parse(std::string_view text, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Gf2Vector>& basis() const { return basis_; }

  bool contains(const Gf2Vector& v) const;
  bool contains(const Gf2Subspace& other) const;
  /// Union of supports of the basis vectors (equals supp of the subspace).
  std::uint32_t support_bits() const;
  bool in_support(int i) const;
  /// Every element of the subspace, 2^dim of them.
  std::vector<Gf2Vector> elements() const;

  /// Rows joined by ';'. The zero subspace prints as the zero row of the
  /// ambient dimension.
  std::string to_string() const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;
  /// Ambient dimension, then dimension, then lexicographic on the basis rows.
  friend std::strong_ordering operator<=>(const Gf2Subspace& a, const Gf2Subspace& b);
  friend Gf2Subspace canonicalize(std::span<const Gf2Vector> vectors, int ambient_dim);

 private:
  std::vector<Gf2Vector> basis_;
  int ambient_ = 0;
};

Gf2Subspace canonicalize(std::span<const Gf2Vector> vectors, int ambient_dim);
int rank(std::span<const Gf2Vector> vectors);

Gf2Subspace intersect(const Gf2Subspace& a, const Gf2Subspace& b);
Gf2Subspace sum(const Gf2Subspace& a, const Gf2Subspace& b);

/// Removes coordinate i from every basis vector and re-canonicalizes.
Gf2Subspace delete_coordinate(const Gf2Subspace& v, int i);
/// Inserts a zero coordinate at position i (1 <= i <= ambient+1).
Gf2Subspace insert_zero_coordinate(const Gf2Subspace& v, int i);

/// Number of k-dimensional subspaces of F_2^n.
std::uint64_t gaussian_binomial2(int n, int k);

using SubspaceVisitor = std::function<void(const Gf2Subspace&)>;

/// Visits every k-dimensional subspace of F_2^n exactly once, in ascending
/// lexicographic order of the basis rows. When first_pivot is set, only
/// subspaces whose first basis vector has that pivot are visited; for a fixed
/// k these blocks are contiguous and appear in decreasing pivot order.
void for_each_subspace(int n, int k, const SubspaceVisitor& visit,
                       std::optional<int> first_pivot = std::nullopt);

/// Streams every subspace of F_2^n (dim-major, lexicographic). Guard 1 <= n <= 12.
void for_each_subspace(int n, const SubspaceVisitor& visit,
                       std::optional<int> dim_filter = std::nullopt);

std::vector<Gf2Subspace> enumerate_subspaces(int n, std::optional<int> dim_filter = std::nullopt);

/// Subspaces of dimension k in F_2^n satisfying keep, in enumeration order.
/// Work is split by first pivot across up to `threads` workers; the result
/// does not depend on the thread count.
std::vector<Gf2Subspace> collect_subspaces_if(int n, int k,
                                              const std::function<bool(const Gf2Subspace&)>& keep,
                                              int threads = 1);

struct Gf2SubspaceHash {
  std::size_t operator()(const Gf2Subspace& v) const noexcept;
};

}  // namespace polarwords
