#pragma once

// Row-packed dense matrices over GF(2) of arbitrary width, for the
// incidence-matrix ranks that do not fit the 32-bit Gf2Vector.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polarwords {

class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  bool test(std::size_t col) const { return (words_[col / 64] >> (col % 64)) & 1u; }
  void set(std::size_t col) { words_[col / 64] |= std::uint64_t{1} << (col % 64); }
  void flip(std::size_t col) { words_[col / 64] ^= std::uint64_t{1} << (col % 64); }
  bool any() const;
  /// Lowest set column, or width() when the row is zero.
  std::size_t first_set() const;
  /// this ^= other on words from `from_word` onward.
  void xor_with(const BitRow& other, std::size_t from_word = 0);

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of the row set, by in-place elimination column by column.
std::size_t gf2_rank(std::vector<BitRow> rows);

/// Incremental echelon basis: add() reports whether a row enlarged the span.
class Gf2RowSpan {
 public:
  explicit Gf2RowSpan(std::size_t width) : width_(width), pivot_row_(width, npos) {}

  bool add(BitRow row);
  std::size_t rank() const { return rows_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t width_;
  std::vector<BitRow> rows_;
  std::vector<std::size_t> pivot_row_;  // column -> index into rows_
};

}  // namespace polarwords
