#include "polarwords/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace polarwords {

bool BitRow::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitRow::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return width_;
}

void BitRow::xor_with(const BitRow& other, std::size_t from_word) {
  for (std::size_t i = from_word; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::size_t gf2_rank(std::vector<BitRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().width();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::size_t word = col / 64;
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r].test(col)) rows[r].xor_with(rows[rank], word);
    ++rank;
  }
  return rank;
}

bool Gf2RowSpan::add(BitRow row) {
  if (row.width() != width_) throw std::invalid_argument("Gf2RowSpan: row width mismatch");
  // Rows are stored with distinct leading columns; reducing by the leading
  // column of the current remainder terminates because it strictly increases.
  for (std::size_t col = row.first_set(); col < width_; col = row.first_set()) {
    const std::size_t idx = pivot_row_[col];
    if (idx == npos) {
      pivot_row_[col] = rows_.size();
      rows_.push_back(std::move(row));
      return true;
    }
    row.xor_with(rows_[idx], col / 64);
  }
  return false;
}

}  // namespace polarwords
