#pragma once

// The four-letter restricted-growth language L_n.
//
// A word a_1..a_n over {1,2,3,4} is valid when every letter exceeds the
// running maximum of the letters before it (with an implicit leading 1) by at
// most one. |L_n| = g(n) = (2^n+1)(2^(n-1)+1)/3.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polarwords {

/// g(n) = (2^n+1)(2^(n-1)+1)/3, with g(0) = 1. Guard 0 <= n <= 32.
std::uint64_t g(int n);

enum class Subcase : std::uint8_t { none, a, b, c };

/// One of the seven strata shared by words and subspaces.
struct CaseLabel {
  int number = 0;  // 1..7
  Subcase subcase = Subcase::none;

  std::string to_string() const;
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

char subcase_char(Subcase s);  // 'a'|'b'|'c', or '\0' for none

class Word {
 public:
  Word() = default;
  /// Throws PreconditionError unless the letters form a valid word.
  explicit Word(std::vector<std::uint8_t> letters);
  static Word parse(std::string_view digits);

  std::size_t size() const { return letters_.size(); }
  /// Letter a_i, 1-based.
  int at(std::size_t i) const { return letters_.at(i - 1); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  /// max(1, a_1, ..., a_count).
  int prefix_max(std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

bool is_valid(std::span<const std::uint8_t> letters);
bool is_valid(std::string_view digits);

/// All of L_n in lexicographic order. Guard 1 <= n <= 14.
std::vector<Word> enumerate_words(int n);

/// |L_n| by dynamic programming over the running maximum. Guard 1 <= n <= 32.
std::uint64_t count_words(int n);

CaseLabel classify_word(const Word& w);

/// E_i: deletes letter i. Throws InvalidResult if the remainder is not a word.
Word erase(const Word& w, std::size_t i);

struct WordReduction {
  CaseLabel label;
  Word word;
};

/// The case-wise reduction L_n -> L_{n-1}: cases 1,2 erase the last letter,
/// cases 3..6 erase letter n-1, case 7 erases the last two letters and
/// appends 2. Requires n >= 2.
WordReduction word_reduce(const Word& w);

/// Every length-(n+1) word of the target case that reduces to `reduced`.
/// At most one word for every case.
std::vector<Word> word_expand(const Word& reduced, int target_case);

}  // namespace polarwords
