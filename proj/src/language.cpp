#include "polarwords/language.hpp"

#include <algorithm>
#include <array>

#include "polarwords/errors.hpp"

namespace polarwords {

std::uint64_t g(int n) {
  check_guard("g", n, 0, 32);
  if (n == 0) return 1;
  const std::uint64_t a = (std::uint64_t{1} << n) + 1;
  const std::uint64_t b = (std::uint64_t{1} << (n - 1)) + 1;
  return a * b / 3;
}

char subcase_char(Subcase s) {
  switch (s) {
    case Subcase::a: return 'a';
    case Subcase::b: return 'b';
    case Subcase::c: return 'c';
    case Subcase::none: break;
  }
  return '\0';
}

std::string CaseLabel::to_string() const {
  std::string s = std::to_string(number);
  if (char c = subcase_char(subcase)) s += c;
  return s;
}

bool is_valid(std::span<const std::uint8_t> letters) {
  if (letters.empty()) return false;
  int running = 1;
  for (std::uint8_t a : letters) {
    if (a < 1 || a > 4 || a > running + 1) return false;
    running = std::max<int>(running, a);
  }
  return true;
}

bool is_valid(std::string_view digits) {
  std::vector<std::uint8_t> letters;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return is_valid(letters);
}

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) throw PreconditionError("not a valid word: " + to_string());
}

Word Word::parse(std::string_view digits) {
  std::vector<std::uint8_t> letters;
  for (char c : digits) {
    if (c < '1' || c > '4') throw PreconditionError("word letters must be 1..4: " + std::string(digits));
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(letters));
}

int Word::prefix_max(std::size_t count) const {
  int m = 1;
  for (std::size_t i = 0; i < count && i < letters_.size(); ++i) m = std::max<int>(m, letters_[i]);
  return m;
}

std::string Word::to_string() const {
  std::string s;
  for (std::uint8_t a : letters_) s += static_cast<char>('0' + a);
  return s;
}

std::vector<Word> enumerate_words(int n) {
  check_guard("enumerate_words", n, 1, 14);
  std::vector<Word> out;
  std::vector<std::uint8_t> buf;
  auto rec = [&](auto&& self, int running) -> void {
    if (static_cast<int>(buf.size()) == n) {
      out.emplace_back(buf);
      return;
    }
    for (int c = 1; c <= std::min(running + 1, 4); ++c) {
      buf.push_back(static_cast<std::uint8_t>(c));
      self(self, std::max(running, c));
      buf.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::uint64_t count_words(int n) {
  check_guard("count_words", n, 1, 32);
  // ways[m]: prefixes whose running maximum is m (index 1..4).
  std::array<std::uint64_t, 5> ways{0, 1, 0, 0, 0};
  for (int step = 0; step < n; ++step) {
    std::array<std::uint64_t, 5> next{};
    for (int m = 1; m <= 4; ++m) {
      if (!ways[m]) continue;
      next[m] += ways[m] * static_cast<std::uint64_t>(m);  // letters 1..m
      if (m < 4) next[m + 1] += ways[m];                  // letter m+1
    }
    ways = next;
  }
  return ways[1] + ways[2] + ways[3] + ways[4];
}

namespace {

// Whether the word with prefix a_1..a_{len-1} and last letter `last` lies in
// case 1 or case 2. `prefix_max` is max(1, a_1..a_{len-1}).
bool in_case_one_or_two(int last, int prefix_max) {
  return last == 1 || last == prefix_max + 1 || last == 4;
}

}  // namespace

CaseLabel classify_word(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw PreconditionError("classify_word: empty word");
  const int last = w.at(n);
  if (n == 1) return {last == 1 ? 1 : 2};
  if (last == 1) return {1};
  if (last == w.prefix_max(n - 1) + 1 || last == 4) return {2};
  // E_{n-1}(w) = a_1..a_{n-2} a_n is always a word here because
  // a_n <= max(a_1..a_{n-1}) and a_n is neither 1 nor 4.
  if (!in_case_one_or_two(last, w.prefix_max(n - 2))) return {2 + w.at(n - 1)};
  return {7};
}

Word erase(const Word& w, std::size_t i) {
  if (i < 1 || i > w.size()) throw PreconditionError("erase: position out of range");
  std::vector<std::uint8_t> letters = w.letters();
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i - 1));
  if (!is_valid(letters)) {
    std::string s;
    for (auto a : letters) s += static_cast<char>('0' + a);
    throw InvalidResult("E_" + std::to_string(i) + "(" + w.to_string() + ") = '" + s +
                        "' breaks the growth rule");
  }
  return Word(std::move(letters));
}

WordReduction word_reduce(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) throw PreconditionError("word_reduce: needs length >= 2");
  const CaseLabel label = classify_word(w);
  switch (label.number) {
    case 1:
    case 2:
      return {label, erase(w, n)};
    case 3:
    case 4:
    case 5:
    case 6:
      return {label, erase(w, n - 1)};
    default: {
      // E_{n-1} E_n, then append 2. At n = 2 the intermediate word is empty.
      std::vector<std::uint8_t> letters(w.letters().begin(), w.letters().end() - 2);
      letters.push_back(2);
      return {label, Word(std::move(letters))};
    }
  }
}

std::vector<Word> word_expand(const Word& reduced, int target_case) {
  if (target_case < 1 || target_case > 7) throw PreconditionError("word_expand: case must be 1..7");
  const std::size_t m = reduced.size();
  const std::vector<std::uint8_t>& base = reduced.letters();
  std::vector<std::vector<std::uint8_t>> candidates;

  switch (target_case) {
    case 1:
      candidates.push_back(base);
      candidates.back().push_back(1);
      break;
    case 2:
      candidates.push_back(base);
      candidates.back().push_back(static_cast<std::uint8_t>(std::min(reduced.prefix_max(m) + 1, 4)));
      break;
    case 3:
    case 4:
    case 5:
    case 6: {
      if (classify_word(reduced).number <= 2) break;
      const int inserted = target_case - 2;
      if (target_case == 6 && reduced.prefix_max(m - 1) < 3) break;
      std::vector<std::uint8_t> w = base;
      w.insert(w.end() - 1, static_cast<std::uint8_t>(inserted));
      candidates.push_back(std::move(w));
      break;
    }
    case 7: {
      // 1^(m-1) 2 gains the extra preimage 1^(m-1) 22; otherwise u2 with
      // no 3 in u (and not in cases 1, 2) expands to u33.
      const bool ones_then_two =
          base.back() == 2 && std::all_of(base.begin(), base.end() - 1, [](auto a) { return a == 1; });
      if (ones_then_two) {
        std::vector<std::uint8_t> w = base;
        w.push_back(2);
        candidates.push_back(std::move(w));
      } else if (base.back() == 2 && reduced.prefix_max(m - 1) <= 2 && classify_word(reduced).number > 2) {
        std::vector<std::uint8_t> w(base.begin(), base.end() - 1);
        w.push_back(3);
        w.push_back(3);
        candidates.push_back(std::move(w));
      }
      break;
    }
  }

  std::vector<Word> out;
  for (auto& letters : candidates) {
    if (!is_valid(letters)) continue;
    Word w(std::move(letters));
    if (classify_word(w).number != target_case) continue;
    if (word_reduce(w).word != reduced) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace polarwords
