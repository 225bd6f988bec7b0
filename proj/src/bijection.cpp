#include "polarwords/bijection.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "polarwords/errors.hpp"
#include "polarwords/nset.hpp"

namespace polarwords {

namespace {

struct Assignment {
  const char* word;
  const char* basis;  // rows as printed, joined by ';'
};

// Rows are copied from the printed tables and canonicalized on load, so e.g.
// 223 -> 111;001 becomes 110;001 and 23 -> 11;01 becomes the whole plane.
constexpr Assignment kLength1[] = {{"1", "0"}, {"2", "1"}};
constexpr Assignment kLength2[] = {
    {"11", "00"}, {"12", "01"}, {"21", "10"}, {"22", "11"}, {"23", "11;01"},
};
constexpr Assignment kLength3[] = {
    {"111", "000"},     {"121", "010"},     {"211", "100"},         {"221", "110"},
    {"231", "110;010"}, {"112", "001"},     {"123", "011;001"},     {"213", "101;001"},
    {"223", "111;001"}, {"234", "110;010;001"},
    {"212", "101"},     {"222", "101;010"}, {"232", "101;011"},
    {"122", "011"},     {"233", "111;011"},
};

template <std::size_t N>
BijectionTable load(int n, const Assignment (&rows)[N]) {
  BijectionTable t;
  t.n = n;
  for (const Assignment& a : rows) {
    Word w = Word::parse(a.word);
    Gf2Subspace v = Gf2Subspace::parse(a.basis, n);
    t.forward.emplace(w, v);
    t.backward.emplace(v, w);
  }
  return t;
}

const BijectionTable& cached_base(int n) {
  static const BijectionTable t1 = load(1, kLength1);
  static const BijectionTable t2 = load(2, kLength2);
  static const BijectionTable t3 = load(3, kLength3);
  switch (n) {
    case 1: return t1;
    case 2: return t2;
    default: return t3;
  }
}

}  // namespace

BijectionTable base_table(int n) {
  check_guard("base_table", n, 1, 3);
  return cached_base(n);
}

Gf2Subspace word_to_subspace(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw PreconditionError("word_to_subspace: empty word");
  if (n <= 3) return cached_base(n).forward.at(w);
  const WordReduction r = word_reduce(w);
  const Gf2Subspace lower = word_to_subspace(r.word);
  std::vector<Gf2Subspace> images = subspace_expand(lower, r.label.number);
  if (images.size() != 1)
    throw ConsistencyError("word_to_subspace: " + std::to_string(images.size()) + " case-" +
                           std::to_string(r.label.number) + " expansions of " + lower.to_string() +
                           " for word " + w.to_string());
  return images.front();
}

Word subspace_to_word(const Gf2Subspace& v) {
  const int n = v.ambient_dim();
  if (n < 1) throw PreconditionError("subspace_to_word: ambient dimension must be >= 1");
  if (auto rep = is_N(v); !rep.passes)
    throw PreconditionError("subspace_to_word: " + v.to_string() + " is not in N^" + std::to_string(n));
  if (n <= 3) return cached_base(n).backward.at(v);
  const SubspaceReduction r = subspace_reduce(v);
  const Word lower = subspace_to_word(r.subspace);
  std::vector<Word> words = word_expand(lower, r.label.number);
  if (words.size() != 1)
    throw ConsistencyError("subspace_to_word: " + std::to_string(words.size()) + " case-" +
                           std::to_string(r.label.number) + " expansions of word " + lower.to_string() +
                           " for subspace " + v.to_string());
  return words.front();
}

BijectionTable build_table(int n) {
  check_guard("build_table", n, 1, 10);
  BijectionTable t;
  t.n = n;
  for (const Word& w : enumerate_words(n)) {
    Gf2Subspace v = word_to_subspace(w);
    t.backward.emplace(v, w);
    t.forward.emplace(w, std::move(v));
  }
  return t;
}

std::string BijectionReport::summary() const {
  std::ostringstream os;
  os << "n=" << n << " matched " << matched << "/" << words << " (|N^n|=" << subspaces << ")"
     << " cases=(";
  for (std::size_t i = 0; i < case_counts.size(); ++i) os << (i ? "," : "") << case_counts[i];
  os << ")" << (passed() ? " ok" : " FAILED");
  return os.str();
}

BijectionReport verify_bijection(int n, int threads) {
  check_guard("verify_bijection", n, 1, 7);
  BijectionReport rep;
  rep.n = n;
  const std::vector<Word> words = enumerate_words(n);
  const std::vector<Gf2Subspace> family = enumerate_N(n, threads);
  rep.words = words.size();
  rep.subspaces = family.size();

  auto note = [&rep](std::string s) {
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(std::move(s));
  };

  std::set<Gf2Subspace> images;
  bool inverse_ok = true;
  bool cases_ok = true;
  for (const Word& w : words) {
    Gf2Subspace v(n);
    try {
      v = word_to_subspace(w);
    } catch (const std::exception& e) {
      note(w.to_string() + ": " + e.what());
      inverse_ok = cases_ok = false;
      continue;
    }
    images.insert(v);
    bool ok = true;
    if (!in_N(v)) {
      note(w.to_string() + " -> " + v.to_string() + " is not in N^n");
      ok = false;
    }
    const CaseLabel wc = classify_word(w);
    if (ok) {
      if (classify_subspace(v).number != wc.number) {
        note(w.to_string() + " (case " + std::to_string(wc.number) + ") -> " + v.to_string() + " (case " +
             classify_subspace(v).to_string() + ")");
        cases_ok = ok = false;
      }
      try {
        if (subspace_to_word(v) != w) {
          note(v.to_string() + " maps back to " + subspace_to_word(v).to_string() + ", not " + w.to_string());
          inverse_ok = ok = false;
        }
      } catch (const std::exception& e) {
        note(v.to_string() + ": " + e.what());
        inverse_ok = ok = false;
      }
    } else {
      cases_ok = inverse_ok = false;
    }
    if (ok) {
      ++rep.matched;
      ++rep.case_counts[static_cast<std::size_t>(wc.number - 1)];
    }
    if (n <= 3 && cached_base(n).forward.at(w) != v) {
      rep.matches_base_table = false;
      note(w.to_string() + " differs from the base table");
    }
  }
  rep.injective = images.size() == words.size();
  rep.surjective = images == std::set<Gf2Subspace>(family.begin(), family.end());
  rep.inverse_consistent = inverse_ok;
  rep.case_compatible = cases_ok;
  if (!rep.surjective) note("image differs from N^n");
  return rep;
}

}  // namespace polarwords
