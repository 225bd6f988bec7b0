#pragma once

// The inductive bijection L_n <-> N^n.
//
// Lengths 1..3 come from fixed tables. From length 4 on, a word is reduced
// by its case, the shorter word is mapped recursively, and the image is the
// unique case-compatible expansion of that subspace. The inverse runs the
// same recursion on the subspace side.

#include <map>
#include <string>
#include <vector>

#include "polarwords/gf2.hpp"
#include "polarwords/language.hpp"

namespace polarwords {

struct BijectionTable {
  int n = 0;
  std::map<Word, Gf2Subspace> forward;
  std::map<Gf2Subspace, Word> backward;
};

/// The printed assignments for n = 1, 2, 3, canonicalized.
BijectionTable base_table(int n);

Gf2Subspace word_to_subspace(const Word& w);
Word subspace_to_word(const Gf2Subspace& v);

/// Full table for L_n. Guard 1 <= n <= 10.
BijectionTable build_table(int n);

struct BijectionReport {
  int n = 0;
  std::size_t words = 0;
  std::size_t subspaces = 0;   // |N^n| by brute force
  std::size_t matched = 0;     // words whose image round-trips and is case-compatible
  bool injective = false;
  bool surjective = false;
  bool inverse_consistent = false;
  bool case_compatible = false;
  bool matches_base_table = true;  // only checked for n <= 3
  std::vector<std::size_t> case_counts = std::vector<std::size_t>(7, 0);
  std::vector<std::string> counterexamples;

  bool passed() const {
    return injective && surjective && inverse_consistent && case_compatible && matches_base_table;
  }
  std::string summary() const;
};

/// Exhaustive check of the bijection for length n. Guard 1 <= n <= 7.
BijectionReport verify_bijection(int n, int threads = 1);

}  // namespace polarwords
