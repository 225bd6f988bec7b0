#pragma once

// The family N^n of subspaces of F_2^n cut out by the weight/endpoint
// conditions N1-N4 on the reduced echelon basis, its seven-case
// stratification, and the case-wise reductions N^n -> N^(n-1).

#include <optional>
#include <string>
#include <vector>

#include "polarwords/gf2.hpp"
#include "polarwords/language.hpp"

namespace polarwords {

enum class NCondition { N1, N2, N3, N4 };

std::string to_string(NCondition c);

struct NViolation {
  NCondition condition;
  std::vector<int> witnesses;  // 1-based basis positions
};

struct NMembershipReport {
  Gf2Subspace subspace;
  bool passes = true;
  std::optional<NViolation> violated;
};

NMembershipReport is_N(const Gf2Subspace& v);
bool in_N(const Gf2Subspace& v);

/// N^n in enumeration order. Guard 1 <= n <= 8.
std::vector<Gf2Subspace> enumerate_N(int n, int threads = 1);

/// Case of V in N^n (n >= 1). Throws PreconditionError if V is not in N^n.
CaseLabel classify_subspace(const Gf2Subspace& v);

/// Which elementary move subspace_reduce applies. Cases 1-5 have one move
/// each; case 6 either merges the last two columns or, for subspaces whose
/// last basis vector is the isolated x_{n-1}+x_n, uses the same moves as case 7.
enum class ReductionMove {
  delete_last,          // case 1
  drop_last_unit,       // case 2
  delete_second_last,   // case 3
  drop_second_last,     // case 4
  drop_end_pair,        // case 5
  merge_last_columns,   // case 6
  pair_lone,            // x_{n-1}+x_n alone
  pair_unit_top,        // x_t in V
  pair_single_end,      // one weight-2 vector ends at t
  pair_double_end,      // two weight-2 vectors end at t
};

std::string to_string(ReductionMove m);

struct SubspaceReduction {
  CaseLabel label;
  ReductionMove move;
  Gf2Subspace subspace;  // in ambient n-1
};

/// Case-wise reduction N^n -> N^(n-1). Requires n >= 2.
SubspaceReduction subspace_reduce(const Gf2Subspace& v);

/// Every V in N^(n) of the target case with subspace_reduce(V) landing on
/// `reduced` (which lives in ambient n-1). At most one subspace.
std::vector<Gf2Subspace> subspace_expand(const Gf2Subspace& reduced, int target_case);

}  // namespace polarwords
