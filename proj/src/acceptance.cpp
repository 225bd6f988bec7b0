#include "polarwords/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "polarwords/bijection.hpp"
#include "polarwords/errors.hpp"
#include "polarwords/language.hpp"
#include "polarwords/nset.hpp"
#include "polarwords/polarspace.hpp"

namespace polarwords {

std::string CriterionResult::line() const {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%d] %s (%.2fs / %.0fs)", passed() ? "PASS" : "FAIL", id, title.c_str(),
                seconds, budget);
  std::string s = head;
  if (ok && seconds > budget) s += ": over budget";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

const std::vector<CaseMembers>& length4_case_table() {
  static const std::vector<CaseMembers> table = {
      {1, {"1111", "1121", "1211", "1221", "1231", "2111", "2121", "2131", "2211", "2221", "2231", "2311", "2321",
           "2331", "2341"}},
      {2, {"1112", "1123", "1213", "1223", "1234", "2113", "2123", "2134", "2213", "2223", "2234", "2314", "2324",
           "2334", "2344"}},
      {3, {"2112", "2312", "1212", "2212", "2313"}},
      {4, {"2122", "2322", "1222", "2222", "2323"}},
      {5, {"2132", "2332", "1232", "2232", "2333"}},
      {6, {"2342", "2343"}},
      {7, {"1122", "1233", "2133", "2233"}},
  };
  return table;
}

const std::vector<LabeledPoint>& rank2_point_table() {
  static const std::vector<LabeledPoint> table = {
      {'A', "0001;0010"}, {'B', "0001;1000"}, {'C', "0001;1010"}, {'D', "0010;0100"}, {'E', "0010;0101"},
      {'F', "0100;1000"}, {'G', "0100;1010"}, {'H', "0101;1000"}, {'I', "0101;1010"}, {'J', "0110;1001"},
      {'K', "0011;1100"}, {'L', "0011;1101"}, {'M', "0110;1011"}, {'N', "0111;1011"}, {'O', "0111;1001"},
  };
  return table;
}

const std::vector<std::string>& rank2_line_table() {
  static const std::vector<std::string> table = {"ABC", "AKL", "DAE", "DGF", "EIH", "JDM", "EON", "BHF",
                                                 "JBO", "CGI", "CMN", "FNK", "MHL", "GOL", "JIK"};
  return table;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::array<std::uint64_t, 7> word_case_counts(int n) {
  std::array<std::uint64_t, 7> c{};
  for (const Word& w : enumerate_words(n)) ++c[static_cast<std::size_t>(classify_word(w).number - 1)];
  return c;
}

void criterion_g(CriterionResult& r) {
  const std::vector<std::uint64_t> expected{2, 5, 15, 51, 187, 715};
  std::vector<std::uint64_t> got;
  for (int n = 1; n <= 6; ++n) got.push_back(g(n));
  r.ok = got == expected;
  r.detail = "g(1..6) = " + join(got);
}

void criterion_language_counts(CriterionResult& r) {
  r.ok = true;
  for (int n = 1; n <= 12; ++n)
    if (count_words(n) != g(n)) {
      r.ok = false;
      r.detail = "count_words(" + std::to_string(n) + ") = " + std::to_string(count_words(n));
      return;
    }
  for (int n = 1; n <= 10; ++n)
    if (enumerate_words(n).size() != g(n)) {
      r.ok = false;
      r.detail = "|enumerate_words(" + std::to_string(n) + ")| = " + std::to_string(enumerate_words(n).size());
      return;
    }
  r.detail = "DP n<=12 and enumeration n<=10 agree with g";
}

void criterion_case_tables(CriterionResult& r) {
  std::map<int, std::set<std::string>> by_case;
  for (const Word& w : enumerate_words(4)) by_case[classify_word(w).number].insert(w.to_string());
  r.ok = true;
  std::vector<std::uint64_t> sizes;
  for (const CaseMembers& cm : length4_case_table()) {
    sizes.push_back(by_case[cm.case_number].size());
    if (by_case[cm.case_number] != std::set<std::string>(cm.words.begin(), cm.words.end())) {
      r.ok = false;
      r.detail = "case " + std::to_string(cm.case_number) + " members differ at n=4";
      return;
    }
  }
  for (int n = 3; n <= 10; ++n) {
    const auto c = word_case_counts(n);
    const auto prev = word_case_counts(n - 1);
    const std::uint64_t g1 = g(n - 1), g2 = g(n - 2);
    bool ok = c[0] == g1 && c[1] == g1;
    for (int i = 2; i <= 4; ++i) ok = ok && c[i] == g1 - 2 * g2;
    std::uint64_t tail = 1;
    for (int i = 2; i <= 6; ++i) tail += prev[i];
    ok = ok && c[5] + c[6] == tail;
    if (!ok) {
      r.ok = false;
      r.detail = "case-size identities fail at n=" + std::to_string(n);
      return;
    }
  }
  r.detail = "n=4 sizes (" + join(sizes) + ") with exact members; identities hold for n=3..10";
}

void criterion_n_counts(CriterionResult& r, int threads) {
  r.ok = true;
  std::vector<std::uint64_t> sizes;
  for (int n = 1; n <= 8; ++n) {
    sizes.push_back(enumerate_N(n, threads).size());
    if (sizes.back() != g(n)) r.ok = false;
  }
  r.detail = "|N^n| for n=1..8 = " + join(sizes);
}

void criterion_stratification(CriterionResult& r, int threads) {
  r.ok = true;
  for (int n = 2; n <= 8; ++n) {
    std::array<std::uint64_t, 7> sub{};
    for (const Gf2Subspace& v : enumerate_N(n, threads)) {
      const int c = classify_subspace(v).number;
      if (c < 1 || c > 7) {
        r.ok = false;
        r.detail = "label out of range for " + v.to_string();
        return;
      }
      ++sub[static_cast<std::size_t>(c - 1)];
    }
    if (sub != word_case_counts(n)) {
      r.ok = false;
      r.detail = "per-case counts differ at n=" + std::to_string(n) + ": " +
                 join(std::vector<std::uint64_t>(sub.begin(), sub.end()));
      return;
    }
    if (n == 8) r.detail = "n=8 cases (" + join(std::vector<std::uint64_t>(sub.begin(), sub.end())) + ")";
  }
  r.detail = "per-case counts match words for n=2..8; " + r.detail;
}

bool matches_rank2_configuration(const PolarGeometry& geo, std::string& why) {
  std::map<char, int> index;
  for (const LabeledPoint& p : rank2_point_table()) {
    const int id = geo.point_index(Gf2Subspace::parse(p.basis, 4));
    if (id < 0) {
      why = std::string("point ") + p.label + " is not a point";
      return false;
    }
    index[p.label] = id;
  }
  std::set<int> distinct;
  for (auto& [label, id] : index) distinct.insert(id);
  if (distinct.size() != geo.points.size()) {
    why = "labeled points do not cover X";
    return false;
  }
  std::set<std::array<int, 3>> lines(geo.incidence.begin(), geo.incidence.end());
  std::set<std::array<int, 3>> printed;
  for (const std::string& t : rank2_line_table()) {
    std::array<int, 3> tri{index[t[0]], index[t[1]], index[t[2]]};
    std::sort(tri.begin(), tri.end());
    printed.insert(tri);
  }
  if (printed != lines) {
    why = "printed line triples differ from the incidence";
    return false;
  }
  return true;
}

void criterion_polar(CriterionResult& r, int threads) {
  const std::array<std::pair<std::size_t, std::size_t>, 4> sizes{{{3, 1}, {15, 15}, {135, 315}, {2295, 11475}}};
  r.ok = true;
  std::vector<std::uint64_t> dims;
  double small = 0.0, large = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const PolarGeometry geo = build_geometry(n, threads);
    const std::size_t u = udim(geo);
    (n <= 3 ? small : large) += since(t0);
    dims.push_back(u);
    if (geo.points.size() != sizes[n - 1].first || geo.lines.size() != sizes[n - 1].second || u != g(n)) {
      r.ok = false;
      r.detail = "n=" + std::to_string(n) + ": " + std::to_string(geo.points.size()) + " points, " +
                 std::to_string(geo.lines.size()) + " lines, udim " + std::to_string(u);
      return;
    }
    std::string why;
    if (n == 2 && !matches_rank2_configuration(geo, why)) {
      r.ok = false;
      r.detail = why;
      return;
    }
  }
  char timing[96];
  std::snprintf(timing, sizeof timing, "; n<=3 %.2fs (budget 5s), n=4 %.2fs (budget 300s)", small, large);
  if (small > 5.0 || large > 300.0) r.ok = false;
  r.detail = "udim(1..4) = " + join(dims) + ", A..O configuration matched" + timing;
}

void criterion_strata(CriterionResult& r, int threads) {
  r.ok = true;
  std::size_t checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const PolarGeometry geo = build_geometry(n, threads);
    for (int x0 = 0; x0 < static_cast<int>(geo.points.size()); ++x0) {
      const StrataReport rep = strata(geo, x0);
      ++checked;
      if (!rep.passed()) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + " base point " + std::to_string(x0) + " fails";
        return;
      }
    }
  }
  r.detail = std::to_string(checked) + " base points: line fact, component bijection, distances";
}

void criterion_bijection(CriterionResult& r, int threads) {
  r.ok = true;
  std::vector<std::uint64_t> matched;
  for (int n = 1; n <= 7; ++n) {
    const BijectionReport rep = verify_bijection(n, threads);
    matched.push_back(rep.matched);
    if (!rep.passed()) {
      r.ok = false;
      r.detail = rep.summary();
      if (!rep.counterexamples.empty()) r.detail += "; " + rep.counterexamples.front();
      return;
    }
  }
  r.detail = "matched " + join(matched) + " for n=1..7";
}

void criterion_quotient(CriterionResult& r, int threads) {
  const PolarGeometry g2 = build_geometry(2, threads);
  const PolarGeometry g3 = build_geometry(3, threads);
  const QuotientBasis q2 = quotient_basis(g2);
  const QuotientBasis q3 = quotient_basis(g3);
  r.ok = q2.points.size() == 5 && q2.certificate_rank == 15 && q3.points.size() == 15 && q3.certificate_rank == 135;
  r.detail = "n=2: " + std::to_string(q2.points.size()) + " points, rank " + std::to_string(q2.certificate_rank) +
             "; n=3: " + std::to_string(q3.points.size()) + " points, rank " + std::to_string(q3.certificate_rank);
}

struct Budget {
  const char* title;
  double budget;
};

constexpr std::array<Budget, kCriterionCount> kBudgets{{
    {"g-sequence", 1},
    {"language counts", 10},
    {"case tables", 10},
    {"N^n counts", 60},
    {"stratification", 60},
    {"polar space", 305},
    {"strata facts", 60},
    {"bijection", 120},
    {"quotient certificate", 10},
}};

}  // namespace

CriterionResult run_criterion(int id, int threads) {
  check_guard("criterion", id, 1, kCriterionCount);
  CriterionResult r;
  r.id = id;
  r.title = kBudgets[static_cast<std::size_t>(id - 1)].title;
  r.budget = kBudgets[static_cast<std::size_t>(id - 1)].budget;
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: criterion_g(r); break;
      case 2: criterion_language_counts(r); break;
      case 3: criterion_case_tables(r); break;
      case 4: criterion_n_counts(r, threads); break;
      case 5: criterion_stratification(r, threads); break;
      case 6: criterion_polar(r, threads); break;
      case 7: criterion_strata(r, threads); break;
      case 8: criterion_bijection(r, threads); break;
      case 9: criterion_quotient(r, threads); break;
    }
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_all_criteria(int threads,
                                              const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, threads));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace polarwords
