#include <doctest.h>

#include <array>
#include <map>
#include <set>
#include <vector>

#include "polarwords/errors.hpp"
#include "polarwords/language.hpp"
#include "polarwords/nset.hpp"

using namespace polarwords;

namespace {

Gf2Subspace sub(const char* s) { return Gf2Subspace::parse(s); }

// Reduced echelon basis read off the element set: for each pivot p, the
// unique element led by p that vanishes on every other pivot.
std::vector<Gf2Vector> echelon_from_elements(const Gf2Subspace& v) {
  const auto elems = v.elements();
  std::set<int> pivots;
  for (const auto& e : elems)
    if (!e.is_zero()) pivots.insert(e.alpha());
  std::vector<Gf2Vector> basis;
  for (int p : pivots)
    for (const auto& e : elems) {
      if (e.is_zero() || e.alpha() != p) continue;
      bool clean = true;
      for (int q : pivots)
        if (q != p && e.coord(q)) clean = false;
      if (clean) basis.push_back(e);
    }
  return basis;
}

bool n_conditions(const std::vector<Gf2Vector>& b) {
  const std::size_t k = b.size();
  auto two = [&](std::size_t i) { return b[i].weight() == 2; };
  for (std::size_t i = 0; i < k; ++i)
    if (b[i].weight() > 2) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (two(i) && two(j) && b[i].beta() > b[j].beta()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        if (two(i) && two(j) && two(l) && b[i].beta() == b[j].beta() && b[j].beta() < b[l].beta() &&
            b[l].alpha() <= b[i].beta())
          return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        for (std::size_t m = l + 1; m < k; ++m)
          if (two(i) && two(j) && two(l) && two(m) && b[i].beta() == b[j].beta() && b[j].beta() == b[l].beta() &&
              b[l].beta() < b[m].beta())
            return false;
  return true;
}

std::array<std::uint64_t, 7> word_counts(int n) {
  std::array<std::uint64_t, 7> c{};
  for (const Word& w : enumerate_words(n)) ++c[classify_word(w).number - 1];
  return c;
}

// The last basis vector is x_{n-1}+x_n and no other basis vector meets
// coordinates n-1 or n.
bool isolated_end_pair(const Gf2Subspace& v) {
  const int n = v.ambient_dim();
  const auto& b = v.basis();
  if (b.empty() || b.back() != Gf2Vector::unit(n, n - 1) + Gf2Vector::unit(n, n)) return false;
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i].coord(n - 1) || b[i].coord(n)) return false;
  return true;
}

}  // namespace

TEST_SUITE("nset") {
  TEST_CASE("membership examples") {
    CHECK(is_N(Gf2Subspace(4)).passes);
    const auto r = is_N(sub("111"));
    CHECK_FALSE(r.passes);
    REQUIRE(r.violated);
    CHECK(r.violated->condition == NCondition::N1);
    CHECK(r.violated->witnesses == std::vector<int>{1});
    const auto r2 = is_N(sub("1001;0110"));
    REQUIRE(r2.violated);
    CHECK(r2.violated->condition == NCondition::N2);
    CHECK(r2.violated->witnesses == std::vector<int>{1, 2});
    CHECK(to_string(NCondition::N3) == "N3");
  }

  TEST_CASE("N3 and N4 witnesses") {
    // x1+x3, x2+x3 end together; x1+x4 would need alpha > 3.
    const auto r3 = is_N(Gf2Subspace::span({Gf2Vector::parse("101000"), Gf2Vector::parse("011000"),
                                            Gf2Vector::parse("000101")},
                                           6));
    CHECK(r3.passes);
    const auto r3bad = is_N(sub("100100;010100;001001"));
    REQUIRE(r3bad.violated);
    CHECK(r3bad.violated->condition == NCondition::N3);
    const auto r4 = is_N(sub("1001000;0101000;0011000;0000101"));
    REQUIRE(r4.violated);
    CHECK(r4.violated->condition == NCondition::N4);
  }

  TEST_CASE("F_2^3 has exactly one non-member") {
    std::vector<Gf2Subspace> bad;
    for (const auto& v : enumerate_subspaces(3))
      if (!in_N(v)) bad.push_back(v);
    REQUIRE(bad.size() == 1);
    CHECK(bad.front() == sub("111"));
  }

  TEST_CASE("membership agrees with the element-set oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& v : enumerate_subspaces(n)) REQUIRE(in_N(v) == n_conditions(echelon_from_elements(v)));
  }

  TEST_CASE("family sizes") {
    CHECK(enumerate_N(1) == std::vector<Gf2Subspace>{Gf2Subspace(1), Gf2Subspace::full(1)});
    CHECK(enumerate_N(2) == enumerate_subspaces(2));
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_N(n, 3).size() == g(n));
    CHECK(enumerate_N(6, 1) == enumerate_N(6, 4));
    CHECK_THROWS_AS(enumerate_N(9), GuardError);
  }

  TEST_CASE("classification examples") {
    CHECK(classify_subspace(sub("110;001")).number == 2);
    CHECK(classify_subspace(sub("101")).number == 3);
    const CaseLabel special = classify_subspace(sub("011"));
    CHECK(special.number == 7);
    CHECK(special.subcase == Subcase::none);
    CHECK(classify_subspace(sub("11000;00101;00010")).number == 4);
    CHECK(classify_subspace(Gf2Subspace(1)).number == 1);
    CHECK(classify_subspace(Gf2Subspace::full(1)).number == 2);
    CHECK_THROWS_AS(classify_subspace(sub("111")), PreconditionError);
  }

  TEST_CASE("case-7 subcases") {
    const CaseLabel a = classify_subspace(sub("0100;0011"));
    CHECK(a.number == 7);
    CHECK(a.subcase == Subcase::a);
    CHECK(a.to_string() == "7a");
    const CaseLabel b = classify_subspace(sub("1100;0011"));
    CHECK(b.number == 7);
    CHECK(b.subcase == Subcase::b);
    CHECK(classify_subspace(sub("10000;01100;00011")).number == 6);
    CHECK(classify_subspace(sub("10100;01000;00011")).subcase == Subcase::b);
  }

  TEST_CASE("the seven cases partition N^n and match the word counts, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
      std::array<std::uint64_t, 7> c{};
      for (const auto& v : enumerate_N(n, 2)) {
        const CaseLabel l = classify_subspace(v);
        REQUIRE(l.number >= 1);
        REQUIRE(l.number <= 7);
        REQUIRE((l.subcase == Subcase::none || l.number == 7));
        ++c[l.number - 1];
      }
      CHECK(c == word_counts(n));
    }
  }

  TEST_CASE("isolated end pairs alone over-count case 7") {
    // Frozen: subspaces outside cases 1-5 whose last vector is an isolated
    // x_{n-1}+x_n, for n = 4..7. Case 7 has 2^(n-2) words.
    const std::map<int, std::uint64_t> frozen{{4, 5}, {5, 15}, {6, 50}, {7, 176}};
    for (const auto& [n, expected] : frozen) {
      std::uint64_t shaped = 0, seven = 0;
      for (const auto& v : enumerate_N(n)) {
        const int c = classify_subspace(v).number;
        if (c >= 6 && isolated_end_pair(v)) ++shaped;
        if (c == 7) {
          ++seven;
          REQUIRE(isolated_end_pair(v));
        }
      }
      CHECK(shaped == expected);
      CHECK(seven == (1ULL << (n - 2)));
    }
  }

  TEST_CASE("reduction examples") {
    auto r = subspace_reduce(sub("11000;00101;00010"));
    CHECK(r.label.number == 4);
    CHECK(r.move == ReductionMove::drop_second_last);
    CHECK(r.subspace == sub("1100;0011"));

    r = subspace_reduce(sub("1000010;0100001;0010000;0001001;0000101"));
    CHECK(r.label.number == 6);
    CHECK(r.move == ReductionMove::merge_last_columns);
    CHECK(r.subspace == sub("100001;010001;001000;000101;000011"));

    r = subspace_reduce(sub("1010000;0100100;0001000;0000011"));
    CHECK(r.label.number == 6);
    CHECK(r.move == ReductionMove::pair_single_end);
    CHECK(r.subspace == sub("101000;010001;000100;000010"));

    r = subspace_reduce(sub("0100;0011"));
    CHECK(r.move == ReductionMove::pair_unit_top);
    CHECK(r.subspace == sub("011"));

    r = subspace_reduce(sub("0011"));
    CHECK(r.move == ReductionMove::pair_lone);
    CHECK(r.subspace == sub("001"));

    CHECK_THROWS_AS(subspace_reduce(Gf2Subspace::full(1)), PreconditionError);
    CHECK(to_string(ReductionMove::pair_double_end) == "pair_double_end");
  }

  TEST_CASE("expansion examples") {
    CHECK(subspace_expand(sub("11"), 2) == std::vector<Gf2Subspace>{sub("110;001")});
    CHECK(subspace_expand(Gf2Subspace(3), 1) == std::vector<Gf2Subspace>{Gf2Subspace(4)});
    CHECK(subspace_expand(sub("11"), 5) == std::vector<Gf2Subspace>{sub("101;011")});
    CHECK(subspace_expand(sub("11"), 4) == std::vector<Gf2Subspace>{sub("101;010")});
    CHECK(subspace_expand(sub("1100;0011"), 4) == std::vector<Gf2Subspace>{sub("11000;00101;00010")});
    CHECK_THROWS_AS(subspace_expand(sub("11"), 0), PreconditionError);
  }

  TEST_CASE("reductions stay in the family, n = 2..8") {
    for (int n = 2; n <= 8; ++n)
      for (const auto& v : enumerate_N(n, 2)) {
        const auto r = subspace_reduce(v);
        REQUIRE(r.subspace.ambient_dim() == n - 1);
        REQUIRE(in_N(r.subspace));
      }
  }

  TEST_CASE("reduce and expand are adjoint, n = 2..7") {
    for (int n = 2; n <= 7; ++n) {
      std::map<std::pair<Gf2Subspace, int>, int> preimages;
      for (const auto& v : enumerate_N(n)) {
        const auto r = subspace_reduce(v);
        const auto up = subspace_expand(r.subspace, r.label.number);
        REQUIRE(std::find(up.begin(), up.end(), v) != up.end());
        ++preimages[{r.subspace, r.label.number}];
      }
      for (const auto& y : enumerate_N(n - 1))
        for (int c = 1; c <= 7; ++c) {
          const auto up = subspace_expand(y, c);
          REQUIRE(up.size() <= 1);
          for (const auto& v : up) {
            const auto r = subspace_reduce(v);
            REQUIRE(r.label.number == c);
            REQUIRE(r.subspace == y);
          }
          const auto it = preimages.find({y, c});
          REQUIRE(up.size() == (it == preimages.end() ? 0u : static_cast<std::size_t>(it->second)));
        }
    }
  }
}
