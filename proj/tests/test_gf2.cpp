#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "polarwords/errors.hpp"
#include "polarwords/gf2.hpp"
#include "polarwords/gf2_matrix.hpp"

using namespace polarwords;

namespace {

Gf2Vector vec(const char* s) { return Gf2Vector::parse(s); }
Gf2Subspace sub(const char* s) { return Gf2Subspace::parse(s); }

// Number of k-subspaces of F_2^n as (ordered bases) / |GL_k(F_2)|, in doubles
// small enough to be exact.
std::uint64_t gaussian_by_product(int n, int k) {
  double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= static_cast<double>((1ULL << n) - (1ULL << i));
    den *= static_cast<double>((1ULL << k) - (1ULL << i));
  }
  return static_cast<std::uint64_t>(num / den + 0.5);
}

// Every subset of F_2^n closed under addition and containing 0, as bitmasks
// over the 2^n vectors. Only usable for n <= 4.
std::set<std::uint32_t> closed_subsets(int n) {
  const std::uint32_t size = 1u << n;
  std::set<std::uint32_t> out;
  for (std::uint64_t mask = 1; mask < (1ULL << size); mask += 2) {
    bool closed = true;
    for (std::uint32_t a = 0; a < size && closed; ++a)
      for (std::uint32_t b = 0; b < size && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> (a ^ b) & 1)) closed = false;
    if (closed) out.insert(static_cast<std::uint32_t>(mask));
  }
  return out;
}

std::uint32_t element_mask(const Gf2Subspace& v) {
  std::uint32_t m = 0;
  for (const Gf2Vector& e : v.elements()) m |= 1u << e.bits();
  return m;
}

}  // namespace

TEST_SUITE("gf2") {
  TEST_CASE("vector text, support and endpoints") {
    const Gf2Vector v = vec("01101");
    CHECK(v.dim() == 5);
    CHECK(v.to_string() == "01101");
    CHECK(v.weight() == 3);
    CHECK(v.alpha() == 2);
    CHECK(v.beta() == 5);
    CHECK(v.support() == std::vector<int>{2, 3, 5});
    CHECK(v.coord(2));
    CHECK_FALSE(v.coord(1));
    CHECK(Gf2Vector::unit(4, 1).to_string() == "1000");
    CHECK((vec("1100") + vec("0110")).to_string() == "1010");
    CHECK_THROWS_AS(vec("012"), PreconditionError);
  }

  TEST_CASE("order_gt") {
    CHECK(order_gt(vec("100"), vec("011")));
    CHECK_FALSE(order_gt(vec("101"), vec("101")));
    CHECK(order_gt(vec("011"), vec("010")));
    CHECK_THROWS(order_gt(vec("01"), vec("010")));
  }

  TEST_CASE("order_gt is a strict total order on F_2^d, d <= 5") {
    for (int d = 1; d <= 5; ++d) {
      const std::uint32_t size = 1u << d;
      for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b) {
          const Gf2Vector u(d, a), v(d, b);
          const int holds = order_gt(u, v) + order_gt(v, u) + (a == b);
          REQUIRE(holds == 1);
          for (std::uint32_t c = 0; c < size; ++c) {
            const Gf2Vector w(d, c);
            if (order_gt(u, v) && order_gt(v, w)) REQUIRE(order_gt(u, w));
          }
        }
    }
  }

  TEST_CASE("canonical reduced echelon form") {
    const Gf2Subspace a = canonicalize(std::vector{vec("111"), vec("001")}, 3);
    CHECK(a.to_string() == "110;001");
    const Gf2Subspace zero = canonicalize(std::vector<Gf2Vector>{}, 3);
    CHECK(zero.dim() == 0);
    CHECK(zero.to_string() == "000");
    CHECK(sub("11;01").to_string() == "10;01");
    CHECK(sub("11;01") == Gf2Subspace::full(2));
    CHECK(Gf2Subspace::parse("000", 3) == Gf2Subspace(3));
  }

  TEST_CASE("canonicalize is idempotent and keeps the span") {
    for (const Gf2Subspace& v : enumerate_subspaces(5)) {
      REQUIRE(canonicalize(v.basis(), 5) == v);
      std::vector<Gf2Vector> shuffled = v.basis();
      for (std::size_t i = 1; i < shuffled.size(); ++i) shuffled[i] += shuffled[i - 1];
      std::reverse(shuffled.begin(), shuffled.end());
      REQUIRE(canonicalize(shuffled, 5) == v);
      for (const Gf2Vector& r : shuffled) REQUIRE(v.contains(r));
    }
  }

  TEST_CASE("rank") {
    CHECK(rank(std::vector{vec("101"), vec("011"), vec("110")}) == 2);
    CHECK(rank(std::vector<Gf2Vector>{}) == 0);
    CHECK(rank(std::vector{vec("100"), vec("010"), vec("001")}) == 3);
  }

  TEST_CASE("intersection and sum satisfy the dimension formula") {
    const auto all = enumerate_subspaces(4);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Gf2Subspace i = intersect(a, b);
        const Gf2Subspace s = sum(a, b);
        REQUIRE(i.dim() + s.dim() == a.dim() + b.dim());
        REQUIRE(a.contains(i));
        REQUIRE(b.contains(i));
        REQUIRE(s.contains(a));
        REQUIRE(s.contains(b));
      }
  }

  TEST_CASE("delete and insert coordinates") {
    CHECK(delete_coordinate(sub("10001;01001;00100"), 4) == sub("1001;0101;0010"));
    CHECK(delete_coordinate(Gf2Subspace(3), 2) == Gf2Subspace(2));
    CHECK(delete_coordinate(sub("11"), 2) == sub("1"));
    CHECK(insert_zero_coordinate(sub("11"), 2) == sub("101"));
    CHECK(insert_zero_coordinate(Gf2Subspace(2), 1) == Gf2Subspace(3));
    CHECK(insert_zero_coordinate(sub("10"), 1) == sub("010"));
  }

  TEST_CASE("delete after insert is the identity, n <= 5") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& v : enumerate_subspaces(n))
        for (int i = 1; i <= n + 1; ++i) {
          const Gf2Subspace w = insert_zero_coordinate(v, i);
          REQUIRE(w.ambient_dim() == n + 1);
          REQUIRE(w.dim() == v.dim());
          REQUIRE(delete_coordinate(w, i) == v);
        }
  }

  TEST_CASE("small enumerations") {
    CHECK(enumerate_subspaces(1).size() == 2);
    CHECK(enumerate_subspaces(2).size() == 5);
    CHECK(enumerate_subspaces(3).size() == 16);
    const auto two = enumerate_subspaces(2);
    std::vector<std::string> text;
    for (const auto& v : two) text.push_back(v.to_string());
    CHECK(text == std::vector<std::string>{"00", "01", "10", "11", "10;01"});
  }

  TEST_CASE("enumeration equals the closed subsets, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
      std::set<std::uint32_t> seen;
      for (const auto& v : enumerate_subspaces(n)) REQUIRE(seen.insert(element_mask(v)).second);
      CHECK(seen == closed_subsets(n));
    }
  }

  TEST_CASE("enumeration counts match the Gaussian binomials, n <= 8") {
    // Frozen: sum_k [n,k]_2 for n = 1..8.
    const std::vector<std::uint64_t> totals{2, 5, 16, 67, 374, 2825, 29212, 417199};
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t by_product = 0;
      for (int k = 0; k <= n; ++k) {
        REQUIRE(gaussian_binomial2(n, k) == gaussian_by_product(n, k));
        by_product += gaussian_by_product(n, k);
        std::uint64_t streamed = 0;
        Gf2Subspace prev(n);
        bool ordered = true;
        for_each_subspace(n, k, [&](const Gf2Subspace& v) {
          REQUIRE(v.dim() == k);
          if (streamed && !(prev < v)) ordered = false;
          prev = v;
          ++streamed;
        });
        CHECK(ordered);
        REQUIRE(streamed == gaussian_by_product(n, k));
      }
      CHECK(by_product == totals[n - 1]);
    }
  }

  TEST_CASE("parallel collection does not depend on the thread count") {
    auto keep = [](const Gf2Subspace& v) { return v.basis().front().weight() <= 2; };
    const auto one = collect_subspaces_if(7, 3, keep, 1);
    CHECK(one == collect_subspaces_if(7, 3, keep, 4));
    CHECK(std::is_sorted(one.begin(), one.end()));
  }

  TEST_CASE("guards") {
    CHECK_THROWS_AS(enumerate_subspaces(13), GuardError);
    CHECK_THROWS_AS(enumerate_subspaces(0), GuardError);
    CHECK_THROWS_AS(gaussian_binomial2(15, 3), GuardError);
  }

  TEST_CASE("bit-row rank") {
    std::vector<BitRow> rows;
    for (int i = 0; i < 130; ++i) {
      BitRow r(200);
      r.set(static_cast<std::size_t>(i));
      r.set(static_cast<std::size_t>(i + 1));
      rows.push_back(r);
    }
    CHECK(gf2_rank(rows) == 130);
    BitRow dup(200);
    dup.set(0);
    dup.set(130);
    rows.push_back(dup);  // telescoping sum of the first 130 rows
    CHECK(gf2_rank(rows) == 130);
    Gf2RowSpan span(200);
    for (auto& r : rows) span.add(r);
    CHECK(span.rank() == 130);
  }
}
