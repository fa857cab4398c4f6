#include <doctest.h>

#include <map>

#include "figures.hpp"
#include "oracles.hpp"
#include "tsscpp/bijections.hpp"
#include "tsscpp/statistics.hpp"

using namespace tsscpp;

namespace {

// Number of -1 entries counted straight off the matrix.
int minus_ones(const Rows& a) {
  int c = 0;
  for (const auto& row : a) {
    for (int v : row) c += v == -1;
  }
  return c;
}

// Entries with a_{i+1,j-1} < a_{i,j} < a_{i+1,j}, in classical indices.
int strict_entries(const Rows& m) {
  const int n = static_cast<int>(m.size());
  int c = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = n - i; j <= n - 1; ++j) {
      const int a = oracle::at(m, n, i, j);
      if (oracle::at(m, n, i + 1, j - 1) < a && a < oracle::at(m, n, i + 1, j)) ++c;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("permutation inversions") {
  CHECK(perm_inversions(validate_permutation({4, 6, 3, 5, 1, 2})) == 11);
  CHECK(perm_inversions(Permutation::identity(5)) == 0);
  CHECK(perm_inversions(validate_permutation({4, 3, 2, 1})) == 6);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : oracle::all_permutations(n)) {
      CHECK(perm_inversions(validate_permutation(s)) == oracle::inversions(s));
    }
  }
}

TEST_CASE("ASM inversion number against the quadruple sum") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::all_asm(n)) CHECK(inversion_number(validate_asm(a)) == oracle::asm_inversions(a));
  }
  // The matrix with a -1 in the middle has inversion number 2.
  CHECK(inversion_number(validate_asm(figures::kAsm3[3])) == 2);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& s : oracle::all_permutations(n)) {
      CHECK(inversion_number(permutation_matrix(validate_permutation(s))) == oracle::inversions(s));
    }
  }
}

TEST_CASE("negative ones equal strict diagonal entries") {
  CHECK(count_negative_ones(validate_asm(figures::kAsm3[3])) == 1);
  CHECK(strict_diagonal_entries(validate_monotone(figures::kMonotone3[3])) == 1);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::all_asm(n)) {
      const auto A = validate_asm(a);
      const auto m = asm_to_monotone(A);
      CHECK(count_negative_ones(A) == minus_ones(a));
      CHECK(strict_diagonal_entries(m) == strict_entries(m.rows()));
      CHECK(count_negative_ones(A) == strict_diagonal_entries(m));
    }
  }
}

TEST_CASE("boolean statistics on the worked example") {
  const auto b = validate_boolean(figures::kWorkedBoolean);
  CHECK(boolean_zero_count(b) == 11);
  CHECK(boolean_last_row_zeros(b) == 4);
  CHECK(boolean_lowest_one_last_diagonal(b) == 1);
  for (int n = 2; n <= 6; ++n) {
    Rows ones(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) ones[r].assign(r + 1, 1);
    const auto all = validate_boolean(n, ones);
    CHECK(boolean_zero_count(all) == 0);
    CHECK(boolean_last_row_zeros(all) == 0);
    CHECK(boolean_lowest_one_last_diagonal(all) == n - 1);
    CHECK(zero_then_one_count(all) == 0);
  }
  CHECK(zero_then_one_count(validate_boolean({{0}, {0, 1}})) == 1);
}

TEST_CASE("stat bundle of the worked example") {
  const auto s = validate_permutation({4, 6, 3, 5, 1, 2});
  const auto bundle = stat_bundle(permutation_matrix(s));
  CHECK(bundle.inversion_number == 11);
  CHECK(bundle.negative_ones == 0);
  CHECK(bundle.last_row_one_col == 2);
  CHECK(bundle.last_col_one_row == 2);
}

TEST_CASE("statistics survive the permutation bijection") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sv : oracle::all_permutations(n)) {
      const auto b = permutation_to_boolean(validate_permutation(sv));
      CHECK(boolean_zero_count(b) == oracle::inversions(sv));
      const int k = sv[n - 1];
      CHECK(boolean_last_row_zeros(b) == n - k);
      int ell = 0;
      for (int i = 0; i < n; ++i) {
        if (sv[i] == n) ell = i + 1;
      }
      const auto lowest = boolean_lowest_one_last_diagonal(b);
      if (ell == 1) {
        CHECK_FALSE(lowest.has_value());
      } else {
        CHECK(lowest == ell - 1);
      }
    }
  }
}

TEST_CASE("pattern avoidance against subsequence search") {
  CHECK_FALSE(avoids(validate_permutation({4, 6, 3, 5, 1, 2}), {1, 3, 2}));
  CHECK(avoids(Permutation::identity(5), {2, 1}));
  int avoiders = 0;
  for (const auto& s : oracle::all_permutations(4)) avoiders += avoids(validate_permutation(s), {1, 3, 2});
  CHECK(avoiders == 14);
  const std::vector<std::vector<int>> patterns{{1, 2}, {2, 1}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}, {2, 4, 1, 3}};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : oracle::all_permutations(n)) {
      for (const auto& pat : patterns) CHECK(avoids(validate_permutation(s), pat) == !oracle::contains_pattern(s, pat));
    }
  }
}

TEST_CASE("zero count over permutation booleans is Mahonian") {
  for (int n = 1; n <= 6; ++n) {
    Distribution expected;
    for (const auto& s : oracle::all_permutations(n)) ++expected[oracle::inversions(s)];
    CHECK(distribution(Family::PermutationBoolean, n, Statistic::Zeros) == expected);
    CHECK(distribution(Family::Permutation, n, Statistic::Inversions) == expected);
  }
  CHECK(distribution(Family::PermutationBoolean, 3, Statistic::Zeros) == Distribution{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
}

TEST_CASE("distributions of -1 entries and zero-then-one pairs") {
  CHECK(distribution(Family::Asm, 3, Statistic::NegativeOnes) == Distribution{{0, 6}, {1, 1}});
  CHECK(distribution(Family::Tsscpp, 3, Statistic::Zeros).size() > 0);
  for (int n = 1; n <= 5; ++n) {
    Distribution neg;
    for (const auto& a : oracle::all_asm(n)) ++neg[minus_ones(a)];
    CHECK(distribution(Family::Asm, n, Statistic::NegativeOnes) == neg);
    CHECK(distribution(Family::MonotoneTriangle, n, Statistic::StrictEntries) == neg);

    Distribution pairs;
    for (const auto& b : oracle::all_booleans(n)) {
      int c = 0;
      for (const auto& row : b) {
        for (std::size_t p = 0; p + 1 < row.size(); ++p) c += row[p] == 0 && row[p + 1] == 1;
      }
      ++pairs[c];
    }
    CHECK(distribution(Family::BooleanTriangle, n, Statistic::ZeroThenOne) == pairs);
    if (n <= 4) CHECK(pairs == neg);
  }
}

TEST_CASE("unsupported family and statistic pairs are rejected") {
  CHECK_THROWS_AS(distribution(Family::Asm, 3, Statistic::ZeroThenOne), std::invalid_argument);
  CHECK(parse_statistic("zero-then-one") == Statistic::ZeroThenOne);
  CHECK_FALSE(parse_statistic("bogus").has_value());
  CHECK(to_string(Statistic::Inversions) == "inversions");
}
