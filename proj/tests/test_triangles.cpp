#include <doctest.h>

#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "tsscpp/enumerate.hpp"
#include "tsscpp/triangles.hpp"

using namespace tsscpp;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

template <class F>
bool accepts(F&& f) {
  try {
    f();
    return true;
  } catch (const Error&) {
    return false;
  }
}

Rows random_triangle(std::mt19937& rng, int rows, int lo, int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  Rows t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int p = 0; p <= r; ++p) t[r].push_back(value(rng));
  }
  return t;
}

Rows box(int side, int value) { return Rows(side, std::vector<int>(side, value)); }

}  // namespace

TEST_CASE("monotone validation: printed and trivial examples") {
  CHECK(accepts([] { validate_monotone({{2}, {1, 3}, {1, 2, 3}}); }));
  CHECK(accepts([] { validate_monotone({{1}, {1, 2}, {1, 2, 3}}); }));
  CHECK(kind_of([] { validate_monotone({{3}, {1, 2}, {1, 2, 3}}); }) == ErrorKind::Interlace);
  CHECK(kind_of([] { validate_monotone({{2}, {2, 2}, {1, 2, 3}}); }) == ErrorKind::RowStrict);
  CHECK(kind_of([] { validate_monotone({{1}, {1, 2}, {1, 2, 4}}); }) == ErrorKind::BottomRow);
  CHECK(kind_of([] { validate_monotone({{1}, {1, 2, 3}}); }) == ErrorKind::Shape);
  CHECK(kind_of([] { validate_monotone({}); }) == ErrorKind::Shape);
  for (const auto& m : figures::kMonotone3) CHECK(accepts([&] { validate_monotone(m); }));
}

TEST_CASE("monotone validation error carries a position") {
  try {
    validate_monotone({{3}, {1, 2}, {1, 2, 3}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() >= 1);
  }
}

TEST_CASE("magog validation: printed and trivial examples") {
  CHECK(accepts([] { validate_magog({{3}, {1, 3}, {1, 2, 3}}); }));
  CHECK(accepts([] { validate_magog({{1}, {1, 2}, {1, 2, 3}}); }));
  CHECK(accepts([] { validate_magog({{3}, {1, 2}, {1, 2, 3}}); }));
  CHECK_FALSE(accepts([] { validate_magog({{1}, {1, 3}, {1, 2, 3}}); }));
  CHECK_FALSE(accepts([] { validate_magog({{4}, {2, 3}, {1, 2, 3}}); }));
  for (const auto& m : figures::kMagog3) CHECK(accepts([&] { validate_magog(m); }));
}

TEST_CASE("boolean validation: printed and trivial examples") {
  CHECK(kind_of([] { validate_boolean({{1}, {0, 1}}); }) == ErrorKind::PartialSum);
  CHECK(accepts([] { validate_boolean({{0}, {0, 1}}); }));
  for (int n = 1; n <= 7; ++n) {
    Rows zeros(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) zeros[r].assign(r + 1, 0);
    CHECK(accepts([&] { validate_boolean(n, zeros); }));
  }
  CHECK(kind_of([] { validate_boolean({{2}, {0, 1}}); }) == ErrorKind::Entry);
  CHECK(kind_of([] { validate_boolean(4, {{0}, {0, 1}}); }) == ErrorKind::Shape);
  CHECK(validate_boolean({}).order() == 1);
  for (const auto& b : figures::kBoolean3) CHECK(accepts([&] { validate_boolean(b); }));
}

TEST_CASE("asm validation") {
  CHECK(accepts([] { validate_asm({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}); }));
  for (int n = 1; n <= 6; ++n) {
    Rows id(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    CHECK(accepts([&] { validate_asm(id); }));
  }
  CHECK(kind_of([] { validate_asm({{1, 0, 0}, {0, 0, 0}, {0, 1, 1}}); }) == ErrorKind::RowSum);
  CHECK(kind_of([] { validate_asm({{1, 0}, {0}}); }) == ErrorKind::Shape);
  CHECK_FALSE(accepts([] { validate_asm({{0, 1, 0}, {1, 0, -1}, {0, 0, 1}}); }));
  for (const auto& a : figures::kAsm3) CHECK(accepts([&] { validate_asm(a); }));
}

TEST_CASE("permutation matrices") {
  CHECK(is_permutation_matrix(validate_asm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_permutation_matrix(validate_asm(figures::kAsm3[3])));
  CHECK(is_permutation_matrix(validate_asm(figures::kWorkedMatrix)));
}

TEST_CASE("permutation validation") {
  CHECK(validate_permutation({4, 6, 3, 5, 1, 2}).size() == 6);
  CHECK(kind_of([] { validate_permutation({1, 1, 2}); }) == ErrorKind::NotPermutation);
  CHECK(kind_of([] { validate_permutation({1, 4, 2}); }) == ErrorKind::Entry);
  CHECK(kind_of([] { validate_permutation({}); }) == ErrorKind::Shape);
  const auto s = validate_permutation({4, 6, 3, 5, 1, 2});
  CHECK(s(1) == 4);
  CHECK(s.inverse().one_line() == oracle::inverse(s.one_line()));
}

TEST_CASE("fuzz: monotone and magog validators agree with the inequality scan") {
  std::mt19937 rng(20240611);
  int monotone_hits = 0;
  int magog_hits = 0;
  for (int trial = 0; trial < 40000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    Rows t = random_triangle(rng, n, 0, n + 1);
    if (rng() % 8 != 0) {
      for (int j = 0; j < n; ++j) t[n - 1][j] = j + 1;
    }
    const bool mono = accepts([&] { validate_monotone(t); });
    const bool mag = accepts([&] { validate_magog(t); });
    REQUIRE(mono == oracle::monotone_ok(t));
    REQUIRE(mag == oracle::magog_ok(t));
    monotone_hits += mono;
    magog_hits += mag;
  }
  CHECK(monotone_hits > 100);
  CHECK(magog_hits > 100);
}

TEST_CASE("exhaustive: every small triangle is classified like the oracle") {
  for (int n = 1; n <= 4; ++n) {
    int mono = 0;
    int mag = 0;
    oracle::all_triangles(n, [&](const Rows& t) {
      CHECK(accepts([&] { validate_monotone(t); }) == oracle::monotone_ok(t));
      CHECK(accepts([&] { validate_magog(t); }) == oracle::magog_ok(t));
      mono += oracle::monotone_ok(t);
      mag += oracle::magog_ok(t);
      return false;
    });
    CHECK(mono == static_cast<int>(oracle::all_asm(n).size()));
    CHECK(mag == static_cast<int>(oracle::all_booleans(n).size()));
  }
}

TEST_CASE("exhaustive: every 0/1 triangle is classified like the oracle") {
  for (int n = 1; n <= 6; ++n) {
    const int cells = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << cells); ++mask) {
      Rows b(static_cast<std::size_t>(n - 1));
      int bit = 0;
      for (int r = 0; r < n - 1; ++r) {
        for (int p = 0; p <= r; ++p) b[r].push_back(static_cast<int>((mask >> bit++) & 1));
      }
      REQUIRE(accepts([&] { validate_boolean(n, b); }) == oracle::boolean_ok(n, b));
    }
  }
}

TEST_CASE("fuzz: asm validator agrees with the alternation oracle") {
  std::mt19937 rng(7);
  int hits = 0;
  for (int trial = 0; trial < 30000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Rows m(n, std::vector<int>(n, 0));
    if (trial % 2 == 0) {
      const auto all = oracle::all_asm(n);
      m = all[rng() % all.size()];
      m[rng() % n][rng() % n] += static_cast<int>(rng() % 3) - 1;
    } else {
      for (auto& row : m) {
        for (auto& v : row) v = static_cast<int>(rng() % 3) - 1;
      }
    }
    const bool ok = accepts([&] { validate_asm(m); });
    REQUIRE(ok == oracle::asm_ok(m));
    hits += ok;
  }
  CHECK(hits > 1000);
}

TEST_CASE("tsscpp report on the printed arrays matches the cube oracle") {
  for (const auto& lines : figures::kTsscpp3) {
    const Rows t = oracle::parse_digit_rows(lines);
    const auto expected = oracle::symmetries(t, 6);
    const auto report = validate_tsscpp(t);
    CHECK(report.symmetric == expected.symmetric);
    CHECK(report.cyclically_symmetric == expected.cyclic);
    CHECK(report.self_complementary == expected.self_complementary);
    CHECK(report.all());
  }
}

TEST_CASE("tsscpp report on boxes") {
  for (int n = 1; n <= 3; ++n) {
    const Rows full = box(2 * n, n);
    const auto expected = oracle::symmetries(full, 2 * n);
    const auto report = validate_tsscpp(full);
    CHECK(report.symmetric == expected.symmetric);
    CHECK(report.cyclically_symmetric == expected.cyclic);
    CHECK(report.self_complementary == expected.self_complementary);
    // The slab of height n is its own complement but not cyclically symmetric.
    CHECK(report.self_complementary);
    CHECK_FALSE(report.cyclically_symmetric);

    const auto empty = validate_tsscpp(box(2 * n, 0));
    CHECK(empty.symmetric);
    CHECK(empty.cyclically_symmetric);
    CHECK_FALSE(empty.self_complementary);
  }
  CHECK(kind_of([] { validate_tsscpp(Rows{{1, 2}, {0, 0}}); }) == ErrorKind::Monotonicity);
}

TEST_CASE("fundamental domain of the printed arrays") {
  auto domain = [](int k) {
    return fundamental_domain(validate_plane_partition(oracle::parse_digit_rows(figures::kTsscpp3[k])));
  };
  CHECK(domain(0).rows() == Rows{{0, 0, 0}, {0, 0}, {0}});
  CHECK(domain(1).rows() == Rows{{1, 0, 0}, {0, 0}, {0}});
  const auto fourth = domain(3);
  CHECK(fourth.t(4, 4) == 2);
  CHECK(fourth.t(4, 5) == 1);
  CHECK(domain(5).rows() == Rows{{1, 1, 0}, {1, 0}, {0}});
  for (std::size_t k = 0; k < figures::kTsscpp3.size(); ++k) {
    const Rows t = oracle::parse_digit_rows(figures::kTsscpp3[k]);
    const auto d = domain(static_cast<int>(k));
    for (int i = 4; i <= 6; ++i) {
      for (int j = i; j <= 6; ++j) CHECK(d.t(i, j) == t[i - 1][j - 1]);
    }
  }
}

TEST_CASE("expanding a domain recovers the printed array") {
  const auto zero = validate_fundamental(3, {{0, 0, 0}, {0, 0}, {0}});
  CHECK(expand_fundamental(zero).rows() == oracle::parse_digit_rows(figures::kTsscpp3[0]));
  const auto sixth = validate_fundamental(3, {{1, 1, 0}, {1, 0}, {0}});
  CHECK(expand_fundamental(sixth).rows() == oracle::parse_digit_rows(figures::kTsscpp3[5]));
  for (const auto& lines : figures::kTsscpp3) {
    const auto p = validate_plane_partition(oracle::parse_digit_rows(lines));
    CHECK(expand_fundamental(fundamental_domain(p)) == p);
  }
}

TEST_CASE("expand round trip over enumerated TSSCPP") {
  for (int n = 1; n <= 5; ++n) {
    std::size_t seen = 0;
    for_each_tsscpp(n, [&](const PlanePartition& p) {
      ++seen;
      CHECK(validate_tsscpp(p).all());
      CHECK(oracle::symmetries(p.rows(), 2 * n).self_complementary);
      CHECK(expand_fundamental(fundamental_domain(p)) == p);
    });
    CHECK(seen == oracle::all_booleans(n).size());
  }
}

TEST_CASE("fundamental domain validation") {
  CHECK(kind_of([] { validate_fundamental(3, {{0, 0}, {0, 0}, {0}}); }) == ErrorKind::Shape);
  CHECK_FALSE(accepts([] { validate_fundamental(3, {{0, 1, 0}, {0, 0}, {0}}); }));
  CHECK(kind_of([] { validate_fundamental(3, {{3, 0, 0}, {0, 0}, {0}}); }) == ErrorKind::Entry);
}

TEST_CASE("nilp validation") {
  using S = Step;
  CHECK(accepts([] { validate_nilp(3, {{S::Vertical}, {S::Vertical, S::Vertical}}); }));
  CHECK_FALSE(accepts([] { validate_nilp(3, {{S::Diagonal}, {S::Vertical, S::Vertical}}); }));
  CHECK(kind_of([] { validate_nilp(3, {{S::Vertical}}); }) == ErrorKind::Shape);
}

TEST_CASE("dense coordinate helpers") {
  CHECK(classical_column(4, 0, 0) == 3);
  CHECK(classical_column(4, 3, 0) == 0);
  CHECK(dense_position(4, 2, classical_column(4, 2, 1)) == 1);
  CHECK(to_string(ErrorKind::PartialSum) != "");
}
