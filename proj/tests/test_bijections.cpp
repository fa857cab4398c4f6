#include <doctest.h>

#include <set>

#include "figures.hpp"
#include "oracles.hpp"
#include "tsscpp/bijections.hpp"
#include "tsscpp/enumerate.hpp"
#include "tsscpp/statistics.hpp"

using namespace tsscpp;

namespace {

std::vector<Step> steps(const std::string& s) {
  std::vector<Step> out;
  for (char c : s) out.push_back(c == 'V' ? Step::Vertical : Step::Diagonal);
  return out;
}

NilpNest nest_of(const std::vector<std::string>& paths) {
  std::vector<std::vector<Step>> raw;
  for (const auto& p : paths) raw.push_back(steps(p));
  return validate_nilp(static_cast<int>(paths.size()) + 1, raw);
}

PlanePartition printed_tsscpp(std::size_t k) {
  return validate_plane_partition(oracle::parse_digit_rows(figures::kTsscpp3[k]));
}

}  // namespace

TEST_CASE("ASM and monotone triangles pair up as printed") {
  for (std::size_t k = 0; k < figures::kAsm3.size(); ++k) {
    const auto a = validate_asm(figures::kAsm3[k]);
    const auto m = validate_monotone(figures::kMonotone3[k]);
    CHECK(asm_to_monotone(a) == m);
    CHECK(monotone_to_asm(m) == a);
  }
  for (int n = 1; n <= 6; ++n) {
    Rows id(n, std::vector<int>(n, 0));
    Rows expected;
    for (int i = 0; i < n; ++i) {
      id[i][i] = 1;
      expected.emplace_back();
      for (int v = 1; v <= i + 1; ++v) expected.back().push_back(v);
    }
    CHECK(asm_to_monotone(validate_asm(id)).rows() == expected);
  }
}

TEST_CASE("worked example sigma = 463512") {
  const auto s = validate_permutation({4, 6, 3, 5, 1, 2});
  const auto m = permutation_to_monotone(s);
  CHECK(m.rows() == figures::kWorkedMonotone);
  CHECK(permutation_matrix(s).rows() == figures::kWorkedMatrix);
  CHECK(asm_to_monotone(permutation_matrix(s)) == m);
  const auto b = permutation_to_boolean(s);
  CHECK(b.rows() == figures::kWorkedBoolean);
  CHECK(boolean_to_monotone_perm(b) == m);
  CHECK(monotone_perm_to_boolean(m) == b);
  CHECK(monotone_to_permutation(m) == s);
  CHECK(boolean_to_permutation(b) == s);
  CHECK(permutation_from_matrix(permutation_matrix(s)) == s);
}

TEST_CASE("TSSCPP, magog, nest and boolean figures pair up index by index") {
  for (std::size_t k = 0; k < figures::kTsscpp3.size(); ++k) {
    CAPTURE(k);
    const auto p = printed_tsscpp(k);
    const auto d = fundamental_domain(p);
    const auto mag = validate_magog(figures::kMagog3[k]);
    const auto b = validate_boolean(figures::kBoolean3[k]);
    const auto nest = nest_of(figures::kNests3[k]);
    CHECK(magog_from_fundamental(d) == mag);
    CHECK(fundamental_from_magog(mag) == d);
    CHECK(magog_to_boolean(mag) == b);
    CHECK(boolean_to_magog(b) == mag);
    CHECK(boolean_to_nilp(b) == nest);
    CHECK(nilp_to_boolean(nest) == b);
    CHECK(boolean_from_fundamental(d) == b);
    CHECK(fundamental_from_boolean(b) == d);
    CHECK(nilp_from_fundamental(d) == nest);
    CHECK(fundamental_from_nilp(nest) == d);
    CHECK(tsscpp_from_boolean(b) == p);
    CHECK(boolean_from_tsscpp(p) == b);
  }
}

TEST_CASE("permutation booleans map to the printed monotone triangles") {
  for (std::size_t k = 0; k < figures::kBoolean3.size(); ++k) {
    const auto b = validate_boolean(figures::kBoolean3[k]);
    if (static_cast<int>(k) == figures::kNonPermutationIndex) {
      CHECK_FALSE(has_weakly_decreasing_rows(b));
      CHECK_THROWS_AS(boolean_to_monotone_perm(b), Error);
      continue;
    }
    CHECK(has_weakly_decreasing_rows(b));
    CHECK(boolean_to_monotone_perm(b).rows() == figures::kMonotone3[k]);
  }
}

TEST_CASE("all-ones boolean gives the identity; the non-permutation monotone triangle is refused") {
  for (int n = 1; n <= 6; ++n) {
    Rows ones(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) ones[r].assign(r + 1, 1);
    CHECK(boolean_to_permutation(validate_boolean(n, ones)) == Permutation::identity(n));
  }
  const auto bad = validate_monotone(figures::kMonotone3[figures::kNonPermutationIndex]);
  CHECK_THROWS_AS(monotone_to_permutation(bad), Error);
  CHECK_THROWS_AS(monotone_perm_to_boolean(bad), Error);
  CHECK_THROWS_AS(permutation_from_matrix(validate_asm(figures::kAsm3[3])), Error);
}

TEST_CASE("all-zero domain gives the leftmost nest; all-ones triangle gives vertical paths") {
  const auto d = validate_fundamental(3, {{0, 0, 0}, {0, 0}, {0}});
  CHECK(nilp_from_fundamental(d) == nest_of(figures::kNests3[0]));
  const auto nest = boolean_to_nilp(validate_boolean({{1}, {1, 1}, {1, 1, 1}}));
  for (int j = 1; j <= 3; ++j) CHECK(nest.endpoint(j) == j);
}

TEST_CASE("bracket vectors") {
  CHECK(bracket_vector(validate_boolean({{1}, {1, 1}})) == std::vector<int>{3, 3, 3});
  for (int n = 1; n <= 6; ++n) {
    Rows zeros(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) zeros[r].assign(r + 1, 0);
    std::vector<int> expected(n);
    for (int i = 0; i < n; ++i) expected[i] = i + 1;
    CHECK(bracket_vector(validate_boolean(n, zeros)) == expected);
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& sv : oracle::all_permutations(n)) {
      if (oracle::contains_pattern(sv, {1, 3, 2})) continue;
      const auto b = permutation_to_boolean(validate_permutation(sv));
      const auto x = bracket_vector(b);
      for (int i = 1; i <= n; ++i) {
        CHECK(i <= x[i - 1]);
        CHECK(x[i - 1] <= n);
        for (int j = i; j <= x[i - 1]; ++j) CHECK(x[j - 1] <= x[i - 1]);
      }
      CHECK(boolean_from_bracket_vector(x) == b);
      seen.insert(x);
    }
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
    CHECK(seen.size() == catalan[n]);
  }
}

TEST_CASE("monotone images of all ASM are exactly the monotone triangles") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Rows> image;
    for (const auto& a : oracle::all_asm(n)) image.insert(asm_to_monotone(validate_asm(a)).rows());
    const auto expected = n <= 4 ? oracle::all_triangles(n, oracle::monotone_ok) : std::vector<Rows>{};
    if (n <= 4) CHECK(image == std::set<Rows>(expected.begin(), expected.end()));
    for (const auto& t : image) CHECK(oracle::monotone_ok(t));
    CHECK(image.size() == oracle::all_asm(n).size());
  }
}

TEST_CASE("magog images of all boolean triangles are exactly the magog triangles") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Rows> image;
    for (const auto& b : oracle::all_booleans(n)) image.insert(boolean_to_magog(validate_boolean(n, b)).rows());
    const auto expected = oracle::all_triangles(n, oracle::magog_ok);
    CHECK(image == std::set<Rows>(expected.begin(), expected.end()));
  }
}

TEST_CASE("nests are non-intersecting exactly when the partial-sum condition holds") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& b : oracle::all_booleans(n)) {
      const auto nest = boolean_to_nilp(validate_boolean(n, b));
      for (int j = 1; j < n; ++j) {
        CHECK(nest.endpoint(j) >= j);
        if (j + 1 < n) CHECK(nest.endpoint(j) < nest.endpoint(j + 1));
      }
    }
  }
}

TEST_CASE("round trips on the TSSCPP side") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Rows> magogs;
    for_each_boolean(n, [&](const BooleanTriangle& b) {
      const auto m = boolean_to_magog(b);
      magogs.insert(m.rows());
      CHECK(magog_to_boolean(m) == b);
      const auto d = fundamental_from_boolean(b);
      CHECK(boolean_from_fundamental(d) == b);
      CHECK(fundamental_from_magog(m) == d);
      CHECK(magog_from_fundamental(d) == m);
      CHECK(nilp_to_boolean(boolean_to_nilp(b)) == b);
      CHECK(fundamental_from_nilp(nilp_from_fundamental(d)) == d);
      CHECK(boolean_from_tsscpp(tsscpp_from_boolean(b)) == b);
    });
    CHECK(magogs.size() == count(Family::BooleanTriangle, n));
  }
}

TEST_CASE("round trips on the permutation side") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Rows> booleans;
    for (const auto& sv : oracle::all_permutations(n)) {
      const auto s = validate_permutation(sv);
      const auto b = permutation_to_boolean(s);
      booleans.insert(b.rows());
      CHECK(has_weakly_decreasing_rows(b));
      CHECK(boolean_to_permutation(b) == s);
      const auto m = permutation_to_monotone(s);
      CHECK(monotone_to_permutation(m) == s);
      CHECK(monotone_to_asm(m) == permutation_matrix(s));
      CHECK(monotone_perm_to_boolean(m) == b);
      CHECK(boolean_from_bracket_vector(bracket_vector(b)) == b);
      for (int i = 1; i <= n; ++i) {
        std::vector<int> prefix(sv.begin(), sv.begin() + i);
        std::sort(prefix.begin(), prefix.end());
        CHECK(m.rows()[i - 1] == prefix);
      }
    }
    CHECK(booleans.size() == oracle::all_permutations(n).size());
  }
}

TEST_CASE("permutation characterizations agree on every TSSCPP") {
  for (int n = 1; n <= 5; ++n) {
    for_each_boolean(n, [&](const BooleanTriangle& b) {
      const bool rows = has_weakly_decreasing_rows(b);
      CHECK(domain_is_permutation(fundamental_from_boolean(b)) == rows);
      CHECK(magog_is_permutation(boolean_to_magog(b)) == rows);
    });
  }
  CHECK_FALSE(magog_is_permutation(validate_magog(figures::kMagog3[3])));
}

TEST_CASE("invalid domains are refused") {
  CHECK_THROWS_AS(magog_from_fundamental(FundamentalDomain::trusted(3, {{0, 2, 0}, {0, 0}, {0}})), Error);
}
