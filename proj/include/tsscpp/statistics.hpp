#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "tsscpp/enumerate.hpp"
#include "tsscpp/triangles.hpp"

namespace tsscpp {

/// sum of A_{ij} A_{kl} over i > k, j < l.
long long inversion_number(const Asm& a);
long long perm_inversions(const Permutation& s);

int count_negative_ones(const Asm& a);
/// Entries strictly between both lower neighbours; one per -1 of the ASM.
int strict_diagonal_entries(const MonotoneTriangle& m);

int boolean_zero_count(const BooleanTriangle& b);
/// Zeros in the bottom row.
int boolean_last_row_zeros(const BooleanTriangle& b);
/// 1-based row of the lowest one among the last entries of each row, or
/// nullopt when they are all zero.
std::optional<int> boolean_lowest_one_last_diagonal(const BooleanTriangle& b);
/// Adjacent (0, 1) pairs read left to right along rows.
int zero_then_one_count(const BooleanTriangle& b);

/// Whether no subsequence of s is order-isomorphic to pattern.
bool avoids(const Permutation& s, const std::vector<int>& pattern);

struct StatBundle {
  long long inversion_number = 0;
  int negative_ones = 0;
  int last_row_one_col = 0;
  int last_col_one_row = 0;

  friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

StatBundle stat_bundle(const Asm& a);

enum class Statistic {
  Zeros,
  LastRowZeros,
  LowestOneLastDiagonal,
  ZeroThenOne,
  Inversions,
  NegativeOnes,
  StrictEntries,
};

std::string_view to_string(Statistic s) noexcept;
/// CLI spellings: zeros, last-row-zeros, lowest-one, zero-then-one,
/// inversions, negative-ones, strict-entries.
std::optional<Statistic> parse_statistic(std::string_view name) noexcept;

/// Value -> number of objects.  Boolean statistics apply to the TSSCPP
/// families and to permutations through the main bijection; ASM statistics
/// apply to the ASM families and to permutation booleans likewise.  The
/// lowest-one statistic reports 0 for "none".  Throws std::invalid_argument
/// for an unsupported family/statistic pair.
using Distribution = std::map<long long, std::uint64_t>;
Distribution distribution(Family f, int n, Statistic s, const Limits& limits = Limits::from_env());

}  // namespace tsscpp
