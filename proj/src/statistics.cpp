#include "tsscpp/statistics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "tsscpp/bijections.hpp"

namespace tsscpp {

long long inversion_number(const Asm& a) {
  const int n = a.order();
  // column_total[c]: sum of column c over the rows above the current one.
  std::vector<long long> column_total(static_cast<std::size_t>(n), 0);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    long long right = 0;
    for (int j = n - 1; j >= 0; --j) {
      total += a.at(i, j) * right;
      right += column_total[j];
    }
    for (int j = 0; j < n; ++j) column_total[j] += a.at(i, j);
  }
  return total;
}

long long perm_inversions(const Permutation& s) {
  long long total = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j) total += s(j) < s(i) ? 1 : 0;
  return total;
}

int count_negative_ones(const Asm& a) {
  return static_cast<int>(std::count(a.entries().begin(), a.entries().end(), -1));
}

int strict_diagonal_entries(const MonotoneTriangle& m) {
  int total = 0;
  for (std::size_t r = 0; r + 1 < m.row_count(); ++r) {
    for (std::size_t p = 0; p <= r; ++p) {
      if (m.at(r + 1, p) < m.at(r, p) && m.at(r, p) < m.at(r + 1, p + 1)) ++total;
    }
  }
  return total;
}

int boolean_zero_count(const BooleanTriangle& b) {
  int total = 0;
  for (const Row& row : b.rows()) total += static_cast<int>(std::count(row.begin(), row.end(), 0));
  return total;
}

int boolean_last_row_zeros(const BooleanTriangle& b) {
  if (b.rows().empty()) return 0;
  const Row& last = b.rows().back();
  return static_cast<int>(std::count(last.begin(), last.end(), 0));
}

std::optional<int> boolean_lowest_one_last_diagonal(const BooleanTriangle& b) {
  for (int r = static_cast<int>(b.row_count()) - 1; r >= 0; --r) {
    if (b.at(r, r) == 1) return r + 1;
  }
  return std::nullopt;
}

int zero_then_one_count(const BooleanTriangle& b) {
  int total = 0;
  for (const Row& row : b.rows()) {
    for (std::size_t p = 0; p + 1 < row.size(); ++p) total += row[p] == 0 && row[p + 1] == 1 ? 1 : 0;
  }
  return total;
}

bool avoids(const Permutation& s, const std::vector<int>& pattern) {
  const int k = static_cast<int>(pattern.size());
  const int n = s.size();
  if (k == 0) return false;
  if (k > n) return true;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  // Extend position by position; a prefix survives while it is order-isomorphic
  // to the pattern prefix of the same length.
  auto search = [&](auto& self, int start) -> bool {
    const int m = static_cast<int>(chosen.size());
    if (m == k) return true;
    for (int pos = start; pos <= n - (k - m) + 1; ++pos) {
      const int v = s(pos);
      bool consistent = true;
      for (int q = 0; q < m && consistent; ++q) {
        consistent = (s(chosen[q]) < v) == (pattern[q] < pattern[m]);
      }
      if (!consistent) continue;
      chosen.push_back(pos);
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return !search(search, 1);
}

StatBundle stat_bundle(const Asm& a) {
  const int n = a.order();
  StatBundle out;
  out.inversion_number = inversion_number(a);
  out.negative_ones = count_negative_ones(a);
  for (int c = 0; c < n; ++c) {
    if (a.at(n - 1, c) == 1) out.last_row_one_col = c + 1;
  }
  for (int r = 0; r < n; ++r) {
    if (a.at(r, n - 1) == 1) out.last_col_one_row = r + 1;
  }
  return out;
}

namespace {

struct StatisticName {
  Statistic stat;
  std::string_view name;
};

constexpr std::array<StatisticName, 7> kStatisticNames{{
    {Statistic::Zeros, "zeros"},
    {Statistic::LastRowZeros, "last-row-zeros"},
    {Statistic::LowestOneLastDiagonal, "lowest-one"},
    {Statistic::ZeroThenOne, "zero-then-one"},
    {Statistic::Inversions, "inversions"},
    {Statistic::NegativeOnes, "negative-ones"},
    {Statistic::StrictEntries, "strict-entries"},
}};

bool is_boolean_statistic(Statistic s) {
  return s == Statistic::Zeros || s == Statistic::LastRowZeros || s == Statistic::LowestOneLastDiagonal ||
         s == Statistic::ZeroThenOne;
}

long long boolean_value(Statistic s, const BooleanTriangle& b) {
  switch (s) {
    case Statistic::Zeros: return boolean_zero_count(b);
    case Statistic::LastRowZeros: return boolean_last_row_zeros(b);
    case Statistic::LowestOneLastDiagonal: return boolean_lowest_one_last_diagonal(b).value_or(0);
    case Statistic::ZeroThenOne: return zero_then_one_count(b);
    default: break;
  }
  throw std::logic_error("not a boolean statistic");
}

long long asm_value(Statistic s, const Asm& a) {
  switch (s) {
    case Statistic::Inversions: return inversion_number(a);
    case Statistic::NegativeOnes: return count_negative_ones(a);
    case Statistic::StrictEntries: return strict_diagonal_entries(asm_to_monotone(a));
    default: break;
  }
  throw std::logic_error("not an ASM statistic");
}

}  // namespace

std::string_view to_string(Statistic s) noexcept {
  for (const auto& entry : kStatisticNames) {
    if (entry.stat == s) return entry.name;
  }
  return "unknown";
}

std::optional<Statistic> parse_statistic(std::string_view name) noexcept {
  for (const auto& entry : kStatisticNames) {
    if (entry.name == name) return entry.stat;
  }
  return std::nullopt;
}

Distribution distribution(Family f, int n, Statistic s, const Limits& limits) {
  Distribution out;
  const bool boolean_stat = is_boolean_statistic(s);
  auto unsupported = [&] {
    throw std::invalid_argument("statistic " + std::string(to_string(s)) + " is not defined on family " +
                                std::string(to_string(f)));
  };
  auto on_boolean = [&](const BooleanTriangle& b) {
    if (boolean_stat) {
      ++out[boolean_value(s, b)];
    } else {
      ++out[asm_value(s, permutation_matrix(boolean_to_permutation(b)))];
    }
  };
  auto on_asm = [&](const Asm& a) {
    if (boolean_stat) {
      ++out[boolean_value(s, permutation_to_boolean(permutation_from_matrix(a)))];
    } else {
      ++out[asm_value(s, a)];
    }
  };
  switch (f) {
    case Family::BooleanTriangle:
      if (!boolean_stat) unsupported();
      for_each_boolean(n, on_boolean, limits);
      break;
    case Family::MagogTriangle:
      if (!boolean_stat) unsupported();
      for_each_magog(n, [&](const MagogTriangle& m) { on_boolean(magog_to_boolean(m)); }, limits);
      break;
    case Family::NilpNest:
      if (!boolean_stat) unsupported();
      for_each_nilp(n, [&](const NilpNest& p) { on_boolean(nilp_to_boolean(p)); }, limits);
      break;
    case Family::Tsscpp:
      if (!boolean_stat) unsupported();
      // The boolean stream drives the plane partitions; skip the expansion.
      for_each_boolean(n, on_boolean, limits);
      break;
    case Family::PermutationBoolean:
      for_each_permutation_boolean(n, on_boolean, limits);
      break;
    case Family::Asm:
      if (boolean_stat) unsupported();
      for_each_asm(n, on_asm, limits);
      break;
    case Family::MonotoneTriangle:
      if (boolean_stat) unsupported();
      for_each_monotone(n, [&](const MonotoneTriangle& m) { on_asm(monotone_to_asm(m)); }, limits);
      break;
    case Family::Permutation:
      for_each_permutation(n, [&](const Permutation& p) { on_asm(permutation_matrix(p)); }, limits);
      break;
  }
  return out;
}

}  // namespace tsscpp
