#include "tsscpp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "tsscpp/bijections.hpp"

namespace tsscpp {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 8> kFamilyNames{{
    {Family::Asm, "asm"},
    {Family::MonotoneTriangle, "monotone"},
    {Family::MagogTriangle, "magog"},
    {Family::BooleanTriangle, "boolean"},
    {Family::NilpNest, "nilp"},
    {Family::Tsscpp, "tsscpp"},
    {Family::Permutation, "permutation"},
    {Family::PermutationBoolean, "permutation-boolean"},
}};

Rows empty_triangle(int rows) {
  Rows t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(r + 1), 0);
  return t;
}

// Fills an n-row strict triangle with entries in 1..n cell by cell in
// row-major order.  Bounds(rows, r, p) tightens the range allowed by the row
// above; the strict-row range is applied here.
template <class Bounds, class Emit>
void fill_strict_triangle(int n, Bounds bounds, Emit emit) {
  Rows t = empty_triangle(n);
  auto step = [&](auto& self, int r, int p) -> void {
    if (r == n) {
      emit(t);
      return;
    }
    const int next_r = p == r ? r + 1 : r;
    const int next_p = p == r ? 0 : p + 1;
    int lo = p == 0 ? 1 : t[r][p - 1] + 1;
    int hi = n - (r - p);
    if (r > 0) {
      const auto [blo, bhi] = bounds(t, r, p);
      lo = std::max(lo, blo);
      hi = std::min(hi, bhi);
    }
    for (int v = lo; v <= hi; ++v) {
      t[r][p] = v;
      self(self, next_r, next_p);
    }
  };
  step(step, 0, 0);
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == f) return entry.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) return entry.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& entry : kFamilyNames) out.push_back(entry.family);
    return out;
  }();
  return families;
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("TSSCPP_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0 && v < 64) {
      limits.permutation_max = static_cast<int>(v);
      limits.tsscpp_max = static_cast<int>(v);
    }
  }
  return limits;
}

int Limits::cap(Family f) const noexcept {
  return f == Family::Permutation || f == Family::PermutationBoolean ? permutation_max : tsscpp_max;
}

void check_order(Family f, int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorKind::Shape, "order must be positive");
  if (n > limits.cap(f)) {
    throw Error(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds the " + std::string(to_string(f)) +
                                            " cap of " + std::to_string(limits.cap(f)) + " (set TSSCPP_MAX_N to raise it)");
  }
}

void for_each_monotone(int n, const std::function<void(const MonotoneTriangle&)>& visit, const Limits& limits) {
  check_order(Family::MonotoneTriangle, n, limits);
  fill_strict_triangle(
      n,
      [](const Rows& t, int r, int p) {
        const int lo = p > 0 ? t[r - 1][p - 1] : 1;
        const int hi = p < r ? t[r - 1][p] : 1 << 20;
        return std::pair{lo, hi};
      },
      [&](const Rows& t) { visit(MonotoneTriangle::trusted(n, t)); });
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit, const Limits& limits) {
  check_order(Family::Asm, n, limits);
  for_each_monotone(n, [&](const MonotoneTriangle& m) { visit(monotone_to_asm(m)); }, limits);
}

void for_each_magog(int n, const std::function<void(const MagogTriangle&)>& visit, const Limits& limits) {
  check_order(Family::MagogTriangle, n, limits);
  fill_strict_triangle(
      n,
      [](const Rows& t, int r, int p) {
        int hi = 1 << 20;
        if (p < r) hi = std::min(hi, t[r - 1][p]);
        if (p > 0) hi = std::min(hi, t[r - 1][p - 1] + 1);
        return std::pair{1, hi};
      },
      [&](const Rows& t) { visit(MagogTriangle::trusted(n, t)); });
}

void for_each_boolean(int n, const std::function<void(const BooleanTriangle&)>& visit, const Limits& limits) {
  check_order(Family::BooleanTriangle, n, limits);
  Rows t = empty_triangle(n - 1);
  // sums[d]: running sum of classical column d over the filled cells.
  std::vector<int> sums(static_cast<std::size_t>(n), 0);
  auto step = [&](auto& self, int r, int p) -> void {
    if (r == n - 1) {
      visit(BooleanTriangle::trusted(n, t));
      return;
    }
    const int next_r = p == r ? r + 1 : r;
    const int next_p = p == r ? 0 : p + 1;
    const int d = classical_column(n, r, p);
    t[r][p] = 0;
    self(self, next_r, next_p);
    if (sums[d] + 1 <= 1 + sums[d - 1]) {
      t[r][p] = 1;
      ++sums[d];
      self(self, next_r, next_p);
      --sums[d];
      t[r][p] = 0;
    }
  };
  step(step, 0, 0);
}

void for_each_nilp(int n, const std::function<void(const NilpNest&)>& visit, const Limits& limits) {
  check_order(Family::NilpNest, n, limits);
  for_each_boolean(n, [&](const BooleanTriangle& b) { visit(boolean_to_nilp(b)); }, limits);
}

void for_each_tsscpp(int n, const std::function<void(const PlanePartition&)>& visit, const Limits& limits) {
  check_order(Family::Tsscpp, n, limits);
  for_each_boolean(n, [&](const BooleanTriangle& b) { visit(tsscpp_from_boolean(b)); }, limits);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, const Limits& limits) {
  check_order(Family::Permutation, n, limits);
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    visit(Permutation::trusted(s));
  } while (std::next_permutation(s.begin(), s.end()));
}

void for_each_permutation_boolean(int n, const std::function<void(const BooleanTriangle&)>& visit,
                                  const Limits& limits) {
  check_order(Family::PermutationBoolean, n, limits);
  Rows t = empty_triangle(n - 1);
  // Fewer ones first gives lexicographic order on left-justified rows.
  auto step = [&](auto& self, int r) -> void {
    if (r == n - 1) {
      try {
        visit(validate_boolean(n, t));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PartialSum) throw;
      }
      return;
    }
    for (int ones = 0; ones <= r + 1; ++ones) {
      std::fill(t[r].begin(), t[r].end(), 0);
      std::fill_n(t[r].begin(), ones, 1);
      self(self, r + 1);
    }
  };
  step(step, 0);
}

std::uint64_t count(Family f, int n, const Limits& limits) {
  std::uint64_t total = 0;
  auto tick = [&total](const auto&) { ++total; };
  switch (f) {
    case Family::Asm: for_each_asm(n, tick, limits); break;
    case Family::MonotoneTriangle: for_each_monotone(n, tick, limits); break;
    case Family::MagogTriangle: for_each_magog(n, tick, limits); break;
    case Family::BooleanTriangle: for_each_boolean(n, tick, limits); break;
    case Family::NilpNest: for_each_nilp(n, tick, limits); break;
    case Family::Tsscpp: for_each_tsscpp(n, tick, limits); break;
    case Family::Permutation: for_each_permutation(n, tick, limits); break;
    case Family::PermutationBoolean: for_each_permutation_boolean(n, tick, limits); break;
  }
  return total;
}

}  // namespace tsscpp
