#include "tsscpp/triangles.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace tsscpp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::BottomRow: return "BottomRowError";
    case ErrorKind::RowStrict: return "RowStrictError";
    case ErrorKind::Interlace: return "InterlaceError";
    case ErrorKind::Entry: return "EntryError";
    case ErrorKind::PartialSum: return "PartialSumError";
    case ErrorKind::RowSum: return "RowSumError";
    case ErrorKind::ColumnSum: return "ColumnSumError";
    case ErrorKind::Alternation: return "AlternationError";
    case ErrorKind::Monotonicity: return "MonotonicityError";
    case ErrorKind::NotTsscpp: return "NotTsscppError";
    case ErrorKind::InconsistentDomain: return "InconsistentDomain";
    case ErrorKind::ResultNotMagog: return "ResultNotMagog";
    case ErrorKind::NotPermutationBoolean: return "NotPermutationBoolean";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::Intersecting: return "IntersectingPathsError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

std::string where(int row, int col) {
  if (row < 0) return {};
  std::string s = " at (" + std::to_string(row);
  if (col >= 0) s += "," + std::to_string(col);
  return s + ")";
}

[[noreturn]] void fail(ErrorKind kind, const std::string& what, int row = -1, int col = -1) {
  throw Error(kind, what, row, col);
}

void require_triangle_shape(const Rows& raw, std::size_t expected_rows, const char* family) {
  if (raw.size() != expected_rows) {
    fail(ErrorKind::Shape, std::string(family) + ": expected " + std::to_string(expected_rows) +
                               " rows, got " + std::to_string(raw.size()));
  }
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (raw[r].size() != r + 1) {
      fail(ErrorKind::Shape,
           std::string(family) + ": row " + std::to_string(r + 1) + " must have " +
               std::to_string(r + 1) + " entries",
           static_cast<int>(r + 1));
    }
  }
}

void require_bottom_row(const Rows& raw, const char* family) {
  const Row& bottom = raw.back();
  for (std::size_t p = 0; p < bottom.size(); ++p) {
    if (bottom[p] != static_cast<int>(p + 1)) {
      fail(ErrorKind::BottomRow, std::string(family) + ": bottom row must be 1..n",
           static_cast<int>(raw.size()), static_cast<int>(p + 1));
    }
  }
}

// Shared scan for monotone and magog triangles; they differ only in the
// inequality tying an entry to its southeast neighbour.
template <bool Magog>
Rows check_gog_like(const Rows& raw, const char* family) {
  if (raw.empty()) fail(ErrorKind::Shape, std::string(family) + ": order must be positive");
  require_triangle_shape(raw, raw.size(), family);
  require_bottom_row(raw, family);
  const int n = static_cast<int>(raw.size());
  for (int r = 0; r < n; ++r) {
    for (int p = 0; p <= r; ++p) {
      const int v = raw[r][p];
      if (v < 1 || v > n) fail(ErrorKind::Entry, std::string(family) + ": entry outside 1..n", r + 1, p + 1);
      if (p < r && v >= raw[r][p + 1]) {
        fail(ErrorKind::RowStrict, std::string(family) + ": row not strictly increasing", r + 1, p + 1);
      }
      if (r + 1 < n) {
        const int sw = raw[r + 1][p];
        const int se = raw[r + 1][p + 1];
        const bool ok = Magog ? (sw <= v && v + 1 >= se) : (sw <= v && v <= se);
        if (!ok) fail(ErrorKind::Interlace, std::string(family) + ": diagonal inequality violated", r + 1, p + 1);
      }
    }
  }
  return raw;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int row, int col)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message + where(row, col)),
      kind_(kind),
      row_(row),
      col_(col) {}

Rows Asm::rows() const {
  Rows out(static_cast<std::size_t>(n_), Row(static_cast<std::size_t>(n_)));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r][c] = at(r, c);
  return out;
}

Permutation Permutation::identity(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return Permutation(std::move(s));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) inv[static_cast<std::size_t>(sigma_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

int NilpNest::endpoint(int j) const {
  const auto& path = paths_.at(static_cast<std::size_t>(j - 1));
  return j + static_cast<int>(std::count(path.begin(), path.end(), Step::Diagonal));
}

int PlanePartition::height(int i, int j) const {
  if (i < 1 || j < 1 || i > side_ || j > side_) return 0;
  return heights_[static_cast<std::size_t>((i - 1) * side_ + (j - 1))];
}

Rows PlanePartition::rows() const {
  Rows out(static_cast<std::size_t>(side_), Row(static_cast<std::size_t>(side_)));
  for (int i = 0; i < side_; ++i)
    for (int j = 0; j < side_; ++j) out[i][j] = heights_[static_cast<std::size_t>(i * side_ + j)];
  return out;
}

int FundamentalDomain::t(int i, int j) const {
  return rows_.at(static_cast<std::size_t>(i - n_ - 1)).at(static_cast<std::size_t>(j - i));
}

MonotoneTriangle validate_monotone(const Rows& raw) {
  Rows rows = check_gog_like<false>(raw, "monotone triangle");
  const int n = static_cast<int>(rows.size());
  return MonotoneTriangle::trusted(n, std::move(rows));
}

MagogTriangle validate_magog(const Rows& raw) {
  Rows rows = check_gog_like<true>(raw, "magog triangle");
  const int n = static_cast<int>(rows.size());
  return MagogTriangle::trusted(n, std::move(rows));
}

BooleanTriangle validate_boolean(const Rows& raw) {
  return validate_boolean(static_cast<int>(raw.size()) + 1, raw);
}

BooleanTriangle validate_boolean(int n, const Rows& raw) {
  if (n < 1) fail(ErrorKind::Shape, "boolean triangle: order must be positive");
  require_triangle_shape(raw, static_cast<std::size_t>(n - 1), "boolean triangle");
  // diagonal_sum[d]: running sum of classical column d over the rows seen so far.
  std::vector<int> diagonal_sum(static_cast<std::size_t>(n), 0);
  for (int r = 0; r + 1 < n; ++r) {
    for (int p = 0; p <= r; ++p) {
      const int v = raw[r][p];
      if (v != 0 && v != 1) fail(ErrorKind::Entry, "boolean triangle: entries must be 0 or 1", r + 1, p + 1);
      diagonal_sum[classical_column(n, r, p)] += v;
    }
    for (int p = 0; p <= r; ++p) {
      const int d = classical_column(n, r, p);
      if (diagonal_sum[d] > 1 + diagonal_sum[d - 1]) {
        fail(ErrorKind::PartialSum,
             "boolean triangle: diagonal " + std::to_string(d) + " partial sum exceeds its left neighbour's by more than one",
             r + 1, p + 1);
      }
    }
  }
  return BooleanTriangle::trusted(n, raw);
}

Asm validate_asm(const Rows& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 1) fail(ErrorKind::Shape, "asm: order must be positive");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(raw[r].size()) != n) fail(ErrorKind::Shape, "asm: matrix must be square", r + 1);
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = raw[r][c];
      if (v < -1 || v > 1) fail(ErrorKind::Entry, "asm: entries must be -1, 0 or 1", r + 1, c + 1);
      entries.push_back(v);
    }
  }
  // Nonzeros alternate starting and ending with +1 iff every partial sum is 0 or 1
  // and the total is 1.
  for (int r = 0; r < n; ++r) {
    int sum = 0;
    for (int c = 0; c < n; ++c) {
      sum += raw[r][c];
      if (sum < 0 || sum > 1) fail(ErrorKind::Alternation, "asm: row entries do not alternate in sign", r + 1, c + 1);
    }
    if (sum != 1) fail(ErrorKind::RowSum, "asm: row does not sum to 1", r + 1);
  }
  for (int c = 0; c < n; ++c) {
    int sum = 0;
    for (int r = 0; r < n; ++r) {
      sum += raw[r][c];
      if (sum < 0 || sum > 1) fail(ErrorKind::Alternation, "asm: column entries do not alternate in sign", r + 1, c + 1);
    }
    if (sum != 1) fail(ErrorKind::ColumnSum, "asm: column does not sum to 1", -1, c + 1);
  }
  return Asm::trusted(n, std::move(entries));
}

bool is_permutation_matrix(const Asm& a) noexcept {
  return std::none_of(a.entries().begin(), a.entries().end(), [](int v) { return v < 0; });
}

Permutation validate_permutation(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  if (n < 1) fail(ErrorKind::Shape, "permutation: size must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int i = 0; i < n; ++i) {
    const int v = one_line[i];
    if (v < 1 || v > n) fail(ErrorKind::Entry, "permutation: value outside 1..n", -1, i + 1);
    if (seen[v]) fail(ErrorKind::NotPermutation, "permutation: repeated value " + std::to_string(v), -1, i + 1);
    seen[v] = true;
  }
  return Permutation::trusted(one_line);
}

NilpNest validate_nilp(int n, const std::vector<std::vector<Step>>& paths) {
  if (n < 1) fail(ErrorKind::Shape, "nilp: order must be positive");
  if (static_cast<int>(paths.size()) != n - 1) {
    fail(ErrorKind::Shape, "nilp: expected " + std::to_string(n - 1) + " paths");
  }
  std::set<std::pair<int, int>> visited;
  for (int j = 1; j < n; ++j) {
    const auto& path = paths[j - 1];
    if (static_cast<int>(path.size()) != j) fail(ErrorKind::Shape, "nilp: path must take exactly j steps", j);
    int x = j;
    int y = j;
    if (!visited.insert({x, y}).second) fail(ErrorKind::Intersecting, "nilp: paths share a lattice point", j, 0);
    for (int s = 0; s < j; ++s) {
      if (path[s] == Step::Diagonal) ++x;
      --y;
      if (!visited.insert({x, y}).second) fail(ErrorKind::Intersecting, "nilp: paths share a lattice point", j, s + 1);
    }
  }
  return NilpNest::trusted(n, paths);
}

PlanePartition validate_plane_partition(const Rows& raw) {
  const int side = static_cast<int>(raw.size());
  if (side < 2 || side % 2 != 0) fail(ErrorKind::Shape, "plane partition: array must be 2n x 2n with n >= 1");
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(side * side));
  for (int i = 0; i < side; ++i) {
    if (static_cast<int>(raw[i].size()) != side) fail(ErrorKind::Shape, "plane partition: array must be square", i + 1);
  }
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const int v = raw[i][j];
      if (v < 0 || v > side) fail(ErrorKind::Entry, "plane partition: entry outside 0..2n", i + 1, j + 1);
      if ((j + 1 < side && v < raw[i][j + 1]) || (i + 1 < side && v < raw[i + 1][j])) {
        fail(ErrorKind::Monotonicity, "plane partition: array must weakly decrease along rows and columns", i + 1, j + 1);
      }
      heights.push_back(v);
    }
  }
  return PlanePartition::trusted(side, std::move(heights));
}

FundamentalDomain validate_fundamental(int n, const Rows& raw) {
  if (n < 1) fail(ErrorKind::Shape, "fundamental domain: order must be positive");
  if (static_cast<int>(raw.size()) != n) fail(ErrorKind::Shape, "fundamental domain: expected n rows");
  for (int rho = 0; rho < n; ++rho) {
    if (static_cast<int>(raw[rho].size()) != n - rho) {
      fail(ErrorKind::Shape, "fundamental domain: row " + std::to_string(rho + 1) + " must have n-" +
                                 std::to_string(rho) + " entries", rho + 1);
    }
  }
  for (int rho = 0; rho < n; ++rho) {
    for (int c = 0; c < n - rho; ++c) {
      const int v = raw[rho][c];
      if (v < 0 || v > n - 1) fail(ErrorKind::Entry, "fundamental domain: entry outside 0..n-1", rho + 1, c + 1);
      const bool row_ok = c + 1 >= n - rho || v >= raw[rho][c + 1];
      // t_{i+1,j} sits one dense column to the left in the next dense row.
      const bool col_ok = rho + 1 >= n || c == 0 || v >= raw[rho + 1][c - 1];
      if (!row_ok || !col_ok) {
        fail(ErrorKind::Monotonicity, "fundamental domain: entries must weakly decrease", rho + 1, c + 1);
      }
    }
  }
  return FundamentalDomain::trusted(n, raw);
}

TsscppReport validate_tsscpp(const PlanePartition& p) {
  const int side = p.side();
  TsscppReport report{true, true, true};
  for (int i = 1; i <= side; ++i) {
    for (int j = 1; j <= side; ++j) {
      for (int k = 1; k <= side; ++k) {
        const bool in = p.contains(i, j, k);
        if (in && !p.contains(j, i, k)) report.symmetric = false;
        if (in && !p.contains(j, k, i)) report.cyclically_symmetric = false;
        if (in == p.contains(side + 1 - i, side + 1 - j, side + 1 - k)) report.self_complementary = false;
      }
    }
  }
  return report;
}

TsscppReport validate_tsscpp(const Rows& raw) {
  return validate_tsscpp(validate_plane_partition(raw));
}

FundamentalDomain fundamental_domain(const PlanePartition& p) {
  if (!validate_tsscpp(p).all()) fail(ErrorKind::NotTsscpp, "plane partition is not a TSSCPP");
  const int n = p.half();
  Rows rows(static_cast<std::size_t>(n));
  for (int rho = 0; rho < n; ++rho) {
    const int i = n + 1 + rho;
    for (int j = i; j <= 2 * n; ++j) rows[rho].push_back(p.height(i, j));
  }
  return FundamentalDomain::trusted(n, std::move(rows));
}

PlanePartition expand_fundamental(const FundamentalDomain& d) {
  const int n = d.order();
  const int side = 2 * n;
  const int stride = side + 1;
  enum : std::int8_t { Unknown = 0, In = 1, Out = 2 };
  std::vector<std::int8_t> status(static_cast<std::size_t>(stride * stride * stride), Unknown);
  auto cell = [&](int i, int j, int k) -> std::int8_t& {
    return status[static_cast<std::size_t>((i * stride + j) * stride + k)];
  };
  auto assign = [&](int i, int j, int k, std::int8_t value) {
    std::int8_t& slot = cell(i, j, k);
    if (slot != Unknown && slot != value) {
      fail(ErrorKind::InconsistentDomain, "symmetry closure assigns a cube both in and out",
           i, j);
    }
    slot = value;
  };

  // Columns over the domain are fully known: cube (i,j,k) is present iff
  // k <= t_{i,j}.  Closing under the six coordinate permutations and the box
  // complement determines every other cube, since any cube has two
  // coordinates on the same side of n.
  for (int i = n + 1; i <= side; ++i) {
    for (int j = i; j <= side; ++j) {
      const int t = d.t(i, j);
      for (int k = 1; k <= side; ++k) {
        const std::int8_t value = k <= t ? In : Out;
        const std::int8_t flipped = value == In ? Out : In;
        const std::array<std::array<int, 3>, 6> perms{{
            {i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
        for (const auto& q : perms) {
          assign(q[0], q[1], q[2], value);
          assign(side + 1 - q[0], side + 1 - q[1], side + 1 - q[2], flipped);
        }
      }
    }
  }

  Rows rows(static_cast<std::size_t>(side), Row(static_cast<std::size_t>(side), 0));
  for (int i = 1; i <= side; ++i) {
    for (int j = 1; j <= side; ++j) {
      int height = 0;
      for (int k = 1; k <= side; ++k) {
        const std::int8_t s = cell(i, j, k);
        if (s == Unknown) fail(ErrorKind::InconsistentDomain, "symmetry closure left a cube undetermined", i, j);
        if (s == In) {
          if (height != k - 1) fail(ErrorKind::InconsistentDomain, "closure is not a stack of cubes", i, j);
          height = k;
        }
      }
      rows[i - 1][j - 1] = height;
    }
  }

  PlanePartition result = [&] {
    try {
      return validate_plane_partition(rows);
    } catch (const Error& e) {
      throw Error(ErrorKind::InconsistentDomain, std::string("closure is not a plane partition: ") + e.what(),
                  e.row(), e.col());
    }
  }();
  if (!validate_tsscpp(result).all()) fail(ErrorKind::InconsistentDomain, "closure is not a TSSCPP");
  if (!(fundamental_domain(result) == d)) fail(ErrorKind::InconsistentDomain, "domain is not reproduced by its closure");
  return result;
}

bool has_weakly_decreasing_rows(const BooleanTriangle& b) noexcept {
  for (const Row& row : b.rows()) {
    if (!std::is_sorted(row.rbegin(), row.rend())) return false;
  }
  return true;
}

}  // namespace tsscpp
