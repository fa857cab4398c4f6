#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsscpp {

// Index convention
// ----------------
// Every triangular array is stored as dense rows: rows[r][p], r = 0..R-1 and
// p = 0..r.  Dense row r is the 1-based row i = r + 1 of the classical
// labelling a_{i,j} with n-i <= j <= n-1, so the classical column index is
// j = n - i + p = n - 1 - r + p.  Entries sharing j lie on one
// northwest-to-southeast diagonal.
//
// Monotone and magog triangles have n rows and bottom row 1, 2, ..., n.
// Boolean triangles of order n have n-1 rows; order 1 has no rows at all.
// This is the only place where the translation is defined; every other module
// works in dense coordinates.

using Row = std::vector<int>;
using Rows = std::vector<Row>;

/// Classical column j of dense entry (r, p) in a triangle of order n.
constexpr int classical_column(int n, int r, int p) noexcept { return n - 1 - r + p; }

/// Dense position p of classical column j in dense row r; may fall outside 0..r.
constexpr int dense_position(int n, int r, int j) noexcept { return j - (n - 1 - r); }

enum class ErrorKind {
  Shape,
  BottomRow,
  RowStrict,
  Interlace,
  Entry,
  PartialSum,
  RowSum,
  ColumnSum,
  Alternation,
  Monotonicity,
  NotTsscpp,
  InconsistentDomain,
  ResultNotMagog,
  NotPermutationBoolean,
  NotPermutation,
  Intersecting,
  CapExceeded,
  SizeCap,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Validation or conversion failure.  row/col are 1-based positions of the
/// first violation in row-major scan order, or -1 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int row = -1, int col = -1);

  ErrorKind kind() const noexcept { return kind_; }
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  ErrorKind kind_;
  int row_;
  int col_;
};

struct MonotoneTag {};
struct MagogTag {};
struct BooleanTag {};

/// Immutable triangular integer array tagged by family.  Values are only
/// produced by the validate_* functions or by `trusted` inside conversions
/// whose output is correct by construction.
template <class Tag>
class Triangle {
 public:
  static Triangle trusted(int n, Rows rows) { return Triangle(n, std::move(rows)); }

  int order() const noexcept { return n_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const Rows& rows() const noexcept { return rows_; }
  int at(std::size_t r, std::size_t p) const { return rows_[r][p]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

 private:
  Triangle(int n, Rows rows) : n_(n), rows_(std::move(rows)) {}

  int n_ = 0;
  Rows rows_;
};

using MonotoneTriangle = Triangle<MonotoneTag>;
using MagogTriangle = Triangle<MagogTag>;
using BooleanTriangle = Triangle<BooleanTag>;

/// n x n matrix over {-1, 0, 1}, row-major.
class Asm {
 public:
  static Asm trusted(int n, std::vector<int> entries) { return Asm(n, std::move(entries)); }

  int order() const noexcept { return n_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  Rows rows() const;

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  Asm(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<int> entries_;
};

/// One-line notation sigma(1) ... sigma(n), stored 0-based by position.
class Permutation {
 public:
  static Permutation trusted(std::vector<int> one_line) { return Permutation(std::move(one_line)); }
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(sigma_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return sigma_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return sigma_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> sigma) : sigma_(std::move(sigma)) {}

  std::vector<int> sigma_;
};

enum class Step : std::uint8_t { Vertical, Diagonal };

/// Nest of n-1 lattice paths; path j (1-based) starts at (j, j) and takes j
/// steps, each (0,-1) or (1,-1).  paths()[j-1] lists path j's steps top-down.
class NilpNest {
 public:
  static NilpNest trusted(int n, std::vector<std::vector<Step>> paths) {
    return NilpNest(n, std::move(paths));
  }

  int order() const noexcept { return n_; }
  const std::vector<std::vector<Step>>& paths() const noexcept { return paths_; }
  /// x-coordinate where path j (1-based) meets the x-axis.
  int endpoint(int j) const;

  friend bool operator==(const NilpNest&, const NilpNest&) = default;
  friend auto operator<=>(const NilpNest&, const NilpNest&) = default;

 private:
  NilpNest(int n, std::vector<std::vector<Step>> paths) : n_(n), paths_(std::move(paths)) {}

  int n_ = 0;
  std::vector<std::vector<Step>> paths_;
};

/// 2n x 2n plane partition completed with zeros.
class PlanePartition {
 public:
  static PlanePartition trusted(int side, std::vector<int> heights) {
    return PlanePartition(side, std::move(heights));
  }

  int side() const noexcept { return side_; }
  int half() const noexcept { return side_ / 2; }
  /// t_{i,j} for 1-based i, j; zero outside the array.
  int height(int i, int j) const;
  /// Whether the unit cube (i, j, k), all 1-based, belongs to the partition.
  bool contains(int i, int j, int k) const { return k >= 1 && k <= height(i, j); }
  const std::vector<int>& heights() const noexcept { return heights_; }
  Rows rows() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  PlanePartition(int side, std::vector<int> heights) : side_(side), heights_(std::move(heights)) {}

  int side_ = 0;
  std::vector<int> heights_;
};

/// Corner t_{i,j}, n+1 <= i <= j <= 2n, of a TSSCPP array.  Dense row rho
/// holds t_{n+1+rho, n+1+rho+c} for c = 0..n-1-rho.
class FundamentalDomain {
 public:
  static FundamentalDomain trusted(int n, Rows rows) { return FundamentalDomain(n, std::move(rows)); }

  int order() const noexcept { return n_; }
  const Rows& rows() const noexcept { return rows_; }
  /// t_{i,j} for 1-based array indices with n+1 <= i <= j <= 2n.
  int t(int i, int j) const;

  friend bool operator==(const FundamentalDomain&, const FundamentalDomain&) = default;

 private:
  FundamentalDomain(int n, Rows rows) : n_(n), rows_(std::move(rows)) {}

  int n_ = 0;
  Rows rows_;
};

struct TsscppReport {
  bool symmetric = false;
  bool cyclically_symmetric = false;
  bool self_complementary = false;

  bool all() const noexcept { return symmetric && cyclically_symmetric && self_complementary; }
  friend bool operator==(const TsscppReport&, const TsscppReport&) = default;
};

MonotoneTriangle validate_monotone(const Rows& raw);
MagogTriangle validate_magog(const Rows& raw);
/// Order is inferred as raw.size() + 1.
BooleanTriangle validate_boolean(const Rows& raw);
BooleanTriangle validate_boolean(int n, const Rows& raw);
Asm validate_asm(const Rows& raw);
Permutation validate_permutation(const std::vector<int>& one_line);
NilpNest validate_nilp(int n, const std::vector<std::vector<Step>>& paths);
PlanePartition validate_plane_partition(const Rows& raw);
FundamentalDomain validate_fundamental(int n, const Rows& raw);

bool is_permutation_matrix(const Asm& a) noexcept;

/// Symmetry predicates evaluated on the lattice-point set of `p`.
TsscppReport validate_tsscpp(const PlanePartition& p);
/// Rejects arrays that are not plane partitions, then reports.
TsscppReport validate_tsscpp(const Rows& raw);

FundamentalDomain fundamental_domain(const PlanePartition& p);
PlanePartition expand_fundamental(const FundamentalDomain& d);

/// Weakly decreasing rows: the boolean triangles of permutation TSSCPP.
bool has_weakly_decreasing_rows(const BooleanTriangle& b) noexcept;

}  // namespace tsscpp
