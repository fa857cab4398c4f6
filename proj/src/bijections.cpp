#include "tsscpp/bijections.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace tsscpp {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& what, int row = -1, int col = -1) {
  throw Error(kind, what, row, col);
}

// Re-raises a validation failure under the kind promised by the caller's contract.
template <class F>
auto rekind(ErrorKind kind, const char* context, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(kind, std::string(context) + ": " + e.what(), e.row(), e.col());
  }
}

void require_weakly_decreasing_rows(const BooleanTriangle& b) {
  for (std::size_t r = 0; r < b.row_count(); ++r) {
    for (std::size_t p = 0; p < r; ++p) {
      if (b.at(r, p) < b.at(r, p + 1)) {
        fail(ErrorKind::NotPermutationBoolean, "boolean triangle row increases", static_cast<int>(r + 1),
             static_cast<int>(p + 2));
      }
    }
  }
}

}  // namespace

MonotoneTriangle asm_to_monotone(const Asm& a) {
  const int n = a.order();
  std::vector<int> column_sum(static_cast<std::size_t>(n), 0);
  Rows rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      column_sum[c] += a.at(r, c);
      if (column_sum[c] == 1) rows[r].push_back(c + 1);
    }
  }
  return MonotoneTriangle::trusted(n, std::move(rows));
}

Asm monotone_to_asm(const MonotoneTriangle& m) {
  const int n = m.order();
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r) {
    for (int v : m.rows()[r]) entries[static_cast<std::size_t>(r * n + v - 1)] += 1;
    if (r > 0) {
      for (int v : m.rows()[r - 1]) entries[static_cast<std::size_t>(r * n + v - 1)] -= 1;
    }
  }
  return Asm::trusted(n, std::move(entries));
}

MagogTriangle magog_from_fundamental(const FundamentalDomain& d) {
  const int n = d.order();
  Rows rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int q = 0; q <= r; ++q) rows[r].push_back(d.rows()[r - q][q] + q + 1);
  }
  return rekind(ErrorKind::ResultNotMagog, "domain does not yield a magog triangle",
                [&] { return validate_magog(rows); });
}

FundamentalDomain fundamental_from_magog(const MagogTriangle& m) {
  const int n = m.order();
  Rows rows(static_cast<std::size_t>(n));
  for (int rho = 0; rho < n; ++rho) {
    for (int c = 0; rho + c < n; ++c) rows[rho].push_back(m.at(rho + c, c) - c - 1);
  }
  return FundamentalDomain::trusted(n, std::move(rows));
}

BooleanTriangle boolean_from_fundamental(const FundamentalDomain& d) {
  const int n = d.order();
  // in_level[k][m]: some domain row has exactly m cells of height >= k.
  std::vector<std::vector<bool>> in_level(static_cast<std::size_t>(n + 1),
                                          std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  for (const Row& row : d.rows()) {
    for (int k = 1; k <= n; ++k) {
      const auto m = std::count_if(row.begin(), row.end(), [k](int v) { return v >= k; });
      if (m > 0) in_level[k][static_cast<std::size_t>(m)] = true;
    }
  }
  Rows rows(static_cast<std::size_t>(n - 1));
  for (int r = 0; r + 1 < n; ++r) {
    for (int p = 0; p <= r; ++p) rows[r].push_back(in_level[r + 1 - p][n - 1 - r] ? 0 : 1);
  }
  return BooleanTriangle::trusted(n, std::move(rows));
}

FundamentalDomain fundamental_from_boolean(const BooleanTriangle& b) {
  const int n = b.order();
  // lengths[k-1][rho]: number of cells of height >= k in domain row rho.
  std::vector<std::vector<int>> lengths;
  for (int k = 1; k < n; ++k) {
    std::vector<int> level;
    for (int m = n - k; m >= 1; --m) {
      if (b.at(static_cast<std::size_t>(n - 1 - m), static_cast<std::size_t>(n - m - k)) == 0) level.push_back(m);
    }
    level.resize(static_cast<std::size_t>(n), 0);
    if (!lengths.empty()) {
      for (int rho = 0; rho < n; ++rho) {
        if (level[rho] > lengths.back()[rho]) {
          fail(ErrorKind::InconsistentDomain, "level sets of the boolean triangle are not nested", k, rho + 1);
        }
      }
    }
    lengths.push_back(std::move(level));
  }
  Rows rows(static_cast<std::size_t>(n));
  for (int rho = 0; rho < n; ++rho) {
    for (int c = 0; rho + c < n; ++c) {
      int height = 0;
      while (height < static_cast<int>(lengths.size()) && c < lengths[height][rho]) ++height;
      rows[rho].push_back(height);
    }
  }
  return rekind(ErrorKind::InconsistentDomain, "boolean triangle does not yield a domain",
                [&] { return validate_fundamental(n, rows); });
}

BooleanTriangle magog_to_boolean(const MagogTriangle& m) {
  return boolean_from_fundamental(fundamental_from_magog(m));
}

MagogTriangle boolean_to_magog(const BooleanTriangle& b) {
  return magog_from_fundamental(fundamental_from_boolean(b));
}

NilpNest boolean_to_nilp(const BooleanTriangle& b) {
  const int n = b.order();
  std::vector<std::vector<Step>> paths(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int j = 1; j < n; ++j) {
    for (int s = 0; s < j; ++s) {
      const int bit = b.at(static_cast<std::size_t>(n - j - 1 + s), static_cast<std::size_t>(s));
      paths[j - 1].push_back(bit == 1 ? Step::Vertical : Step::Diagonal);
    }
  }
  return NilpNest::trusted(n, std::move(paths));
}

BooleanTriangle nilp_to_boolean(const NilpNest& p) {
  const int n = p.order();
  Rows rows(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int r = 0; r + 1 < n; ++r) rows[r].assign(static_cast<std::size_t>(r + 1), 0);
  for (int j = 1; j < n; ++j) {
    for (int s = 0; s < j; ++s) rows[n - j - 1 + s][s] = p.paths()[j - 1][s] == Step::Vertical ? 1 : 0;
  }
  return BooleanTriangle::trusted(n, std::move(rows));
}

NilpNest nilp_from_fundamental(const FundamentalDomain& d) { return boolean_to_nilp(boolean_from_fundamental(d)); }

FundamentalDomain fundamental_from_nilp(const NilpNest& p) { return fundamental_from_boolean(nilp_to_boolean(p)); }

PlanePartition tsscpp_from_boolean(const BooleanTriangle& b) { return expand_fundamental(fundamental_from_boolean(b)); }

BooleanTriangle boolean_from_tsscpp(const PlanePartition& p) { return boolean_from_fundamental(fundamental_domain(p)); }

MonotoneTriangle boolean_to_monotone_perm(const BooleanTriangle& b) {
  require_weakly_decreasing_rows(b);
  const int n = b.order();
  Rows rows(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) rows[n - 1].push_back(v);
  for (int r = n - 2; r >= 0; --r) {
    for (int p = 0; p <= r; ++p) rows[r].push_back(b.at(r, p) == 1 ? rows[r + 1][p] : rows[r + 1][p + 1]);
  }
  return MonotoneTriangle::trusted(n, std::move(rows));
}

BooleanTriangle monotone_perm_to_boolean(const MonotoneTriangle& m) {
  const int n = m.order();
  Rows rows(static_cast<std::size_t>(n - 1));
  for (int r = 0; r + 1 < n; ++r) {
    for (int p = 0; p <= r; ++p) {
      const int v = m.at(r, p);
      const bool sw = v == m.at(r + 1, p);
      const bool se = v == m.at(r + 1, p + 1);
      if (sw && se) fail(ErrorKind::Internal, "entry equals both lower neighbours", r + 1, p + 1);
      if (!sw && !se) fail(ErrorKind::NotPermutation, "monotone triangle has a strict entry", r + 1, p + 1);
      rows[r].push_back(sw ? 1 : 0);
    }
  }
  return BooleanTriangle::trusted(n, std::move(rows));
}

MonotoneTriangle permutation_to_monotone(const Permutation& s) {
  const int n = s.size();
  Rows rows(static_cast<std::size_t>(n));
  Row seen;
  for (int i = 1; i <= n; ++i) {
    seen.insert(std::upper_bound(seen.begin(), seen.end(), s(i)), s(i));
    rows[i - 1] = seen;
  }
  return MonotoneTriangle::trusted(n, std::move(rows));
}

Permutation monotone_to_permutation(const MonotoneTriangle& m) {
  const int n = m.order();
  std::vector<int> sigma;
  Row previous;
  for (int r = 0; r < n; ++r) {
    const Row& row = m.rows()[r];
    Row added;
    std::set_difference(row.begin(), row.end(), previous.begin(), previous.end(), std::back_inserter(added));
    if (added.size() != 1) fail(ErrorKind::NotPermutation, "row does not add exactly one new value", r + 1);
    sigma.push_back(added.front());
    previous = row;
  }
  return Permutation::trusted(std::move(sigma));
}

Asm permutation_matrix(const Permutation& s) {
  const int n = s.size();
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) entries[static_cast<std::size_t>((i - 1) * n + s(i) - 1)] = 1;
  return Asm::trusted(n, std::move(entries));
}

Permutation permutation_from_matrix(const Asm& a) {
  if (!is_permutation_matrix(a)) fail(ErrorKind::NotPermutation, "matrix has a negative entry");
  const int n = a.order();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (a.at(r, c) == 1) sigma[r] = c + 1;
    }
  }
  return Permutation::trusted(std::move(sigma));
}

BooleanTriangle permutation_to_boolean(const Permutation& s) {
  return monotone_perm_to_boolean(permutation_to_monotone(s));
}

Permutation boolean_to_permutation(const BooleanTriangle& b) {
  return monotone_to_permutation(boolean_to_monotone_perm(b));
}

std::vector<int> bracket_vector(const BooleanTriangle& b) {
  require_weakly_decreasing_rows(b);
  const int n = b.order();
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    const Row& row = b.rows()[n - i - 1];
    x[i - 1] = i + std::accumulate(row.begin(), row.end(), 0);
  }
  x[n - 1] = n;
  return x;
}

BooleanTriangle boolean_from_bracket_vector(const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1 || x[n - 1] != n) fail(ErrorKind::Shape, "bracket vector must end with n");
  Rows rows(static_cast<std::size_t>(n - 1));
  for (int r = 0; r + 1 < n; ++r) {
    const int i = n - 1 - r;
    const int ones = x[i - 1] - i;
    if (ones < 0 || ones > r + 1) fail(ErrorKind::Entry, "bracket vector entry out of range", -1, i);
    rows[r].assign(static_cast<std::size_t>(r + 1), 0);
    std::fill_n(rows[r].begin(), ones, 1);
  }
  return validate_boolean(n, rows);
}

bool domain_is_permutation(const FundamentalDomain& d) {
  const int n = d.order();
  for (int i = n + 1; i <= 2 * n - 1; ++i) {
    for (int j = i; j <= 2 * n - 1; ++j) {
      const int middle = d.t(i, j + 1);
      if (d.t(i, j) <= middle) continue;
      for (int k = 0; j + k + 1 <= 2 * n; ++k) {
        if (d.t(i + k, j + k + 1) != middle) continue;
        if (i + k + 1 <= 2 * n && middle > d.t(i + k + 1, j + k + 1)) return false;
      }
    }
  }
  return true;
}

bool magog_is_permutation(const MagogTriangle& m) {
  const int n = m.order();
  for (int r = 0; r + 1 < n; ++r) {
    for (int p = 0; p <= r; ++p) {
      const int middle = m.at(r + 1, p + 1);
      if (m.at(r, p) < middle) continue;
      for (int k = 0; r + k + 1 < n; ++k) {
        if (m.at(r + k + 1, p + 1) == middle && middle > m.at(r + k + 1, p) + 1) return false;
      }
    }
  }
  return true;
}

}  // namespace tsscpp
