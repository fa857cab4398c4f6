#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tsscpp {

using Bits = boost::dynamic_bitset<>;

/// Finite partial order on elements 0..size()-1 with string labels.  The
/// relation is stored closed: up(i) holds every j with i <= j.
class Poset {
 public:
  Poset() = default;

  /// Evaluates leq on every ordered pair, takes the reflexive-transitive
  /// closure and certifies antisymmetry (throws std::invalid_argument).
  static Poset from_comparisons(std::vector<std::string> labels,
                                const std::function<bool(std::size_t, std::size_t)>& leq);
  /// covers lists (lower, upper) pairs.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return up_[i][j] || up_[j][i]; }
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& down(std::size_t i) const { return down_[i]; }
  /// Number of pairs i < j.
  std::size_t relation_count() const noexcept { return relation_count_; }

  /// Hasse diagram as (lower, upper) pairs sorted lexicographically.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Graphviz digraph, one edge per cover, oriented from lower to upper.
  std::string to_dot(const std::string& name = "P") const;

 private:
  void finish();  // closes, certifies and derives covers from up_

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::size_t relation_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
};

/// Largest poset accepted by the pairwise scans.
inline constexpr std::size_t kPairScanCap = 4000;
/// Lattices up to this size get a triple scan for distributivity.
inline constexpr std::size_t kTripleScanCap = 200;
/// Largest number of order ideals order_ideals will materialize.
inline constexpr std::size_t kIdealCap = 50000;

struct PairWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  bool missing_join = false;  // otherwise the meet is missing
};

struct LatticeReport {
  bool is_lattice = false;
  std::optional<PairWitness> witness;
  std::optional<bool> is_distributive;
  /// x, y, z with x meet (y join z) != (x meet y) join (x meet z); only from the triple scan.
  std::optional<std::array<std::size_t, 3>> distributivity_witness;
};

/// Throws Error(SizeCap) above kPairScanCap.
LatticeReport lattice_report(const Poset& p);
/// First pair (in index order) with no least upper bound.
std::optional<PairWitness> find_missing_join(const Poset& p);

/// Every maximal chain has the same length.
bool is_graded(const Poset& p);

/// Down-closed subsets ordered by inclusion.  Labels are JSON arrays of the
/// member labels in index order.  Throws Error(SizeCap) past kIdealCap
/// ideals or above 64 elements.
Poset order_ideals(const Poset& p);
std::size_t count_order_ideals(const Poset& p);

Poset induced_subposet(const Poset& p, const std::function<bool(std::size_t)>& keep);

/// map[i] is the image in q of element i of p.  Throws Error(SizeCap) above kPairScanCap.
std::optional<std::vector<std::size_t>> isomorphic_to(const Poset& p, const Poset& q);
bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map);

/// First relation a < b of p (as p indices) whose labels are both in q but
/// are not related there.
std::optional<std::pair<std::size_t, std::size_t>> relation_not_in(const Poset& p, const Poset& q);
inline bool relations_subset(const Poset& p, const Poset& q) { return !relation_not_in(p, q).has_value(); }

}  // namespace tsscpp
