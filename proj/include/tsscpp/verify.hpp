#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tsscpp/json_io.hpp"

namespace tsscpp {

/// Outcome of one computational check at one order.  Informational results
/// record data without asserting anything; `passed` is then always true.
struct ClaimResult {
  std::string id;
  int n = 0;
  bool passed = false;
  bool informational = false;
  Json detail = Json::object();
};

Json to_json(const ClaimResult& r);

/// Identifiers accepted by check_poset_claim, in suite order.
const std::vector<std::string_view>& poset_claim_ids();
/// Smallest and largest order at which a poset claim is checked by verify_all.
std::pair<int, int> poset_claim_range(std::string_view id);
/// Throws std::invalid_argument for an unknown id and Error(SizeCap) when
/// the posets involved are too large.
ClaimResult check_poset_claim(std::string_view id, int n);

/// All families of order n have the same size.
ClaimResult check_counts(int n);
/// Permutation boolean triangles number n!.
ClaimResult check_permutation_count(int n);
/// Inversions, last-row and last-column statistics survive the permutation bijection.
ClaimResult check_statistic_preservation(int n);
/// The worked example sigma = 463512.
ClaimResult check_worked_example();
/// -1 entries of each ASM match strict entries of its monotone triangle.
ClaimResult check_negative_ones(int n);
/// Weakly decreasing boolean rows, the domain condition and the magog
/// condition select the same TSSCPP.
ClaimResult check_permutation_characterizations(int n);
/// Zero-then-one pairs over boolean triangles against -1 entries over ASM.
/// Asserted equal for n <= 4, informational above.
ClaimResult check_zero_then_one(int n);
/// Every TSSCPP-side conversion pair is mutually inverse and bijective.
ClaimResult check_round_trips_tsscpp(int n);
/// Every permutation-side conversion pair is mutually inverse and bijective.
ClaimResult check_round_trips_permutation(int n);
/// Gradedness and lattice property of the 123-, 231-, 312- and 321-avoiding
/// subposets of the permutation magog poset; expected neither for n = 4.
ClaimResult check_avoider_subposets(int n);

struct SuiteEntry {
  std::string id;
  std::vector<ClaimResult> results;
  bool passed() const;
  bool informational() const;
};

/// Runs every check at each order from its minimum up to min(max_n, its own
/// maximum).  `progress` is called after each entry completes.
std::vector<SuiteEntry> verify_all(int max_n, const std::function<void(const SuiteEntry&)>& progress = {});

}  // namespace tsscpp
