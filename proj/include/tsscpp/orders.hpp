#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tsscpp/poset.hpp"
#include "tsscpp/triangles.hpp"

namespace tsscpp {

enum class Direction { Forward, Reverse };

/// a <= b entrywise (Forward) or a >= b entrywise (Reverse); shapes must match.
bool componentwise_leq(const Rows& a, const Rows& b, Direction dir);
bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b, Direction dir);

/// Refuses to build posets above this many elements (Error SizeCap).
inline constexpr std::size_t kOrderElementCap = 10000;

// Join-irreducible posets on (i, j, k) with 0 <= i <= n-2, 0 <= j <= n-2-i,
// 0 <= k <= n-2-i-j; labels are "[i,j,k]".
Poset build_Pn(int n);
Poset build_Qn(int n);
Poset build_JPn(int n);
Poset build_JQn(int n);

// Componentwise orders on triangles; labels are the canonical object JSON.
Poset build_An(int n);
Poset build_Tn(int n);
/// Reverse componentwise order on boolean triangles.
Poset build_TBool(int n);

// Posets on permutations, labelled by one-line notation.  Permutation
// TSSCPP are identified with permutations through the boolean/monotone
// bijection.
Poset build_An_perm(int n);
Poset build_Tn_perm(int n);
Poset build_TBool_perm(int n);
/// pi covers sigma when pi = (i i+1) sigma and i+1 precedes i in pi.
Poset build_weak_order(int n);
/// pi covers sigma when they differ by a transposition and pi has one more inversion.
Poset build_strong_bruhat(int n);

// Catalan posets on sequences x_1..x_n with i <= x_i <= n, reverse
// componentwise; labels are JSON arrays.
std::vector<std::vector<int>> tamari_vectors(int n);
std::vector<std::vector<int>> catalan_vectors(int n);
Poset build_tamari(int n);
Poset build_catalan_distributive(int n);

/// [2] x [3] x ... x [n]; labels are JSON arrays (c_1, ..., c_{n-1}), 0 <= c_k <= k.
Poset build_product_of_chains(int n);

/// Subposet of a permutation poset on permutations avoiding `pattern`.
Poset avoiding_subposet(const Poset& perm_poset, const std::vector<int>& pattern);

/// Names accepted by build_named: An, Tn, TBool, TnPerm, TBoolPerm, AnPerm,
/// weak, strong, tamari, catalan, chains, Pn, Qn, JPn, JQn.
std::optional<Poset> build_named(std::string_view name, int n);
const std::vector<std::string_view>& poset_names();

}  // namespace tsscpp
