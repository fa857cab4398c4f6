#pragma once

#include <vector>

#include "tsscpp/triangles.hpp"

namespace tsscpp {

// ASM side.
MonotoneTriangle asm_to_monotone(const Asm& a);
Asm monotone_to_asm(const MonotoneTriangle& m);

// TSSCPP side.  The magog triangle is the hub: every other TSSCPP encoding
// converts through the fundamental domain or the boolean triangle.
//
// Domain row rho (0-based) holds t_{n+1+rho, n+1+rho+c}; the magog entry in
// dense row r, position q is D[r-q][q] + q + 1.

/// Throws ResultNotMagog when the formula output violates the magog inequalities.
MagogTriangle magog_from_fundamental(const FundamentalDomain& d);
FundamentalDomain fundamental_from_magog(const MagogTriangle& m);

/// Level-set encoding.  For each height k, the lengths of the nonempty rows of
/// {cells with t >= k} form a set S_k of distinct positive integers, and
/// b[r][p] = 0 exactly when n-1-r is in S_{r+1-p}.
BooleanTriangle boolean_from_fundamental(const FundamentalDomain& d);
/// Throws InconsistentDomain if the level sets are not nested.
FundamentalDomain fundamental_from_boolean(const BooleanTriangle& b);

BooleanTriangle magog_to_boolean(const MagogTriangle& m);
MagogTriangle boolean_to_magog(const BooleanTriangle& b);

/// Path j reads classical column j of b from the top: a one is a vertical
/// step, a zero a diagonal step.
NilpNest boolean_to_nilp(const BooleanTriangle& b);
BooleanTriangle nilp_to_boolean(const NilpNest& p);

NilpNest nilp_from_fundamental(const FundamentalDomain& d);
FundamentalDomain fundamental_from_nilp(const NilpNest& p);

PlanePartition tsscpp_from_boolean(const BooleanTriangle& b);
BooleanTriangle boolean_from_tsscpp(const PlanePartition& p);

// Permutation side.

/// Each entry copies its southwest neighbour under a one and its southeast
/// neighbour under a zero.  Throws NotPermutationBoolean if a row increases.
MonotoneTriangle boolean_to_monotone_perm(const BooleanTriangle& b);
/// Inverse on negative-free monotone triangles; throws NotPermutation otherwise.
BooleanTriangle monotone_perm_to_boolean(const MonotoneTriangle& m);

/// Row i of the triangle is {sigma(1), ..., sigma(i)} sorted.
MonotoneTriangle permutation_to_monotone(const Permutation& s);
/// Throws NotPermutation if some row adds more than one new value.
Permutation monotone_to_permutation(const MonotoneTriangle& m);

/// Row i has its one in column sigma(i).
Asm permutation_matrix(const Permutation& s);
/// Throws NotPermutation on a matrix with a -1.
Permutation permutation_from_matrix(const Asm& a);

BooleanTriangle permutation_to_boolean(const Permutation& s);
Permutation boolean_to_permutation(const BooleanTriangle& b);

/// x_i = i + (sum of row n-i), with x_n = n.
std::vector<int> bracket_vector(const BooleanTriangle& b);
/// Inverse of bracket_vector on permutation boolean triangles of order x.size().
BooleanTriangle boolean_from_bracket_vector(const std::vector<int>& x);

// Permutation characterizations of TSSCPP.

/// No t_{i,j} > t_{i,j+1} = t_{i+k,j+k+1} > t_{i+k+1,j+k+1} inside the domain.
bool domain_is_permutation(const FundamentalDomain& d);
/// No alpha[r][p] >= alpha[r+1][p+1] = alpha[r+k+1][p+1] > alpha[r+k+1][p] + 1.
bool magog_is_permutation(const MagogTriangle& m);

}  // namespace tsscpp
