#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "tsscpp/poset.hpp"
#include "tsscpp/triangles.hpp"

namespace tsscpp {

using Json = nlohmann::json;

// Object encodings, one "kind" each:
//   boolean_triangle, monotone_triangle, magog_triangle: {"n", "rows"}
//   asm: {"n", "rows"}            permutation: {"n", "sigma"}
//   plane_partition: {"n", "rows"} with a 2n x 2n array
//   fundamental_domain: {"n", "rows"} with rows of length n, n-1, ..., 1
//   nilp: {"n", "paths"} with each path a string over V (vertical) and D (diagonal)
Json to_json(const MonotoneTriangle& m);
Json to_json(const MagogTriangle& m);
Json to_json(const BooleanTriangle& b);
Json to_json(const Asm& a);
Json to_json(const Permutation& s);
Json to_json(const PlanePartition& p);
Json to_json(const FundamentalDomain& d);
Json to_json(const NilpNest& p);

using AnyObject = std::variant<MonotoneTriangle, MagogTriangle, BooleanTriangle, Asm, Permutation, PlanePartition,
                               FundamentalDomain, NilpNest>;

Json to_json(const AnyObject& x);
/// Dispatches on "kind" and validates.  Throws Error(Parse) for malformed
/// documents and the family's own errors for invalid objects.
AnyObject parse_object(const Json& j);
AnyObject parse_object(std::string_view text);

/// Compact canonical JSON; used as poset labels.
template <class T>
std::string label_of(const T& x) {
  return to_json(x).dump();
}

/// One-line notation: digits only for n <= 9, comma-separated above.
std::string format_permutation(const Permutation& s);
/// Accepts either form; throws Error(Parse) or Error(NotPermutation).
Permutation parse_permutation(std::string_view text);

/// A poset label as a JSON value: parsed when it holds an object or array,
/// otherwise the label string itself.
Json label_value(const std::string& label);

/// {"elements": [...], "covers": [[lower, upper], ...]} with elements given by label_value.
Json poset_to_json(const Poset& p);

}  // namespace tsscpp
