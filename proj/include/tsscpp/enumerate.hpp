#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsscpp/triangles.hpp"

namespace tsscpp {

enum class Family {
  Asm,
  MonotoneTriangle,
  MagogTriangle,
  BooleanTriangle,
  NilpNest,
  Tsscpp,
  Permutation,
  PermutationBoolean,
};

std::string_view to_string(Family f) noexcept;
/// Accepts the CLI spellings (asm, monotone, magog, boolean, nilp, tsscpp,
/// permutation, permutation-boolean).
std::optional<Family> parse_family(std::string_view name) noexcept;
const std::vector<Family>& all_families();

/// Largest order each family may be enumerated at.
struct Limits {
  int permutation_max = 8;
  int tsscpp_max = 7;

  /// Defaults, with both caps replaced by TSSCPP_MAX_N when it is set to a positive integer.
  static Limits from_env();
  int cap(Family f) const noexcept;
};

/// Throws Shape for n < 1 and CapExceeded above the family cap.
void check_order(Family f, int n, const Limits& limits);

// Each generator visits every object of order n exactly once in a fixed
// order.  Triangles come in lexicographic order of their row-major entries;
// permutations in lexicographic one-line order.  ASM follow their monotone
// triangles, and nests and plane partitions follow their boolean triangles.
void for_each_monotone(int n, const std::function<void(const MonotoneTriangle&)>& visit,
                       const Limits& limits = Limits::from_env());
void for_each_asm(int n, const std::function<void(const Asm&)>& visit, const Limits& limits = Limits::from_env());
void for_each_magog(int n, const std::function<void(const MagogTriangle&)>& visit,
                    const Limits& limits = Limits::from_env());
void for_each_boolean(int n, const std::function<void(const BooleanTriangle&)>& visit,
                      const Limits& limits = Limits::from_env());
void for_each_nilp(int n, const std::function<void(const NilpNest&)>& visit, const Limits& limits = Limits::from_env());
void for_each_tsscpp(int n, const std::function<void(const PlanePartition&)>& visit,
                     const Limits& limits = Limits::from_env());
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits = Limits::from_env());
/// Triangles with weakly decreasing rows, built from left-justified rows and
/// kept only if they pass the full boolean validation.
void for_each_permutation_boolean(int n, const std::function<void(const BooleanTriangle&)>& visit,
                                  const Limits& limits = Limits::from_env());

template <class T>
std::vector<T> collect(void (*gen)(int, const std::function<void(const T&)>&, const Limits&), int n,
                       const Limits& limits = Limits::from_env()) {
  std::vector<T> out;
  gen(n, [&](const T& x) { out.push_back(x); }, limits);
  return out;
}

std::uint64_t count(Family f, int n, const Limits& limits = Limits::from_env());

}  // namespace tsscpp
