#include "tsscpp/orders.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "tsscpp/bijections.hpp"
#include "tsscpp/enumerate.hpp"
#include "tsscpp/json_io.hpp"
#include "tsscpp/statistics.hpp"

namespace tsscpp {

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(ErrorKind::Shape, "order must be positive");
}

void require_element_cap(std::size_t size, const char* name) {
  if (size > kOrderElementCap) {
    throw Error(ErrorKind::SizeCap, std::string(name) + ": " + std::to_string(size) + " elements exceeds the cap of " +
                                        std::to_string(kOrderElementCap));
  }
}

std::string json_label(const std::vector<int>& v) { return Json(v).dump(); }

using Point = std::array<int, 3>;

std::vector<Point> tetrahedral_points(int n) {
  std::vector<Point> points;
  for (int i = 0; i <= n - 2; ++i)
    for (int j = 0; j <= n - 2 - i; ++j)
      for (int k = 0; k <= n - 2 - i - j; ++k) points.push_back({i, j, k});
  return points;
}

// Each element covers the listed offsets that land on elements.
Poset tetrahedral_poset(int n, const std::vector<Point>& offsets) {
  require_positive(n);
  const std::vector<Point> points = tetrahedral_points(n);
  std::map<Point, std::size_t> index;
  std::vector<std::string> labels;
  for (const Point& p : points) {
    index.emplace(p, labels.size());
    labels.push_back(json_label({p[0], p[1], p[2]}));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const Point& p : points) {
    for (const Point& d : offsets) {
      const auto it = index.find({p[0] + d[0], p[1] + d[1], p[2] + d[2]});
      if (it != index.end()) covers.emplace_back(it->second, index.at(p));
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

template <class T>
Poset componentwise_poset(const std::vector<T>& objects, std::vector<std::string> labels, Direction dir,
                          const char* name) {
  require_element_cap(objects.size(), name);
  return Poset::from_comparisons(std::move(labels), [&](std::size_t a, std::size_t b) {
    return componentwise_leq(objects[a].rows(), objects[b].rows(), dir);
  });
}

template <class T>
std::vector<std::string> object_labels(const std::vector<T>& objects) {
  std::vector<std::string> labels;
  labels.reserve(objects.size());
  for (const T& x : objects) labels.push_back(label_of(x));
  return labels;
}

std::vector<Permutation> all_permutations(int n, const char* name) {
  std::vector<Permutation> perms;
  check_order(Family::Permutation, n, Limits::from_env());
  std::uint64_t total = 1;
  for (int k = 2; k <= n; ++k) total *= static_cast<std::uint64_t>(k);
  require_element_cap(total, name);
  for_each_permutation(n, [&](const Permutation& s) { perms.push_back(s); });
  return perms;
}

Poset permutation_cover_poset(int n, const char* name,
                              const std::function<void(const Permutation&, std::vector<Permutation>&)>& up_covers) {
  const std::vector<Permutation> perms = all_permutations(n, name);
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> labels;
  for (const Permutation& s : perms) {
    index.emplace(format_permutation(s), labels.size());
    labels.push_back(format_permutation(s));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<Permutation> above;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    above.clear();
    up_covers(perms[i], above);
    for (const Permutation& p : above) covers.emplace_back(i, index.at(format_permutation(p)));
  }
  return Poset::from_covers(std::move(labels), covers);
}

std::vector<std::vector<int>> bracket_like_vectors(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  require_positive(n);
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(n));
  auto step = [&](auto& self, int i) -> void {
    if (i > n) {
      if (keep(x)) out.push_back(x);
      return;
    }
    for (int v = i; v <= n; ++v) {
      x[i - 1] = v;
      self(self, i + 1);
    }
  };
  step(step, 1);
  return out;
}

Poset sequence_poset(const std::vector<std::vector<int>>& seqs, Direction dir, const char* name) {
  require_element_cap(seqs.size(), name);
  std::vector<std::string> labels;
  for (const auto& s : seqs) labels.push_back(json_label(s));
  return Poset::from_comparisons(std::move(labels), [&](std::size_t a, std::size_t b) {
    return componentwise_leq(seqs[a], seqs[b], dir);
  });
}

}  // namespace

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b, Direction dir) {
  if (a.size() != b.size()) throw std::invalid_argument("componentwise comparison of different shapes");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (dir == Direction::Forward ? a[i] > b[i] : a[i] < b[i]) return false;
  }
  return true;
}

bool componentwise_leq(const Rows& a, const Rows& b, Direction dir) {
  if (a.size() != b.size()) throw std::invalid_argument("componentwise comparison of different shapes");
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!componentwise_leq(a[r], b[r], dir)) return false;
  }
  return true;
}

Poset build_Pn(int n) { return tetrahedral_poset(n, {{{0, 1, 0}}, {{0, 1, -1}}, {{1, 0, 0}}, {{1, 0, -1}}}); }

Poset build_Qn(int n) { return tetrahedral_poset(n, {{{1, -1, 0}}, {{0, 1, -1}}, {{1, 0, 0}}}); }

Poset build_JPn(int n) { return order_ideals(build_Pn(n)); }

Poset build_JQn(int n) { return order_ideals(build_Qn(n)); }

Poset build_An(int n) {
  require_positive(n);
  std::vector<MonotoneTriangle> objects;
  for_each_monotone(n, [&](const MonotoneTriangle& m) {
    objects.push_back(m);
    require_element_cap(objects.size(), "An");
  });
  return componentwise_poset(objects, object_labels(objects), Direction::Forward, "An");
}

Poset build_Tn(int n) {
  require_positive(n);
  std::vector<MagogTriangle> objects;
  for_each_magog(n, [&](const MagogTriangle& m) {
    objects.push_back(m);
    require_element_cap(objects.size(), "Tn");
  });
  return componentwise_poset(objects, object_labels(objects), Direction::Forward, "Tn");
}

Poset build_TBool(int n) {
  require_positive(n);
  std::vector<BooleanTriangle> objects;
  for_each_boolean(n, [&](const BooleanTriangle& b) {
    objects.push_back(b);
    require_element_cap(objects.size(), "TBool");
  });
  return componentwise_poset(objects, object_labels(objects), Direction::Reverse, "TBool");
}

Poset build_An_perm(int n) {
  std::vector<MonotoneTriangle> objects;
  std::vector<std::string> labels;
  for (const Permutation& s : all_permutations(n, "AnPerm")) {
    objects.push_back(permutation_to_monotone(s));
    labels.push_back(format_permutation(s));
  }
  return componentwise_poset(objects, std::move(labels), Direction::Forward, "AnPerm");
}

Poset build_Tn_perm(int n) {
  require_positive(n);
  std::vector<MagogTriangle> objects;
  std::vector<std::string> labels;
  for_each_magog(n, [&](const MagogTriangle& m) {
    const BooleanTriangle b = magog_to_boolean(m);
    if (!has_weakly_decreasing_rows(b)) return;
    objects.push_back(m);
    labels.push_back(format_permutation(boolean_to_permutation(b)));
    require_element_cap(objects.size(), "TnPerm");
  });
  return componentwise_poset(objects, std::move(labels), Direction::Forward, "TnPerm");
}

Poset build_TBool_perm(int n) {
  require_positive(n);
  std::vector<BooleanTriangle> objects;
  std::vector<std::string> labels;
  for_each_permutation_boolean(n, [&](const BooleanTriangle& b) {
    objects.push_back(b);
    labels.push_back(format_permutation(boolean_to_permutation(b)));
    require_element_cap(objects.size(), "TBoolPerm");
  });
  return componentwise_poset(objects, std::move(labels), Direction::Reverse, "TBoolPerm");
}

Poset build_weak_order(int n) {
  return permutation_cover_poset(n, "weak", [n](const Permutation& s, std::vector<Permutation>& above) {
    const Permutation inv = s.inverse();
    for (int v = 1; v < n; ++v) {
      if (inv(v) > inv(v + 1)) continue;  // v+1 already precedes v
      std::vector<int> p = s.one_line();
      std::swap(p[static_cast<std::size_t>(inv(v) - 1)], p[static_cast<std::size_t>(inv(v + 1) - 1)]);
      above.push_back(Permutation::trusted(std::move(p)));
    }
  });
}

Poset build_strong_bruhat(int n) {
  return permutation_cover_poset(n, "strong", [n](const Permutation& s, std::vector<Permutation>& above) {
    const long long base = perm_inversions(s);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> p = s.one_line();
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        Permutation t = Permutation::trusted(std::move(p));
        if (perm_inversions(t) == base + 1) above.push_back(std::move(t));
      }
    }
  });
}

std::vector<std::vector<int>> tamari_vectors(int n) {
  return bracket_like_vectors(n, [n](const std::vector<int>& x) {
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= x[i - 1]; ++j)
        if (x[j - 1] > x[i - 1]) return false;
    return true;
  });
}

std::vector<std::vector<int>> catalan_vectors(int n) {
  return bracket_like_vectors(n, [](const std::vector<int>& x) { return std::is_sorted(x.begin(), x.end()); });
}

Poset build_tamari(int n) { return sequence_poset(tamari_vectors(n), Direction::Reverse, "tamari"); }

Poset build_catalan_distributive(int n) {
  return sequence_poset(catalan_vectors(n), Direction::Reverse, "catalan");
}

Poset build_product_of_chains(int n) {
  require_positive(n);
  std::vector<std::vector<int>> tuples;
  std::vector<int> c(static_cast<std::size_t>(n - 1));
  auto step = [&](auto& self, int k) -> void {
    if (k == n) {
      tuples.push_back(c);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      c[k - 1] = v;
      self(self, k + 1);
    }
  };
  step(step, 1);
  return sequence_poset(tuples, Direction::Forward, "chains");
}

Poset avoiding_subposet(const Poset& perm_poset, const std::vector<int>& pattern) {
  return induced_subposet(perm_poset, [&](std::size_t i) {
    return avoids(parse_permutation(perm_poset.label(i)), pattern);
  });
}

const std::vector<std::string_view>& poset_names() {
  static const std::vector<std::string_view> names{"An",    "Tn",     "TBool",  "TnPerm",  "TBoolPerm",
                                                   "AnPerm", "weak",  "strong", "tamari", "catalan",
                                                   "chains", "Pn",    "Qn",     "JPn",    "JQn"};
  return names;
}

std::optional<Poset> build_named(std::string_view name, int n) {
  if (name == "An") return build_An(n);
  if (name == "Tn") return build_Tn(n);
  if (name == "TBool") return build_TBool(n);
  if (name == "TnPerm") return build_Tn_perm(n);
  if (name == "TBoolPerm") return build_TBool_perm(n);
  if (name == "AnPerm") return build_An_perm(n);
  if (name == "weak") return build_weak_order(n);
  if (name == "strong") return build_strong_bruhat(n);
  if (name == "tamari") return build_tamari(n);
  if (name == "catalan") return build_catalan_distributive(n);
  if (name == "chains") return build_product_of_chains(n);
  if (name == "Pn") return build_Pn(n);
  if (name == "Qn") return build_Qn(n);
  if (name == "JPn") return build_JPn(n);
  if (name == "JQn") return build_JQn(n);
  return std::nullopt;
}

}  // namespace tsscpp
