#include "tsscpp/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tsscpp/triangles.hpp"

namespace tsscpp {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

template <class F>
void for_each_bit(const Bits& bits, F f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) f(i);
}

void require_pair_scan_size(const Poset& p, const char* what) {
  if (p.size() > kPairScanCap) {
    throw Error(ErrorKind::SizeCap, std::string(what) + ": poset has " + std::to_string(p.size()) +
                                        " elements, cap is " + std::to_string(kPairScanCap));
  }
}

// Elements sorted by down-set size form a linear extension.
std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });
  return order;
}

// Least upper bound (or greatest lower bound when `sets` holds down-sets) of a
// and b, or kNone.  Among the common bounds, the bound is the one whose own
// bound-set is the whole common set.
std::size_t extremal_bound(const std::vector<Bits>& sets, const std::vector<std::size_t>& sizes, std::size_t a,
                           std::size_t b) {
  const Bits common = sets[a] & sets[b];
  const std::size_t want = common.count();
  for (auto u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
    if (sizes[u] == want) return u;
  }
  return kNone;
}

struct BoundTables {
  std::size_t n = 0;
  std::vector<std::size_t> join;
  std::vector<std::size_t> meet;
  std::size_t j(std::size_t a, std::size_t b) const { return join[a * n + b]; }
  std::size_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
};

template <class Visit>
void for_each_ideal(const Poset& p, Visit visit) {
  const std::size_t n = p.size();
  if (n > 64) throw Error(ErrorKind::SizeCap, "order ideals: poset has more than 64 elements");
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(p.down(i), [&](std::size_t k) {
      if (k != i) below[i] |= std::uint64_t{1} << k;
    });
  }
  const std::vector<std::size_t> order = linear_extension(p);
  // Deciding elements along a linear extension: an element may join the ideal
  // once everything below it is in, so every branch completes.
  auto step = [&](auto& self, std::size_t t, std::uint64_t mask) -> void {
    if (t == n) {
      visit(mask);
      return;
    }
    const std::size_t e = order[t];
    self(self, t + 1, mask);
    if ((below[e] & ~mask) == 0) self(self, t + 1, mask | (std::uint64_t{1} << e));
  };
  step(step, 0, 0);
}

}  // namespace

Poset Poset::from_comparisons(std::vector<std::string> labels,
                              const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || leq(i, j)) p.up_[i].set(j);
    }
  }
  p.finish();
  return p;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::invalid_argument("cover refers to a missing element");
    p.up_[lo].set(hi);
  }
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  // Warshall closure on bitset rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && up_[i][k]) up_[i] |= up_[k];
    }
  }
  down_.assign(n, Bits(n));
  relation_count_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](std::size_t j) {
      if (j != i && up_[j][i]) {
        throw std::invalid_argument("relation is not antisymmetric: " + labels_[i] + " and " + labels_[j]);
      }
      down_[j].set(i);
      if (j != i) ++relation_count_;
    });
  }
  covers_.clear();
  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    Bits strict = up_[i];
    strict.reset(i);
    Bits reachable(n);
    for_each_bit(strict, [&](std::size_t k) {
      Bits above = up_[k];
      above.reset(k);
      reachable |= above;
    });
    const Bits direct = strict - reachable;
    for_each_bit(direct, [&](std::size_t j) {
      covers_.emplace_back(i, j);
      upper_covers_[i].push_back(j);
      lower_covers_[j].push_back(i);
    });
  }
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::string Poset::to_dot(const std::string& name) const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i) out += "  " + std::to_string(i) + " [label=" + quote(labels_[i]) + "];\n";
  for (const auto& [lo, hi] : covers_) out += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + ";\n";
  return out + "}\n";
}

LatticeReport lattice_report(const Poset& p) {
  require_pair_scan_size(p, "lattice_report");
  const std::size_t n = p.size();
  std::vector<Bits> ups(n);
  std::vector<Bits> downs(n);
  std::vector<std::size_t> up_sizes(n);
  std::vector<std::size_t> down_sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    ups[i] = p.up(i);
    downs[i] = p.down(i);
    up_sizes[i] = ups[i].count();
    down_sizes[i] = downs[i].count();
  }
  LatticeReport report;
  BoundTables t;
  t.n = n;
  t.join.assign(n * n, kNone);
  t.meet.assign(n * n, kNone);
  std::optional<PairWitness> missing_meet;
  for (std::size_t a = 0; a < n; ++a) {
    t.join[a * n + a] = t.meet[a * n + a] = a;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = extremal_bound(ups, up_sizes, a, b);
      const std::size_t m = extremal_bound(downs, down_sizes, a, b);
      t.join[a * n + b] = t.join[b * n + a] = j;
      t.meet[a * n + b] = t.meet[b * n + a] = m;
      if (j == kNone && !report.witness) report.witness = PairWitness{a, b, true};
      if (m == kNone && !missing_meet) missing_meet = PairWitness{a, b, false};
    }
  }
  if (!report.witness) report.witness = missing_meet;
  report.is_lattice = !report.witness.has_value() && n > 0;
  if (n == 0) return report;
  if (!report.is_lattice) return report;

  if (n <= kTripleScanCap) {
    report.is_distributive = true;
    for (std::size_t x = 0; x < n && !report.distributivity_witness; ++x) {
      for (std::size_t y = 0; y < n && !report.distributivity_witness; ++y) {
        for (std::size_t z = y + 1; z < n; ++z) {
          if (t.m(x, t.j(y, z)) != t.j(t.m(x, y), t.m(x, z))) {
            report.is_distributive = false;
            report.distributivity_witness = std::array<std::size_t, 3>{x, y, z};
            break;
          }
        }
      }
    }
  } else {
    // A finite lattice is distributive iff it has as many elements as the
    // ideal lattice of its join-irreducibles.
    const Poset irreducibles =
        induced_subposet(p, [&](std::size_t i) { return p.lower_covers(i).size() == 1; });
    report.is_distributive = irreducibles.size() <= 64 && count_order_ideals(irreducibles) == n;
  }
  return report;
}

std::optional<PairWitness> find_missing_join(const Poset& p) {
  require_pair_scan_size(p, "find_missing_join");
  const std::size_t n = p.size();
  std::vector<Bits> ups(n);
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    ups[i] = p.up(i);
    sizes[i] = ups[i].count();
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (extremal_bound(ups, sizes, a, b) == kNone) return PairWitness{a, b, true};
    }
  }
  return std::nullopt;
}

bool is_graded(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> longest(n, 0);
  std::vector<int> shortest(n, 0);
  for (std::size_t e : linear_extension(p)) {
    const auto& lower = p.lower_covers(e);
    if (lower.empty()) continue;
    int lo = 1 << 30;
    int hi = 0;
    for (std::size_t c : lower) {
      lo = std::min(lo, shortest[c] + 1);
      hi = std::max(hi, longest[c] + 1);
    }
    shortest[e] = lo;
    longest[e] = hi;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (shortest[i] != longest[i]) return false;
  }
  const auto maxima = p.maximal_elements();
  return std::all_of(maxima.begin(), maxima.end(), [&](std::size_t m) { return longest[m] == longest[maxima[0]]; });
}

std::size_t count_order_ideals(const Poset& p) {
  std::size_t total = 0;
  for_each_ideal(p, [&](std::uint64_t) { ++total; });
  return total;
}

Poset order_ideals(const Poset& p) {
  std::vector<std::uint64_t> ideals;
  for_each_ideal(p, [&](std::uint64_t mask) {
    if (ideals.size() == kIdealCap) {
      throw Error(ErrorKind::SizeCap, "order ideals: more than " + std::to_string(kIdealCap) + " ideals");
    }
    ideals.push_back(mask);
  });
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (std::uint64_t mask : ideals) {
    std::string label = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((mask >> i) & 1U) {
        if (label.size() > 1) label += ",";
        label += p.label(i);
      }
    }
    labels.push_back(label + "]");
  }
  return Poset::from_comparisons(std::move(labels), [&](std::size_t a, std::size_t b) {
    return (ideals[a] & ~ideals[b]) == 0;
  });
}

Poset induced_subposet(const Poset& p, const std::function<bool(std::size_t)>& keep) {
  std::vector<std::size_t> kept;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (keep(i)) {
      kept.push_back(i);
      labels.push_back(p.label(i));
    }
  }
  return Poset::from_comparisons(std::move(labels),
                                 [&](std::size_t a, std::size_t b) { return p.leq(kept[a], kept[b]); });
}

bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map) {
  const std::size_t n = p.size();
  if (q.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j) != q.leq(map[i], map[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> isomorphic_to(const Poset& p, const Poset& q) {
  require_pair_scan_size(p, "isomorphic_to");
  require_pair_scan_size(q, "isomorphic_to");
  const std::size_t n = p.size();
  if (q.size() != n || p.relation_count() != q.relation_count()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  // Joint colour refinement over the disjoint union: vertex v < n is p's v,
  // vertex n + v is q's v.
  const Poset* side[2] = {&p, &q};
  auto poset_of = [&](std::size_t v) -> const Poset& { return *side[v >= n ? 1 : 0]; };
  auto local = [&](std::size_t v) { return v >= n ? v - n : v; };
  std::vector<long> colour(2 * n);
  {
    std::map<std::vector<long>, long> ids;
    for (std::size_t v = 0; v < 2 * n; ++v) {
      const Poset& s = poset_of(v);
      const std::size_t i = local(v);
      std::vector<long> sig{static_cast<long>(s.down(i).count()), static_cast<long>(s.up(i).count()),
                            static_cast<long>(s.lower_covers(i).size()), static_cast<long>(s.upper_covers(i).size())};
      colour[v] = ids.emplace(sig, static_cast<long>(ids.size())).first->second;
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<long>, long> ids;
    std::vector<long> next(2 * n);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      const Poset& s = poset_of(v);
      const std::size_t i = local(v);
      const std::size_t offset = v >= n ? n : 0;
      std::vector<long> lower;
      std::vector<long> upper;
      for (std::size_t c : s.lower_covers(i)) lower.push_back(colour[offset + c]);
      for (std::size_t c : s.upper_covers(i)) upper.push_back(colour[offset + c]);
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      std::vector<long> sig{colour[v]};
      sig.insert(sig.end(), lower.begin(), lower.end());
      sig.push_back(-1);
      sig.insert(sig.end(), upper.begin(), upper.end());
      next[v] = ids.emplace(sig, static_cast<long>(ids.size())).first->second;
    }
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  std::map<long, std::vector<std::size_t>> p_class;
  std::map<long, std::vector<std::size_t>> q_class;
  for (std::size_t v = 0; v < n; ++v) p_class[colour[v]].push_back(v);
  for (std::size_t v = 0; v < n; ++v) q_class[colour[n + v]].push_back(v);
  if (p_class.size() != q_class.size()) return std::nullopt;
  for (const auto& [c, members] : p_class) {
    const auto it = q_class.find(c);
    if (it == q_class.end() || it->second.size() != members.size()) return std::nullopt;
  }

  // Search order: breadth-first along covers, starting from the rarest colour,
  // so each new vertex is constrained by already-mapped neighbours.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  std::vector<std::size_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) {
    return p_class[colour[a]].size() < p_class[colour[b]].size();
  });
  for (std::size_t seed : seeds) {
    if (queued[seed]) continue;
    queued[seed] = true;
    std::size_t at = order.size();
    order.push_back(seed);
    for (; at < order.size(); ++at) {
      const std::size_t v = order[at];
      for (const auto* nbrs : {&p.lower_covers(v), &p.upper_covers(v)}) {
        for (std::size_t w : *nbrs) {
          if (!queued[w]) {
            queued[w] = true;
            order.push_back(w);
          }
        }
      }
    }
  }

  std::vector<std::size_t> map(n, kNone);
  std::vector<bool> used(n, false);
  auto extend = [&](auto& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w : q_class[colour[v]]) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = p.leq(u, v) == q.leq(map[u], w) && p.leq(v, u) == q.leq(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
      map[v] = kNone;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  if (!is_isomorphism(p, q, map)) throw std::logic_error("isomorphism search returned an invalid map");
  return map;
}

std::optional<std::pair<std::size_t, std::size_t>> relation_not_in(const Poset& p, const Poset& q) {
  std::unordered_map<std::string, std::size_t> q_index;
  for (std::size_t i = 0; i < q.size(); ++i) q_index.emplace(q.label(i), i);
  std::vector<std::size_t> image(p.size(), kNone);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto it = q_index.find(p.label(i));
    if (it != q_index.end()) image[i] = it->second;
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (image[a] == kNone) continue;
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for_each_bit(p.up(a), [&](std::size_t b) {
      if (found || b == a || image[b] == kNone) return;
      if (!q.leq(image[a], image[b])) found = std::pair{a, b};
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace tsscpp
