#include "tsscpp/verify.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

#include "tsscpp/bijections.hpp"
#include "tsscpp/enumerate.hpp"
#include "tsscpp/orders.hpp"
#include "tsscpp/statistics.hpp"

namespace tsscpp {

namespace {

ClaimResult make(std::string id, int n) {
  ClaimResult r;
  r.id = std::move(id);
  r.n = n;
  return r;
}

Json pair_json(const Poset& p, std::size_t a, std::size_t b) {
  return Json::array({label_value(p.label(a)), label_value(p.label(b))});
}

Json poset_summary(const Poset& p) {
  return Json{{"elements", p.size()}, {"covers", p.covers().size()}};
}

ClaimResult isomorphism_claim(std::string id, int n, const Poset& p, const char* p_name, const Poset& q,
                              const char* q_name) {
  ClaimResult r = make(std::move(id), n);
  r.detail[p_name] = poset_summary(p);
  r.detail[q_name] = poset_summary(q);
  const auto map = isomorphic_to(p, q);
  r.passed = map.has_value() && is_isomorphism(p, q, *map);
  r.detail["isomorphic"] = r.passed;
  return r;
}

// Relation of `inner` that `outer` lacks, as a labelled pair, or null.
Json missing_relation(const Poset& inner, const Poset& outer) {
  const auto gap = relation_not_in(inner, outer);
  return gap ? pair_json(inner, gap->first, gap->second) : Json(nullptr);
}

ClaimResult lemma_covers(int n) {
  ClaimResult r = make("lemma4.8", n);
  const Poset t = build_Tn(n);
  std::vector<BooleanTriangle> booleans;
  booleans.reserve(t.size());
  for (const std::string& label : t.labels()) {
    booleans.push_back(magog_to_boolean(std::get<MagogTriangle>(parse_object(std::string_view(label)))));
  }
  std::size_t swaps = 0;
  std::size_t bottom = 0;
  std::size_t outside_stated_range = 0;
  r.passed = true;
  for (const auto& [lo, hi] : t.covers()) {
    const Rows& b = booleans[lo].rows();
    const Rows& b2 = booleans[hi].rows();
    std::vector<std::pair<int, int>> diff;
    for (std::size_t row = 0; row < b.size(); ++row) {
      for (std::size_t p = 0; p < b[row].size(); ++p) {
        if (b[row][p] != b2[row][p]) diff.emplace_back(static_cast<int>(row), static_cast<int>(p));
      }
    }
    bool ok = false;
    if (diff.size() == 2) {
      const auto [r0, p0] = diff[0];
      const auto [r1, p1] = diff[1];
      ok = r1 == r0 + 1 && p1 == p0 + 1 && b[r0][p0] == 1 && b2[r0][p0] == 0 && b[r1][p1] == 0 && b2[r1][p1] == 1;
      if (ok) {
        ++swaps;
        const int i = r0 + 1;
        const int j = classical_column(n, r0, p0);
        if (i > n - 2 || j < n - 2 * i + 1 || j > n - i) ++outside_stated_range;
      }
    } else if (diff.size() == 1) {
      const auto [r0, p0] = diff[0];
      ok = r0 == n - 2 && b[r0][p0] == 1 && b2[r0][p0] == 0;
      if (ok) ++bottom;
    }
    if (!ok) {
      r.passed = false;
      r.detail["witness"] = {{"lower", to_json(booleans[lo])}, {"upper", to_json(booleans[hi])}};
      break;
    }
  }
  r.detail["covers"] = t.covers().size();
  r.detail["diagonal_swaps"] = swaps;
  r.detail["bottom_row_changes"] = bottom;
  r.detail["swaps_outside_literal_index_range"] = outside_stated_range;
  return r;
}

Json lattice_entry(const Poset& p) {
  Json out = poset_summary(p);
  const LatticeReport report = lattice_report(p);
  out["is_lattice"] = report.is_lattice;
  if (const auto w = find_missing_join(p)) {
    out["no_join"] = pair_json(p, w->a, w->b);
  } else if (report.witness) {
    out["no_meet"] = pair_json(p, report.witness->a, report.witness->b);
  }
  return out;
}

ClaimResult nonlattice_claim(int n) {
  ClaimResult r = make("prop-nonlattice", n);
  const bool expected = n <= 3;
  r.detail["expected_lattice"] = expected;
  r.passed = true;
  const std::pair<const char*, Poset> posets[] = {{"TnPerm", build_Tn_perm(n)}, {"TBool", build_TBool(n)}};
  for (const auto& [name, poset] : posets) {
    Json entry = lattice_entry(poset);
    const bool lattice = entry["is_lattice"].get<bool>();
    if (lattice != expected || (!lattice && !entry.contains("no_join"))) r.passed = false;
    r.detail[name] = std::move(entry);
  }
  return r;
}

ClaimResult sandwich_claim(int n) {
  ClaimResult r = make("cor4.16", n);
  const Poset bool_perm = build_TBool_perm(n);
  const Poset chains = build_product_of_chains(n);
  const Poset weak = build_weak_order(n);
  const Poset strong = build_strong_bruhat(n);
  const auto map = isomorphic_to(bool_perm, chains);
  const bool iso = map.has_value() && is_isomorphism(bool_perm, chains, *map);
  const Json weak_gap = missing_relation(weak, bool_perm);
  const Json strong_gap = missing_relation(bool_perm, strong);
  r.detail["TBoolPerm"] = poset_summary(bool_perm);
  r.detail["chains"] = poset_summary(chains);
  r.detail["isomorphic_to_chains"] = iso;
  r.detail["weak_relation_missing"] = weak_gap;
  r.detail["relation_not_in_strong"] = strong_gap;
  r.detail["relations"] = {{"weak", weak.relation_count()},
                           {"TBoolPerm", bool_perm.relation_count()},
                           {"strong", strong.relation_count()}};
  r.passed = iso && weak_gap.is_null() && strong_gap.is_null();
  return r;
}

ClaimResult subposets_claim(int n) {
  ClaimResult r = make("cor4.17", n);
  const Poset bool_perm = build_TBool_perm(n);
  const ClaimResult tam =
      isomorphism_claim("", n, avoiding_subposet(bool_perm, {1, 3, 2}), "avoid132", build_tamari(n), "tamari");
  const ClaimResult cat = isomorphism_claim("", n, avoiding_subposet(bool_perm, {2, 1, 3}), "avoid213",
                                            build_catalan_distributive(n), "catalan");
  r.detail["tamari"] = tam.detail;
  r.detail["catalan"] = cat.detail;
  r.passed = tam.passed && cat.passed;
  return r;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Json to_json(const ClaimResult& r) {
  return Json{{"claim", r.id},
              {"n", r.n},
              {"passed", r.passed},
              {"informational", r.informational},
              {"detail", r.detail}};
}

const std::vector<std::string_view>& poset_claim_ids() {
  static const std::vector<std::string_view> ids{"thm4.2",  "thm4.4",  "thm4.6",   "thm4.9",         "thm4.12",
                                                 "cor4.16", "cor4.17", "lemma4.8", "prop-nonlattice"};
  return ids;
}

std::pair<int, int> poset_claim_range(std::string_view id) {
  if (id == "thm4.2" || id == "thm4.6") return {2, 4};
  return {2, 5};
}

ClaimResult check_poset_claim(std::string_view id, int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const std::string name(id);
  if (id == "thm4.2") return isomorphism_claim(name, n, build_An(n), "An", build_JPn(n), "JPn");
  if (id == "thm4.4") return isomorphism_claim(name, n, build_An_perm(n), "AnPerm", build_strong_bruhat(n), "strong");
  if (id == "thm4.6") return isomorphism_claim(name, n, build_Tn(n), "Tn", build_JQn(n), "JQn");
  if (id == "thm4.9") {
    return isomorphism_claim(name, n, avoiding_subposet(build_Tn_perm(n), {1, 3, 2}), "avoid132", build_tamari(n),
                             "tamari");
  }
  if (id == "thm4.12") {
    return isomorphism_claim(name, n, avoiding_subposet(build_Tn_perm(n), {2, 1, 3}), "avoid213",
                             build_catalan_distributive(n), "catalan");
  }
  if (id == "cor4.16") return sandwich_claim(n);
  if (id == "cor4.17") return subposets_claim(n);
  if (id == "lemma4.8") return lemma_covers(n);
  if (id == "prop-nonlattice") return nonlattice_claim(n);
  throw std::invalid_argument("unknown claim \"" + name + "\"");
}

ClaimResult check_counts(int n) {
  ClaimResult r = make("counts", n);
  std::set<std::uint64_t> values;
  for (Family f : all_families()) {
    if (f == Family::Permutation || f == Family::PermutationBoolean) continue;
    const std::uint64_t c = count(f, n);
    r.detail[std::string(to_string(f))] = c;
    values.insert(c);
  }
  r.passed = values.size() == 1;
  return r;
}

ClaimResult check_permutation_count(int n) {
  ClaimResult r = make("prop3.2", n);
  const std::uint64_t c = count(Family::PermutationBoolean, n);
  r.detail["permutation_booleans"] = c;
  r.detail["factorial"] = factorial(n);
  r.passed = c == static_cast<std::uint64_t>(factorial(n));
  return r;
}

ClaimResult check_statistic_preservation(int n) {
  ClaimResult r = make("thm3.5", n);
  std::uint64_t checked = 0;
  r.passed = true;
  for_each_permutation(n, [&](const Permutation& s) {
    if (!r.passed) return;
    const BooleanTriangle b = permutation_to_boolean(s);
    const Asm a = permutation_matrix(s);
    const StatBundle stats = stat_bundle(a);
    const int lowest = boolean_lowest_one_last_diagonal(b).value_or(0);
    const bool ok = boolean_zero_count(b) == stats.inversion_number &&
                    stats.inversion_number == perm_inversions(s) &&
                    boolean_last_row_zeros(b) == n - stats.last_row_one_col &&
                    lowest == stats.last_col_one_row - 1 &&
                    boolean_to_monotone_perm(b) == asm_to_monotone(a);
    ++checked;
    if (!ok) {
      r.passed = false;
      r.detail["witness"] = {{"permutation", format_permutation(s)},
                             {"boolean", to_json(b)},
                             {"zeros", boolean_zero_count(b)},
                             {"inversions", stats.inversion_number},
                             {"last_row_zeros", boolean_last_row_zeros(b)},
                             {"last_row_one_col", stats.last_row_one_col},
                             {"lowest_one_row", lowest},
                             {"last_col_one_row", stats.last_col_one_row}};
    }
  });
  r.detail["permutations_checked"] = checked;
  return r;
}

ClaimResult check_worked_example() {
  ClaimResult r = make("fig9", 6);
  const Permutation s = parse_permutation("463512");
  const BooleanTriangle b = permutation_to_boolean(s);
  const MonotoneTriangle m = permutation_to_monotone(s);
  const Rows want_b{{1}, {0, 0}, {1, 1, 0}, {0, 0, 0, 0}, {1, 0, 0, 0, 0}};
  const Rows want_m{{4}, {4, 6}, {3, 4, 6}, {3, 4, 5, 6}, {1, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
  const long long inversions = inversion_number(permutation_matrix(s));
  const int zeros = boolean_zero_count(b);
  const int last_row = boolean_last_row_zeros(b);
  const auto lowest = boolean_lowest_one_last_diagonal(b);
  r.detail = {{"boolean", to_json(b)},
              {"monotone", to_json(m)},
              {"inversions", inversions},
              {"zeros", zeros},
              {"last_row_zeros", last_row},
              {"lowest_one_row", lowest ? Json(*lowest) : Json(nullptr)}};
  r.passed = b.rows() == want_b && m.rows() == want_m && boolean_to_monotone_perm(b) == m && inversions == 11 &&
             zeros == 11 && last_row == 4 && lowest == 1 && boolean_to_permutation(b) == s;
  return r;
}

ClaimResult check_negative_ones(int n) {
  ClaimResult r = make("cor2.4", n);
  std::uint64_t checked = 0;
  r.passed = true;
  for_each_asm(n, [&](const Asm& a) {
    ++checked;
    if (r.passed && count_negative_ones(a) != strict_diagonal_entries(asm_to_monotone(a))) {
      r.passed = false;
      r.detail["witness"] = to_json(a);
    }
  });
  r.detail["asm_checked"] = checked;
  return r;
}

ClaimResult check_permutation_characterizations(int n) {
  ClaimResult r = make("perm-characterizations", n);
  std::uint64_t total = 0;
  std::uint64_t selected = 0;
  r.passed = true;
  for_each_boolean(n, [&](const BooleanTriangle& b) {
    ++total;
    const bool rows = has_weakly_decreasing_rows(b);
    const bool domain = domain_is_permutation(fundamental_from_boolean(b));
    const bool magog = magog_is_permutation(boolean_to_magog(b));
    if (rows) ++selected;
    if (r.passed && (rows != domain || rows != magog)) {
      r.passed = false;
      r.detail["witness"] = {{"boolean", to_json(b)},
                             {"weakly_decreasing_rows", rows},
                             {"domain_condition", domain},
                             {"magog_condition", magog}};
    }
  });
  r.detail["tsscpp"] = total;
  r.detail["permutation_tsscpp"] = selected;
  if (selected != static_cast<std::uint64_t>(factorial(n))) r.passed = false;
  return r;
}

ClaimResult check_zero_then_one(int n) {
  ClaimResult r = make("zero-then-one", n);
  const Distribution zero_one = distribution(Family::BooleanTriangle, n, Statistic::ZeroThenOne);
  const Distribution negatives = distribution(Family::Asm, n, Statistic::NegativeOnes);
  auto as_json = [](const Distribution& d) {
    Json out = Json::object();
    for (const auto& [value, c] : d) out[std::to_string(value)] = c;
    return out;
  };
  const bool equal = zero_one == negatives;
  r.detail = {{"zero_then_one", as_json(zero_one)}, {"negative_ones", as_json(negatives)}, {"equal", equal}};
  if (!equal) {
    Json differing = Json::array();
    std::set<long long> keys;
    for (const auto& [k, v] : zero_one) keys.insert(k);
    for (const auto& [k, v] : negatives) keys.insert(k);
    for (long long k : keys) {
      const auto a = zero_one.count(k) ? zero_one.at(k) : 0;
      const auto b = negatives.count(k) ? negatives.at(k) : 0;
      if (a != b) differing.push_back(k);
    }
    r.detail["differing_values"] = differing;
  }
  r.informational = n > 4;
  r.passed = r.informational || equal;
  return r;
}

ClaimResult check_round_trips_tsscpp(int n) {
  ClaimResult r = make("roundtrip-tsscpp", n);
  std::set<MagogTriangle> magogs;
  std::set<NilpNest> nests;
  std::set<Rows> domains;
  std::set<std::vector<int>> partitions;
  std::uint64_t booleans = 0;
  r.passed = true;
  auto fail = [&](const char* what, const Json& object) {
    if (!r.passed) return;
    r.passed = false;
    r.detail["failed_pair"] = what;
    r.detail["witness"] = object;
  };
  for_each_boolean(n, [&](const BooleanTriangle& b) {
    ++booleans;
    const MagogTriangle m = boolean_to_magog(b);
    const FundamentalDomain d = fundamental_from_boolean(b);
    const NilpNest path = boolean_to_nilp(b);
    const PlanePartition p = tsscpp_from_boolean(b);
    if (magog_to_boolean(m) != b) fail("magog/boolean", to_json(b));
    if (fundamental_from_magog(m) != d || magog_from_fundamental(d) != m) fail("magog/domain", to_json(m));
    if (boolean_from_fundamental(d) != b) fail("domain/boolean", to_json(d));
    if (nilp_to_boolean(path) != b) fail("boolean/nilp", to_json(path));
    if (nilp_from_fundamental(d) != path || fundamental_from_nilp(path) != d) fail("domain/nilp", to_json(d));
    if (boolean_from_tsscpp(p) != b || fundamental_domain(p) != d || expand_fundamental(d) != p) {
      fail("tsscpp/domain", to_json(d));
    }
    if (!validate_tsscpp(p).all()) fail("tsscpp symmetry", to_json(p));
    magogs.insert(m);
    nests.insert(path);
    domains.insert(d.rows());
    partitions.insert(p.heights());
  });
  std::uint64_t asms = 0;
  std::set<MonotoneTriangle> monotone;
  for_each_asm(n, [&](const Asm& a) {
    ++asms;
    const MonotoneTriangle m = asm_to_monotone(a);
    if (monotone_to_asm(m) != a) fail("asm/monotone", to_json(a));
    monotone.insert(m);
  });
  r.detail = {{"booleans", booleans},
              {"distinct_magogs", magogs.size()},
              {"distinct_nests", nests.size()},
              {"distinct_domains", domains.size()},
              {"distinct_tsscpp", partitions.size()},
              {"asm", asms},
              {"distinct_monotone", monotone.size()}};
  if (magogs.size() != booleans || nests.size() != booleans || domains.size() != booleans ||
      partitions.size() != booleans || monotone.size() != asms) {
    r.passed = false;
  }
  return r;
}

ClaimResult check_round_trips_permutation(int n) {
  ClaimResult r = make("roundtrip-permutation", n);
  std::set<BooleanTriangle> booleans;
  std::set<MonotoneTriangle> monotone;
  std::set<std::vector<int>> brackets;
  std::uint64_t perms = 0;
  r.passed = true;
  for_each_permutation(n, [&](const Permutation& s) {
    ++perms;
    const MonotoneTriangle m = permutation_to_monotone(s);
    const Asm a = permutation_matrix(s);
    const BooleanTriangle b = permutation_to_boolean(s);
    const std::vector<int> x = bracket_vector(b);
    const bool ok = monotone_to_permutation(m) == s && permutation_from_matrix(a) == s && asm_to_monotone(a) == m &&
                    boolean_to_permutation(b) == s && boolean_to_monotone_perm(b) == m &&
                    monotone_perm_to_boolean(m) == b && boolean_from_bracket_vector(x) == b &&
                    has_weakly_decreasing_rows(b);
    if (!ok && r.passed) {
      r.passed = false;
      r.detail["witness"] = format_permutation(s);
    }
    booleans.insert(b);
    monotone.insert(m);
    brackets.insert(x);
  });
  r.detail["permutations"] = perms;
  r.detail["distinct_booleans"] = booleans.size();
  r.detail["distinct_monotone"] = monotone.size();
  r.detail["distinct_bracket_vectors"] = brackets.size();
  if (booleans.size() != perms || monotone.size() != perms || brackets.size() != perms) r.passed = false;
  return r;
}

ClaimResult check_avoider_subposets(int n) {
  ClaimResult r = make("remark-avoiders", n);
  const Poset perm = build_Tn_perm(n);
  r.passed = true;
  const std::vector<std::vector<int>> patterns{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& pattern : patterns) {
    const Poset sub = avoiding_subposet(perm, pattern);
    std::string key;
    for (int v : pattern) key += std::to_string(v);
    const bool graded = is_graded(sub);
    const bool lattice = lattice_report(sub).is_lattice;
    r.detail[key] = {{"elements", sub.size()}, {"graded", graded}, {"is_lattice", lattice}};
    if (graded || lattice) r.passed = false;
  }
  return r;
}

bool SuiteEntry::passed() const {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& c) { return c.passed; });
}

bool SuiteEntry::informational() const {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const ClaimResult& c) { return c.informational; });
}

std::vector<SuiteEntry> verify_all(int max_n, const std::function<void(const SuiteEntry&)>& progress) {
  std::vector<SuiteEntry> suite;
  auto guarded = [](const std::string& id, int n, const std::function<ClaimResult(int)>& check) {
    try {
      return check(n);
    } catch (const std::exception& e) {
      ClaimResult r = make(id, n);
      r.detail["error"] = e.what();
      return r;
    }
  };
  auto run = [&](const std::string& id, int lo, int hi, const std::function<ClaimResult(int)>& check) {
    SuiteEntry entry{id, {}};
    for (int n = lo; n <= std::min(max_n, hi); ++n) entry.results.push_back(guarded(id, n, check));
    if (entry.results.empty()) return;
    if (progress) progress(entry);
    suite.push_back(std::move(entry));
  };
  run("counts", 1, 6, check_counts);
  run("prop3.2", 1, 8, check_permutation_count);
  run("thm3.5", 1, 7, check_statistic_preservation);
  run("fig9", 1, 1, [](int) { return check_worked_example(); });
  run("cor2.4", 1, 5, check_negative_ones);
  run("perm-characterizations", 1, 6, check_permutation_characterizations);
  run("zero-then-one", 1, 4, check_zero_then_one);
  run("zero-then-one-report", 5, 5, check_zero_then_one);
  run("roundtrip-tsscpp", 1, 6, check_round_trips_tsscpp);
  run("roundtrip-permutation", 1, 7, check_round_trips_permutation);
  for (std::string_view id : poset_claim_ids()) {
    const auto [lo, hi] = poset_claim_range(id);
    run(std::string(id), lo, hi, [id](int n) { return check_poset_claim(id, n); });
  }
  run("remark-avoiders", 4, 4, check_avoider_subposets);
  return suite;
}

}  // namespace tsscpp
