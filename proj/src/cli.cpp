#include "tsscpp/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tsscpp/bijections.hpp"
#include "tsscpp/enumerate.hpp"
#include "tsscpp/json_io.hpp"
#include "tsscpp/orders.hpp"
#include "tsscpp/statistics.hpp"
#include "tsscpp/verify.hpp"

namespace tsscpp::cli {

namespace {

// Rejected input; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kConvertKinds{"asm",  "monotone", "magog",  "boolean",
                                             "nilp", "tsscpp",   "domain", "permutation"};

// An object seen from both sides of the correspondence.  The TSSCPP side is
// carried by a boolean triangle, the ASM side by a monotone triangle; a side
// is present when the input lies in it or is a permutation object.
struct Normalized {
  std::optional<BooleanTriangle> boolean;
  std::optional<MonotoneTriangle> monotone;
  std::optional<Permutation> permutation;
};

bool is_negative_free(const MonotoneTriangle& m) { return count_negative_ones(monotone_to_asm(m)) == 0; }

Normalized from_permutation(const Permutation& s) {
  return Normalized{permutation_to_boolean(s), permutation_to_monotone(s), s};
}

Normalized from_boolean(const BooleanTriangle& b) {
  if (has_weakly_decreasing_rows(b)) return from_permutation(boolean_to_permutation(b));
  return Normalized{b, std::nullopt, std::nullopt};
}

Normalized from_monotone(const MonotoneTriangle& m) {
  if (is_negative_free(m)) return from_permutation(monotone_to_permutation(m));
  return Normalized{std::nullopt, m, std::nullopt};
}

Normalized normalize(const AnyObject& x) {
  struct Visitor {
    Normalized operator()(const MonotoneTriangle& m) const { return from_monotone(m); }
    Normalized operator()(const Asm& a) const { return from_monotone(asm_to_monotone(a)); }
    Normalized operator()(const MagogTriangle& m) const { return from_boolean(magog_to_boolean(m)); }
    Normalized operator()(const BooleanTriangle& b) const { return from_boolean(b); }
    Normalized operator()(const NilpNest& p) const { return from_boolean(nilp_to_boolean(p)); }
    Normalized operator()(const PlanePartition& p) const { return from_boolean(boolean_from_tsscpp(p)); }
    Normalized operator()(const FundamentalDomain& d) const { return from_boolean(boolean_from_fundamental(d)); }
    Normalized operator()(const Permutation& s) const { return from_permutation(s); }
  };
  return std::visit(Visitor{}, x);
}

std::string kind_name(const AnyObject& x) {
  static const char* names[] = {"monotone", "magog", "boolean", "asm", "permutation", "tsscpp", "domain", "nilp"};
  return names[x.index()];
}

AnyObject read_object(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_object(std::string_view(text));
  return parse_permutation(text);
}

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

Json convert_to(const Normalized& x, const std::string& target, const std::string& source) {
  auto missing = [&]() -> UsageError {
    return UsageError("no conversion from this " + source + " to " + target +
                      ": only permutation objects cross between the ASM and TSSCPP sides");
  };
  if (target == "permutation") {
    if (!x.permutation) throw missing();
    return to_json(*x.permutation);
  }
  if (target == "asm" || target == "monotone") {
    if (!x.monotone) throw missing();
    return target == "asm" ? to_json(monotone_to_asm(*x.monotone)) : to_json(*x.monotone);
  }
  if (!x.boolean) throw missing();
  const BooleanTriangle& b = *x.boolean;
  if (target == "boolean") return to_json(b);
  if (target == "magog") return to_json(boolean_to_magog(b));
  if (target == "nilp") return to_json(boolean_to_nilp(b));
  if (target == "tsscpp") return to_json(tsscpp_from_boolean(b));
  return to_json(fundamental_from_boolean(b));
}

Json stats_of(const Normalized& x) {
  Json stats = Json::object();
  stats["is_permutation"] = x.permutation.has_value();
  if (x.boolean) {
    const BooleanTriangle& b = *x.boolean;
    const auto lowest = boolean_lowest_one_last_diagonal(b);
    stats["zeros"] = boolean_zero_count(b);
    stats["last_row_zeros"] = boolean_last_row_zeros(b);
    stats["lowest_one_last_diagonal"] = lowest ? Json(*lowest) : Json(nullptr);
    stats["zero_then_one"] = zero_then_one_count(b);
  }
  if (x.monotone) {
    const Asm a = monotone_to_asm(*x.monotone);
    const StatBundle bundle = stat_bundle(a);
    stats["inversion_number"] = bundle.inversion_number;
    stats["negative_ones"] = bundle.negative_ones;
    stats["strict_entries"] = strict_diagonal_entries(*x.monotone);
    stats["last_row_one_col"] = bundle.last_row_one_col;
    stats["last_col_one_row"] = bundle.last_col_one_row;
  }
  if (x.boolean && x.boolean->order() >= 1 && x.permutation) {
    stats["bracket_vector"] = bracket_vector(*x.boolean);
  }
  return stats;
}

Family require_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family \"" + name + "\"");
  return *f;
}

Json family_object_json(Family f, const BooleanTriangle& b) {
  if (f == Family::NilpNest) return to_json(boolean_to_nilp(b));
  if (f == Family::Tsscpp) return to_json(tsscpp_from_boolean(b));
  return to_json(b);
}

void enumerate_family(Family f, int n, bool jsonl, std::ostream& out) {
  const Limits limits = Limits::from_env();
  bool first = true;
  auto emit = [&](const Json& j) {
    if (jsonl) {
      out << j.dump() << '\n';
    } else {
      out << (first ? "[\n  " : ",\n  ") << j.dump();
    }
    first = false;
  };
  switch (f) {
    case Family::Asm: for_each_asm(n, [&](const Asm& a) { emit(to_json(a)); }, limits); break;
    case Family::MonotoneTriangle:
      for_each_monotone(n, [&](const MonotoneTriangle& m) { emit(to_json(m)); }, limits);
      break;
    case Family::MagogTriangle: for_each_magog(n, [&](const MagogTriangle& m) { emit(to_json(m)); }, limits); break;
    case Family::BooleanTriangle:
    case Family::NilpNest:
    case Family::Tsscpp:
      check_order(f, n, limits);
      for_each_boolean(n, [&](const BooleanTriangle& b) { emit(family_object_json(f, b)); }, limits);
      break;
    case Family::Permutation:
      for_each_permutation(n, [&](const Permutation& s) { emit(to_json(s)); }, limits);
      break;
    case Family::PermutationBoolean:
      for_each_permutation_boolean(n, [&](const BooleanTriangle& b) { emit(to_json(b)); }, limits);
      break;
  }
  if (!jsonl) out << (first ? "[]\n" : "\n]\n");
}

std::string range_text(const SuiteEntry& e) {
  const int lo = e.results.front().n;
  const int hi = e.results.back().n;
  return lo == hi ? "n=" + std::to_string(lo) : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Short human-readable note for the verify-all table.
std::string suite_note(const SuiteEntry& e) {
  for (const ClaimResult& r : e.results) {
    if (!r.passed) return "n=" + std::to_string(r.n) + " " + r.detail.dump();
  }
  const ClaimResult& last = e.results.back();
  if (e.informational()) {
    return "equal=" + last.detail["equal"].dump() + " zero_then_one=" + last.detail["zero_then_one"].dump() +
           " negative_ones=" + last.detail["negative_ones"].dump();
  }
  if (e.id == "prop-nonlattice") {
    for (const char* name : {"TnPerm", "TBool"}) {
      if (last.detail[name].contains("no_join")) {
        return std::string(name) + "_" + std::to_string(last.n) + " no join of " +
               last.detail[name]["no_join"].dump();
      }
    }
  }
  if (e.id == "lemma4.8") {
    return "covers=" + last.detail["covers"].dump() +
           " outside_literal_range=" + last.detail["swaps_outside_literal_index_range"].dump();
  }
  return "";
}

int run_verify_all(int max_n, bool as_json, std::ostream& out) {
  Json report = Json::array();
  auto print = [&](const SuiteEntry& e) {
    if (as_json) {
      Json results = Json::array();
      for (const ClaimResult& r : e.results) results.push_back(to_json(r));
      report.push_back({{"claim", e.id}, {"passed", e.passed()}, {"results", results}});
      return;
    }
    const char* verdict = e.informational() ? "INFO" : e.passed() ? "PASS" : "FAIL";
    std::ostringstream line;
    line << verdict << "  " << e.id;
    const std::string pad(std::max<std::size_t>(1, 24 - e.id.size()), ' ');
    line << pad << range_text(e);
    const std::string note = suite_note(e);
    if (!note.empty()) line << "  " << note;
    out << line.str() << std::endl;
  };
  const auto suite = verify_all(max_n, print);
  const bool ok = std::all_of(suite.begin(), suite.end(), [](const SuiteEntry& e) { return e.passed(); });
  if (as_json) {
    out << report.dump(2) << '\n';
  } else {
    out << (ok ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating sign matrices, TSSCPP and the posets relating them"};
  app.name("tsscpp");
  app.require_subcommand(1);

  std::string family_name;
  int n = 0;
  bool count_only = false;
  bool jsonl = false;
  auto* enumerate = app.add_subcommand("enumerate", "List or count every object of a family");
  enumerate->add_option("--family", family_name, "asm, monotone, magog, boolean, nilp, tsscpp, permutation, "
                                                 "permutation-boolean")
      ->required();
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of objects");
  enumerate->add_flag("--jsonl", jsonl, "One JSON object per line");

  std::string from;
  std::string to;
  std::string input;
  auto* convert = app.add_subcommand("convert", "Apply a bijection to one object");
  convert->add_option("--from", from, "Source kind")->required()->check(CLI::IsMember(kConvertKinds));
  convert->add_option("--to", to, "Target kind")->required()->check(CLI::IsMember(kConvertKinds));
  convert->add_option("input", input, "Object JSON, a one-line permutation, or - for stdin")->required();

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Statistics of one object");
  stats->add_option("input", stats_input, "Object JSON, a one-line permutation, or - for stdin")->required();

  std::string statistic_name;
  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over a family");
  dist->add_option("--family", family_name, "Family")->required();
  dist->add_option("--n", n, "Order")->required();
  dist->add_option("--statistic", statistic_name,
                   "zeros, last-row-zeros, lowest-one, zero-then-one, inversions, negative-ones, strict-entries")
      ->required();

  std::string poset_name;
  std::string format = "json";
  auto* poset = app.add_subcommand("poset", "Build a named poset");
  std::vector<std::string> names(poset_names().begin(), poset_names().end());
  poset->add_option("--name", poset_name, "Poset name")->required()->check(CLI::IsMember(names));
  poset->add_option("--n", n, "Order")->required();
  poset->add_option("--out", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  std::string claim;
  auto* poset_check = app.add_subcommand("poset-check", "Check a poset claim at one order");
  std::vector<std::string> claims(poset_claim_ids().begin(), poset_claim_ids().end());
  poset_check->add_option("--claim", claim, "Claim id")->required()->check(CLI::IsMember(claims));
  poset_check->add_option("--n", n, "Order")->required();

  int max_n = 0;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify-all", "Run every check up to an order");
  verify->add_option("--n", max_n, "Largest order")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Emit the full report as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      const Family f = require_family(family_name);
      if (count_only) {
        out << count(f, n) << '\n';
      } else {
        enumerate_family(f, n, jsonl, out);
      }
      return kExitOk;
    }
    if (convert->parsed()) {
      const AnyObject object = read_object(read_input(input));
      const std::string actual = kind_name(object);
      if (actual != from) throw UsageError("input is a " + actual + ", not a " + from);
      out << convert_to(normalize(object), to, from).dump() << '\n';
      return kExitOk;
    }
    if (stats->parsed()) {
      const AnyObject object = read_object(read_input(stats_input));
      out << Json{{"object", to_json(object)}, {"stats", stats_of(normalize(object))}}.dump() << '\n';
      return kExitOk;
    }
    if (dist->parsed()) {
      const Family f = require_family(family_name);
      const auto s = parse_statistic(statistic_name);
      if (!s) throw UsageError("unknown statistic \"" + statistic_name + "\"");
      Json counts = Json::object();
      for (const auto& [value, c] : distribution(f, n, *s)) counts[std::to_string(value)] = c;
      out << Json{{"family", family_name}, {"statistic", statistic_name}, {"n", n}, {"counts", counts}}.dump()
          << '\n';
      return kExitOk;
    }
    if (poset->parsed()) {
      const auto p = build_named(poset_name, n);
      if (!p) throw UsageError("unknown poset \"" + poset_name + "\"");
      if (format == "dot") {
        out << p->to_dot(poset_name + "_" + std::to_string(n));
      } else {
        out << poset_to_json(*p).dump() << '\n';
      }
      return kExitOk;
    }
    if (poset_check->parsed()) {
      const ClaimResult r = check_poset_claim(claim, n);
      out << to_json(r).dump(2) << '\n';
      return r.passed ? kExitOk : kExitVerificationFailed;
    }
    if (verify->parsed()) return run_verify_all(max_n, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tsscpp::cli
