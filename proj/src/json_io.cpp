#include "tsscpp/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace tsscpp {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Json rows_json(std::string_view kind, int n, const Rows& rows) {
  return Json{{"kind", kind}, {"n", n}, {"rows", rows}};
}

int field_n(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) parse_error("missing integer field \"n\"");
  return j["n"].get<int>();
}

Rows field_rows(const Json& j) {
  if (!j.contains("rows") || !j["rows"].is_array()) parse_error("missing array field \"rows\"");
  Rows rows;
  for (const Json& row : j["rows"]) {
    if (!row.is_array()) parse_error("\"rows\" must be an array of arrays");
    Row r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) parse_error("row entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void require_n(const Json& j, int actual, const char* kind) {
  if (field_n(j) != actual) parse_error(std::string(kind) + ": \"n\" does not match the array size");
}

}  // namespace

Json to_json(const MonotoneTriangle& m) { return rows_json("monotone_triangle", m.order(), m.rows()); }
Json to_json(const MagogTriangle& m) { return rows_json("magog_triangle", m.order(), m.rows()); }
Json to_json(const BooleanTriangle& b) { return rows_json("boolean_triangle", b.order(), b.rows()); }
Json to_json(const Asm& a) { return rows_json("asm", a.order(), a.rows()); }
Json to_json(const PlanePartition& p) { return rows_json("plane_partition", p.half(), p.rows()); }
Json to_json(const FundamentalDomain& d) { return rows_json("fundamental_domain", d.order(), d.rows()); }

Json to_json(const Permutation& s) {
  return Json{{"kind", "permutation"}, {"n", s.size()}, {"sigma", s.one_line()}};
}

Json to_json(const NilpNest& p) {
  Json paths = Json::array();
  for (const auto& path : p.paths()) {
    std::string steps;
    for (Step s : path) steps += s == Step::Vertical ? 'V' : 'D';
    paths.push_back(steps);
  }
  return Json{{"kind", "nilp"}, {"n", p.order()}, {"paths", paths}};
}

Json to_json(const AnyObject& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

AnyObject parse_object(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) parse_error("expected an object with a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "monotone_triangle") {
    auto m = validate_monotone(field_rows(j));
    require_n(j, m.order(), "monotone_triangle");
    return m;
  }
  if (kind == "magog_triangle") {
    auto m = validate_magog(field_rows(j));
    require_n(j, m.order(), "magog_triangle");
    return m;
  }
  if (kind == "boolean_triangle") return validate_boolean(field_n(j), field_rows(j));
  if (kind == "asm") {
    auto a = validate_asm(field_rows(j));
    require_n(j, a.order(), "asm");
    return a;
  }
  if (kind == "permutation") {
    if (!j.contains("sigma") || !j["sigma"].is_array()) parse_error("permutation: missing array field \"sigma\"");
    std::vector<int> sigma;
    for (const Json& v : j["sigma"]) {
      if (!v.is_number_integer()) parse_error("permutation: entries must be integers");
      sigma.push_back(v.get<int>());
    }
    auto s = validate_permutation(sigma);
    require_n(j, s.size(), "permutation");
    return s;
  }
  if (kind == "plane_partition") {
    auto p = validate_plane_partition(field_rows(j));
    require_n(j, p.half(), "plane_partition");
    return p;
  }
  if (kind == "fundamental_domain") return validate_fundamental(field_n(j), field_rows(j));
  if (kind == "nilp") {
    if (!j.contains("paths") || !j["paths"].is_array()) parse_error("nilp: missing array field \"paths\"");
    std::vector<std::vector<Step>> paths;
    for (const Json& path : j["paths"]) {
      if (!path.is_string()) parse_error("nilp: each path must be a string of V and D");
      std::vector<Step> steps;
      for (char c : path.get<std::string>()) {
        if (c == 'V') {
          steps.push_back(Step::Vertical);
        } else if (c == 'D') {
          steps.push_back(Step::Diagonal);
        } else {
          parse_error("nilp: steps must be V or D");
        }
      }
      paths.push_back(std::move(steps));
    }
    return validate_nilp(field_n(j), paths);
  }
  parse_error("unknown kind \"" + kind + "\"");
}

AnyObject parse_object(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_object(j);
}

std::string format_permutation(const Permutation& s) {
  std::string out;
  const bool compact = s.size() <= 9;
  for (int i = 1; i <= s.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(s(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view part = text.substr(start, end - start);
      if (part.empty()) parse_error("permutation: empty entry");
      int v = 0;
      for (char c : part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) parse_error("permutation: entries must be digits");
        v = v * 10 + (c - '0');
        if (v > 1000000) parse_error("permutation: entry too large");
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    if (text.empty()) parse_error("permutation: empty input");
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) parse_error("permutation: expected digits");
      values.push_back(c - '0');
    }
  }
  return validate_permutation(values);
}

Json label_value(const std::string& label) {
  Json value = Json::parse(label, nullptr, false);
  return value.is_object() || value.is_array() ? value : Json(label);
}

Json poset_to_json(const Poset& p) {
  Json elements = Json::array();
  for (const std::string& label : p.labels()) elements.push_back(label_value(label));
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return Json{{"elements", elements}, {"covers", covers}};
}

}  // namespace tsscpp
