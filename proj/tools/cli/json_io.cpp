#include "cli/json_io.hpp"

#include <string>

namespace bimehler::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

unsigned bound_field(const json& j, const char* key) {
  const int v = int_field(j, key);
  if (v < 0) throw FormatError(std::string("field \"") + key + "\" must be nonnegative");
  return static_cast<unsigned>(v);
}

Matching matching_from_json(const json& j, const char* key) {
  const json& list = field(j, key);
  if (!list.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  Matching out;
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw FormatError(std::string("entries of \"") + key +
                        "\" must be [man, woman] integer pairs");
    }
    out.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return out;
}

json matching_to_json(const Matching& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.man, e.woman});
  return out;
}

WeightPoly poly_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" must be a string");
  try {
    return parse_weight_poly(v.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json profile_to_json(const Profile& p) {
  return {{"m", p.m},
          {"n", p.n},
          {"marriages", matching_to_json(p.marriages)},
          {"affairs", matching_to_json(p.affairs)}};
}

Profile profile_from_json(const json& j) {
  Profile p;
  p.m = int_field(j, "m");
  p.n = int_field(j, "n");
  p.marriages = matching_from_json(j, "marriages");
  p.affairs = matching_from_json(j, "affairs");
  return p;
}

Profile parse_profile(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return profile_from_json(j);
}

json component_to_json(const Component& c) {
  return {{"case", std::string(to_string(c.tag))},
          {"k", c.k},
          {"men", c.men},
          {"women", c.women},
          {"weight", to_string(component_weight(c))}};
}

json series_to_json(const BiSeries& f) {
  json coefficients = json::array();
  for (unsigned m = 0; m <= f.max_m(); ++m) {
    for (unsigned n = 0; n <= f.max_n(); ++n) {
      if (f.coeff(m, n).is_zero()) continue;
      coefficients.push_back({{"m", m}, {"n", n}, {"poly", to_string(f.coeff(m, n))}});
    }
  }
  return {{"max_m", f.max_m()}, {"max_n", f.max_n()}, {"coefficients", coefficients}};
}

BiSeries series_from_json(const json& j) {
  BiSeries f(bound_field(j, "max_m"), bound_field(j, "max_n"));
  const json& coefficients = field(j, "coefficients");
  if (!coefficients.is_array()) throw FormatError("\"coefficients\" must be an array");
  for (const json& c : coefficients) {
    const unsigned m = bound_field(c, "m");
    const unsigned n = bound_field(c, "n");
    if (m > f.max_m() || n > f.max_n()) throw FormatError("coefficient outside bounds");
    f.set_coeff(m, n, poly_field(c, "poly"));
  }
  return f;
}

json report_to_json(const VerifyReport& r) {
  json mismatches = json::array();
  for (const Mismatch& mm : r.mismatches) {
    mismatches.push_back({{"m", mm.m},
                          {"n", mm.n},
                          {"forms", mm.forms},
                          {"expected", to_string(mm.expected)},
                          {"actual", to_string(mm.actual)}});
  }
  return {{"max_m", r.max_m},
          {"max_n", r.max_n},
          {"status", r.passed() ? "pass" : "fail"},
          {"mismatches", mismatches},
          {"elapsed_ms",
           {{"lhs", r.elapsed.lhs_ms},
            {"component", r.elapsed.component_ms},
            {"closed", r.elapsed.closed_ms}}}};
}

VerifyReport report_from_json(const json& j) {
  VerifyReport r;
  r.max_m = bound_field(j, "max_m");
  r.max_n = bound_field(j, "max_n");
  const json& list = field(j, "mismatches");
  if (!list.is_array()) throw FormatError("\"mismatches\" must be an array");
  for (const json& mm : list) {
    const json& forms = field(mm, "forms");
    if (!forms.is_string()) throw FormatError("\"forms\" must be a string");
    r.mismatches.push_back({bound_field(mm, "m"), bound_field(mm, "n"),
                            forms.get<std::string>(), poly_field(mm, "expected"),
                            poly_field(mm, "actual")});
  }
  const json& status = field(j, "status");
  if (status != (r.passed() ? "pass" : "fail")) {
    throw FormatError("\"status\" disagrees with the mismatch list");
  }
  const json& elapsed = field(j, "elapsed_ms");
  auto ms = [&elapsed](const char* key) {
    const json& v = field(elapsed, key);
    if (!v.is_number()) throw FormatError(std::string("elapsed_ms.") + key + " must be a number");
    return v.get<double>();
  };
  r.elapsed = {ms("lhs"), ms("component"), ms("closed")};
  return r;
}

}  // namespace bimehler::cli
