#include "cyclic/json.hpp"

#include "cyclic/error.hpp"

namespace cyclic::json {
namespace {

Integer parse_integer(const json& j) {
  if (!j.is_string()) throw ParseError("expected a decimal string", 0);
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0)
    throw ParseError("malformed integer \"" + j.get<std::string>() + "\"", 0);
  return z;
}

}  // namespace

json matrix(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix parse_matrix(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows", 0);
  const int n = static_cast<int>(j.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw ParseError("matrix must be square", 0);
    for (int c = 0; c < n; ++c) m(i + 1, c + 1) = parse_integer(j[i][c]);
  }
  return m;
}

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

RationalVector parse_rationals(const json& j) {
  RationalVector out;
  for (const auto& e : j) out.push_back(parse_rational(e.get<std::string>()));
  return out;
}

json orbit(const Orbit& o) {
  json numerators = json::array();
  for (const auto& a : o.numerators()) numerators.push_back(a.get_str());
  const FixVector fix = measure_fix(o);
  return json{
      {"k", o.k()},
      {"denominator", o.denominator().get_str()},
      {"numerators", std::move(numerators)},
      {"reduced", rationals(o.points())},
      {"fix", fix.n},
      {"shift", fix.shift},
      {"dep", measure_dep(o).w},
  };
}

Orbit parse_orbit(const json& j) {
  const int k = j.at("k").get<int>();
  std::vector<Integer> numerators;
  for (const auto& e : j.at("numerators")) numerators.push_back(parse_integer(e));
  Orbit o = Orbit::from_numerators(k, numerators);
  if (o.denominator() != parse_integer(j.at("denominator")))
    throw ParseError("denominator is not k^q - 1", 0);
  return o;
}

json catalog_line(const Orbit& o, const Cycle& sigma, const Cycle& type) {
  json line = orbit(o);
  line["q"] = o.q();
  line["cycle"] = sigma.to_string();
  line["type"] = type.to_string();
  return line;
}

json report(const VerifyReport& r) {
  json cycles = json::array();
  for (const auto& c : r.cycles) {
    cycles.push_back({{"cycle", c.sigma.to_string()},
                      {"descent", c.descent},
                      {"a_q", c.last_signature_bit},
                      {"observed", c.observed.get_str()},
                      {"expected", c.expected.get_str()},
                      {"status", c.pass ? "PASS" : "FAIL"}});
  }
  json types = json::array();
  for (const auto& t : r.types) {
    types.push_back({{"type", t.canonical.to_string()},
                     {"descent", t.descent},
                     {"symmetry", t.symmetry},
                     {"observed", t.observed.get_str()},
                     {"expected", t.expected.get_str()},
                     {"status", t.pass ? "PASS" : "FAIL"}});
  }
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"cycle", m.sigma.to_string()},
                          {"orbit", orbit(m.orbit)},
                          {"detail", m.detail}});
  }
  return json{
      {"q", r.q},
      {"k", r.k},
      {"orbits", r.orbit_count.get_str()},
      {"expected_orbits", r.expected_orbit_count.get_str()},
      {"orbits_checked", r.orbits_checked},
      {"cycles", std::move(cycles)},
      {"types", std::move(types)},
      {"mismatches", std::move(mismatches)},
      {"status", r.pass() ? "PASS" : "FAIL"},
  };
}

}  // namespace cyclic::json
