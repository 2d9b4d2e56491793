#pragma once

#include <nlohmann/json.hpp>

#include "cyclic/cycle.hpp"
#include "cyclic/oracle.hpp"
#include "cyclic/orbit.hpp"
#include "cyclic/rational.hpp"
#include "cyclic/transition.hpp"

namespace cyclic::json {

using nlohmann::json;

/// Arrays of arrays of decimal strings.
json matrix(const IntMatrix& m);
IntMatrix parse_matrix(const json& j);

/// "num/den" strings.
json rationals(const RationalVector& v);
RationalVector parse_rationals(const json& j);

/// {"k", "denominator", "numerators", "reduced", "fix", "shift", "dep"};
/// fix, shift and dep are measured from the points.
json orbit(const Orbit& o);
Orbit parse_orbit(const json& j);

/// One catalog line: the orbit fields plus "q", "cycle" and "type".
json catalog_line(const Orbit& o, const Cycle& sigma, const Cycle& type);

json report(const VerifyReport& r);

}  // namespace cyclic::json
