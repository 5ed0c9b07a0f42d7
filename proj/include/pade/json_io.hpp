#ifndef PADE_JSON_IO_HPP
#define PADE_JSON_IO_HPP

#include "pade/baker.hpp"
#include "pade/certificates.hpp"
#include "pade/pade_system.hpp"

#include <json.hpp>

namespace pade {

using json = nlohmann::json;

// Rationals serialize as "p/q" strings ("/q" omitted when 1); intervals as
// ["lo", "hi"] string pairs. Every document carries "schema": 1.

json interval_to_json(const RatInterval& x);
json tristate_to_json(Tristate t);

json to_json(const QuadraticInt& z);
json to_json(const LambdaConfig& cfg);
json to_json(const PadeSystem& sys);
json to_json(const Verdict& v);
json to_json(const Certificate& cert, const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b);
json to_json(const BoundConstants& c);
json to_json(const DConstants& d);
json to_json(const BoundReport& rep, const LinearForm& form);
json to_json(const StressSummary& s);

QuadraticInt quadratic_int_from_json(const json& j);

/// Reads a system document. The configuration is validated; the polynomial
/// data is taken as written so that verification commands can inspect
/// hand-edited files.
PadeSystem system_from_json(const json& j);

} // namespace pade

#endif
