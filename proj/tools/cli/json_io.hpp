#pragma once

// JSON forms of the library's values. Polynomials are always embedded as
// strings in the text grammar of `to_string(WeightPoly)`.

#include <json.hpp>

#include "bimehler/biegf.hpp"
#include "bimehler/errors.hpp"
#include "bimehler/mehler.hpp"
#include "bimehler/profiles.hpp"

namespace bimehler::cli {

/// Malformed or schema-violating JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// {"m": int, "n": int, "marriages": [[man, woman], ...], "affairs": [...]}
nlohmann::json profile_to_json(const Profile& p);
/// Throws FormatError on a schema violation. Does not validate the matching
/// invariants; see `validate`.
Profile profile_from_json(const nlohmann::json& j);
Profile parse_profile(std::string_view text);

nlohmann::json component_to_json(const Component& c);

/// {"max_m":..., "max_n":..., "coefficients": [{"m":..,"n":..,"poly":".."}]}
/// listing nonzero labelled coefficients only.
nlohmann::json series_to_json(const BiSeries& f);
BiSeries series_from_json(const nlohmann::json& j);

/// {"max_m":..., "max_n":..., "status": "pass"|"fail",
///  "mismatches": [{"m":..,"n":..,"forms":"lhs/closed","expected":"..","actual":".."}],
///  "elapsed_ms": {"lhs":..,"component":..,"closed":..}}
nlohmann::json report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const nlohmann::json& j);

}  // namespace bimehler::cli
