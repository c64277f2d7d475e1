#pragma once

// JSON/CSV/text renderings of reports and the checksummed certificate.
// Every rational is written as an exact "num/den" string; the matching
// "*_approx" fields are decimal renderings for reading only.

#include "gencert/bounds.hpp"

#include <json.hpp>

#include <string>

namespace gencert {

using Json = nlohmann::json;

Json spec_json(const GroupSpec& spec);
Json witness_json(const PrimitivePrimeWitness& w);
Json report_json(const BoundReport& report);
Json psp4_json(const Psp4Bound& bound);

/// Instantiated catalog for (spec, r): geometric rows, cross-characteristic
/// socle rows and, in the small-dimension list, the explicit socles.
Json catalog_json(const GroupSpec& spec, const PrimitivePrimeWitness& w);

/// Header plus one row per term.
std::string report_csv(const BoundReport& report);
std::string report_text(const BoundReport& report);
std::string psp4_text(const Psp4Bound& bound);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// "gencert <version> (<compiler>, GMP <version>)".
std::string toolchain_stamp();

/// Certificate: the report plus catalog checksum, toolchain stamp and a
/// checksum over everything except "timestamp" and the checksum itself.
/// An empty timestamp omits the field.
Json make_certificate(const BoundReport& report, const std::string& timestamp = "");

/// Recomputes the certificate checksum.
bool certificate_checksum_ok(const Json& certificate);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace gencert
