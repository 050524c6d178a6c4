#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

#include "bks/pairing.hpp"
#include "bks/rootsys.hpp"
#include "bks/verify.hpp"
#include "config.hpp"

namespace bks::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Rational& r);
Json to_json(const BigRational& r);
Json to_json(const Coords& v);
Json to_json(const RationalMatrix& m);
Json to_json(std::complex<double> z);
Json to_json(const RunConfig& c);
Json to_json(const PairingResult& p);
Json to_json(const verify::CheckRecord& c);

/// Skeleton record: tool, version, command and config echo. Results, checks
/// and the runtime section are filled in by the command.
Json make_report(const std::string& command, const RunConfig& config);

/// SHA-256 (hex) of the report with its "runtime" section and "digest" removed.
std::string report_digest(const Json& report);

/// Sets "digest" and serializes with two-space indentation.
std::string finalize_report(Json& report);

/// One row per pair; doubles printed with 17 significant digits.
std::string pairing_csv(const std::vector<PairingResult>& rows);

}  // namespace bks::app
