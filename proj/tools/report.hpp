#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ttl/ttl.hpp"

namespace ttl::cli {

using nlohmann::json;

json to_json(const TorusLinkParams& link);
json to_json(const TwistedTorusParams& params);
json to_json(const Obstruction& obstruction);
json to_json(const Classification& classification, const TwistedTorusParams& input);

/// One line of a census table.
struct CensusRow {
  TwistedTorusParams params;
  GeometricClassification verdict;
  std::optional<OracleChecks> checks;  // set only when verifying and applicable
};

inline constexpr const char* kCensusCsvHeader =
    "p,q,r,s,verdict,obstruction,k,companion_a,companion_b,"
    "check_components,check_linking,check_split";

/// Flattened cell values in header order; empty strings are absent fields.
std::vector<std::string> census_cells(const CensusRow& row);
std::string census_csv_line(const CensusRow& row);
json census_json(const CensusRow& row);

}  // namespace ttl::cli
