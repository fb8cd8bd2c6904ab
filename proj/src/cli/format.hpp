#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "induction/confidence.hpp"
#include "induction/distributions.hpp"
#include "induction/oracle.hpp"
#include "induction/reproduction.hpp"

namespace induction::cli {

using Json = nlohmann::ordered_json;

// Numbers are written with 15 significant digits.
double round_significant(double x);
std::string format_number(double x);

Json to_json(const MixedBetaDistribution& dist);
Json to_json(const ConfidenceInterval& ci);
Json to_json(const std::vector<GridPoint>& grid);
Json to_json(const CoverageReport& report);
Json to_json(const ReproductionRow& row);

// Fixed CSV column orders.
extern const std::vector<std::string> kDistributionColumns;
extern const std::vector<std::string> kCoverageColumns;
extern const std::vector<std::string> kReproductionColumns;

// Writes a header line and one line per record, taking fields by column name
// from each JSON object. null becomes "null"; strings containing commas or
// quotes are quoted.
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<Json>& records);

}  // namespace induction::cli
