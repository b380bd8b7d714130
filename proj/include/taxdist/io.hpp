#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "taxdist/association.hpp"
#include "taxdist/asymptotics.hpp"
#include "taxdist/continued_fraction.hpp"
#include "taxdist/matrix.hpp"
#include "taxdist/neighbors.hpp"
#include "taxdist/robustness.hpp"
#include "taxdist/score.hpp"

namespace taxdist::io {

/**
 * Reads a data matrix: one row per line, comma-separated decimals. Lines
 * starting with '#' and blank lines are skipped. Errors name the source,
 * line and column (the 1-based field number): "<source>:<line>:<column>: <reason>".
 */
DataMatrix read_csv(std::istream& in, std::string_view source = "<input>");
DataMatrix read_csv_file(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double.
std::string format_exact(double v);

/// v printed with `significant` significant digits (%g style).
std::string format_significant(double v, int significant = 9);

/// n lines of n comma-separated values.
void write_csv(std::ostream& out, const DistanceMatrix& d, int significant = 9);

std::string_view convention_name(SampleSpace conv);
SampleSpace parse_convention(std::string_view text);

nlohmann::json to_json(const DistanceMatrix& d);
nlohmann::json to_json(const NeighborSets& s);  ///< 1-based indices
nlohmann::json to_json(const RationalScore& s);
nlohmann::json to_json(const CorrelationResult& r);
nlohmann::json to_json(const AdversarialResult& r);
nlohmann::json to_json(const MonteCarloEstimate& e);
nlohmann::json to_json(const ConvergentExpansion& e);

} // namespace taxdist::io
