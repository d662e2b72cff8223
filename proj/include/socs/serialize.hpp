#pragma once

#include <string>
#include <vector>

#include "socs/census.hpp"
#include "socs/geometry.hpp"
#include "socs/pell.hpp"

namespace socs {

inline constexpr const char* kSchemaVersion = "1";

// Every big integer is serialized as a decimal string, never floating
// point, so values past 100 digits survive a round trip.

// CSV with fixed column order a,b,c,N,ell,m,k (k blank for non-parameterized
// triples).
std::string solutions_to_csv(const std::vector<SolutionTriple>& sols);
std::string solutions_to_json(const std::vector<SolutionTriple>& sols);

std::string orbit_to_csv(const PellContext& ctx, const std::vector<GeneratedEntry>& entries,
                         std::size_t cf_period_length);
std::string orbit_to_json(const PellContext& ctx, const std::vector<GeneratedEntry>& entries,
                          std::size_t cf_period_length);

std::string census_to_csv(const std::vector<CensusRow>& rows);
std::string census_to_json(const std::vector<CensusRow>& rows);

// Vertices as doubles plus the exact squared diagonal integers per prefix,
// and the full validation report.
std::string polygon_to_json(const PolygonPath& path, const SolutionTriple& t,
                            const PolygonReport& report);

// Closed <path>, a marked O vertex, and the validation report in a comment
// block. viewBox fitted to the bounding box with a 5% margin; the y-axis is
// flipped so "above the x-axis" renders upward.
std::string polygon_to_svg(const PolygonPath& path, const SolutionTriple& t,
                           const PolygonReport& report);

}  // namespace socs
