#pragma once

#include <optional>
#include <vector>

#include "socs/geometry.hpp"
#include "socs/search.hpp"

namespace socs {

struct CensusRow {
    SolutionTriple triple;
    std::optional<BigInt> parameterized_k;
    bool candidate_built = false;
    bool convex = false;
    int mu = 0;
    bool self_intersecting = false;
};

// The 67 census candidates: enumerate_up_to(126), i.e. parameterized
// k = 1..62 plus (17,34,42), (3,38,48), (11,50,63) and (59,110,135), and
// additionally the even solution (66,159,198). That last triple exceeds the
// 126-side cap and cannot be convex, but the census keeps it for
// completeness. Sorted by (c-a, a).
std::vector<SolutionTriple> convex_candidates();

// The one polygon (up to reflection) from t that could possibly be convex:
// every free choice turns toward the interior, i.e. all first-arm bits share
// one sense and all second-arm bits the other (the mirror image is not
// built).
PolygonPath inward_turning_polygon(const SolutionTriple& t);

// Builds and validates the inward-turning polygon of every candidate.
// Deterministic; exactly two rows are convex: (2,4,5) and (9,12,14).
std::vector<CensusRow> run_census();

}  // namespace socs
