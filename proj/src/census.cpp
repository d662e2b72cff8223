#include "socs/census.hpp"

namespace socs {

std::vector<SolutionTriple> convex_candidates() {
    std::vector<SolutionTriple> out = enumerate_up_to(126);
    // The census carries one even solution past the 126-side cap; it cannot
    // be convex but is kept in the candidate list for completeness.
    out.push_back(SolutionTriple{66, 159, 198});
    return out;  // already ordered by (c-a, a); the carry-over has c-a = 132
}

PolygonPath inward_turning_polygon(const SolutionTriple& t) {
    const long ell = (t.b - t.a).convert_to<long>();
    const long m = (t.c - t.b).convert_to<long>();
    // One rotational sense per arm keeps every free turn toward the
    // interior; the opposite assignment builds the mirror image.
    TurnSequence turns;
    turns.bits.assign(static_cast<std::size_t>(ell - 1), true);
    turns.bits.insert(turns.bits.end(), static_cast<std::size_t>(m - 1), false);
    return construct_generic(t, turns);
}

std::vector<CensusRow> run_census() {
    std::vector<CensusRow> rows;
    for (const SolutionTriple& t : convex_candidates()) {
        CensusRow row;
        row.triple = t;
        row.parameterized_k = classify_parameterized(t);
        PolygonPath path = inward_turning_polygon(t);
        row.candidate_built = true;
        PolygonReport rep = validate(path, t);
        row.convex = rep.convex;
        row.mu = rep.mu;
        row.self_intersecting = rep.self_intersecting;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace socs
