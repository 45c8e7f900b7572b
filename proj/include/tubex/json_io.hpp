#pragma once

#include <string>
#include <vector>

#include "tubex/delta_graph.hpp"
#include "tubex/fans.hpp"
#include "tubex/series.hpp"
#include "tubex/verify.hpp"

namespace tubex {

// {"hypercube": n} | {"hypercube": n, "rays": k} | {"ground": [...], "circuits": [[...]]};
// ground labels that read as signed integers with both signs present are paired
ForbiddenComplex complex_from_json_text(const std::string& text);

// one of the complex schemas plus "edges": [[1,2],[2,-3]] (labels or signed
// integers), or {"complex": {...}, "edges": [...]}; malformed input → file_error
DeltaGraph graph_from_json_text(const std::string& text);
DeltaGraph graph_from_file(const std::string& path);

// JSON array of decimal strings, in the vector's own convention
std::string fvector_json(const FVector& fv);
std::string reports_json(const std::vector<CheckReport>& reports);
// rows n = 0..nmax of rational strings, row n clipped to k ≤ min(n, kmax)
std::string series_triangle_json(const BivariateSeries& s);
// {"dim", "vertices", "facets", "edges"} with exact rational strings
std::string realization_json(const GroundSet& ground, const RealizedPolytope& p);
// Wavefront OBJ with decimal coordinates, dim 3 only (display export)
std::string realization_obj(const RealizedPolytope& p);

}  // namespace tubex
