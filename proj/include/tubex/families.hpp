#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tubex/delta_graph.hpp"

namespace tubex {

// (name, n) plus the extra parameters some families need; name is the
// canonical underscore tag (see family_tag)
struct FamilyId {
    std::string name;
    int n = 0;
    int j = 0, k = 0;   // wand
    std::string base;   // omni base: path | cycle | complete
    SimpleGraph tree;   // subtree base graph
};

// canonical tag from kebab-case/underscore spelling or polytope alias
// (halohedron, stellohedron, stellocubeahedron); unknown name → input_error
std::string family_tag(const std::string& name);
std::vector<std::string> family_names();

DeltaGraph build(const FamilyId& id);
// ambient dimension used for the polyhedron-convention f-vector row
int family_dimension(const FamilyId& id);

// rows n = 0..n_max per family in polyhedron convention; (name, n) cells the
// family does not support are left with empty counts
std::vector<std::vector<FVector>> family_table(const std::vector<FamilyId>& ids,
                                               int n_max, int threads = 0);

// single-path hypercube graph on ±[n]: tubes are intervals [i,j] of the
// positive path or negative singletons; coefficients over the simple roots
std::vector<int> tube_to_root(int n, FaceSet tube);

// diagonals of the (n+3)-gon with vertices 0..n+2; D_{a,b} needs a+2 ≤ b and
// (a,b) ≠ (0,n+2)
using Diagonal = std::pair<int, int>;
Diagonal tube_to_diagonal(int n, FaceSet tube);
bool diagonal_crossing(int n, Diagonal a, Diagonal b);

}  // namespace tubex
