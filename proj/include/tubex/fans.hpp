#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tubex/delta_graph.hpp"
#include "tubex/numeric.hpp"

namespace tubex {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// exact rational dense linear algebra, desk scale
int mat_rank(Mat m);
std::optional<Vec> solve_square(Mat a, Vec b);   // unique solution, nullopt if singular
std::optional<Mat> invert(const Mat& a);
// spanning vector of the kernel when it is exactly one-dimensional (rows may be empty)
std::optional<Vec> kernel_line(const Mat& rows, int n);
// coefficients λ with Σ λ_j g_j = v; nullopt if v outside the span; requires the
// generators linearly independent so the coefficients are unique
std::optional<Vec> combination_in_span(const Mat& generators, const Vec& v);
// scale to a coprime integer vector, preserving orientation
Vec primitive(Vec v);

// preposet on ground ∪ {∞}; index size() is ∞; rel is reflexive and transitively closed
struct FacialPreposet {
    GroundSet ground;
    std::vector<std::vector<bool>> rel;

    int infinity() const { return ground.size(); }
    bool leq(int i, int j) const { return rel[i][j]; }
    bool equivalent(int i, int j) const { return rel[i][j] && rel[j][i]; }
    bool operator==(const FacialPreposet& o) const {
        return ground.labels == o.ground.labels && rel == o.rel;
    }
};

// i ⪯ j iff every tube containing j contains i; elements outside ∪N collapse with ∞
FacialPreposet preposet_from_nested(const DeltaGraph& g, const Tubing& n);
// q1 = closure(q2 ∪ Rᵒᵖ) for some R ⊆ q2
bool is_contraction(const FacialPreposet& q1, const FacialPreposet& q2);
// transitive closure of the union of two relations on the same ground
FacialPreposet closure_union(const FacialPreposet& a, const FacialPreposet& b);

// one rational dim-vector per ground element
struct VectorAssignment {
    int dim = 0;
    Mat v;
};
// label ±i ↦ ±e_{i−1}; dim = max magnitude
VectorAssignment standard_vectors(const DeltaGraph& g);

struct ConeV {
    int dim = 0;
    Mat generators;   // v_I = Σ_{i∈I} v_i, one per member, linearly independent
};
ConeV cone_of_nested(const DeltaGraph& g, const Tubing& n, const VectorAssignment& va);
// exact membership: x = Σ λ v_I with λ ≥ 0
bool cone_contains(const ConeV& c, const Vec& x);

// intersect the two simplicial cones exactly and compare the extreme rays with
// {v_I : I ∈ N1 ∩ N2}
bool fan_pair_check(const DeltaGraph& g, const Tubing& n1, const Tubing& n2,
                    const VectorAssignment& va);

struct Facet {
    Tube tube;
    Vec normal;
    Rat offset;
};
struct RealizedVertex {
    Tubing tubing;
    Vec point;
};
struct RealizedPolytope {
    int dim = 0;
    std::vector<Facet> facets;
    std::vector<RealizedVertex> vertices;
    std::vector<std::pair<int, int>> edges;   // vertex index pairs sharing dim−1 tubes
};

// one inequality v_t·x ≤ |t|·3^{n−1} − 3^{|t|−2} per tube; vertices solved exactly per
// maximal tubing and checked simple; offsets are a heuristic, failures are reported
RealizedPolytope realize_standard_cut(const DeltaGraph& g);

}  // namespace tubex
