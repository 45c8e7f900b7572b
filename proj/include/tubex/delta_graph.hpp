#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tubex/complex.hpp"

namespace tubex {

// a tube is a nonempty face inducing a connected subgraph; tubings are kept
// in canonical (size, bitset) order
using Tube = FaceSet;
using Tubing = std::vector<Tube>;

// f-vector of the tubing complex: counts[k] = #tubings with k tubes when
// polytope == false, mirrored (counts[k] = #k-dimensional faces of the dual
// polytope) when polytope == true
struct FVector {
    std::vector<Int> counts;
    bool polytope = false;

    bool operator==(const FVector&) const = default;
    // mirror into the polytope convention at ambient dimension dim
    FVector polytope_form(int dim) const;
    std::string str() const;
};

// building set over a complex: contains all singletons, closed under union
// of intersecting pairs whose union is a face
struct BuildingSet {
    ForbiddenComplex complex;
    std::vector<FaceSet> sets;  // canonical order

    void assert_axioms() const;  // domain_error on violation
};

struct KingmakerResult {
    bool valid = false;
    FVector decomposed;                        // meaningful when valid
    std::optional<std::pair<Tube, Tube>> witness;  // compatible non-nested pair
};

struct SimpleGraph {
    int n = 0;  // vertices 1..n
    std::vector<std::pair<int, int>> edges;
};

class DeltaGraph {
   public:
    // every edge must be a face of the complex
    DeltaGraph(ForbiddenComplex cx, const std::vector<std::pair<int, int>>& edges);
    DeltaGraph(ForbiddenComplex cx,
               const std::vector<std::pair<std::string, std::string>>& edges);

    const ForbiddenComplex& complex() const { return cx_; }
    int size() const { return cx_.size(); }
    FaceSet adjacent_to(int i) const { return adj_[i]; }
    FaceSet neighbors(FaceSet t) const;  // ∪ adjacency rows, minus t
    std::vector<std::pair<int, int>> edge_list() const;

    bool is_connected(FaceSet t) const;  // empty set counts as connected
    bool is_tube(FaceSet t) const { return !t.empty() && cx_.is_face(t) && is_connected(t); }

    // all tubes, canonical order; capacity_error beyond 2^20
    const std::vector<Tube>& tubes() const;

    // nested, or disjoint + non-adjacent + union a face
    bool is_compatible(Tube a, Tube b) const;
    // nested, or disjoint + non-adjacent (no union-face requirement)
    bool weakly_compatible(Tube a, Tube b) const;
    // pairwise weakly compatible and union of all members a face
    bool is_tubing(const Tubing& ts) const;

    // tubing counts by size; threads 0 = TUBEX_THREADS env or 1
    FVector fvector(int threads = 0) const;
    Int maximal_tubing_count(int threads = 0) const;
    std::vector<Tubing> maximal_tubings(std::size_t cap = 1u << 20) const;
    // counts of tubings containing the given tube, indexed by size
    std::vector<Int> tubing_counts_containing(Tube t) const;

    // vertex removal: complex delete + induced adjacency (ground shrinks)
    DeltaGraph delete_vertices(FaceSet x) const;
    // simplex Δ-graph on t: only circuit is t itself, adjacency induced
    DeltaGraph induced_simplex_graph(Tube t) const;
    // Δ-graph on link(Δ,t): surviving old edges plus exclusive-neighborhood
    // pairs, each kept only if a face of the link
    DeltaGraph reconnected_complement(Tube t) const;
    // reconnected complement minus the exclusive neighborhood of t
    DeltaGraph neighborless_complement(Tube t) const;
    // neighbors(t) within the reconnected complement's survivor set, as a
    // face set of the link ground
    FaceSet exclusive_neighborhood_in_link(Tube t) const;

    bool operator==(const DeltaGraph& o) const {
        return cx_ == o.cx_ && adj_ == o.adj_;
    }

   private:
    ForbiddenComplex cx_;
    std::vector<FaceSet> adj_;
    mutable std::vector<Tube> tubes_cache_;
    mutable bool tubes_ready_ = false;

    void check_edges() const;
};

BuildingSet graphic_building_set(const DeltaGraph& g);
// B/S = {X ∈ B : X∩S=∅, X∪S face} ∪ {Y∖S : Y ∈ B, S ⊊ Y}, on link(Δ,S)
BuildingSet building_set_pseudolink(const BuildingSet& b, FaceSet s);
// closure of the given sets (plus singletons) under the union rule
BuildingSet building_set_closure(const ForbiddenComplex& cx, std::vector<FaceSet> seed);
// pairwise nested-or-disjoint, and every pairwise-disjoint subfamily of
// size ≥ 2 has a union that is a face but not a member of b
bool is_nested_set(const BuildingSet& b, const std::vector<FaceSet>& n);

// link of {t} in the tubing complex factors as simplex part × reconnected
// complement part; returns the f-vector comparison verdict
bool link_decomposition_check(const DeltaGraph& g, Tube t);

// kingmaker property: any two compatible tubes meeting x are nested; when it
// holds, rebuild the f-vector from the deletion + per-tube decomposition and
// assert it equals the direct count
KingmakerResult kingmaker_check(const DeltaGraph& g, FaceSet x);

// ground = edges of base, circuits = simple cycles, adjacency = line graph
DeltaGraph subtree_delta_graph(const SimpleGraph& base);

}  // namespace tubex
