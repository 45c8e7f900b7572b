#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubex/face_set.hpp"
#include "tubex/ground.hpp"
#include "tubex/numeric.hpp"

namespace tubex {

// simplicial complex stored by its minimal forbidden subsets ("circuits");
// F is a face iff no circuit is contained in F. Circuits are kept minimal,
// never singletons (an element whose singleton is forbidden is dropped from
// the ground), and canonically sorted by (size, bitset value).
class ForbiddenComplex {
   public:
    ForbiddenComplex() = default;
    ForbiddenComplex(GroundSet ground, std::vector<FaceSet> circuits);

    const GroundSet& ground() const { return ground_; }
    const std::vector<FaceSet>& circuits() const { return circuits_; }
    int size() const { return ground_.size(); }
    FaceSet full() const { return FaceSet::first_n(size()); }

    bool is_face(FaceSet f) const;

    // faces exactly {X : X∩S=∅, X∪S face}, on the surviving ground
    ForbiddenComplex link(FaceSet s) const;
    // faces of the complex avoiding X, on ground minus X
    ForbiddenComplex delete_(FaceSet x) const;
    // disjoint union of grounds and circuit lists
    ForbiddenComplex product(const ForbiddenComplex& b) const;

    // size of the largest face, by branch-and-bound over the circuit list
    int rank() const;

    // subdivide at face S: adds one ground element (label), forbids S, and
    // rewrites every circuit meeting S to pass through the new element
    ForbiddenComplex stellar_subdivision(FaceSet s, const std::string& label) const;

    // all faces (including the empty set), canonically ordered
    std::vector<FaceSet> faces(std::size_t cap = 1u << 22) const;
    Int face_count() const;

    bool operator==(const ForbiddenComplex& o) const {
        return ground_.labels == o.ground_.labels &&
               ground_.pairing == o.ground_.pairing && circuits_ == o.circuits_;
    }

   private:
    GroundSet ground_;
    std::vector<FaceSet> circuits_;
    mutable std::optional<int> rank_cache_;

    void normalize();
    void check_range(FaceSet f) const;
};

// product of 1-simplices and rays: elements ±1..±n plus `rays` unpaired ray
// vertices first; circuits are the pairs {i,−i}
ForbiddenComplex hypercube_complex(int n, int rays = 0);

// complex with the given labels and no circuits (a full simplex on them)
ForbiddenComplex free_complex(std::vector<std::string> labels);

}  // namespace tubex
