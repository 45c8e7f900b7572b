#pragma once

#include <string>
#include <vector>

#include "tubex/face_set.hpp"
#include "tubex/numeric.hpp"

namespace tubex {

// labeled ground set; pairing[i] is the index of i's opposite, or -1 for a
// ray vertex (no opposite)
struct GroundSet {
    std::vector<std::string> labels;
    std::vector<int> pairing;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labs)
        : labels(std::move(labs)), pairing(labels.size(), -1) {
        check();
    }
    GroundSet(std::vector<std::string> labs, std::vector<int> pair)
        : labels(std::move(labs)), pairing(std::move(pair)) {
        check();
    }

    int size() const { return static_cast<int>(labels.size()); }

    int find(const std::string& lab) const {  // -1 if absent
        for (int i = 0; i < size(); ++i)
            if (labels[i] == lab) return i;
        return -1;
    }

    int index_of(const std::string& lab) const {
        int i = find(lab);
        if (i < 0) throw input_error("unknown ground label: " + lab);
        return i;
    }

    std::string label_set(FaceSet f) const {
        std::string out = "{";
        bool first = true;
        for (int i : f.elements()) {
            if (!first) out += ",";
            out += labels[i];
            first = false;
        }
        return out + "}";
    }

    // keep a subset of the elements, preserving label text and pairing
    GroundSet restrict(FaceSet keep) const {
        GroundSet g;
        std::vector<int> newidx(labels.size(), -1);
        for (int i : keep.elements()) {
            newidx[i] = static_cast<int>(g.labels.size());
            g.labels.push_back(labels[i]);
        }
        for (int i : keep.elements()) {
            int p = pairing[i];
            g.pairing.push_back(p >= 0 && keep.contains(p) ? newidx[p] : -1);
        }
        return g;
    }

   private:
    void check() const {
        if (labels.size() > 64) throw capacity_error("ground set exceeds 64 elements");
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw input_error("duplicate ground label " + labels[i]);
        for (size_t i = 0; i < pairing.size(); ++i) {
            int p = pairing[i];
            if (p < 0) continue;
            if (p == static_cast<int>(i) || pairing[p] != static_cast<int>(i))
                throw input_error("pairing is not a fixed-point-free involution");
        }
    }
};

// ground +-[n] with labels 1,-1,2,-2,...; the first `rays` coordinates get
// only their positive element (unpaired ray vertices)
inline GroundSet signed_ground(int n, int rays = 0) {
    GroundSet g;
    for (int i = 1; i <= n; ++i) {
        g.labels.push_back(std::to_string(i));
        if (i <= rays) {
            g.pairing.push_back(-1);
        } else {
            g.pairing.push_back(static_cast<int>(g.labels.size()));
            g.labels.push_back(std::to_string(-i));
            g.pairing.push_back(static_cast<int>(g.labels.size()) - 2);
        }
    }
    return g;
}

}  // namespace tubex
