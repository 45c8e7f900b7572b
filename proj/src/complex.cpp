#include "tubex/complex.hpp"

#include <algorithm>
#include <functional>

namespace tubex {

namespace {

// drop circuits that contain another circuit; sort canonically
std::vector<FaceSet> minimize(std::vector<FaceSet> cs) {
    std::sort(cs.begin(), cs.end(), canonical_less);
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<FaceSet> out;
    for (FaceSet c : cs) {
        bool redundant = false;
        for (FaceSet k : out)
            if (k.subset_of(c)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(c);
    }
    return out;
}

}  // namespace

ForbiddenComplex::ForbiddenComplex(GroundSet ground, std::vector<FaceSet> circuits)
    : ground_(std::move(ground)), circuits_(std::move(circuits)) {
    for (FaceSet c : circuits_) {
        check_range(c);
        if (c.empty())
            throw input_error("empty forbidden subset makes every set a non-face");
    }
    normalize();
}

void ForbiddenComplex::check_range(FaceSet f) const {
    if (!f.subset_of(full()))
        throw input_error("face set uses elements outside the ground set");
}

void ForbiddenComplex::normalize() {
    circuits_ = minimize(std::move(circuits_));
    // singleton circuits mean a dead element: remove it from the ground and
    // with it every circuit it appears in (those can no longer be reached)
    FaceSet dead;
    for (FaceSet c : circuits_)
        if (c.size() == 1) dead |= c;
    if (!dead.empty()) {
        FaceSet keep = full() - dead;
        std::vector<int> newidx(64, -1);
        int at = 0;
        for (int i : keep.elements()) newidx[i] = at++;
        std::vector<FaceSet> survivors;
        for (FaceSet c : circuits_) {
            if (c.intersects(dead)) continue;
            FaceSet r;
            for (int i : c.elements()) r |= FaceSet::single(newidx[i]);
            survivors.push_back(r);
        }
        ground_ = ground_.restrict(keep);
        circuits_ = minimize(std::move(survivors));
    }
}

bool ForbiddenComplex::is_face(FaceSet f) const {
    check_range(f);
    for (FaceSet c : circuits_)
        if (c.subset_of(f)) return false;
    return true;
}

ForbiddenComplex ForbiddenComplex::link(FaceSet s) const {
    if (!is_face(s)) throw input_error("link requires a face");
    FaceSet keep = full() - s;
    std::vector<int> newidx(64, -1);
    int at = 0;
    for (int i : keep.elements()) newidx[i] = at++;
    std::vector<FaceSet> cs;
    for (FaceSet c : circuits_) {
        FaceSet r;
        for (int i : (c - s).elements()) r |= FaceSet::single(newidx[i]);
        // c ⊆ s is impossible since s is a face, so r is nonempty
        cs.push_back(r);
    }
    return ForbiddenComplex(ground_.restrict(keep), std::move(cs));
}

ForbiddenComplex ForbiddenComplex::delete_(FaceSet x) const {
    check_range(x);
    FaceSet keep = full() - x;
    std::vector<int> newidx(64, -1);
    int at = 0;
    for (int i : keep.elements()) newidx[i] = at++;
    std::vector<FaceSet> cs;
    for (FaceSet c : circuits_) {
        if (c.intersects(x)) continue;
        FaceSet r;
        for (int i : c.elements()) r |= FaceSet::single(newidx[i]);
        cs.push_back(r);
    }
    return ForbiddenComplex(ground_.restrict(keep), std::move(cs));
}

ForbiddenComplex ForbiddenComplex::product(const ForbiddenComplex& b) const {
    if (size() + b.size() > 64)
        throw capacity_error("product ground exceeds 64 elements");
    GroundSet g;
    g.labels = ground_.labels;
    g.pairing = ground_.pairing;
    int off = size();
    for (int i = 0; i < b.size(); ++i) {
        std::string lab = b.ground_.labels[i];
        while (std::find(g.labels.begin(), g.labels.end(), lab) != g.labels.end())
            lab += "'";  // disjoint union: rename clashes from the right factor
        g.labels.push_back(std::move(lab));
        int p = b.ground_.pairing[i];
        g.pairing.push_back(p < 0 ? -1 : p + off);
    }
    std::vector<FaceSet> cs = circuits_;
    for (FaceSet c : b.circuits_) cs.push_back(FaceSet(c.bits << off));
    return ForbiddenComplex(std::move(g), std::move(cs));
}

int ForbiddenComplex::rank() const {
    if (rank_cache_) return *rank_cache_;
    int m = size(), best = 0;
    // include/exclude search; a circuit blocks a set the moment its last
    // element would be added
    std::function<void(int, FaceSet, int)> rec = [&](int i, FaceSet cur, int sz) {
        if (sz + (m - i) <= best) return;
        if (i == m) {
            best = std::max(best, sz);
            return;
        }
        FaceSet with = cur | FaceSet::single(i);
        bool ok = true;
        for (FaceSet c : circuits_)
            if (c.contains(i) && c.subset_of(with)) {
                ok = false;
                break;
            }
        if (ok) rec(i + 1, with, sz + 1);
        rec(i + 1, cur, sz);
    };
    rec(0, FaceSet(), 0);
    rank_cache_ = best;
    return best;
}

ForbiddenComplex ForbiddenComplex::stellar_subdivision(FaceSet s,
                                                       const std::string& label) const {
    if (!is_face(s) || s.empty())
        throw input_error("stellar subdivision requires a nonempty face");
    if (size() + 1 > 64) throw capacity_error("ground set exceeds 64 elements");
    GroundSet g = ground_;
    g.labels.push_back(label);
    g.pairing.push_back(-1);
    FaceSet h = FaceSet::single(size());
    std::vector<FaceSet> cs;
    cs.push_back(s);
    for (FaceSet c : circuits_) {
        if (!s.subset_of(c)) cs.push_back(c);
        if (c.intersects(s)) cs.push_back(h | (c - s));
    }
    return ForbiddenComplex(std::move(g), std::move(cs));
}

std::vector<FaceSet> ForbiddenComplex::faces(std::size_t cap) const {
    std::vector<FaceSet> out;
    int m = size();
    std::function<void(int, FaceSet)> rec = [&](int i, FaceSet cur) {
        if (i == m) {
            if (out.size() >= cap) throw capacity_error("face enumeration cap exceeded");
            out.push_back(cur);
            return;
        }
        FaceSet with = cur | FaceSet::single(i);
        bool ok = true;
        for (FaceSet c : circuits_)
            if (c.contains(i) && c.subset_of(with)) {
                ok = false;
                break;
            }
        rec(i + 1, cur);
        if (ok) rec(i + 1, with);
    };
    rec(0, FaceSet());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Int ForbiddenComplex::face_count() const {
    Int n = 0;
    int m = size();
    std::function<void(int, FaceSet)> rec = [&](int i, FaceSet cur) {
        if (i == m) {
            ++n;
            return;
        }
        FaceSet with = cur | FaceSet::single(i);
        bool ok = true;
        for (FaceSet c : circuits_)
            if (c.contains(i) && c.subset_of(with)) {
                ok = false;
                break;
            }
        rec(i + 1, cur);
        if (ok) rec(i + 1, with);
    };
    rec(0, FaceSet());
    return n;
}

ForbiddenComplex hypercube_complex(int n, int rays) {
    if (n < 0 || rays < 0 || rays > n) throw input_error("bad hypercube parameters");
    GroundSet g = signed_ground(n, rays);
    std::vector<FaceSet> cs;
    for (int i = 0; i < g.size(); ++i) {
        int p = g.pairing[i];
        if (p > i) cs.push_back(FaceSet::single(i) | FaceSet::single(p));
    }
    return ForbiddenComplex(std::move(g), std::move(cs));
}

ForbiddenComplex free_complex(std::vector<std::string> labels) {
    return ForbiddenComplex(GroundSet(std::move(labels)), {});
}

}  // namespace tubex
