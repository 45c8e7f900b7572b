#include "tubex/delta_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace tubex {

FVector FVector::polytope_form(int dim) const {
    if (polytope) return *this;
    if (static_cast<int>(counts.size()) > dim + 1)
        throw input_error("f-vector longer than ambient dimension allows");
    FVector out;
    out.polytope = true;
    out.counts.assign(dim + 1, 0);
    for (std::size_t k = 0; k < counts.size(); ++k) out.counts[dim - k] = counts[k];
    return out;
}

std::string FVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ",";
        os << counts[i];
    }
    os << ")";
    return os.str();
}

void BuildingSet::assert_axioms() const {
    for (int i = 0; i < complex.size(); ++i)
        if (std::find(sets.begin(), sets.end(), FaceSet::single(i)) == sets.end())
            throw domain_error("building set misses singleton " +
                               complex.ground().labels[i]);
    for (FaceSet a : sets)
        for (FaceSet b : sets) {
            if (!a.intersects(b) || !complex.is_face(a | b)) continue;
            if (std::find(sets.begin(), sets.end(), a | b) == sets.end())
                throw domain_error("building set not closed under union of " +
                                   complex.ground().label_set(a) + " and " +
                                   complex.ground().label_set(b));
        }
}

DeltaGraph::DeltaGraph(ForbiddenComplex cx,
                       const std::vector<std::pair<int, int>>& edges)
    : cx_(std::move(cx)), adj_(cx_.size()) {
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= size() || b >= size() || a == b)
            throw input_error("bad edge endpoints");
        adj_[a] |= FaceSet::single(b);
        adj_[b] |= FaceSet::single(a);
    }
    check_edges();
}

DeltaGraph::DeltaGraph(ForbiddenComplex cx,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : cx_(std::move(cx)), adj_(cx_.size()) {
    for (const auto& [a, b] : edges) {
        int i = cx_.ground().index_of(a), j = cx_.ground().index_of(b);
        if (i == j) throw input_error("loop edge at " + a);
        adj_[i] |= FaceSet::single(j);
        adj_[j] |= FaceSet::single(i);
    }
    check_edges();
}

void DeltaGraph::check_edges() const {
    for (int i = 0; i < size(); ++i)
        for (int j : adj_[i].elements())
            if (j > i && !cx_.is_face(FaceSet::single(i) | FaceSet::single(j)))
                throw input_error("edge {" + cx_.ground().labels[i] + "," +
                                  cx_.ground().labels[j] + "} is not a face");
}

FaceSet DeltaGraph::neighbors(FaceSet t) const {
    FaceSet nb;
    for (int i : t.elements()) nb |= adj_[i];
    return nb - t;
}

std::vector<std::pair<int, int>> DeltaGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : adj_[i].elements())
            if (j > i) out.emplace_back(i, j);
    return out;
}

bool DeltaGraph::is_connected(FaceSet t) const {
    if (t.empty()) return true;
    FaceSet reach = FaceSet::single(t.min_element());
    for (;;) {
        FaceSet next = reach;
        for (int i : reach.elements()) next |= adj_[i] & t;
        if (next == reach) break;
        reach = next;
    }
    return reach == t;
}

const std::vector<Tube>& DeltaGraph::tubes() const {
    if (tubes_ready_) return tubes_cache_;
    std::vector<Tube> out;
    constexpr std::size_t safety_cap = 1u << 20;
    // connected-face growth: each tube found once from its minimum element;
    // supersets of non-faces are non-faces, so failed extensions prune fully
    std::function<void(int, FaceSet, FaceSet)> grow = [&](int root, FaceSet cur,
                                                          FaceSet banned) {
        if (out.size() >= safety_cap) throw capacity_error("tube enumeration cap");
        out.push_back(cur);
        FaceSet ext = neighbors(cur) - banned;
        ext.bits &= (root == 63) ? 0ull : ~0ull << (root + 1);  // only > root
        while (!ext.empty()) {
            int e = ext.min_element();
            FaceSet next = cur | FaceSet::single(e);
            if (cx_.is_face(next)) grow(root, next, banned);
            banned |= FaceSet::single(e);
            ext -= FaceSet::single(e);
        }
    };
    for (int r = 0; r < size(); ++r) grow(r, FaceSet::single(r), FaceSet());
    std::sort(out.begin(), out.end(), canonical_less);
    tubes_cache_ = std::move(out);
    tubes_ready_ = true;
    return tubes_cache_;
}

bool DeltaGraph::weakly_compatible(Tube a, Tube b) const {
    if (a.subset_of(b) || b.subset_of(a)) return true;
    if (a.intersects(b)) return false;
    return !neighbors(a).intersects(b);
}

bool DeltaGraph::is_compatible(Tube a, Tube b) const {
    if (a.subset_of(b) || b.subset_of(a)) return true;
    if (a.intersects(b) || neighbors(a).intersects(b)) return false;
    return cx_.is_face(a | b);
}

bool DeltaGraph::is_tubing(const Tubing& ts) const {
    Tubing t = ts;
    std::sort(t.begin(), t.end(), canonical_less);
    t.erase(std::unique(t.begin(), t.end()), t.end());
    FaceSet u;
    for (Tube x : t) {
        if (!is_tube(x)) throw input_error("tubing member is not a tube");
        u |= x;
    }
    if (!cx_.is_face(u)) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (!weakly_compatible(t[i], t[j])) return false;
    return true;
}

namespace {

// precomputed pairwise-compatibility bitmatrix over the canonical tube order.
// When every circuit has ≤ 2 elements, pairwise strong compatibility already
// forces the union to be a face (a forbidden pair inside the union would sit
// across two compatible tubes, contradicting either the union-face test of a
// disjoint pair or the face property of the larger tube of a nested pair), so
// the flag shortcut drops the per-extension union check.
struct Walker {
    const DeltaGraph& g;
    const std::vector<Tube>& tb;
    int T, W;
    bool flag;
    std::vector<std::uint64_t> rows;

    explicit Walker(const DeltaGraph& gg) : g(gg), tb(gg.tubes()) {
        T = static_cast<int>(tb.size());
        if (T > 4096) throw capacity_error("tube count exceeds 4096");
        W = (T + 63) / 64;
        flag = true;
        for (FaceSet c : g.complex().circuits())
            if (c.size() > 2) flag = false;
        rows.assign(static_cast<std::size_t>(T) * W, 0);
        for (int i = 0; i < T; ++i)
            for (int j = i + 1; j < T; ++j) {
                bool ok = flag ? g.is_compatible(tb[i], tb[j])
                               : g.weakly_compatible(tb[i], tb[j]);
                if (ok) {
                    rows[static_cast<std::size_t>(i) * W + j / 64] |= 1ull << (j % 64);
                    rows[static_cast<std::size_t>(j) * W + i / 64] |= 1ull << (i % 64);
                }
            }
    }

    const std::uint64_t* row(int i) const {
        return rows.data() + static_cast<std::size_t>(i) * W;
    }

    // candidates above index i, compatible with tube i, drawn from mask
    std::vector<std::uint64_t> narrow(const std::vector<std::uint64_t>& mask,
                                      int i) const {
        std::vector<std::uint64_t> out(W);
        const std::uint64_t* r = row(i);
        for (int w = 0; w < W; ++w) out[w] = mask[w] & r[w];
        out[i / 64] &= (i % 64 == 63) ? 0ull : ~0ull << (i % 64 + 1);
        for (int w = 0; w < i / 64; ++w) out[w] = 0;
        return out;
    }

    std::vector<std::uint64_t> all_mask() const {
        std::vector<std::uint64_t> m(W, ~0ull);
        if (T % 64) m[W - 1] = (1ull << (T % 64)) - 1;
        if (W == 0) m.clear();
        return m;
    }

    static int popcount(const std::vector<std::uint64_t>& m) {
        int c = 0;
        for (auto w : m) c += std::popcount(w);
        return c;
    }

    // counts[d] += number of tubings of size d extending (u, mask); the mask
    // holds candidate indices all above the last chosen tube
    void count_all(std::vector<std::uint64_t> mask, FaceSet u, int depth,
                   std::vector<Int>& counts) {
        if (depth >= static_cast<int>(counts.size())) counts.resize(depth + 1, 0);
        counts[depth] += 1;
        for (int w = 0; w < W; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int i = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                FaceSet nu = u | tb[i];
                if (!flag && !g.complex().is_face(nu)) {
                    mask[w] &= ~(1ull << (i % 64));  // dead for all supersets
                    continue;
                }
                count_all(narrow(mask, i), nu, depth + 1, counts);
            }
        }
    }

    // only tubings that can still reach exactly `target` tubes
    Int count_to_rank(std::vector<std::uint64_t> mask, FaceSet u, int depth,
                      int target) {
        if (depth == target) return 1;
        if (depth + popcount(mask) < target) return 0;
        Int total = 0;
        for (int w = 0; w < W; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int i = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                FaceSet nu = u | tb[i];
                if (!flag && !g.complex().is_face(nu)) {
                    mask[w] &= ~(1ull << (i % 64));
                    continue;
                }
                total += count_to_rank(narrow(mask, i), nu, depth + 1, target);
            }
        }
        return total;
    }

    void collect_to_rank(std::vector<std::uint64_t> mask, FaceSet u,
                         std::vector<int>& chosen, int target,
                         std::vector<Tubing>& out, std::size_t cap) {
        if (static_cast<int>(chosen.size()) == target) {
            if (out.size() >= cap) throw capacity_error("maximal tubing cap");
            Tubing t;
            for (int i : chosen) t.push_back(tb[i]);
            std::sort(t.begin(), t.end(), canonical_less);
            out.push_back(std::move(t));
            return;
        }
        if (static_cast<int>(chosen.size()) + popcount(mask) < target) return;
        for (int w = 0; w < W; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int i = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                FaceSet nu = u | tb[i];
                if (!flag && !g.complex().is_face(nu)) {
                    mask[w] &= ~(1ull << (i % 64));
                    continue;
                }
                chosen.push_back(i);
                collect_to_rank(narrow(mask, i), nu, chosen, target, out, cap);
                chosen.pop_back();
            }
        }
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* e = std::getenv("TUBEX_THREADS")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return 1;
}

void add_into(std::vector<Int>& a, const std::vector<Int>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

}  // namespace

FVector DeltaGraph::fvector(int threads) const {
    Walker wk(*this);
    int nt = std::min(resolve_threads(threads), std::max(wk.T, 1));
    std::vector<Int> counts;
    if (nt <= 1 || wk.T == 0) {
        wk.count_all(wk.all_mask(), FaceSet(), 0, counts);
    } else {
        // fan out over the first tube; stripe r takes first-tube indices
        // ≡ r (mod nt), partial counts summed in stripe order
        counts.assign(1, 1);
        std::vector<std::vector<Int>> partial(nt);
        std::vector<std::thread> pool;
        auto base = wk.all_mask();
        for (int r = 0; r < nt; ++r)
            pool.emplace_back([&, r] {
                std::vector<Int> local;
                for (int i = r; i < wk.T; i += nt)
                    wk.count_all(wk.narrow(base, i), wk.tb[i], 1, local);
                partial[r] = std::move(local);
            });
        for (auto& th : pool) th.join();
        for (auto& p : partial) add_into(counts, p);
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return FVector{std::move(counts), false};
}

Int DeltaGraph::maximal_tubing_count(int threads) const {
    Walker wk(*this);
    int target = cx_.rank();
    if (target == 0) return 1;  // the empty tubing
    int nt = std::min(resolve_threads(threads), std::max(wk.T, 1));
    auto base = wk.all_mask();
    if (nt <= 1 || wk.T == 0)
        return wk.count_to_rank(base, FaceSet(), 0, target);
    std::vector<Int> partial(nt, 0);
    std::vector<std::thread> pool;
    for (int r = 0; r < nt; ++r)
        pool.emplace_back([&, r] {
            Int local = 0;
            for (int i = r; i < wk.T; i += nt)
                local += wk.count_to_rank(wk.narrow(base, i), wk.tb[i], 1, target);
            partial[r] = std::move(local);
        });
    for (auto& th : pool) th.join();
    Int total = 0;
    for (auto& p : partial) total += p;
    return total;
}

std::vector<Tubing> DeltaGraph::maximal_tubings(std::size_t cap) const {
    Walker wk(*this);
    int target = cx_.rank();
    std::vector<Tubing> out;
    std::vector<int> chosen;
    if (target == 0) {
        out.push_back({});
        return out;
    }
    wk.collect_to_rank(wk.all_mask(), FaceSet(), chosen, target, out, cap);
    return out;
}

std::vector<Int> DeltaGraph::tubing_counts_containing(Tube t) const {
    if (!is_tube(t)) throw input_error("not a tube");
    Walker wk(*this);
    int ti = static_cast<int>(
        std::lower_bound(wk.tb.begin(), wk.tb.end(), t, canonical_less) -
        wk.tb.begin());
    // start from {t} but let candidates range over all compatible indices,
    // not just those above t, so every containing tubing appears once
    std::vector<std::uint64_t> mask(wk.W);
    const std::uint64_t* r = wk.row(ti);
    for (int w = 0; w < wk.W; ++w) mask[w] = r[w];
    std::vector<Int> counts;
    wk.count_all(std::move(mask), t, 1, counts);
    counts[0] = 0;
    return counts;
}

DeltaGraph DeltaGraph::delete_vertices(FaceSet x) const {
    ForbiddenComplex nc = cx_.delete_(x);
    std::vector<int> to_new(size(), -1);
    for (int i = 0; i < size(); ++i)
        if (!x.contains(i)) to_new[i] = nc.ground().find(cx_.ground().labels[i]);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : edge_list())
        if (to_new[a] >= 0 && to_new[b] >= 0) edges.emplace_back(to_new[a], to_new[b]);
    return DeltaGraph(std::move(nc), edges);
}

DeltaGraph DeltaGraph::induced_simplex_graph(Tube t) const {
    if (!is_tube(t)) throw input_error("not a tube");
    // single circuit = the whole tube: proper subsets of t are the faces;
    // normalization turns a singleton t into the point Δ-graph
    ForbiddenComplex nc(cx_.ground().restrict(t), {FaceSet::first_n(t.size())});
    std::vector<int> to_new(size(), -1);
    int at = 0;
    for (int i : t.elements()) to_new[i] = at++;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : edge_list())
        if (t.contains(a) && t.contains(b) &&
            nc.is_face(FaceSet::single(to_new[a]) | FaceSet::single(to_new[b])))
            edges.emplace_back(to_new[a], to_new[b]);
    return DeltaGraph(std::move(nc), edges);
}

DeltaGraph DeltaGraph::reconnected_complement(Tube t) const {
    if (!is_tube(t)) throw input_error("not a tube");
    ForbiddenComplex link = cx_.link(t);
    std::vector<int> to_new(size(), -1);
    for (int i = 0; i < size(); ++i)
        if (!t.contains(i)) to_new[i] = link.ground().find(cx_.ground().labels[i]);
    auto face_in_link = [&](int a, int b) {
        return link.is_face(FaceSet::single(a) | FaceSet::single(b));
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : edge_list())
        if (to_new[a] >= 0 && to_new[b] >= 0 && face_in_link(to_new[a], to_new[b]))
            edges.emplace_back(to_new[a], to_new[b]);
    std::vector<int> xn;
    for (int i : neighbors(t).elements())
        if (to_new[i] >= 0) xn.push_back(to_new[i]);
    for (std::size_t p = 0; p < xn.size(); ++p)
        for (std::size_t q = p + 1; q < xn.size(); ++q)
            if (face_in_link(xn[p], xn[q])) edges.emplace_back(xn[p], xn[q]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return DeltaGraph(std::move(link), edges);
}

FaceSet DeltaGraph::exclusive_neighborhood_in_link(Tube t) const {
    if (!is_tube(t)) throw input_error("not a tube");
    ForbiddenComplex link = cx_.link(t);
    FaceSet xn;
    for (int i : neighbors(t).elements()) {
        int j = link.ground().find(cx_.ground().labels[i]);
        if (j >= 0) xn |= FaceSet::single(j);
    }
    return xn;
}

DeltaGraph DeltaGraph::neighborless_complement(Tube t) const {
    return reconnected_complement(t).delete_vertices(exclusive_neighborhood_in_link(t));
}

BuildingSet graphic_building_set(const DeltaGraph& g) {
    return BuildingSet{g.complex(), g.tubes()};
}

BuildingSet building_set_closure(const ForbiddenComplex& cx, std::vector<FaceSet> seed) {
    for (int i = 0; i < cx.size(); ++i) seed.push_back(FaceSet::single(i));
    std::sort(seed.begin(), seed.end(), canonical_less);
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    for (FaceSet s : seed)
        if (s.empty() || !cx.is_face(s))
            throw input_error("building set seed must be nonempty faces");
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<FaceSet> add;
        for (FaceSet a : seed)
            for (FaceSet b : seed) {
                if (!a.intersects(b)) continue;
                FaceSet u = a | b;
                if (!cx.is_face(u)) continue;
                if (!std::binary_search(seed.begin(), seed.end(), u, canonical_less))
                    add.push_back(u);
            }
        if (!add.empty()) {
            grew = true;
            seed.insert(seed.end(), add.begin(), add.end());
            std::sort(seed.begin(), seed.end(), canonical_less);
            seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
        }
    }
    return BuildingSet{cx, std::move(seed)};
}

BuildingSet building_set_pseudolink(const BuildingSet& b, FaceSet s) {
    if (std::find(b.sets.begin(), b.sets.end(), s) == b.sets.end())
        throw input_error("pseudolink base set is not a building set member");
    ForbiddenComplex link = b.complex.link(s);
    std::vector<int> to_new(b.complex.size(), -1);
    for (int i = 0; i < b.complex.size(); ++i)
        if (!s.contains(i)) to_new[i] = link.ground().find(b.complex.ground().labels[i]);
    auto remap = [&](FaceSet f) {
        FaceSet out;
        for (int i : f.elements()) out |= FaceSet::single(to_new[i]);
        return out;
    };
    std::vector<FaceSet> out;
    for (FaceSet x : b.sets) {
        if (!x.intersects(s) && b.complex.is_face(x | s))
            out.push_back(remap(x));
        else if (s.subset_of(x) && x != s)
            out.push_back(remap(x - s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    BuildingSet r{std::move(link), std::move(out)};
    r.assert_axioms();
    return r;
}

bool is_nested_set(const BuildingSet& b, const std::vector<FaceSet>& in) {
    std::vector<FaceSet> n = in;
    std::sort(n.begin(), n.end(), canonical_less);
    n.erase(std::unique(n.begin(), n.end()), n.end());
    for (FaceSet x : n)
        if (std::find(b.sets.begin(), b.sets.end(), x) == b.sets.end()) return false;
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            FaceSet a = n[i], c = n[j];
            bool nested = a.subset_of(c) || c.subset_of(a);
            if (!nested && a.intersects(c)) return false;
        }
    // every pairwise-disjoint subfamily of size ≥ 2 must union to a face
    // outside the building set
    int m = static_cast<int>(n.size());
    if (m > 20) throw capacity_error("nested-set test is exhaustive over subsets");
    for (unsigned sub = 1; sub < (1u << m); ++sub) {
        if (std::popcount(sub) < 2) continue;
        FaceSet u;
        bool disjoint = true;
        for (int i = 0; i < m && disjoint; ++i)
            if (sub >> i & 1) {
                if (u.intersects(n[i])) disjoint = false;
                u |= n[i];
            }
        if (!disjoint) continue;
        if (!b.complex.is_face(u)) return false;
        if (std::find(b.sets.begin(), b.sets.end(), u) != b.sets.end()) return false;
    }
    return true;
}

bool link_decomposition_check(const DeltaGraph& g, Tube t) {
    // the link of {t} in the tubing complex against the simplex × complement
    // product, plus the pseudolink/reconnected-complement tube-set identity
    DeltaGraph rc = g.reconnected_complement(t);
    BuildingSet pl = building_set_pseudolink(graphic_building_set(g), t);
    if (pl.sets != rc.tubes()) return false;
    std::vector<Int> link_counts;  // index = link face size
    auto containing = g.tubing_counts_containing(t);
    for (std::size_t k = 1; k < containing.size(); ++k)
        link_counts.push_back(containing[k]);
    if (link_counts.empty()) link_counts.push_back(1);
    FVector fs = g.induced_simplex_graph(t).fvector();
    FVector fr = rc.fvector();
    std::vector<Int> prod(fs.counts.size() + fr.counts.size() - 1, 0);
    for (std::size_t i = 0; i < fs.counts.size(); ++i)
        for (std::size_t j = 0; j < fr.counts.size(); ++j)
            prod[i + j] += fs.counts[i] * fr.counts[j];
    while (prod.size() > 1 && prod.back() == 0) prod.pop_back();
    while (link_counts.size() > 1 && link_counts.back() == 0) link_counts.pop_back();
    return prod == link_counts;
}

KingmakerResult kingmaker_check(const DeltaGraph& g, FaceSet x) {
    if (!x.subset_of(FaceSet::first_n(g.size())))
        throw input_error("kingmaker set outside ground");
    std::vector<Tube> intset;
    for (Tube t : g.tubes())
        if (t.intersects(x)) intset.push_back(t);
    for (std::size_t i = 0; i < intset.size(); ++i)
        for (std::size_t j = i + 1; j < intset.size(); ++j) {
            Tube a = intset[i], b = intset[j];
            if (a.subset_of(b) || b.subset_of(a)) continue;
            if (g.is_compatible(a, b))
                return KingmakerResult{false, {}, std::make_pair(a, b)};
        }
    // f = f(G∖X) + s · Σ_t f(G|_t) f(nlc(t)) over tubes meeting X
    std::vector<Int> acc = g.delete_vertices(x).fvector().counts;
    for (Tube t : intset) {
        FVector fi = g.induced_simplex_graph(t).fvector();
        FVector fn = g.neighborless_complement(t).fvector();
        std::vector<Int> term(fi.counts.size() + fn.counts.size(), 0);
        for (std::size_t i = 0; i < fi.counts.size(); ++i)
            for (std::size_t j = 0; j < fn.counts.size(); ++j)
                term[i + j + 1] += fi.counts[i] * fn.counts[j];
        add_into(acc, term);
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    FVector direct = g.fvector();
    if (acc != direct.counts)
        throw domain_error("kingmaker decomposition disagrees with direct count: " +
                           FVector{acc, false}.str() + " vs " + direct.str());
    return KingmakerResult{true, FVector{std::move(acc), false}, std::nullopt};
}

DeltaGraph subtree_delta_graph(const SimpleGraph& base) {
    int n = base.n;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : base.edges) {
        if (u < 1 || v < 1 || u > n || v > n || u == v)
            throw input_error("bad base edge");
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        throw input_error("duplicate base edge");
    if (es.size() > 64) throw capacity_error("more than 64 base edges");
    auto edge_index = [&](int u, int v) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        return static_cast<int>(std::lower_bound(es.begin(), es.end(), key) -
                                es.begin());
    };
    std::vector<std::vector<int>> nbr(n + 1);
    for (auto [u, v] : es) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    // circuits = simple cycles; each found once by anchoring at its smallest
    // vertex and orienting toward the smaller of the two anchor neighbors
    std::vector<FaceSet> circuits;
    std::vector<int> path;
    std::vector<bool> used(n + 1, false);
    std::function<void(int, int)> cyc = [&](int s, int v) {
        for (int w : nbr[v]) {
            if (w == s && path.size() >= 3) {
                if (path[1] < path.back()) {
                    FaceSet c;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i)
                        c |= FaceSet::single(edge_index(path[i], path[i + 1]));
                    c |= FaceSet::single(edge_index(path.back(), s));
                    circuits.push_back(c);
                    if (circuits.size() > 100000)
                        throw capacity_error("cycle enumeration cap");
                }
                continue;
            }
            if (w <= s || used[w]) continue;
            used[w] = true;
            path.push_back(w);
            cyc(s, w);
            path.pop_back();
            used[w] = false;
        }
    };
    for (int s = 1; s <= n; ++s) {
        path = {s};
        used.assign(n + 1, false);
        used[s] = true;
        cyc(s, s);
    }
    std::vector<std::string> labels;
    for (auto [u, v] : es)
        labels.push_back(std::to_string(u) + "-" + std::to_string(v));
    ForbiddenComplex cx(GroundSet(std::move(labels)), std::move(circuits));
    std::vector<std::pair<int, int>> line;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                line.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return DeltaGraph(std::move(cx), line);
}

}  // namespace tubex
