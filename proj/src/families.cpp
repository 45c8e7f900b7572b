#include "tubex/families.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace tubex {

namespace {

using Edges = std::vector<std::pair<int, int>>;  // signed vertex numbers

DeltaGraph hyper_graph(int n, const Edges& signed_edges) {
    ForbiddenComplex cx = hypercube_complex(n);
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [a, b] : signed_edges)
        es.emplace_back(std::to_string(a), std::to_string(b));
    return DeltaGraph(std::move(cx), es);
}

Edges path_edges(const std::vector<int>& seq) {
    Edges out;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        out.emplace_back(seq[i], seq[i + 1]);
    return out;
}

std::vector<int> iota_range(int lo, int hi) {  // lo..hi inclusive
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<int> neg_range(int lo, int hi) {  // -lo..-hi
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(-i);
    return v;
}

Edges operator+(Edges a, const Edges& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Edges clique_edges(const std::vector<int>& vs) {
    Edges out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            out.emplace_back(vs[i], vs[j]);
    return out;
}

DeltaGraph point_graph() { return DeltaGraph(ForbiddenComplex(), Edges{}); }

// boundary-of-simplex complex on vertices 1..m: faces are the proper
// subsets. m ≤ 1 degenerates to the point; the m = 2 whole-ground edge is
// not a face and is dropped.
DeltaGraph simplex_graph_numbered(int m, const Edges& edges) {
    if (m <= 1) return point_graph();
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    ForbiddenComplex cx(GroundSet(std::move(labels)), {FaceSet::first_n(m)});
    std::vector<std::pair<std::string, std::string>> es;
    if (m > 2)
        for (auto [a, b] : edges)
            es.emplace_back(std::to_string(a), std::to_string(b));
    return DeltaGraph(std::move(cx), es);
}

// ground [1] + pairs 2..top (+ optional trailing ray), matching the
// missing-vertex family diagrams
GroundSet mixed_ground(int top, int extra_ray) {
    std::vector<std::string> labels{"1"};
    std::vector<int> pairing{-1};
    for (int i = 2; i <= top; ++i) {
        labels.push_back(std::to_string(i));
        pairing.push_back(static_cast<int>(labels.size()));
        labels.push_back(std::to_string(-i));
        pairing.push_back(static_cast<int>(labels.size()) - 2);
    }
    if (extra_ray != 0) {
        labels.push_back(std::to_string(extra_ray));
        pairing.push_back(-1);
    }
    return GroundSet(std::move(labels), std::move(pairing));
}

std::vector<FaceSet> pair_circuits(const GroundSet& g) {
    std::vector<FaceSet> cs;
    for (int i = 0; i < g.size(); ++i)
        if (g.pairing[i] > i)
            cs.push_back(FaceSet::single(i) | FaceSet::single(g.pairing[i]));
    return cs;
}

DeltaGraph mixed_graph(GroundSet ground, const Edges& signed_edges) {
    std::vector<FaceSet> cs = pair_circuits(ground);
    ForbiddenComplex cx(std::move(ground), std::move(cs));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [a, b] : signed_edges)
        es.emplace_back(std::to_string(a), std::to_string(b));
    return DeltaGraph(std::move(cx), es);
}

}  // namespace

std::string family_tag(const std::string& name) {
    std::string t = name;
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "halohedron") t = "cycle_plus";
    if (t == "stellohedron") t = "complete_plus";
    if (t == "stellocubeahedron") t = "star_plus";
    for (const std::string& f : family_names())
        if (t == f) return t;
    throw input_error("unknown family: " + name);
}

std::vector<std::string> family_names() {
    return {"path_plus",    "cycle_plus",     "complete_plus",
            "star_plus",    "double_path",    "double_cycle",
            "double_complete", "double_star", "twisted_path",
            "twisted_cycle", "omni",          "pell",
            "companion_pell", "near_double_path",
            "missing_vertex_double_path", "cis_double_path",
            "trans_double_path", "full",      "empty",
            "wand",         "simplex_path",   "simplex_cycle",
            "simplex_complete", "simplex_star", "subtree"};
}

DeltaGraph build(const FamilyId& id) {
    const std::string& f = id.name;
    int n = id.n;
    if (n < 0) throw input_error("negative dimension");
    if (f == "path_plus") return hyper_graph(n, path_edges(iota_range(1, n)));
    if (f == "cycle_plus") {
        if (n <= 1) return hyper_graph(n, {});
        if (n == 2) return hyper_graph(2, {{1, 2}});  // 2-cycle = one edge
        return hyper_graph(n, path_edges(iota_range(1, n)) + Edges{{n, 1}});
    }
    if (f == "complete_plus") return hyper_graph(n, clique_edges(iota_range(1, n)));
    if (f == "star_plus") {
        Edges e;
        for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
        return hyper_graph(n, e);
    }
    if (f == "double_path")
        return hyper_graph(n, path_edges(iota_range(1, n)) + path_edges(neg_range(1, n)));
    if (f == "double_cycle") {
        if (n <= 1) return hyper_graph(n, {});
        if (n == 2) return hyper_graph(2, {{1, 2}, {-1, -2}});
        return hyper_graph(n, path_edges(iota_range(1, n)) + Edges{{n, 1}} +
                                  path_edges(neg_range(1, n)) + Edges{{-n, -1}});
    }
    if (f == "double_complete")
        return hyper_graph(n, clique_edges(iota_range(1, n)) +
                                  clique_edges(neg_range(1, n)));
    if (f == "double_star") {
        Edges e;
        for (int i = 2; i <= n; ++i) {
            e.emplace_back(1, i);
            e.emplace_back(-1, -i);
        }
        return hyper_graph(n, e);
    }
    if (f == "twisted_path") {
        if (n <= 1) return hyper_graph(n, {});
        std::vector<int> seq = iota_range(1, n);
        for (int i = 1; i <= n; ++i) seq.push_back(-i);
        return hyper_graph(n, path_edges(seq));
    }
    if (f == "twisted_cycle") {
        if (n <= 1) return hyper_graph(n, {});
        std::vector<int> seq = iota_range(1, n);
        for (int i = 1; i <= n; ++i) seq.push_back(-i);
        return hyper_graph(n, path_edges(seq) + Edges{{seq.back(), seq.front()}});
    }
    if (f == "pell") {
        Edges e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, -(i + 1));
        return hyper_graph(n, e);
    }
    if (f == "companion_pell") {
        if (n < 2) throw input_error("companion_pell needs n >= 2");
        Edges e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, -(i + 1));
        e.emplace_back(-1, n);
        return hyper_graph(n, e);
    }
    if (f == "near_double_path") {
        if (n <= 1) return hyper_graph(n, {});
        std::vector<int> seq = iota_range(1, n);
        seq.push_back(-1);
        return hyper_graph(n, path_edges(seq) + path_edges(neg_range(2, n)));
    }
    if (f == "full") {
        std::vector<int> vs;
        for (int i = 1; i <= n; ++i) {
            vs.push_back(i);
            vs.push_back(-i);
        }
        Edges e;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (vs[a] != -vs[b]) e.emplace_back(vs[a], vs[b]);
        return hyper_graph(n, e);
    }
    if (f == "empty") return hyper_graph(n, {});
    if (f == "omni") {
        Edges be;
        if (id.base == "path") {
            be = path_edges(iota_range(1, n));
        } else if (id.base == "cycle") {
            be = path_edges(iota_range(1, n));
            if (n >= 3) be.emplace_back(n, 1);
        } else if (id.base == "complete") {
            be = clique_edges(iota_range(1, n));
        } else {
            throw input_error("omni base must be path, cycle, or complete");
        }
        Edges e;
        for (auto [a, b] : be) {
            e.emplace_back(a, b);
            e.emplace_back(a, -b);
            e.emplace_back(-a, b);
            e.emplace_back(-a, -b);
        }
        return hyper_graph(n, e);
    }
    if (f == "missing_vertex_double_path") {
        if (n == 0) return point_graph();
        return mixed_graph(mixed_ground(n, 0),
                           path_edges(iota_range(1, n)) + path_edges(neg_range(2, n)));
    }
    if (f == "trans_double_path") {
        if (n <= 1) return point_graph();
        return mixed_graph(mixed_ground(n - 1, -n),
                           path_edges(iota_range(1, n - 1)) + path_edges(neg_range(2, n)));
    }
    if (f == "cis_double_path") {
        if (n == 0) return point_graph();
        if (n == 1) return mixed_graph(mixed_ground(1, 0), {});
        return mixed_graph(mixed_ground(n - 1, n),
                           path_edges(iota_range(1, n)) + path_edges(neg_range(2, n - 1)));
    }
    if (f == "simplex_path") return simplex_graph_numbered(n, path_edges(iota_range(1, n)));
    if (f == "simplex_cycle") {
        if (n < 3) throw input_error("simplex_cycle needs n >= 3");
        return simplex_graph_numbered(n, path_edges(iota_range(1, n)) + Edges{{n, 1}});
    }
    if (f == "simplex_complete")
        return simplex_graph_numbered(n, clique_edges(iota_range(1, n)));
    if (f == "simplex_star") {  // center is vertex n
        Edges e;
        for (int i = 1; i < n; ++i) e.emplace_back(n, i);
        return simplex_graph_numbered(n, e);
    }
    if (f == "wand") {
        if (id.j < 0 || id.k < 0) throw input_error("wand needs j, k >= 0");
        int m = id.j + id.k;
        Edges e = clique_edges(iota_range(1, id.j));
        for (int i = std::max(id.j, 1); i < m; ++i) e.emplace_back(i, i + 1);
        return simplex_graph_numbered(m, e);
    }
    if (f == "subtree") return subtree_delta_graph(id.tree);
    throw input_error("unknown family: " + f);
}

int family_dimension(const FamilyId& id) {
    const std::string& f = id.name;
    if (f == "simplex_path" || f == "simplex_cycle" || f == "simplex_complete" ||
        f == "simplex_star")
        return std::max(id.n - 1, 0);
    if (f == "wand") return std::max(id.j + id.k - 1, 0);
    if (f == "subtree") return build(id).complex().rank();
    return id.n;
}

std::vector<std::vector<FVector>> family_table(const std::vector<FamilyId>& ids,
                                               int n_max, int threads) {
    std::vector<std::vector<FVector>> table(ids.size(),
                                            std::vector<FVector>(n_max + 1));
    auto cell = [&](std::size_t r, int n) {
        FamilyId id = ids[r];
        id.n = n;
        try {
            DeltaGraph g = build(id);
            table[r][n] = g.fvector().polytope_form(family_dimension(id));
        } catch (const input_error&) {
            // unsupported (family, n): leave the cell empty
        } catch (const capacity_error& e) {
            throw capacity_error(id.name + " n=" + std::to_string(n) + ": " + e.what());
        }
    };
    int total = static_cast<int>(ids.size()) * (n_max + 1);
    int nt = threads > 0 ? std::min(threads, total) : 1;
    if (nt <= 1) {
        for (std::size_t r = 0; r < ids.size(); ++r)
            for (int n = 0; n <= n_max; ++n) cell(r, n);
        return table;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < nt; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int c = w; c < total; c += nt)
                    cell(c / (n_max + 1), c % (n_max + 1));
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return table;
}

std::vector<int> tube_to_root(int n, FaceSet tube) {
    // ground indexing of the path_plus family: label i at 2(i−1), −i next
    std::vector<int> coeff(n, 0);
    bool negative = false, positive = false;
    for (int e : tube.elements()) {
        if (e >= 2 * n) throw input_error("tube outside ground for given n");
        int i = e / 2 + 1;
        if (e % 2 == 0) {
            positive = true;
            coeff[i - 1] = 1;
        } else {
            negative = true;
            coeff[i - 1] = -1;
        }
    }
    if (negative && (positive || tube.size() != 1))
        throw input_error("tube of the single-path graph must be a positive "
                          "interval or a negative singleton");
    return coeff;
}

Diagonal tube_to_diagonal(int n, FaceSet tube) {
    if (tube.empty()) throw input_error("empty tube");
    std::vector<int> pos;
    for (int e : tube.elements()) {
        if (e >= 2 * n) throw input_error("tube outside ground for given n");
        if (e % 2 == 1) {
            if (tube.size() != 1) throw input_error("negative tube must be a singleton");
            return {e / 2 + 1, n + 2};
        }
        pos.push_back(e / 2 + 1);
    }
    for (std::size_t i = 0; i + 1 < pos.size(); ++i)
        if (pos[i + 1] != pos[i] + 1) throw input_error("positive tube must be an interval");
    return {pos.front() - 1, pos.back() + 1};
}

namespace {
void check_diagonal(int n, Diagonal d) {
    auto [a, b] = d;
    if (a < 0 || b > n + 2 || a + 2 > b || (a == 0 && b == n + 2))
        throw input_error("not a diagonal of the (n+3)-gon");
}
}  // namespace

bool diagonal_crossing(int n, Diagonal a, Diagonal b) {
    check_diagonal(n, a);
    check_diagonal(n, b);
    auto [a1, b1] = a;
    auto [a2, b2] = b;
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

}  // namespace tubex
