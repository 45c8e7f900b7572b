#include "tubex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tubex/families.hpp"
#include "tubex/series.hpp"

namespace tubex {

namespace {

using clock_type = std::chrono::steady_clock;

long long ms_since(clock_type::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0)
        .count();
}

// families exercised by the blanket checks
const std::vector<std::string>& battery() {
    static const std::vector<std::string> fams = {
        "path_plus",       "cycle_plus",     "complete_plus",
        "star_plus",       "double_path",    "double_cycle",
        "double_complete", "double_star",    "twisted_path",
        "twisted_cycle",   "pell",           "companion_pell",
        "near_double_path", "full",          "empty",
        "missing_vertex_double_path",        "trans_double_path",
        "cis_double_path", "omni_path",      "simplex_path",
        "simplex_cycle",   "simplex_complete", "simplex_star"};
    return fams;
}

// battery entries encode omni bases as omni_<base>
std::optional<DeltaGraph> try_build(const std::string& fam, int n) {
    FamilyId id;
    if (fam.rfind("omni_", 0) == 0) {
        id.name = "omni";
        id.base = fam.substr(5);
    } else {
        id.name = fam;
    }
    id.n = n;
    try {
        return build(id);
    } catch (const input_error&) {
        return std::nullopt;   // family undefined at this n
    }
}

std::vector<Int> poly_derivative(const std::vector<Int>& c) {
    std::vector<Int> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(Int(k) * c[k]);
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::string fam_param(const std::string& fam, int n_max) {
    return "family=" + fam + " n_max=" + std::to_string(n_max);
}

BivariateSeries theta(const BivariateSeries& s) {
    return apply_weight(s, WeightFunction::polynomial({Rat(0), Rat(1)}), Axis::n);
}

}  // namespace

CheckReport check_atomic_link_sum(const std::string& family, int n_max) {
    auto t0 = clock_type::now();
    CheckReport rep{"atomic-link-sum", fam_param(family, n_max), "pass", "", 0, 0};
    for (int n = 0; n <= n_max; ++n) {
        auto g = try_build(family, n);
        if (!g) continue;
        std::vector<Int> f = g->fvector().counts;
        std::vector<Int> want = poly_derivative(f);
        std::vector<Int> got;
        for (const Tube& t : g->tubes()) {
            std::vector<Int> cc = g->tubing_counts_containing(t);
            if (cc.size() > got.size() + 1) got.resize(cc.size() - 1, Int(0));
            for (std::size_t k = 1; k < cc.size(); ++k) got[k - 1] += cc[k];
        }
        while (!got.empty() && got.back() == 0) got.pop_back();
        ++rep.assertions;
        if (got != want) {
            rep.status = "fail";
            rep.witness = family + " n=" + std::to_string(n) +
                          ": link sum differs from f-polynomial derivative";
            break;
        }
    }
    rep.ms = ms_since(t0);
    return rep;
}

std::vector<std::string> kingmaker_families() {
    return {"cycle_plus",        "double_path",
            "near_double_path",  "missing_vertex_double_path",
            "cis_double_path",   "trans_double_path",
            "twisted_path",      "double_cycle"};
}

namespace {

std::vector<std::string> kingmaker_labels(const std::string& fam, int n) {
    if (fam == "missing_vertex_double_path" || fam == "cis_double_path" ||
        fam == "trans_double_path")
        return {"1"};
    if (fam == "twisted_path") return {std::to_string(n), "-1"};
    return {"1", "-1"};   // cycle_plus, double_path, near_double_path, double_cycle
}

// assembled recursion f = ε_L + f_cut·(xy)^ρ + y·Σ, with ε_L = 1 iff ρ = 1;
// returns (lhs, rhs) at a shared window
std::pair<BivariateSeries, BivariateSeries> kingmaker_equation(const std::string& fam,
                                                               int w) {
    BivariateSeries one = BivariateSeries::constant(1, w, w);
    BivariateSeries x = BivariateSeries::monomial(1, 1, 0, w, w);
    BivariateSeries y = BivariateSeries::monomial(1, 0, 1, w, w);
    BivariateSeries xy = mul(x, y);
    BivariateSeries fA = family_series("path_plus", w, w);
    BivariateSeries fB = family_series("double_path", w, w);
    FamilyFixedPoints fp = solve_family_fixed_points(w, w);
    BivariateSeries lhs = family_series(fam, w, w);
    auto shaped = [&](int rho, const BivariateSeries& cut, const BivariateSeries& sum) {
        BivariateSeries r = add(mul(y, sum), rho == 1 ? add(one, mul(xy, cut)) : cut);
        return r;
    };
    if (fam == "cycle_plus") {
        // negative singleton + cycle tube + path tubes with ray-pair complements
        BivariateSeries onex = add(one, x);
        BivariateSeries tail = add(mul(onex, y), mul(mul(mul(onex, onex), mul(y, y)), fA));
        BivariateSeries sum = add(add(fA, fB), mul(add(fA, theta(fA)), tail));
        return {lhs, shaped(1, fA, sum)};
    }
    if (fam == "double_path")
        return {lhs, shaped(1, fB, scale(mul(fA, fp.fM), 2))};
    if (fam == "near_double_path")
        return {lhs, shaped(1, fB, scale(mul(fA, fp.fM), 2))};
    if (fam == "missing_vertex_double_path")
        return {lhs, shaped(1, fB, mul(fA, fp.fM))};
    if (fam == "cis_double_path")
        return {lhs, shaped(1, fp.fM, mul(fA, fp.fT))};
    if (fam == "trans_double_path")
        return {lhs, shaped(1, fp.fM, mul(fA, sub(fp.fC, one)))};
    if (fam == "twisted_path")
        return {lhs, shaped(0, fp.fT, mul(add(scale(fA, 2), theta(fA)), fp.fT))};
    if (fam == "double_cycle") {
        BivariateSeries sum = add(mul(scale(add(fA, theta(fA)), 2), sub(fp.fC, one)),
                                  scale(fB, 2));
        return {lhs, shaped(1, fB, sum)};
    }
    throw input_error("no documented kingmaker recursion for " + fam);
}

}  // namespace

CheckReport check_kingmaker_family(const std::string& family, int n_max) {
    auto t0 = clock_type::now();
    CheckReport rep{"kingmaker", fam_param(family, n_max), "pass", "", 0, 0};
    for (int n = 1; n <= n_max && rep.status == "pass"; ++n) {
        auto g = try_build(family, n);
        if (!g) continue;
        FaceSet x;
        bool degenerate = false;
        for (const std::string& lab : kingmaker_labels(family, n)) {
            int e = g->complex().ground().find(lab);
            if (e < 0) { degenerate = true; break; }   // graph shrank below its kingmaker
            x |= FaceSet::single(e);
        }
        if (degenerate) continue;
        KingmakerResult r = kingmaker_check(*g, x);
        ++rep.assertions;
        if (!r.valid) {
            rep.status = "fail";
            const auto& gr = g->complex().ground();
            rep.witness = family + " n=" + std::to_string(n) + ": compatible non-nested " +
                          gr.label_set(r.witness->first) + " " +
                          gr.label_set(r.witness->second);
        } else if (r.decomposed != g->fvector()) {
            rep.status = "fail";
            rep.witness = family + " n=" + std::to_string(n) + ": decomposition differs";
        }
    }
    if (rep.status == "pass") {
        auto [lhs, rhs] = kingmaker_equation(family, 8);
        ++rep.assertions;
        if (!(lhs == rhs)) {
            rep.status = "fail";
            rep.witness = family + ": assembled recursion differs from generating function";
        }
    }
    rep.ms = ms_since(t0);
    return rep;
}

namespace {

bool is_negative_label(const GroundSet& gr, int e) { return gr.labels[e][0] == '-'; }

// tube census for the families with documented facet classifications; returns
// a witness string on mismatch, empty on pass
std::string closure_census(const std::string& fam, int n, const DeltaGraph& g,
                           long& assertions) {
    const GroundSet& gr = g.complex().ground();
    auto fail = [&](const std::string& what) {
        return fam + " n=" + std::to_string(n) + ": " + what;
    };
    auto fv_of = [](const DeltaGraph& h) { return h.fvector(); };
    auto family_fv = [&](const std::string& f2, int n2) {
        auto h = try_build(f2, n2);
        if (!h) throw domain_error("census family undefined: " + f2);
        return h->fvector();
    };

    if (fam == "cycle_plus" && n >= 3) {
        FaceSet pos, v1;
        for (int e = 0; e < gr.size(); ++e)
            if (!is_negative_label(gr, e)) pos |= FaceSet::single(e);
        v1 = FaceSet::single(gr.index_of("1"));
        std::map<int, long> path_total, path_int;
        long neg = 0, cyc = 0;
        for (const Tube& t : g.tubes()) {
            if (t.size() == 1 && !t.subset_of(pos)) {
                ++neg;
                if (fv_of(g.neighborless_complement(t)) != family_fv("path_plus", n - 1))
                    return fail("negative singleton complement is not a path graph");
            } else if (t.bits == pos.bits) {
                ++cyc;
                if (fv_of(g.neighborless_complement(t)).counts != std::vector<Int>{1})
                    return fail("cycle tube complement not empty");
            } else if (t.subset_of(pos)) {
                int i = static_cast<int>(t.size()) - 1;
                ++path_total[i];
                if (t.intersects(v1)) ++path_int[i];
            } else {
                return fail("unclassified tube " + gr.label_set(t));
            }
        }
        assertions += static_cast<long>(g.tubes().size());
        if (neg != n || cyc != 1) return fail("singleton/cycle tube counts off");
        for (int i = 0; i <= n - 2; ++i)
            if (path_total[i] != n || path_int[i] != i + 1)
                return fail("path tube multiplicity differs at size " +
                            std::to_string(i + 1));
        ++assertions;
        // path complements: a pair of rays times a smaller path hypercube graph
        BivariateSeries fA = family_series("path_plus", n, n);
        BivariateSeries one = BivariateSeries::constant(1, n, n);
        BivariateSeries onex = add(one, BivariateSeries::monomial(1, 1, 0, n, n));
        BivariateSeries yv = BivariateSeries::monomial(1, 0, 1, n, n);
        BivariateSeries fray = add(add(one, mul(onex, yv)),
                                   mul(mul(mul(onex, onex), mul(yv, yv)), fA));
        for (const Tube& t : g.tubes()) {
            if (!t.subset_of(pos) || t.bits == pos.bits) continue;
            int d = n - static_cast<int>(t.size());
            FVector pf = fv_of(g.neighborless_complement(t)).polytope_form(d);
            for (int k = 0; k <= d; ++k)
                if (fray.at(k, d) != pf.counts[k])
                    return fail("path tube complement row differs");
            ++assertions;
        }
    }

    if (fam == "double_cycle" && n >= 3) {
        FaceSet pos, neg, x;
        for (int e = 0; e < gr.size(); ++e)
            (is_negative_label(gr, e) ? neg : pos) |= FaceSet::single(e);
        x = FaceSet::single(gr.index_of("1")) | FaceSet::single(gr.index_of("-1"));
        std::map<int, long> path_total, path_int;
        long cyc = 0;
        for (const Tube& t : g.tubes()) {
            if (t.bits == pos.bits || t.bits == neg.bits) {
                ++cyc;
                if (fv_of(g.neighborless_complement(t)).counts != std::vector<Int>{1})
                    return fail("cycle tube complement not empty");
                continue;
            }
            int i = static_cast<int>(t.size()) - 1;
            ++path_total[i];
            if (t.intersects(x)) ++path_int[i];
            if (fv_of(g.neighborless_complement(t)) !=
                family_fv("cis_double_path", n - 1 - i))
                return fail("path tube complement is not a cis double path");
        }
        assertions += static_cast<long>(g.tubes().size());
        if (cyc != 2) return fail("cycle tube count off");
        for (int i = 0; i <= n - 2; ++i)
            if (path_total[i] != 2 * n || path_int[i] != 2 * i + 2)
                return fail("path tube multiplicity differs at size " +
                            std::to_string(i + 1));
        ++assertions;
    }

    if (fam == "twisted_cycle" && n >= 1) {
        std::map<int, long> per_size;
        for (const Tube& t : g.tubes()) {
            int i = static_cast<int>(t.size()) - 1;
            ++per_size[i];
            if (fv_of(g.reconnected_complement(t)) != family_fv("twisted_path", n - 1 - i))
                return fail("reconnected complement is not a twisted path");
        }
        assertions += static_cast<long>(g.tubes().size());
        for (int i = 0; i <= n - 1; ++i)
            if (per_size[i] != 2 * n)
                return fail("path tube multiplicity differs at size " +
                            std::to_string(i + 1));
        ++assertions;
    }

    if (fam == "simplex_path" && n >= 2) {
        for (const Tube& t : g.tubes()) {
            if (static_cast<int>(t.size()) == n) continue;   // nothing left
            if (fv_of(g.reconnected_complement(t)) !=
                family_fv("simplex_path", n - static_cast<int>(t.size())))
                return fail("reconnected complement is not a simplex path");
        }
        assertions += static_cast<long>(g.tubes().size());
    }
    return "";
}

}  // namespace

CheckReport check_facet_closure(const std::string& family, int n_max) {
    auto t0 = clock_type::now();
    CheckReport rep{"facet-closure", fam_param(family, n_max), "pass", "", 0, 0};
    for (int n = 1; n <= n_max && rep.status == "pass"; ++n) {
        auto g = try_build(family, n);
        if (!g) continue;
        for (const Tube& t : g->tubes()) {
            ++rep.assertions;
            if (!link_decomposition_check(*g, t)) {
                rep.status = "fail";
                rep.witness = family + " n=" + std::to_string(n) + ": link of " +
                              g->complex().ground().label_set(t) +
                              " does not factor as induced × reconnected complement";
                break;
            }
        }
        if (rep.status != "pass") break;
        std::string w = closure_census(family, n, *g, rep.assertions);
        if (!w.empty()) {
            rep.status = "fail";
            rep.witness = w;
        }
    }
    rep.ms = ms_since(t0);
    return rep;
}

namespace {

// all tubings, as sorted tube-index lists
std::vector<std::vector<int>> all_tubings(const DeltaGraph& g) {
    const auto& tubes = g.tubes();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    Tubing cur_t;
    auto rec = [&](auto&& self, int start) -> void {
        out.push_back(cur);
        for (int i = start; i < static_cast<int>(tubes.size()); ++i) {
            cur_t.push_back(tubes[i]);
            if (g.is_tubing(cur_t)) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
            cur_t.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::set<int>> maximal_faces(const std::vector<std::vector<int>>& faces) {
    std::vector<std::set<int>> fs;
    for (const auto& f : faces) fs.emplace_back(f.begin(), f.end());
    std::vector<std::set<int>> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < fs.size() && maximal; ++j)
            if (i != j && fs[i].size() < fs[j].size() &&
                std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end()))
                maximal = false;
        if (maximal) out.push_back(fs[i]);  // copy: fs[i] is still compared against later faces
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ComplexShape {
    int v = 0;                                  // tube count
    std::vector<std::vector<bool>> adj;         // pairwise faces
    std::vector<std::set<int>> facets;          // maximal faces
    std::vector<long> color;                    // refinement classes
};

ComplexShape shape_of(const DeltaGraph& g) {
    ComplexShape s;
    s.v = static_cast<int>(g.tubes().size());
    s.adj.assign(s.v, std::vector<bool>(s.v, false));
    const auto& tubes = g.tubes();
    for (int i = 0; i < s.v; ++i)
        for (int j = i + 1; j < s.v; ++j) {
            Tubing pair = {tubes[i], tubes[j]};
            s.adj[i][j] = s.adj[j][i] = g.is_tubing(pair);
        }
    s.facets = maximal_faces(all_tubings(g));

    // iterative refinement: degree, facet membership profile, neighbor colors
    std::vector<long> col(s.v, 0);
    for (int round = 0; round < s.v; ++round) {
        std::vector<std::string> key(s.v);
        for (int i = 0; i < s.v; ++i) {
            std::ostringstream k;
            k << col[i] << "|";
            std::vector<long> nb;
            for (int j = 0; j < s.v; ++j)
                if (s.adj[i][j]) nb.push_back(col[j]);
            std::sort(nb.begin(), nb.end());
            for (long c : nb) k << c << ",";
            k << "|";
            std::vector<std::pair<std::size_t, long>> fp;   // (facet size, color sum)
            for (const auto& f : s.facets)
                if (f.count(i)) {
                    long sum = 0;
                    for (int x : f) sum += col[x];
                    fp.emplace_back(f.size(), sum);
                }
            std::sort(fp.begin(), fp.end());
            for (auto& [a, b] : fp) k << a << ":" << b << ";";
            key[i] = k.str();
        }
        std::vector<std::string> uniq = key;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<long> next(s.v);
        for (int i = 0; i < s.v; ++i)
            next[i] =
                std::lower_bound(uniq.begin(), uniq.end(), key[i]) - uniq.begin();
        if (next == col) break;
        col = next;
    }
    s.color = col;
    return s;
}

bool extend_iso(const ComplexShape& a, const ComplexShape& b, std::vector<int>& map_ab,
                std::vector<bool>& used, int i) {
    if (i == a.v) {
        std::set<std::set<int>> fb(b.facets.begin(), b.facets.end());
        for (const auto& f : a.facets) {
            std::set<int> im;
            for (int x : f) im.insert(map_ab[x]);
            if (!fb.count(im)) return false;
        }
        return true;
    }
    for (int j = 0; j < b.v; ++j) {
        if (used[j] || a.color[i] != b.color[j]) continue;
        bool ok = true;
        for (int p = 0; p < i && ok; ++p)
            if (a.adj[i][p] != b.adj[j][map_ab[p]]) ok = false;
        if (!ok) continue;
        map_ab[i] = j;
        used[j] = true;
        if (extend_iso(a, b, map_ab, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool tubing_complex_isomorphic(const DeltaGraph& a, const DeltaGraph& b) {
    if (a.tubes().size() != b.tubes().size()) return false;
    if (!(a.fvector() == b.fvector())) return false;
    ComplexShape sa = shape_of(a), sb = shape_of(b);
    if (sa.facets.size() != sb.facets.size()) return false;
    std::multiset<long> ca(sa.color.begin(), sa.color.end()),
        cb(sb.color.begin(), sb.color.end());
    if (ca != cb) return false;
    std::vector<int> map_ab(sa.v, -1);
    std::vector<bool> used(sb.v, false);
    return extend_iso(sa, sb, map_ab, used, 0);
}

namespace {

// the hyperoctahedral group acting on the 12 candidate edges of the ±[3] ground
struct EdgeAction {
    std::vector<std::pair<int, int>> edges;            // index pairs, canonical order
    std::vector<std::vector<int>> edge_perm;           // one permutation per group element
};

EdgeAction hypercube3_action() {
    ForbiddenComplex cx = hypercube_complex(3);
    const GroundSet& gr = cx.ground();
    EdgeAction act;
    for (int i = 0; i < gr.size(); ++i)
        for (int j = i + 1; j < gr.size(); ++j)
            if (gr.pairing[i] != j) act.edges.emplace_back(i, j);
    std::vector<int> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        for (int signs = 0; signs < 8; ++signs) {
            std::vector<int> img(gr.size());
            for (int e = 0; e < gr.size(); ++e) {
                long v = std::stol(gr.labels[e]);
                long mag = v >= 0 ? v : -v;
                long nm = perm[mag - 1] + 1;
                long sign = (v >= 0 ? 1 : -1) * ((signs >> (mag - 1)) & 1 ? -1 : 1);
                img[e] = gr.index_of(std::to_string(sign * nm));
            }
            std::vector<int> ep(act.edges.size());
            for (std::size_t k = 0; k < act.edges.size(); ++k) {
                int u = img[act.edges[k].first], w = img[act.edges[k].second];
                if (u > w) std::swap(u, w);
                auto it = std::find(act.edges.begin(), act.edges.end(), std::make_pair(u, w));
                ep[k] = static_cast<int>(it - act.edges.begin());
            }
            act.edge_perm.push_back(std::move(ep));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return act;
}

unsigned canonical_mask(const EdgeAction& act, unsigned mask) {
    unsigned best = ~0u;
    for (const auto& ep : act.edge_perm) {
        unsigned m = 0;
        for (std::size_t k = 0; k < ep.size(); ++k)
            if (mask >> k & 1) m |= 1u << ep[k];
        best = std::min(best, m);
    }
    return best;
}

unsigned mask_of_graph(const EdgeAction& act, const DeltaGraph& g) {
    unsigned m = 0;
    ForbiddenComplex cx = hypercube_complex(3);
    const GroundSet& gr = cx.ground();
    for (auto [u, w] : g.edge_list()) {
        int a = gr.index_of(g.complex().ground().labels[u]);
        int b = gr.index_of(g.complex().ground().labels[w]);
        if (a > b) std::swap(a, b);
        auto it = std::find(act.edges.begin(), act.edges.end(), std::make_pair(a, b));
        m |= 1u << (it - act.edges.begin());
    }
    return m;
}

DeltaGraph graph_of_mask(const EdgeAction& act, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < act.edges.size(); ++k)
        if (mask >> k & 1) edges.push_back(act.edges[k]);
    ForbiddenComplex cx = hypercube_complex(3);
    const GroundSet& gr = cx.ground();
    std::vector<std::pair<std::string, std::string>> led;
    for (auto [u, w] : edges) led.emplace_back(gr.labels[u], gr.labels[w]);
    return DeltaGraph(cx, led);
}

}  // namespace

CheckReport check_isomorphism_search() {
    auto t0 = clock_type::now();
    CheckReport rep{"isomorphism-search", "n=3", "pass", "", 0, 0};
    EdgeAction act = hypercube3_action();
    FamilyId cy;
    cy.name = "simplex_cycle";
    cy.n = 4;
    DeltaGraph cyclo = build(cy);
    FVector target = cyclo.fvector();

    std::set<unsigned> classes;
    std::vector<unsigned> fv_matches;
    for (unsigned mask = 0; mask < (1u << act.edges.size()); ++mask) {
        unsigned cm = canonical_mask(act, mask);
        if (cm != mask) continue;   // one representative per orbit
        classes.insert(cm);
        DeltaGraph g = graph_of_mask(act, cm);
        if (g.fvector() == target) fv_matches.push_back(cm);
    }
    rep.assertions += static_cast<long>(classes.size());

    FamilyId dpi, ndpi;
    dpi.name = "double_path";
    ndpi.name = "near_double_path";
    dpi.n = ndpi.n = 3;
    DeltaGraph dp = build(dpi), ndp = build(ndpi);
    unsigned dpm = canonical_mask(act, mask_of_graph(act, dp));
    unsigned ndpm = canonical_mask(act, mask_of_graph(act, ndp));

    std::vector<unsigned> lattice_matches;
    for (unsigned cm : fv_matches)
        if (tubing_complex_isomorphic(graph_of_mask(act, cm), cyclo))
            lattice_matches.push_back(cm);
    ++rep.assertions;

    // relabeling sanity: orbit members share the f-vector
    unsigned probe = mask_of_graph(act, dp);
    for (int k = 0; k < 5; ++k) {
        const auto& ep = act.edge_perm[(k * 17 + 3) % act.edge_perm.size()];
        unsigned m = 0;
        for (std::size_t e = 0; e < ep.size(); ++e)
            if (probe >> e & 1) m |= 1u << ep[e];
        if (!(graph_of_mask(act, m).fvector() == target)) {
            rep.status = "fail";
            rep.witness = "relabeled double path lost the cyclohedron f-vector";
        }
        ++rep.assertions;
    }

    std::ostringstream w;
    w << "classes=" << classes.size() << " fv-matches=" << fv_matches.size()
      << " lattice-matches=" << lattice_matches.size();
    bool dp_in = std::find(fv_matches.begin(), fv_matches.end(), dpm) != fv_matches.end();
    bool ndp_in =
        std::find(fv_matches.begin(), fv_matches.end(), ndpm) != fv_matches.end();
    if (!dp_in || !ndp_in) {
        rep.status = "fail";
        w << " (double path / near double path missing among f-vector matches)";
    } else if (lattice_matches != std::vector<unsigned>{ndpm}) {
        // the face lattice singles out the near double path; the double path
        // shares only the f-vector
        rep.status = "fail";
        w << " (expected the near double path class alone to match the face lattice)";
    } else {
        w << " (face lattice: near double path only)";
    }
    rep.witness = w.str();
    rep.ms = ms_since(t0);
    return rep;
}

CheckReport check_pell_conjecture(int n_max) {
    auto t0 = clock_type::now();
    CheckReport rep{"pell-gf", "n_max=" + std::to_string(n_max), "conjecture-match", "", 0,
                    0};
    BivariateSeries gf = pell_conjecture_series(n_max + 2, n_max + 1);
    std::ostringstream w;
    w << "coefficient of s^(n+1) t^k vs tubings of size k; ";
    bool all = true;
    for (int n = 0; n <= n_max; ++n) {
        FamilyId id;
        id.name = "pell";
        id.n = n;
        std::vector<Int> f = build(id).fvector().counts;
        for (int k = 0; k <= n + 1; ++k) {
            Rat want = gf.at(n + 1, k);
            Int got = k < static_cast<int>(f.size()) ? f[k] : Int(0);
            ++rep.assertions;
            if (want != got) {
                all = false;
                w << "n=" << n << " k=" << k << ": " << got << " vs " << rat_str(want)
                  << "; ";
            }
        }
    }
    rep.status = all ? "conjecture-match" : "conjecture-mismatch";
    w << (all ? "all rows agree" : "rows diverge");
    rep.witness = w.str();
    rep.ms = ms_since(t0);
    return rep;
}

CheckReport check_wand_conjecture(int j_max, int k_max) {
    auto t0 = clock_type::now();
    CheckReport rep{"wand-egf",
                    "j_max=" + std::to_string(j_max) + " k_max=" + std::to_string(k_max),
                    "conjecture-match", "", 0, 0};
    BivariateSeries gf = wand_conjecture_series(j_max + 2, k_max + 2);
    std::ostringstream w;
    bool all = true;
    std::map<std::pair<int, int>, Int> brute;
    for (int j = 0; j <= j_max + 1; ++j)
        for (int k = 0; k <= k_max + 1; ++k) {
            if (j + k > std::max(j_max + k_max, 2) || j + k < 1) continue;
            FamilyId id;
            id.name = "wand";
            id.j = j;
            id.k = k;
            try {
                brute[{j, k}] = build(id).maximal_tubing_count();
            } catch (const input_error&) {
            }
        }
    Rat fact = 1;
    for (int j = 0; j <= j_max; ++j) {
        if (j > 0) fact *= j;
        for (int k = 0; k <= k_max; ++k) {
            if (!brute.count({j, k})) continue;
            Rat conj = gf.at(j, k) * fact;
            Int got = brute[{j, k}];
            ++rep.assertions;
            if (conj != got) {
                all = false;
                w << "(j=" << j << ",k=" << k << "): counted " << got << ", formula "
                  << rat_str(conj);
                if (brute.count({j + 1, k - 1}) && Rat(brute[{j + 1, k - 1}]) == conj)
                    w << " [= counted value at (j+1,k-1)]";
                w << "; ";
            }
        }
    }
    rep.status = all ? "conjecture-match" : "conjecture-mismatch";
    if (all) w << "all counts agree";
    rep.witness = w.str();
    rep.ms = ms_since(t0);
    return rep;
}

CheckReport check_sash_skeleton() {
    CheckReport rep{"sash-skeleton", "n_max=5", "skipped",
                    "skeleton exported via the CLI; the sash lattice itself needs an "
                    "external oracle",
                    0, 0};
    return rep;
}

std::vector<std::string> verify_catalog() {
    return {"atomic-link-sum", "facet-closure",    "isomorphism-search",
            "kingmaker",       "pell-gf",          "sash-skeleton",
            "wand-egf"};
}

std::vector<CheckReport> run_all(int n_max, int threads) {
    std::vector<std::function<CheckReport()>> thunks;
    for (const std::string& f : battery())
        thunks.push_back([f, n_max] { return check_atomic_link_sum(f, std::min(n_max, 4)); });
    for (const std::string& f : battery())
        thunks.push_back([f, n_max] { return check_facet_closure(f, std::min(n_max, 4)); });
    for (const std::string& f : kingmaker_families())
        thunks.push_back([f, n_max] { return check_kingmaker_family(f, n_max); });
    thunks.push_back([] { return check_isomorphism_search(); });
    thunks.push_back([n_max] { return check_pell_conjecture(std::min(n_max, 5)); });
    thunks.push_back([] { return check_wand_conjecture(4, 3); });
    thunks.push_back([] { return check_sash_skeleton(); });

    std::vector<CheckReport> out(thunks.size());
    if (threads <= 0) {
        const char* env = std::getenv("TUBEX_THREADS");
        threads = env ? std::max(1, std::atoi(env)) : 1;
    }
    if (threads <= 1) {
        for (std::size_t i = 0; i < thunks.size(); ++i) out[i] = thunks[i]();
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(threads);
        for (int r = 0; r < threads; ++r)
            pool.emplace_back([&, r] {
                try {
                    for (std::size_t i = r; i < thunks.size(); i += threads)
                        out[i] = thunks[i]();
                } catch (...) {
                    errs[r] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    });
    return out;
}

bool any_hard_failure(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "fail") return true;
    return false;
}

}  // namespace tubex
