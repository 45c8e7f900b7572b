#include "tubex/fans.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tubex/families.hpp"

using namespace tubex;

namespace {

DeltaGraph fam(const std::string& name, int n) {
    FamilyId f{name};
    f.n = n;
    return build(f);
}

Tube tube(const DeltaGraph& g, std::initializer_list<const char*> labs) {
    Tube t;
    for (auto* l : labs) t |= FaceSet::single(g.complex().ground().index_of(l));
    return t;
}

Vec vec(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Tubing> all_tubings(const DeltaGraph& g) {
    auto ts = g.tubes();
    std::vector<Tubing> out;
    int m = static_cast<int>(ts.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        Tubing tb;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) tb.push_back(ts[i]);
        if (g.is_tubing(tb)) out.push_back(tb);
    }
    return out;
}

Tubing sorted(Tubing t) {
    std::sort(t.begin(), t.end(), canonical_less);
    return t;
}

}  // namespace

TEST_CASE("exact linear algebra") {
    CHECK(mat_rank(Mat{{1, 2}, {2, 4}}) == 1);
    CHECK(mat_rank(Mat{{1, 0}, {0, 1}}) == 2);
    CHECK(mat_rank(Mat{}) == 0);

    CHECK(solve_square(Mat{{2, 0}, {0, 3}}, Vec{4, 9}) == Vec{2, 3});
    CHECK(solve_square(Mat{{1, 2}, {2, 4}}, Vec{1, 1}) == std::nullopt);

    CHECK(invert(Mat{{1, 1}, {0, 1}}) == Mat{{1, -1}, {0, 1}});
    CHECK(invert(Mat{{1, 2}, {2, 4}}) == std::nullopt);

    CHECK(kernel_line(Mat{{1, 1, 0}, {0, 1, 1}}, 3) == Vec{1, -1, 1});
    CHECK(kernel_line(Mat{}, 1) == Vec{1});
    CHECK(kernel_line(Mat{{1, 0}, {0, 1}}, 2) == std::nullopt);   // kernel is trivial
    CHECK(kernel_line(Mat{{1, 1, 0}}, 3) == std::nullopt);        // kernel is a plane

    CHECK(combination_in_span(Mat{{1, 0}, {1, 1}}, Vec{3, 2}) == Vec{1, 2});
    CHECK(combination_in_span(Mat{{1, 0, 0}, {0, 1, 0}}, Vec{0, 0, 1}) == std::nullopt);

    CHECK(primitive(Vec{Rat(2, 3), Rat(-4, 3)}) == Vec{1, -2});
    CHECK(primitive(Vec{-4, 6}) == Vec{-2, 3});
}

TEST_CASE("facial preposets") {
    auto g = fam("path_plus", 2);
    auto t1 = tube(g, {"1"});
    auto t2 = tube(g, {"2"});
    auto t12 = tube(g, {"1", "2"});
    const auto& gr = g.complex().ground();
    int i1 = gr.index_of("1"), i2 = gr.index_of("2");
    int m1 = gr.index_of("-1"), m2 = gr.index_of("-2");

    auto q = preposet_from_nested(g, {t1, t12});
    int inf = q.infinity();
    CHECK(inf == 4);
    CHECK(q.leq(i1, i2));
    CHECK_FALSE(q.leq(i2, i1));
    CHECK(q.leq(i2, inf));
    CHECK_FALSE(q.leq(inf, i2));
    CHECK(q.equivalent(m1, m2));
    CHECK(q.equivalent(m1, inf));
    CHECK(q.equivalent(m2, inf));
    CHECK(q.leq(i1, m1));
    CHECK_FALSE(q.leq(m1, i1));

    // the empty tubing collapses everything into one class
    auto q0 = preposet_from_nested(g, {});
    for (int i = 0; i <= inf; ++i)
        for (int j = 0; j <= inf; ++j) CHECK(q0.leq(i, j));

    CHECK(is_contraction(preposet_from_nested(g, {t12}), q));
    CHECK(is_contraction(q, q));
    CHECK_FALSE(is_contraction(preposet_from_nested(g, {t1}), preposet_from_nested(g, {t2})));

    CHECK_THROWS_AS(preposet_from_nested(g, {t1, tube(g, {"-1"})}), input_error);
    CHECK_THROWS_AS(closure_union(q, preposet_from_nested(fam("path_plus", 3), {})),
                    input_error);
}

TEST_CASE("cones from nested sets") {
    auto g = fam("path_plus", 2);
    auto va = standard_vectors(g);
    CHECK(va.dim == 2);
    CHECK(va.v[g.complex().ground().index_of("1")] == vec({1, 0}));
    CHECK(va.v[g.complex().ground().index_of("-2")] == vec({0, -1}));

    auto c = cone_of_nested(g, {tube(g, {"1"}), tube(g, {"1", "2"})}, va);
    CHECK(c.dim == 2);
    CHECK(c.generators == Mat{{1, 0}, {1, 1}});
    CHECK(cone_of_nested(g, {}, va).generators.empty());
    CHECK(cone_of_nested(g, {tube(g, {"-1"})}, va).generators == Mat{{-1, 0}});

    CHECK(cone_contains(c, vec({2, 1})));
    CHECK_FALSE(cone_contains(c, vec({0, 1})));
    CHECK(cone_contains(c, vec({0, 0})));
}

TEST_CASE("pentagon tubing poset, exhaustively") {
    auto g = fam("path_plus", 2);
    auto va = standard_vectors(g);
    auto all = all_tubings(g);
    CHECK(all.size() == 11);

    for (const auto& a : all) CHECK(cone_of_nested(g, a, va).generators.size() == a.size());

    for (const auto& a : all)
        for (const auto& b : all) {
            auto qa = preposet_from_nested(g, a);
            auto qb = preposet_from_nested(g, b);
            Tubing meet;
            for (const auto& t : a)
                if (std::find(b.begin(), b.end(), t) != b.end()) meet.push_back(t);
            CHECK(closure_union(qa, qb) == preposet_from_nested(g, meet));

            bool sub = std::all_of(a.begin(), a.end(), [&](const Tube& t) {
                return std::find(b.begin(), b.end(), t) != b.end();
            });
            CHECK(sub == is_contraction(qa, qb));

            auto ca = cone_of_nested(g, a, va);
            auto cb = cone_of_nested(g, b, va);
            bool inside = std::all_of(ca.generators.begin(), ca.generators.end(),
                                      [&](const Vec& v) { return cone_contains(cb, v); });
            CHECK(sub == inside);
        }
}

TEST_CASE("fan pairs intersect along shared faces") {
    for (const char* name : {"path_plus", "double_path", "cycle_plus"}) {
        auto g = fam(name, 2);
        auto va = standard_vectors(g);
        auto maxt = g.maximal_tubings();
        for (const auto& a : maxt)
            for (const auto& b : maxt) {
                CAPTURE(name);
                CHECK(fan_pair_check(g, a, b, va));
            }
    }
    auto g0 = fam("path_plus", 0);
    auto va0 = standard_vectors(g0);
    CHECK(va0.dim == 0);
    CHECK(fan_pair_check(g0, {}, {}, va0));
}

TEST_CASE("standard cut realization") {
    auto g = fam("path_plus", 2);
    auto p = realize_standard_cut(g);
    CHECK(p.dim == 2);
    CHECK(p.facets.size() == 5);
    CHECK(p.vertices.size() == 5);
    CHECK(p.edges.size() == 5);

    Tubing want = sorted({tube(g, {"1"}), tube(g, {"1", "2"})});
    bool found = false;
    for (const auto& v : p.vertices) {
        CHECK(v.tubing.size() == 2);  // simple
        if (sorted(v.tubing) == want) {
            found = true;
            CHECK(v.point == Vec{Rat(8, 3), Rat(7, 3)});
        }
    }
    CHECK(found);
    for (const auto& f : p.facets) {
        if (f.tube == tube(g, {"1", "2"})) {
            CHECK(f.normal == vec({1, 1}));
            CHECK(f.offset == 5);
        }
        if (f.tube == tube(g, {"1"})) {
            CHECK(f.normal == vec({1, 0}));
            CHECK(f.offset == Rat(8, 3));
        }
    }

    auto sq = realize_standard_cut(fam("empty", 2));
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.edges.size() == 4);
    CHECK(sq.facets.size() == 4);
    for (const auto& v : sq.vertices)
        for (const auto& x : v.point) CHECK((x == Rat(8, 3) || x == Rat(-8, 3)));

    auto halo = realize_standard_cut(fam("cycle_plus", 3));
    CHECK(halo.vertices.size() == 16);
    CHECK(halo.edges.size() == 24);
    CHECK(halo.facets.size() == 10);
    for (const auto& f : halo.facets) {
        Rat want_offset = f.tube.size() == 1 ? Rat(26, 3) : f.tube.size() == 2 ? Rat(17) : Rat(24);
        CHECK(f.offset == want_offset);
    }
    for (const auto& v : halo.vertices) CHECK(v.tubing.size() == 3);

    auto a3 = realize_standard_cut(fam("path_plus", 3));
    CHECK(a3.vertices.size() == 14);
    CHECK(a3.edges.size() == 21);
    CHECK(a3.facets.size() == 9);

    auto pt = realize_standard_cut(fam("path_plus", 0));
    CHECK(pt.dim == 0);
    CHECK(pt.vertices.size() == 1);
    CHECK(pt.edges.empty());
    CHECK(pt.facets.empty());

    FamilyId w{"wand"};
    w.j = 2;
    w.k = 1;
    CHECK_THROWS_AS(realize_standard_cut(build(w)), input_error);  // unpaired ground
}
