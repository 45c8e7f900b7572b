#include "tubex/families.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

using namespace tubex;

namespace {

DeltaGraph fam(const std::string& name, int n) {
    FamilyId f{name};
    f.n = n;
    return build(f);
}

std::vector<Int> fv(const std::string& name, int n) { return fam(name, n).fvector().counts; }

std::vector<Int> iv(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

Tube tube(const DeltaGraph& g, std::initializer_list<const char*> labs) {
    Tube t;
    for (auto* l : labs) t |= FaceSet::single(g.complex().ground().index_of(l));
    return t;
}

struct FamilyRows {
    const char* name;
    int n0;  // first row's n
    std::vector<std::vector<long long>> rows;
};

// tubing counts by size, exhaustively enumerated and frozen
const std::vector<FamilyRows> kRows = {
    {"path_plus", 0, {{1}, {1, 2}, {1, 5, 5}, {1, 9, 21, 14}, {1, 14, 56, 84, 42},
                      {1, 20, 120, 300, 330, 132}}},
    {"cycle_plus", 0, {{1}, {1, 2}, {1, 5, 5}, {1, 10, 24, 16}, {1, 17, 72, 110, 55},
                       {1, 26, 170, 440, 490, 196}}},
    {"complete_plus", 0, {{1}, {1, 2}, {1, 5, 5}, {1, 10, 24, 16}, {1, 19, 84, 130, 65}}},
    {"star_plus", 0, {{1}, {1, 2}, {1, 5, 5}, {1, 9, 21, 14}, {1, 15, 61, 92, 46},
                      {1, 25, 161, 414, 460, 184}}},
    {"double_path", 0, {{1}, {1, 2}, {1, 6, 6}, {1, 12, 30, 20}, {1, 20, 90, 140, 70},
                        {1, 30, 210, 560, 630, 252}}},
    {"near_double_path", 0, {{1}, {1, 2}, {1, 6, 6}, {1, 12, 30, 20}, {1, 20, 90, 140, 70},
                             {1, 30, 210, 560, 630, 252}}},
    {"double_star", 0, {{1}, {1, 2}, {1, 6, 6}, {1, 12, 30, 20}, {1, 22, 98, 152, 76}}},
    {"double_cycle", 0, {{1}, {1, 2}, {1, 6, 6}, {1, 14, 36, 24}, {1, 26, 124, 196, 98}}},
    {"double_complete", 0, {{1}, {1, 2}, {1, 6, 6}, {1, 14, 36, 24}, {1, 30, 150, 240, 120}}},
    {"twisted_path", 0, {{1}, {1, 2}, {1, 7, 7}, {1, 15, 39, 26}, {1, 26, 125, 198, 99},
                         {1, 40, 305, 840, 955, 382}}},
    {"twisted_cycle", 0, {{1}, {1, 2}, {1, 8, 8}, {1, 18, 48, 32}, {1, 32, 160, 256, 128},
                          {1, 50, 400, 1120, 1280, 512}}},
    {"pell", 0, {{1}, {1, 2}, {1, 5, 5}, {1, 8, 18, 12}, {1, 11, 40, 58, 29},
                 {1, 14, 71, 164, 175, 70}}},
    {"companion_pell", 2, {{1, 6, 6}, {1, 9, 21, 14}, {1, 12, 46, 68, 34},
                           {1, 15, 80, 190, 205, 82}, {1, 18, 123, 408, 699, 594, 198}}},
    {"missing_vertex_double_path", 0, {{1}, {1, 1}, {1, 4, 3}, {1, 9, 18, 10},
                                       {1, 16, 60, 80, 35}, {1, 25, 150, 350, 350, 126}}},
    {"cis_double_path", 0, {{1}, {1, 1}, {1, 3, 2}, {1, 7, 12, 6}, {1, 13, 42, 50, 20},
                            {1, 21, 110, 230, 210, 70}}},
    {"trans_double_path", 0, {{1}, {1}, {1, 2, 1}, {1, 6, 9, 4}, {1, 12, 36, 40, 15},
                              {1, 20, 100, 200, 175, 56}}},
    {"full", 0, {{1}, {1, 2}, {1, 8, 8}, {1, 26, 72, 48}, {1, 80, 464, 768, 384}}},
    {"empty", 0, {{1}, {1, 2}, {1, 4, 4}, {1, 6, 12, 8}, {1, 8, 24, 32, 16},
                  {1, 10, 40, 80, 80, 32}}},
};

}  // namespace

TEST_CASE("family tags and aliases") {
    CHECK(family_tag("halohedron") == "cycle_plus");
    CHECK(family_tag("stellohedron") == "complete_plus");
    CHECK(family_tag("stellocubeahedron") == "star_plus");
    CHECK(family_tag("double-path") == "double_path");
    CHECK(family_tag("near-double-path") == "near_double_path");
    CHECK(family_tag("pell") == "pell");
    CHECK_THROWS_AS(family_tag("dodecahedron"), input_error);
    auto names = family_names();
    CHECK(names.size() == 25);
    for (auto want : {"missing_vertex_double_path", "wand", "omni", "subtree", "simplex_cycle"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("frozen tubing counts by family") {
    for (const auto& fr : kRows)
        for (int i = 0; i < static_cast<int>(fr.rows.size()); ++i) {
            CAPTURE(fr.name);
            CAPTURE(fr.n0 + i);
            CHECK(fv(fr.name, fr.n0 + i) == iv(fr.rows[i]));
        }
    // a deeper path row, still fast: 44 tubes, ~99k tubings
    CHECK(fv("path_plus", 8) ==
          iv({1, 44, 616, 4004, 14014, 28028, 32032, 19448, 4862}));
}

TEST_CASE("simplex-graph identities") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(fv("path_plus", n) == fv("simplex_path", n + 1));
        CHECK(fv("complete_plus", n) == fv("simplex_star", n + 1));
        CHECK(fv("double_complete", n) == fv("simplex_complete", n + 1));
    }
    for (int n = 2; n <= 5; ++n) {
        CHECK(fv("double_path", n) == fv("simplex_cycle", n + 1));
        CHECK(fv("near_double_path", n) == fv("simplex_cycle", n + 1));
    }
    CHECK_THROWS_AS(fam("simplex_cycle", 2), input_error);
    // 2K_n gives the permutahedron: (n+1)! vertices
    Int fact = 1;
    for (int n = 0; n <= 4; ++n) {
        fact *= n + 1;
        CHECK(fam("double_complete", n).maximal_tubing_count() == fact);
    }
}

TEST_CASE("pell and companion counts") {
    std::vector<Int> g;
    for (int n = 0; n <= 6; ++n) g.push_back(fam("pell", n).maximal_tubing_count());
    CHECK(g == iv({1, 2, 5, 12, 29, 70, 169}));
    for (int n = 2; n <= 6; ++n) CHECK(g[n] == 2 * g[n - 1] + g[n - 2]);

    std::vector<Int> h;
    for (int n = 2; n <= 6; ++n) h.push_back(fam("companion_pell", n).maximal_tubing_count());
    CHECK(h == iv({6, 14, 34, 82, 198}));
    for (int n = 2; n <= 6; ++n) CHECK(h[n - 2] == 2 * (g[n] - g[n - 1]));
    CHECK_THROWS_AS(fam("companion_pell", 1), input_error);

    for (int n = 1; n <= 5; ++n)
        CHECK(fam("twisted_cycle", n).maximal_tubing_count() == Int(1) << (2 * n - 1));
}

TEST_CASE("family table") {
    auto tab = family_table({{.name = "cycle_plus"},
                             {.name = "twisted_cycle"},
                             {.name = "companion_pell"},
                             {.name = "trans_double_path"}},
                            3);
    CHECK(tab[0][0].counts == iv({1}));
    CHECK(tab[0][1].counts == iv({2, 1}));
    CHECK(tab[0][2].counts == iv({5, 5, 1}));
    CHECK(tab[0][3].counts == iv({16, 24, 10, 1}));
    CHECK(tab[0][3].polytope);
    CHECK(tab[1][2].counts == iv({8, 8, 1}));
    CHECK(tab[2][0].counts.empty());  // companion family starts at n = 2
    CHECK(tab[2][1].counts.empty());
    CHECK(tab[2][2].counts == iv({6, 6, 1}));
    CHECK(tab[2][3].counts == iv({14, 21, 9, 1}));
    CHECK(tab[3][1].counts == iv({0, 1}));  // no tubes yet, still a 1-dimensional cell
}

TEST_CASE("root and diagonal dictionaries") {
    auto g3 = fam("path_plus", 3);
    CHECK(tube_to_root(3, tube(g3, {"1"})) == std::vector<int>{1, 0, 0});
    CHECK(tube_to_root(3, tube(g3, {"1", "2"})) == std::vector<int>{1, 1, 0});
    CHECK(tube_to_root(3, tube(g3, {"2", "3"})) == std::vector<int>{0, 1, 1});
    CHECK(tube_to_root(3, tube(g3, {"1", "2", "3"})) == std::vector<int>{1, 1, 1});
    CHECK(tube_to_root(3, tube(g3, {"-2"})) == std::vector<int>{0, -1, 0});

    auto g2 = fam("path_plus", 2);
    CHECK(tube_to_diagonal(2, tube(g2, {"1"})) == Diagonal{0, 2});
    CHECK(tube_to_diagonal(2, tube(g2, {"2"})) == Diagonal{1, 3});
    CHECK(tube_to_diagonal(2, tube(g2, {"1", "2"})) == Diagonal{0, 3});
    CHECK(tube_to_diagonal(2, tube(g2, {"-1"})) == Diagonal{1, 4});
    CHECK(tube_to_diagonal(2, tube(g2, {"-2"})) == Diagonal{2, 4});
    CHECK(diagonal_crossing(2, {1, 3}, {2, 4}));
    CHECK(!diagonal_crossing(2, {1, 3}, {1, 4}));  // shared endpoint never crosses

    // compatibility = noncrossing, over every tube pair
    for (int n = 2; n <= 3; ++n) {
        auto g = fam("path_plus", n);
        auto tb = g.tubes();
        for (std::size_t i = 0; i < tb.size(); ++i)
            for (std::size_t j = i + 1; j < tb.size(); ++j)
                CHECK(g.is_compatible(tb[i], tb[j]) ==
                      !diagonal_crossing(n, tube_to_diagonal(n, tb[i]),
                                         tube_to_diagonal(n, tb[j])));
    }
}

TEST_CASE("omni graphs") {
    FamilyId o{"omni"};
    o.base = "path";
    o.n = 1;
    CHECK(build(o).fvector().counts == iv({1, 2}));
    CHECK(build(o).maximal_tubing_count() == 2);
    o.n = 2;
    CHECK(build(o).fvector().counts == iv({1, 8, 8}));
    CHECK(build(o).maximal_tubing_count() == 8);
    o.n = 3;
    CHECK(build(o).fvector().counts == iv({1, 22, 60, 40}));
    CHECK(build(o).maximal_tubing_count() == 40);

    FamilyId oc{"omni"};
    oc.base = "cycle";
    oc.n = 3;
    CHECK(build(oc).fvector().counts == fv("full", 3));
    FamilyId ok{"omni"};
    ok.base = "complete";
    ok.n = 2;
    CHECK(build(ok).fvector().counts == iv({1, 8, 8}));

    FamilyId bad{"omni"};
    bad.n = 2;
    CHECK_THROWS_AS(build(bad), input_error);
    bad.base = "torus";
    CHECK_THROWS_AS(build(bad), input_error);
}

TEST_CASE("wand graphs") {
    auto wand = [](int j, int k) {
        FamilyId w{"wand"};
        w.j = j;
        w.k = k;
        return build(w);
    };
    CHECK(wand(0, 0).fvector().counts == iv({1}));
    CHECK(wand(0, 2).fvector().counts == iv({1, 2}));
    CHECK(wand(1, 1).fvector().counts == iv({1, 2}));
    CHECK(wand(2, 0).fvector().counts == iv({1, 2}));
    CHECK(wand(0, 3).fvector().counts == iv({1, 5, 5}));
    CHECK(wand(2, 1).fvector().counts == iv({1, 5, 5}));
    CHECK(wand(3, 0).fvector().counts == iv({1, 6, 6}));

    const long want[][3] = {{0, 6, 132}, {1, 5, 132}, {2, 4, 132}, {3, 3, 180},
                            {4, 2, 288}, {5, 1, 480}, {6, 0, 720}};
    for (const auto& w : want)
        CHECK(wand(static_cast<int>(w[0]), static_cast<int>(w[1])).maximal_tubing_count() ==
              w[2]);
    CHECK_THROWS_AS(wand(-1, 2), input_error);

    FamilyId wd{"wand"};
    wd.j = 2;
    wd.k = 1;
    CHECK(family_dimension(wd) == 2);
    wd.j = 3;
    wd.k = 2;
    CHECK(family_dimension(wd) == 4);
}

TEST_CASE("subtree family and dimensions") {
    FamilyId st{"subtree"};
    st.tree = {4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
    CHECK(build(st).fvector().counts == iv({1, 12, 30, 20}));
    CHECK(build(st) == subtree_delta_graph(st.tree));
    CHECK(family_dimension(st) == 3);

    FamilyId sp{"simplex_path"};
    sp.n = 4;
    CHECK(family_dimension(sp) == 3);
    FamilyId tr{"trans_double_path"};
    tr.n = 1;
    CHECK(family_dimension(tr) == 1);
    FamilyId cp{"cycle_plus"};
    cp.n = 3;
    CHECK(family_dimension(cp) == 3);
    FamilyId om{"omni"};
    om.base = "path";
    om.n = 3;
    CHECK(family_dimension(om) == 3);
}

TEST_CASE("small and degenerate members") {
    auto m2 = fam("missing_vertex_double_path", 2);
    CHECK(m2.complex().ground().labels == std::vector<std::string>{"1", "2", "-2"});
    CHECK(m2.tubes().size() == 4);
    CHECK(fam("missing_vertex_double_path", 0).size() == 0);
    CHECK(fam("trans_double_path", 1).size() == 0);
    CHECK(fam("pell", 2).fvector() == DeltaGraph(hypercube_complex(2),
                                                 std::vector<std::pair<std::string, std::string>>{
                                                     {"1", "-2"}})
                                          .fvector());
    CHECK_THROWS_AS(fam("path_plus", -1), input_error);
}
