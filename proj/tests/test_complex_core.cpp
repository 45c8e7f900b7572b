#include "tubex/complex.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace tubex;

namespace {

FaceSet fs(std::initializer_list<int> idx) {
    FaceSet f;
    for (int i : idx) f |= FaceSet::single(i);
    return f;
}

}  // namespace

TEST_CASE("ground set validation") {
    GroundSet g({"1", "-1", "2", "-2"}, {1, 0, 3, 2});
    CHECK(g.size() == 4);
    CHECK(g.index_of("-2") == 3);
    CHECK(g.find("x") == -1);
    CHECK_THROWS_AS(g.index_of("x"), input_error);
    CHECK(g.label_set(fs({0, 3})) == "{1,-2}");
    CHECK(g.label_set(FaceSet{}) == "{}");

    CHECK_THROWS_AS(GroundSet({"a", "a"}), input_error);
    CHECK_THROWS_AS(GroundSet({"a", "b"}, {0, 1}), input_error);          // fixed point
    CHECK_THROWS_AS(GroundSet({"a", "b", "c"}, {1, 2, 0}), input_error);  // not an involution
    std::vector<std::string> big;
    for (int i = 0; i < 65; ++i) big.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(GroundSet(big), capacity_error);

    // restrict keeps labels and drops pairings whose partner is gone
    GroundSet r = g.restrict(fs({0, 2, 3}));
    CHECK(r.labels == std::vector<std::string>{"1", "2", "-2"});
    CHECK(r.pairing == std::vector<int>{-1, 2, 1});
}

TEST_CASE("hypercube complex counts") {
    for (int n = 0; n <= 5; ++n) {
        auto h = hypercube_complex(n);
        CHECK(h.size() == 2 * n);
        CHECK(h.rank() == n);
        CHECK(static_cast<int>(h.circuits().size()) == n);
        Int want = 1;
        for (int i = 0; i < n; ++i) want *= 3;  // 3 states per coordinate
        CHECK(h.face_count() == want);
    }
    auto h2 = hypercube_complex(2);
    CHECK(h2.ground().labels == std::vector<std::string>{"1", "-1", "2", "-2"});
    CHECK(h2.ground().pairing == std::vector<int>{1, 0, 3, 2});
    CHECK(h2.is_face(fs({0, 2})));
    CHECK(!h2.is_face(fs({0, 1})));
    CHECK_THROWS_AS(h2.is_face(FaceSet::single(10)), input_error);

    auto faces = h2.faces();
    CHECK(faces.size() == 9);
    CHECK(faces[0].empty());
    int direct = 0;
    for (unsigned m = 0; m < 16; ++m) {
        FaceSet f;
        f.bits = m;
        if (h2.is_face(f)) ++direct;
    }
    CHECK(direct == 9);
    CHECK_THROWS_AS(hypercube_complex(3).faces(10), capacity_error);
}

TEST_CASE("ray coordinates stay unpaired") {
    auto hr = hypercube_complex(3, 1);
    CHECK(hr.size() == 5);
    CHECK(hr.ground().labels == std::vector<std::string>{"1", "2", "-2", "3", "-3"});
    CHECK(hr.ground().pairing[0] == -1);
    CHECK(hr.face_count() == 18);  // 2 · 3 · 3
    CHECK(hr.rank() == 3);
    CHECK(hr.circuits().size() == 2);
    auto h22 = hypercube_complex(2, 2);
    CHECK(h22.size() == 2);
    CHECK(h22.circuits().empty());
    CHECK(h22.face_count() == 4);
}

TEST_CASE("free complex") {
    auto f = free_complex({"a", "b", "c"});
    CHECK(f.face_count() == 8);
    CHECK(f.rank() == 3);
    CHECK(f.circuits().empty());
    CHECK(f.is_face(fs({0, 1, 2})));
}

TEST_CASE("link and deletion") {
    auto h3 = hypercube_complex(3);
    auto lk = h3.link(FaceSet::single(0));  // at {1}: kills -1
    CHECK(lk.size() == 4);
    CHECK(lk.ground().labels == std::vector<std::string>{"2", "-2", "3", "-3"});
    CHECK(lk.face_count() == 9);
    CHECK(lk.circuits().size() == 2);
    CHECK(h3.link(FaceSet{}) == h3);
    CHECK(h3.link(fs({0, 2})).face_count() == 3);  // only coordinate 3 left

    auto dl = h3.delete_(FaceSet::single(0));  // -1 survives as a cone point
    CHECK(dl.size() == 5);
    CHECK(dl.face_count() == 18);
    CHECK(dl.circuits().size() == 2);
}

TEST_CASE("product") {
    auto pr = hypercube_complex(1).product(hypercube_complex(2));
    CHECK(pr.size() == 6);
    CHECK(pr.face_count() == 27);
    CHECK(pr.rank() == 3);
    // clashing labels from the right factor get primes; fresh ones do not
    CHECK(pr.ground().labels ==
          std::vector<std::string>{"1", "-1", "1'", "-1'", "2", "-2"});
    CHECK(pr.ground().pairing[2] == 3);
    CHECK(free_complex({"a"}).product(free_complex({"b", "a"})).ground().labels ==
          std::vector<std::string>{"a", "b", "a'"});
}

TEST_CASE("stellar subdivision") {
    auto h2 = hypercube_complex(2);
    auto st = h2.stellar_subdivision(fs({0, 2}), "h");  // at the edge {1,2}
    CHECK(st.size() == 5);
    CHECK(st.face_count() == 11);  // square with one corner cut: pentagon
    CHECK(!st.is_face(fs({0, 2})));
    CHECK(st.is_face(fs({0, 4})));  // apex replaces the old edge
    CHECK(st.is_face(fs({2, 4})));
    CHECK_THROWS_AS(h2.stellar_subdivision(fs({0, 1}), "x"), input_error);  // not a face
    CHECK_THROWS_AS(h2.stellar_subdivision(FaceSet{}, "x"), input_error);
}

TEST_CASE("circuit normalization") {
    // non-minimal circuits are dropped
    ForbiddenComplex c(GroundSet({"a", "b", "c"}), {fs({0, 1}), fs({0, 1, 2})});
    CHECK(c.circuits().size() == 1);
    CHECK(c.circuits()[0] == fs({0, 1}));
    // a singleton circuit removes its element from the ground
    ForbiddenComplex d(GroundSet({"a", "b", "c"}), {FaceSet::single(1), fs({0, 2})});
    CHECK(d.ground().labels == std::vector<std::string>{"a", "c"});
    CHECK(d.circuits().size() == 1);
    CHECK(d.face_count() == 3);
    // canonical order: by size, then bitset value
    ForbiddenComplex e(GroundSet({"a", "b", "c", "d"}), {fs({1, 2, 3}), fs({0, 3})});
    CHECK(e.circuits()[0] == fs({0, 3}));
    CHECK(e.circuits()[1] == fs({1, 2, 3}));
}
