#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frieze/mesh.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace frieze;

namespace {

std::string fixture(const std::string& name) { return oracle::slurp(std::string(FIXTURE_DIR) + "/" + name); }

int ones(const MeshFrieze& f) { return static_cast<int>(std::count(f.values.begin(), f.values.end(), 1LL)); }

std::set<std::vector<long long>> value_set(const std::vector<MeshFrieze>& v) {
    std::set<std::vector<long long>> s;
    for (const auto& f : v) s.insert(f.values);
    return s;
}

}  // namespace

TEST_CASE("vertex and slice counts") {
    const std::map<std::string, std::pair<int, int>> want{
        {"A3", {9, 0}}, {"D4", {16, 4}}, {"D5", {25, 5}}, {"D6", {36, 6}},
        {"E6", {42, 7}}, {"E7", {70, 10}}, {"E8", {128, 16}}};
    for (const auto& [type, vs] : want) {
        const auto& q = quiver(type);
        CHECK(q.vertices == vs.first);
        if (vs.second) CHECK(q.slices() == vs.second);
        CHECK(static_cast<int>(q.meshes.size()) == q.vertices);
    }
    for (int n = 1; n <= 9; ++n) CHECK(quiver("A" + std::to_string(n)).vertices == n * (n + 3) / 2);
    CHECK_THROWS_AS(build_quiver("E9"), std::invalid_argument);
    CHECK_THROWS_AS(build_quiver("D3"), std::invalid_argument);
    CHECK_THROWS_AS(build_quiver("X4"), std::invalid_argument);
}

TEST_CASE("branch nodes and mesh shape") {
    const auto& e6 = quiver("E6");
    CHECK(e6.branch == 4);
    CHECK(quiver("D5").branch == 3);
    CHECK(quiver("A5").branch == 3);
    // every mesh has as many middle terms as the node has neighbours
    for (const char* type : {"A4", "D5", "E6", "E8"}) {
        const auto& q = quiver(type);
        for (int i = 0; i < q.vertices; ++i) {
            auto [t, v] = q.vertex(i);
            CHECK(q.meshes[i].B.size() == q.adj[v].size());
            CHECK(q.index(t, v) == i);
            CHECK(q.meshes[i].A == i);
        }
    }
}

TEST_CASE("knitting") {
    const auto& d4 = quiver("D4");
    auto f = knit(d4, {2, 3, 2, 2});
    REQUIRE(f.has_value());
    CHECK(validate(d4, *f).ok());
    for (int v = 1; v <= 4; ++v)
        for (int t = 0; t < d4.span[v]; ++t) CHECK(f->values[d4.index(t, v)] == (v == 2 ? 3 : 2));
    CHECK(ones(*f) == 0);

    const auto& e6 = quiver("E6");
    auto g = knit(e6, std::vector<long long>(6, 1));
    REQUIRE(g.has_value());
    auto c = classify(e6, *g);
    CHECK(c.ones == 6);
    CHECK(c.unitary);

    // a single middle term with A = 1 gives C = B + 1
    const auto& a2 = quiver("A2");
    int single = 0;
    for (long long x = 1; x <= 4; ++x)
        for (long long y = 1; y <= 4; ++y)
            if (auto h = knit(a2, {x, y}))
                for (const auto& m : a2.meshes)
                    if (m.B.size() == 1 && h->values[m.A] == 1) {
                        CHECK(h->values[m.C] == h->values[m.B[0]] + 1);
                        ++single;
                    }
    CHECK(single > 0);

    KnitFailure why;
    CHECK_FALSE(knit(d4, {2, 2, 2, 2}, &why).has_value());
    CHECK_FALSE(why.reason.empty());
    CHECK(slice0(d4, *f) == std::vector<long long>{2, 3, 2, 2});
}

TEST_CASE("fixtures") {
    auto d4 = parse_staggered(fixture("d4_no_ones.txt"));
    CHECK(validate(quiver("D4"), d4).ok());
    CHECK(classify(quiver("D4"), d4).ones == 0);
    CHECK_FALSE(classify(quiver("D4"), d4).unitary);

    auto d5 = parse_staggered(fixture("d5_single_one.txt"));
    CHECK(validate(quiver("D5"), d5).ok());
    CHECK(classify(quiver("D5"), d5).ones == 1);
    CHECK_FALSE(classify(quiver("D5"), d5).unitary);

    auto d6 = parse_staggered(fixture("d6_no_ones.txt"));
    CHECK(validate(quiver("D6"), d6).ok());
    CHECK(classify(quiver("D6"), d6).ones == 0);

    auto e8 = parse_staggered(fixture("e8_no_ones.txt"));
    const auto& qe8 = quiver("E8");
    CHECK(validate(qe8, e8).ok());
    CHECK(classify(qe8, e8).ones == 0);
    for (long long x : {41LL, 29LL, 21LL})
        CHECK(std::find(e8.values.begin(), e8.values.end(), x) != e8.values.end());

    auto printed = parse_staggered(fixture("e8_as_printed.txt"));
    auto rep = validate(qe8, printed);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.size() == 22);
    CHECK_THROWS_AS(classify(qe8, printed), std::invalid_argument);
}

TEST_CASE("staggered parser rejects bad input") {
    CHECK_THROWS_AS(parse_staggered("type D4\nnode 1 col 1: 2 2 2 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_staggered("type D4\nnode 1 col 1: 2 2 2 2 3\nnode 2 col 2: 3 3 3 3\n"
                                    "node 3 col 3: 2 2 2 2\nnode 4 col 3: 2 2 2 2\n"),
                    std::invalid_argument);
}

TEST_CASE("D4 catalog") {
    const auto& q = quiver("D4");
    auto a = enumerate(q, 20), b = enumerate(q, 40);
    CHECK(a.size() == 51);
    CHECK(a == b);
    int zero = 0;
    for (const auto& f : a) {
        REQUIRE(validate(q, f).ok());
        if (ones(f) == 0) ++zero;
    }
    CHECK(zero == 1);
    CHECK(enumerate(q, 6) == enumerate_reference(q, 6));
    CHECK(enumerate(q, 20, 3) == a);
}

TEST_CASE("E6 and D5 reference agreement at small bounds") {
    CHECK(enumerate(quiver("E6"), 3) == enumerate_reference(quiver("E6"), 3));
    CHECK(enumerate(quiver("D5"), 5) == enumerate_reference(quiver("D5"), 5));
}

TEST_CASE("D5 catalog") {
    const auto& q = quiver("D5");
    auto a = enumerate(q, 40);
    CHECK(a.size() == 187);
    CHECK(enumerate(q, 80).size() == 187);
    int non_unitary = 0;
    for (const auto& f : a) {
        auto c = classify(q, f);
        CHECK(c.ones <= q.rank);
        if (!c.unitary) {
            ++non_unitary;
            CHECK(c.ones == 1);
        }
    }
    CHECK(non_unitary == 5);
}

TEST_CASE("E6 catalog") {
    const auto& q = quiver("E6");
    auto a = enumerate(q, 320);
    REQUIRE(a.size() == 868);
    CHECK(value_set(enumerate_orbits(q, 10)) == value_set(a));
    CHECK(enumerate(q, 320, 2) == a);

    std::vector<MeshFrieze> non_unitary;
    for (const auto& f : a) {
        auto c = classify(q, f);
        CHECK(c.ones <= q.rank);
        CHECK(c.unitary == (c.ones == q.rank));
        if (!c.unitary) non_unitary.push_back(f);
    }
    REQUIRE(non_unitary.size() == 35);
    std::map<int, int> at_node1;
    for (const auto& f : non_unitary) {
        auto c = classify(q, f);
        CHECK(c.ones == 2);
        for (auto [t, v] : c.one_positions) {
            CHECK((v == 1 || v == 6));
            if (v == 1) ++at_node1[t];
        }
    }
    CHECK(at_node1.size() == 7);
    for (auto [t, cnt] : at_node1) CHECK(cnt == 5);

    // translation orbits of the non-unitary friezes
    std::set<std::vector<long long>> seen;
    std::multiset<int> sizes;
    for (const auto& f : non_unitary) {
        if (seen.count(f.values)) continue;
        int size = 0;
        MeshFrieze g = f;
        do {
            seen.insert(g.values);
            ++size;
            g = translate(q, g, 1);
        } while (g != f);
        sizes.insert(size);
    }
    CHECK(sizes == std::multiset<int>{7, 14, 14});

    // 1s at a fixed node-1 vertex: the D5 count
    int with_one = 0;
    for (const auto& f : a)
        if (f.values[q.index(0, 1)] == 1) ++with_one;
    CHECK(with_one == 187);

    // folding to F4
    const std::vector<int> swap{0, 6, 2, 5, 4, 3, 1};
    int fixed = 0;
    for (const auto& f : a)
        if (transform(q, f, swap, 0) == f) ++fixed;
    CHECK(fixed == 112);
}

TEST_CASE("1s near the branch force unitarity") {
    for (const char* type : {"D4", "D5", "E6"}) {
        const auto& q = quiver(type);
        auto near = q.neighbours_of_branch();
        near.push_back(q.branch);
        const long long B = std::string(type) == "E6" ? 320 : 40;
        for (const auto& f : enumerate(q, B)) {
            auto c = classify(q, f);
            bool hit = false;
            for (auto [t, v] : c.one_positions) hit = hit || std::count(near.begin(), near.end(), v);
            if (hit) CHECK(c.ones == q.rank);
        }
    }
}

TEST_CASE("knitting is injective in slice 0") {
    const auto& q = quiver("E6");
    std::set<std::vector<long long>> s0;
    for (const auto& f : enumerate(q, 40)) CHECK(s0.insert(slice0(q, f)).second);
}

TEST_CASE("SL_3 grids and mesh friezes are in bijection") {
    struct Case {
        int w;
        const char* type;
        long long grid_bound, mesh_bound;
        std::size_t count;
    };
    for (auto [w, type, gb, mb, count] : {Case{2, "D4", 16, 20, 51}, Case{3, "E6", 32, 320, 868}}) {
        const auto& q = quiver(type);
        auto grids = enumerate_sl3(w, gb);
        REQUIRE(grids.size() == count);
        std::set<std::vector<long long>> image;
        for (const auto& g : grids) {
            auto m = convert_sl3(g);
            REQUIRE(m.type == type);
            REQUIRE(validate(q, m).ok());
            CHECK(mesh_to_sl3(m) == g);
            image.insert(m.values);
        }
        CHECK(image.size() == count);
        CHECK(image == value_set(enumerate(q, mb)));
    }
}

TEST_CASE("all-ones boundary grids convert to unitary friezes") {
    for (int w = 2; w <= 4; ++w) {
        auto g = sl3_from_boundary(w, std::vector<long long>(2 * w, 1));
        REQUIRE(g.has_value());
        auto m = convert_sl3(*g);
        const auto& q = quiver(m.type);
        REQUIRE(validate(q, m).ok());
        CHECK(classify(q, m).unitary);
    }
}

TEST_CASE("the E8 fixture converts to a valid SL_3 grid") {
    auto e8 = parse_staggered(fixture("e8_no_ones.txt"));
    auto g = mesh_to_sl3(e8);
    CHECK(g.w == 4);
    CHECK(validate(g, true).ok());
    CHECK(convert_sl3(g) == e8);
}

TEST_CASE("type A friezes are Conway–Coxeter friezes") {
    for (int n = 1; n <= 5; ++n) {
        const auto& q = quiver("A" + std::to_string(n));
        std::set<std::vector<long long>> seen;
        for (const auto& T : all_triangulations(n + 3)) {
            auto grid = from_triangulation(T);
            auto f = from_sl2_grid(grid);
            REQUIRE(validate(q, f).ok());
            CHECK(to_sl2_grid(q, f) == grid);
            CHECK(classify(q, f).unitary);
            seen.insert(f.values);
            // the value of a vertex is the frieze entry of its diagonal
            std::set<std::pair<int, int>> diagonals;
            for (int i = 0; i < q.vertices; ++i) {
                auto [a, b] = diagonal_of(q, i);
                CHECK(b - a >= 2);
                CHECK(!(a == 1 && b == n + 3));
                diagonals.insert({a, b});
                const bool in_T = std::count(T.diagonals.begin(), T.diagonals.end(), std::make_pair(a, b));
                CHECK((f.values[i] == 1) == in_T);
            }
            CHECK(static_cast<int>(diagonals.size()) == q.vertices);
        }
        CHECK(static_cast<long long>(seen.size()) == oracle::catalan(n + 1));
        CHECK(value_set(enumerate(q, 60)) == seen);
    }
}

TEST_CASE("restriction along a 1") {
    for (int n = 2; n <= 5; ++n) {
        const auto& q = quiver("A" + std::to_string(n));
        for (const auto& T : all_triangulations(n + 3)) {
            auto f = from_sl2_grid(from_triangulation(T));
            for (int i = 0; i < q.vertices; ++i) {
                if (f.values[i] != 1) {
                    CHECK_THROWS_AS(restrict_typeA(q, f, i), std::domain_error);
                    continue;
                }
                auto [left, right] = restrict_typeA(q, f, i);
                const auto& ql = quiver(left.type);
                const auto& qr = quiver(right.type);
                CHECK(ql.rank + qr.rank == n - 1);
                CHECK(validate(ql, left).ok());
                CHECK(validate(qr, right).ok());
                CHECK(classify(ql, left).unitary);
                CHECK(classify(qr, right).unitary);
                CHECK(ones(left) + ones(right) == n - 1);
            }
        }
    }
}

TEST_CASE("hexagon fan: cutting an ear leaves a pentagon and a triangle") {
    const auto& q = quiver("A3");
    Triangulation T{6, {{2, 4}, {2, 5}, {2, 6}}};
    auto f = from_sl2_grid(from_triangulation(T));
    int found = 0;
    for (int i = 0; i < q.vertices; ++i)
        if (diagonal_of(q, i) == std::make_pair(2, 4)) {
            auto [left, right] = restrict_typeA(q, f, i);
            std::multiset<int> ranks{quiver(left.type).rank, quiver(right.type).rank};
            CHECK(ranks == std::multiset<int>{0, 2});
            ++found;
        }
    CHECK(found == 1);
}

TEST_CASE("JSON and rendering") {
    const auto& q = quiver("D5");
    auto f = parse_staggered(fixture("d5_single_one.txt"));
    auto text = format_mesh_json(q, f);
    auto j = nlohmann::json::parse(text);
    CHECK(j["type"] == "D5");
    CHECK(j["slices"] == 5);
    CHECK(j["ones"] == 1);
    CHECK(j["unitary"] == false);
    CHECK(parse_mesh_json(text) == f);
    auto pic = render_staggered(q, f);
    CHECK(pic.rfind("D5\n", 0) == 0);
    CHECK(std::count(pic.begin(), pic.end(), '\n') == 6);
}
