#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfb/newton_puiseux.hpp"
#include "mfb/resolution.hpp"

#include <algorithm>
#include <map>

using namespace mfb;

namespace {

BivarPoly parse_terms(std::vector<std::tuple<long, long, NFElem>> terms) {
    std::map<BivarPoly::Key, NFElem> m;
    for (auto& [es, et, c] : terms) m[{es, et}] = c;
    return BivarPoly(std::move(m));
}

ResolutionGraph resolve_poly(const BivarPoly& d, long order = 24) {
    auto r = expand(d, NumberField::rationals(), order);
    return resolve(r.branches);
}

std::multiset<long> euler_multiset(const ResolutionGraph& g) {
    return {g.euler.begin(), g.euler.end()};
}

std::vector<int> degrees(const ResolutionGraph& g) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto& [a, b] : g.edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    return deg;
}

} // namespace

TEST_CASE("cross-cap: single smooth branch {s=0}") {
    auto g = resolve_poly(BivarPoly::variable_s());
    CHECK(g.vertex_count() == 1);
    CHECK(g.euler[0] == -1);
    REQUIRE(g.arrowheads.size() == 1);
    CHECK(g.arrowheads[0].attach == 0);
    REQUIRE(g.multiplicities.size() == 1);
    CHECK(g.multiplicities[0][0] == 1); // m = (1)
}

TEST_CASE("S_1: two transverse smooth branches") {
    auto g = resolve_poly(parse_terms({{0, 2, NFElem(1)}, {2, 0, NFElem(1)}}));
    CHECK(g.vertex_count() == 1);
    CHECK(g.euler[0] == -1);
    CHECK(g.arrowheads.size() == 2);
    CHECK(g.multiplicities[0][0] == 1);
    CHECK(g.multiplicities[1][0] == 1);
    auto pw = pairwise_intersections_from_graph(g);
    CHECK(pw.at(0, 1) == 1); // D_1 . D_2 = 1
}

TEST_CASE("S_{2n-1}: tangent smooth pairs give (-2)^(n-1) chain ending in -1") {
    for (long n = 2; n <= 4; ++n) {
        auto g = resolve_poly(parse_terms({{0, 2, NFElem(1)}, {2 * n, 0, NFElem(1)}}));
        REQUIRE(g.vertex_count() == static_cast<std::size_t>(n));
        auto eu = euler_multiset(g);
        CHECK(eu.count(-2) == static_cast<std::size_t>(n - 1));
        CHECK(eu.count(-1) == 1);
        // both arrows on the -1 vertex, which is an end of the chain
        REQUIRE(g.arrowheads.size() == 2);
        CHECK(g.euler[static_cast<std::size_t>(g.arrowheads[0].attach)] == -1);
        CHECK(g.arrowheads[0].attach == g.arrowheads[1].attach);
        auto deg = degrees(g);
        CHECK(deg[static_cast<std::size_t>(g.arrowheads[0].attach)] == 1);
        // multiplicity at the attach vertex is n; D_1 . D_2 = n both routes
        CHECK(g.multiplicities[0][static_cast<std::size_t>(g.arrowheads[0].attach)] == n);
        auto pw = pairwise_intersections_from_graph(g);
        CHECK(pw.at(0, 1) == n);
    }
}

TEST_CASE("S_{2n}: (2, 2n+1) cusp chains") {
    // k = 2n+1: chain (-2)^(n-1) - (-3) - (-1 with -2 leg), arrow at -1, m = 4n+2
    for (long n = 1; n <= 3; ++n) {
        auto g = resolve_poly(parse_terms({{0, 2, NFElem(1)}, {2 * n + 1, 0, NFElem(1)}}));
        REQUIRE(g.vertex_count() == static_cast<std::size_t>(n + 2));
        auto eu = euler_multiset(g);
        CHECK(eu.count(-1) == 1);
        CHECK(eu.count(-3) == 1);
        CHECK(eu.count(-2) == static_cast<std::size_t>(n));
        REQUIRE(g.arrowheads.size() == 1);
        std::size_t att = static_cast<std::size_t>(g.arrowheads[0].attach);
        CHECK(g.euler[att] == -1);
        auto deg = degrees(g);
        CHECK(deg[att] == 2); // the -1 vertex joins the -3 chain and the -2 leg
        CHECK(g.multiplicities[0][att] == 4 * n + 2);
    }
}

TEST_CASE("C_{2n} family: s(t^2 + s^(2n-1))") {
    for (long n = 2; n <= 3; ++n) {
        BivarPoly d = BivarPoly::variable_s() *
                      parse_terms({{0, 2, NFElem(1)}, {2 * n - 1, 0, NFElem(1)}});
        auto r = expand(d, NumberField::rationals(), 24);
        REQUIRE(r.branches.branches.size() == 2);
        auto g = resolve(r.branches);
        // chain: [arrow s=0] (-2) ... (-2) (-3) (-1 with -2 leg and cusp arrow)
        REQUIRE(g.vertex_count() == static_cast<std::size_t>(n + 1));
        auto eu = euler_multiset(g);
        CHECK(eu.count(-1) == 1);
        CHECK(eu.count(-3) == 1);
        CHECK(eu.count(-2) == static_cast<std::size_t>(n - 1));
        // the {s=0} branch is branch 0 (axis first), attaching with
        // multiplicity 1 to the end of the chain: the -3 itself when the
        // middle (-2) count n-2 is zero, else the leftmost -2
        std::map<int, long> attach_euler;
        for (auto& ah : g.arrowheads)
            attach_euler[ah.branch] = g.euler[static_cast<std::size_t>(ah.attach)];
        CHECK(attach_euler[0] == (n == 2 ? -3 : -2));
        CHECK(attach_euler[1] == -1);
        for (auto& ah : g.arrowheads)
            if (ah.branch == 0)
                CHECK(g.multiplicities[0][static_cast<std::size_t>(ah.attach)] == 1);
        // pairwise intersection via graph equals the Puiseux number (= 2)
        auto pw = pairwise_intersections_from_graph(g);
        CHECK(pw.at(0, 1) == 2);
        Branch b0 = r.branches.branches[0], b1 = r.branches.branches[1];
        CHECK(intersection_multiplicity(b0, b1) == 2);
    }
}

TEST_CASE("F_4: s^3 + t^4") {
    auto g = resolve_poly(parse_terms({{3, 0, NFElem(1)}, {0, 4, NFElem(1)}}));
    REQUIRE(g.vertex_count() == 4);
    auto eu = euler_multiset(g);
    CHECK(eu.count(-1) == 1);
    CHECK(eu.count(-2) == 2);
    CHECK(eu.count(-4) == 1);
    REQUIRE(g.arrowheads.size() == 1);
    std::size_t att = static_cast<std::size_t>(g.arrowheads[0].attach);
    CHECK(g.euler[att] == -1);
    auto deg = degrees(g);
    CHECK(deg[att] == 2); // -1 adjacent to a -2 and the -4 leg
    CHECK(g.multiplicities[0][att] == 12);
    // m on the whole graph: 3 on the -4 vertex (first blown point)
    for (std::size_t v = 0; v < 4; ++v)
        if (g.euler[v] == -4) CHECK(g.multiplicities[0][v] == 3);
}

TEST_CASE("B_k: two branches tangent to {s=0} with contact k") {
    for (long k = 2; k <= 4; ++k) {
        // s^2 + t^(2k) expands to (i tau^k, tau), (-i tau^k, tau)
        auto g = resolve_poly(parse_terms({{2, 0, NFElem(1)}, {0, 2 * k, NFElem(1)}}));
        REQUIRE(g.vertex_count() == static_cast<std::size_t>(k));
        auto eu = euler_multiset(g);
        CHECK(eu.count(-2) == static_cast<std::size_t>(k - 1));
        CHECK(eu.count(-1) == 1);
        REQUIRE(g.arrowheads.size() == 2);
        CHECK(g.arrowheads[0].attach == g.arrowheads[1].attach);
        CHECK(g.multiplicities[0][static_cast<std::size_t>(g.arrowheads[0].attach)] == k);
        auto pw = pairwise_intersections_from_graph(g);
        CHECK(pw.at(0, 1) == k);
    }
}

TEST_CASE("pairwise intersections: graph route equals Puiseux route on mixed sets") {
    // d = s (t^2 + s^2) (t - s): four pairwise-transverse-ish branches
    BivarPoly d = BivarPoly::variable_s() *
                  parse_terms({{0, 2, NFElem(1)}, {2, 0, NFElem(1)}}) *
                  parse_terms({{0, 1, NFElem(1)}, {1, 0, NFElem(-1)}});
    auto r = expand(d, NumberField::rationals(), 24);
    REQUIRE(r.branches.branches.size() == 4);
    auto g = resolve(r.branches);
    auto pw = pairwise_intersections_from_graph(g);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k) {
            Branch a = r.branches.branches[i], b = r.branches.branches[k];
            long direct = intersection_multiplicity(a, b);
            CHECK(pw.at(i, k) == direct);
            CHECK(pw.at(k, i) == direct);
        }
    // every multiplicity positive, matrix negative definite (validate ran),
    // tree with #vertices = #cluster points
    CHECK(g.cluster.size() == g.vertex_count());
    for (auto& row : g.multiplicities)
        for (auto& v : row) CHECK(v > 0);
}

TEST_CASE("combinatorial-style multiplicity checks") {
    // chain (-2, -1), arrow at the -1: m = (1, 2)
    ResolutionGraph g;
    g.euler = {-2, -1};
    g.edges = {{0, 1}};
    g.arrowheads.push_back({0, 1});
    g.validate();
    compute_multiplicities(g);
    CHECK(g.multiplicities[0] == std::vector<Int>({Int(1), Int(2)}));

    // invalid: arrow on a graph whose system has no positive solution
    ResolutionGraph bad;
    bad.euler = {-1, -1};
    bad.edges = {{0, 1}};
    bad.arrowheads.push_back({0, 0});
    CHECK_THROWS(bad.validate()); // not negative definite
}
