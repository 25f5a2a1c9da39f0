#pragma once

// The published boundary-of-Milnor-fibre plumbing graphs for the example
// families, built explicitly for comparison with the pipeline output.

#include "mfb/plumbing.hpp"

namespace mfb::expected {

inline PlumbingGraph make(std::vector<long> eulers,
                          std::vector<std::tuple<int, int, int>> edges) {
    PlumbingGraph g;
    for (long e : eulers) g.vertices.push_back({e, 0, "", std::nullopt});
    for (auto& [a, b, s] : edges) g.add_edge(a, b, s);
    g.canonicalize_edges();
    return g;
}

// attach a (-1; -2, -2) star to `at` through a minus edge; returns the graph
inline void attach_y(PlumbingGraph& g, int at) {
    int y0 = static_cast<int>(g.size());
    g.vertices.push_back({-1, 0, "", std::nullopt});
    g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-2, 0, "", std::nullopt});
    g.add_edge(y0, y0 + 1, 1);
    g.add_edge(y0, y0 + 2, 1);
    g.add_edge(at, y0, -1);
}

// 5.1: (-1) - (-2) - (-1) with two (-2) legs
inline PlumbingGraph crosscap() {
    PlumbingGraph g = make({-1, -2}, {{0, 1, 1}});
    attach_y(g, 1);
    return g;
}

// 5.2 first presentation: (-1) = (-6), double edge with one minus
inline PlumbingGraph s1() { return make({-1, -6}, {{0, 1, 1}, {0, 1, -1}}); }

// 5.2 second presentation: -4 with a minus loop
inline PlumbingGraph s1_alt() { return make({-4}, {{0, 0, -1}}); }

// 5.3 case 1, k = 2n: chain of n-1 (-2)'s, then -1 with a double edge to -3k
inline PlumbingGraph s_family_even(long n) {
    long k = 2 * n;
    std::vector<long> eu(static_cast<std::size_t>(n - 1), -2);
    eu.push_back(-1);
    eu.push_back(-3 * k);
    PlumbingGraph g;
    for (long e : eu) g.vertices.push_back({e, 0, "", std::nullopt});
    for (long v = 0; v + 1 < n; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    g.add_edge(static_cast<int>(n - 1), static_cast<int>(n), 1);
    g.add_edge(static_cast<int>(n - 1), static_cast<int>(n), -1);
    g.canonicalize_edges();
    return g;
}

// 5.3 case 2, k = 2n+1: (-2)^(n-1) - (-3) - (-1 with -2 leg) - (-3k) - Y
inline PlumbingGraph s_family_odd(long n) {
    long k = 2 * n + 1;
    PlumbingGraph g;
    for (long v = 0; v < n - 1; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-3, 0, "", std::nullopt});                 // index n-1
    g.vertices.push_back({-1, 0, "", std::nullopt});                 // index n
    g.vertices.push_back({-2, 0, "", std::nullopt});                 // leg, index n+1
    g.vertices.push_back({-3 * k, 0, "", std::nullopt});             // index n+2
    for (long v = 0; v + 1 < n; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1); // chain into -3
    g.add_edge(static_cast<int>(n - 1), static_cast<int>(n), 1);
    g.add_edge(static_cast<int>(n), static_cast<int>(n + 1), 1);
    g.add_edge(static_cast<int>(n), static_cast<int>(n + 2), 1);
    attach_y(g, static_cast<int>(n + 2));
    return g;
}

// 5.4 case 1, k odd: (-2)^(k-1) chain into -1, double edge to -4k-2
inline PlumbingGraph b_family_odd(long k) {
    PlumbingGraph g;
    for (long v = 0; v < k - 1; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-1, 0, "", std::nullopt});
    g.vertices.push_back({-4 * k - 2, 0, "", std::nullopt});
    for (long v = 0; v + 1 < k; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    g.add_edge(static_cast<int>(k - 1), static_cast<int>(k), 1);
    g.add_edge(static_cast<int>(k - 1), static_cast<int>(k), -1);
    g.canonicalize_edges();
    return g;
}

// 5.4 case 2, k even: two (-2k-1) vertices with Y stars on the -1
inline PlumbingGraph b_family_even(long k) {
    PlumbingGraph g;
    for (long v = 0; v < k - 1; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-1, 0, "", std::nullopt}); // index k-1
    for (long v = 0; v + 1 < k; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    for (int rep = 0; rep < 2; ++rep) {
        int nv = static_cast<int>(g.size());
        g.vertices.push_back({-2 * k - 1, 0, "", std::nullopt});
        g.add_edge(static_cast<int>(k - 1), nv, 1);
        attach_y(g, nv);
    }
    return g;
}

// 5.5 case 1, k = 2n+1: Y - (-4) - (-2)^(n-1) - (-1) = (-3k+1)
inline PlumbingGraph c_family_odd(long n) {
    long k = 2 * n + 1;
    PlumbingGraph g;
    // E-chain: (-2)^(n-1) then -1 at the right (for n = 1 a single -1)
    for (long v = 0; v < n - 1; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-1, 0, "", std::nullopt}); // index n-1
    for (long v = 0; v + 1 < n; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    int left = 0; // the {s=0} attachment: left end of the chain
    int minus4 = static_cast<int>(g.size());
    g.vertices.push_back({-4, 0, "", std::nullopt});
    g.add_edge(left, minus4, 1);
    attach_y(g, minus4);
    int alpha = static_cast<int>(g.size());
    g.vertices.push_back({-3 * k + 1, 0, "", std::nullopt});
    g.add_edge(static_cast<int>(n - 1), alpha, 1);
    g.add_edge(static_cast<int>(n - 1), alpha, -1);
    g.canonicalize_edges();
    return g;
}

// 5.5 case 2, k = 2n (n >= 2):
// Y - (-4) - (-2)^(n-2) - (-3) - (-1 with -2 leg) - (-3k+1) - Y
inline PlumbingGraph c_family_even(long n) {
    long k = 2 * n;
    PlumbingGraph g;
    for (long v = 0; v < n - 2; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-3, 0, "", std::nullopt});     // index n-2
    g.vertices.push_back({-1, 0, "", std::nullopt});     // index n-1
    g.vertices.push_back({-2, 0, "", std::nullopt});     // leg, index n
    for (long v = 0; v + 1 < n - 1; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    g.add_edge(static_cast<int>(n - 2), static_cast<int>(n - 1), 1);
    g.add_edge(static_cast<int>(n - 1), static_cast<int>(n), 1);
    int minus4 = static_cast<int>(g.size());
    g.vertices.push_back({-4, 0, "", std::nullopt});
    g.add_edge(0, minus4, 1); // {s=0} attaches at the left end of the chain
    attach_y(g, minus4);
    int alpha = static_cast<int>(g.size());
    g.vertices.push_back({-3 * k + 1, 0, "", std::nullopt});
    g.add_edge(static_cast<int>(n - 1), alpha, 1);
    attach_y(g, alpha);
    return g;
}

// 5.5, k = 2: the generic picture degenerates; both self-paired branches
// attach to the -1 of the chain (-2) - (-1), with alpha = -3k+1 = -5 twice
inline PlumbingGraph c_family_k2() {
    PlumbingGraph g = make({-2, -1}, {{0, 1, 1}});
    for (int rep = 0; rep < 2; ++rep) {
        int nv = static_cast<int>(g.size());
        g.vertices.push_back({-5, 0, "", std::nullopt});
        g.add_edge(1, nv, 1);
        attach_y(g, nv);
    }
    return g;
}

// 5.6: (-2) - (-2) - (-1 with -4 leg) - (-15) - Y
inline PlumbingGraph f4() {
    PlumbingGraph g = make({-2, -2, -1, -4, -15},
                           {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}});
    attach_y(g, 4);
    return g;
}

// 5.7: chain of 3k-3 (-2)'s into -1, double edge to -9k+3
inline PlumbingGraph h_family(long k) {
    PlumbingGraph g;
    for (long v = 0; v < 3 * k - 3; ++v) g.vertices.push_back({-2, 0, "", std::nullopt});
    g.vertices.push_back({-1, 0, "", std::nullopt});
    g.vertices.push_back({-9 * k + 3, 0, "", std::nullopt});
    for (long v = 0; v + 1 < 3 * k - 2; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1), 1);
    g.add_edge(static_cast<int>(3 * k - 3), static_cast<int>(3 * k - 2), 1);
    g.add_edge(static_cast<int>(3 * k - 3), static_cast<int>(3 * k - 2), -1);
    g.canonicalize_edges();
    return g;
}

// 5.8: central -1 with five -5 neighbours, each carrying a Y star
inline PlumbingGraph corank2() {
    PlumbingGraph g = make({-1}, {});
    for (int rep = 0; rep < 5; ++rep) {
        int nv = static_cast<int>(g.size());
        g.vertices.push_back({-5, 0, "", std::nullopt});
        g.add_edge(0, nv, 1);
        attach_y(g, nv);
    }
    return g;
}

} // namespace mfb::expected
