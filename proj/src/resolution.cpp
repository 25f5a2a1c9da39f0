#include "mfb/resolution.hpp"
#include "mfb/cursor.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mfb {

using detail::Cursor;
using detail::Direction;
using detail::RetryPrecision;

IMat ResolutionGraph::intersection_matrix() const {
    IMat a(vertex_count(), vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) a.at(v, v) = euler[v];
    for (auto& [x, y] : edges) {
        a.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) += 1;
        a.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x)) += 1;
    }
    return a;
}

void ResolutionGraph::validate() const {
    std::size_t n = vertex_count();
    if (n == 0) throw Error("resolution graph: empty");
    if (edges.size() != n - 1) throw Error("resolution graph: not a tree");
    // connectivity
    std::vector<int> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto& [a, b] : edges) {
            std::size_t w = n;
            if (static_cast<std::size_t>(a) == v) w = static_cast<std::size_t>(b);
            if (static_cast<std::size_t>(b) == v) w = static_cast<std::size_t>(a);
            if (w < n && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw Error("resolution graph: disconnected");
    for (auto& ah : arrowheads)
        if (ah.attach < 0 || static_cast<std::size_t>(ah.attach) >= n)
            throw Error("resolution graph: arrowhead attaches to a missing vertex");
    if (!is_negative_definite(intersection_matrix()))
        throw Error("resolution graph: intersection matrix not negative definite");
}

// ------------------------------------------------------------------ resolve

namespace {

struct BuildState {
    std::vector<ClusterPoint> points;
    std::vector<int> attach;
    long target = 0;

    // returns the id of the newly created (blown up) point
    int new_point(int parent, std::optional<int> second) {
        points.push_back(ClusterPoint{parent, second, {}});
        return static_cast<int>(points.size()) - 1;
    }

    void process(int id, std::vector<std::pair<int, Cursor>>& occupants,
                 std::optional<int> exc_s, std::optional<int> exc_t) {
        // record multiplicities at this point
        for (auto& [bi, cur] : occupants)
            points[static_cast<std::size_t>(id)].branch_mults.emplace_back(
                bi, detail::cursor_mult(cur));

        // group occupants by outgoing direction, deterministic order
        std::vector<std::pair<Direction, std::vector<std::pair<int, Cursor>>>> groups;
        for (auto& [bi, cur] : occupants) {
            Direction dir = detail::direction_of(cur);
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
                return detail::same_direction(g.first, dir);
            });
            if (it == groups.end()) {
                groups.push_back({dir, {}});
                it = std::prev(groups.end());
            }
            it->second.emplace_back(bi, cur);
        }
        std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
            return detail::direction_less(a.first, b.first);
        });

        for (auto& [dir, members] : groups) {
            // the would-be child point and its exceptional axes
            std::optional<int> child_exc_s, child_exc_t, second;
            if (dir.kind == 2) { // [0:1]
                child_exc_t = id;
                child_exc_s = exc_s;
                second = exc_s;
            } else if (dir.kind == 0) { // [1:0]
                child_exc_s = id;
                child_exc_t = exc_t;
                second = exc_t;
            } else { // free point
                child_exc_t = id;
                child_exc_s = std::nullopt;
                second = std::nullopt;
            }
            std::vector<std::pair<int, Cursor>> stepped;
            for (auto& [bi, cur] : members)
                stepped.emplace_back(bi, detail::step_cursor(cur, dir, target));

            bool blow = members.size() >= 2;
            if (child_exc_s && child_exc_t) blow = true; // satellite position
            for (auto& [bi, cur] : stepped) {
                if (detail::cursor_mult(cur) >= 2) blow = true;
                Direction nd = detail::direction_of(cur);
                if (nd.kind == 2 && child_exc_s) blow = true; // tangent to {s=0} axis
                if (nd.kind == 0 && child_exc_t) blow = true; // tangent to {t=0} axis
            }
            if (blow) {
                int child = new_point(id, second);
                process(child, stepped, child_exc_s, child_exc_t);
            } else {
                attach[static_cast<std::size_t>(stepped.front().first)] = id;
            }
        }
    }
};

} // namespace

ResolutionGraph resolve(BranchSet& bs) {
    if (bs.branches.empty()) throw Error("resolve: empty branch set");
    for (std::size_t i = 0; i < bs.branches.size(); ++i)
        for (std::size_t j = i + 1; j < bs.branches.size(); ++j)
            if (branches_equal(bs.branches[i], bs.branches[j]))
                throw Error("resolve: branches not pairwise distinct");

    long w = 32;
    while (true) {
        if (w > Branch::TRUNCATION_CAP) throw TruncationExhausted("resolve");
        for (auto& b : bs.branches) b.ensure_prec(w);
        BuildState st;
        st.attach.assign(bs.branches.size(), -1);
        st.target = w;
        try {
            std::vector<std::pair<int, Cursor>> occ;
            for (std::size_t i = 0; i < bs.branches.size(); ++i)
                occ.emplace_back(static_cast<int>(i),
                                 Cursor{bs.branches[i].s(), bs.branches[i].t()});
            st.new_point(-1, std::nullopt);
            st.process(0, occ, std::nullopt, std::nullopt);
        } catch (RetryPrecision&) {
            w *= 2;
            continue;
        }

        // proximity matrix -> intersection matrix -PtP
        std::size_t n = st.points.size();
        IMat P(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            P.at(i, i) = 1;
            const auto& pt = st.points[i];
            if (pt.parent >= 0) P.at(i, static_cast<std::size_t>(pt.parent)) = -1;
            if (pt.second_prox) P.at(i, static_cast<std::size_t>(*pt.second_prox)) = -1;
        }
        IMat Pt(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Pt.at(i, j) = P.at(j, i);
        IMat A = Pt * P;

        ResolutionGraph g;
        g.euler.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.euler[i] = -to_long(A.at(i, i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Int off = -A.at(i, j);
                if (off == 1)
                    g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
                else if (off != 0)
                    throw Error("resolution: off-diagonal intersection not in {0,1}");
            }
        for (std::size_t i = 0; i < bs.branches.size(); ++i) {
            if (st.attach[i] < 0) throw Error("resolution: branch not attached");
            g.arrowheads.push_back({static_cast<int>(i), st.attach[i]});
        }
        g.cluster = std::move(st.points);
        g.validate();
        compute_multiplicities(g);
        return g;
    }
}

void compute_multiplicities(ResolutionGraph& g) {
    IMat A = g.intersection_matrix();
    std::size_t n = g.vertex_count();
    g.multiplicities.clear();
    for (auto& ah : g.arrowheads) {
        std::vector<Int> b(n, Int(0));
        b[static_cast<std::size_t>(ah.attach)] = -1; // solve A m = -b_i
        std::vector<Int> m = solve_integer_linear(A, b);
        for (auto& v : m)
            if (v <= 0)
                throw NonPositiveMultiplicity("arrowhead " + std::to_string(ah.branch));
        g.multiplicities.push_back(std::move(m));
    }
    if (!g.cluster.empty()) {
        auto indep = multiplicities_via_proximity(g);
        if (indep != g.multiplicities)
            throw Error("multiplicities: linear solve and proximity recursion disagree");
    }
}

std::vector<std::vector<Int>> multiplicities_via_proximity(const ResolutionGraph& g) {
    if (g.cluster.empty()) throw Error("multiplicities_via_proximity: no cluster data");
    std::size_t n = g.vertex_count();
    std::vector<std::vector<Int>> out;
    for (auto& ah : g.arrowheads) {
        std::vector<Int> m(n, Int(0));
        for (std::size_t p = 0; p < n; ++p) { // creation order: ancestors first
            const auto& pt = g.cluster[p];
            Int val = 0;
            for (auto& [bi, mult] : pt.branch_mults)
                if (bi == ah.branch) val += mult;
            if (pt.parent >= 0) val += m[static_cast<std::size_t>(pt.parent)];
            if (pt.second_prox) val += m[static_cast<std::size_t>(*pt.second_prox)];
            m[p] = val;
        }
        out.push_back(std::move(m));
    }
    return out;
}

IMat pairwise_intersections_from_graph(const ResolutionGraph& g) {
    if (g.multiplicities.empty())
        throw Error("pairwise_intersections_from_graph: multiplicities not computed");
    IMat A = g.intersection_matrix();
    auto inv = inverse_rational(A); // SingularMatrix if degenerate
    std::size_t l = g.arrowheads.size();
    IMat out(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) {
            if (i == k) continue;
            Rat v = -inv[static_cast<std::size_t>(g.arrowheads[i].attach)]
                        [static_cast<std::size_t>(g.arrowheads[k].attach)];
            if (!is_integer(v))
                throw Error("pairwise intersection from graph is not integral");
            out.at(i, k) = v.get_num();
        }
    return out;
}

} // namespace mfb
