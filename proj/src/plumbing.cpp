#include "mfb/plumbing.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace mfb {

void PlumbingGraph::add_edge(int a, int b, int sign) {
    if (a > b) std::swap(a, b);
    edges.push_back({a, b, sign});
}

int PlumbingGraph::degree(int v) const {
    int d = 0;
    for (auto& e : edges) {
        if (e.a == v) ++d;
        if (e.b == v) ++d;
    }
    return d;
}

int PlumbingGraph::loop_count(int v) const {
    int d = 0;
    for (auto& e : edges)
        if (e.a == v && e.b == v) ++d;
    return d;
}

void PlumbingGraph::canonicalize_edges() {
    for (auto& e : edges)
        if (e.a > e.b) std::swap(e.a, e.b);
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.sign > y.sign;
    });
}

void PlumbingGraph::validate() const {
    std::size_t n = vertices.size();
    if (n == 0) throw Error("plumbing graph: empty");
    for (auto& v : vertices)
        if (v.genus != 0) throw Unsupported("nonzero genus vertex");
    for (auto& e : edges) {
        if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= n ||
            static_cast<std::size_t>(e.b) >= n)
            throw Error("plumbing graph: edge endpoint out of range");
        if (e.sign != 1 && e.sign != -1) throw Error("plumbing graph: edge sign must be +-1");
    }
    // connectivity
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto& e : edges) {
            int w = -1;
            if (e.a == v) w = e.b;
            else if (e.b == v) w = e.a;
            if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw Error("plumbing graph: disconnected");
}

IMat intersection_matrix(const PlumbingGraph& g) {
    std::size_t n = g.size();
    IMat a(n, n);
    for (std::size_t v = 0; v < n; ++v) a.at(v, v) = g.vertices[v].euler;
    for (auto& e : g.edges) {
        if (e.a == e.b) {
            a.at(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.a)) += 2 * e.sign;
        } else {
            a.at(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b)) += e.sign;
            a.at(static_cast<std::size_t>(e.b), static_cast<std::size_t>(e.a)) += e.sign;
        }
    }
    return a;
}

AbelianGroup h1(const PlumbingGraph& g) {
    g.validate();
    AbelianGroup grp = AbelianGroup::cokernel(intersection_matrix(g));
    long b1 = static_cast<long>(g.edges.size()) - static_cast<long>(g.size()) + 1;
    grp.free_rank += b1;
    return grp;
}

namespace {

PlumbingGraph remove_vertices(const PlumbingGraph& g, std::vector<int> victims,
                              const std::vector<PlumbingGraph::Edge>& new_edges) {
    std::sort(victims.begin(), victims.end());
    std::vector<int> remap(g.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (std::binary_search(victims.begin(), victims.end(), static_cast<int>(v))) continue;
        remap[v] = next++;
    }
    PlumbingGraph out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (remap[v] >= 0) out.vertices.push_back(g.vertices[v]);
    for (auto& e : new_edges) {
        if (remap[static_cast<std::size_t>(e.a)] < 0 || remap[static_cast<std::size_t>(e.b)] < 0)
            throw Error("internal: edge to removed vertex");
        out.add_edge(remap[static_cast<std::size_t>(e.a)], remap[static_cast<std::size_t>(e.b)],
                     e.sign);
    }
    out.canonicalize_edges();
    return out;
}

} // namespace

PlumbingGraph blow_down(const PlumbingGraph& g, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw Error("blow_down: bad vertex");
    long e = g.vertices[static_cast<std::size_t>(v)].euler;
    if (e != 1 && e != -1) throw NotBlowDownable("euler not +-1");
    if (g.vertices[static_cast<std::size_t>(v)].genus != 0) throw NotBlowDownable("genus");
    if (g.loop_count(v) > 0) throw NotBlowDownable("loop at the vertex");
    int deg = g.degree(v);
    if (deg > 2) throw NotBlowDownable("degree > 2");

    std::vector<PlumbingGraph::Edge> incident, rest;
    for (auto& ed : g.edges)
        (ed.a == v || ed.b == v ? incident : rest).push_back(ed);

    PlumbingGraph out = g;
    if (deg == 0) {
        if (g.size() == 1) throw NotBlowDownable("graph would become empty");
        return remove_vertices(g, {v}, rest);
    }
    if (deg == 1) {
        int a = incident[0].a == v ? incident[0].b : incident[0].a;
        out.vertices[static_cast<std::size_t>(a)].euler += -e;
        return remove_vertices(out, {v}, rest);
    }
    int a = incident[0].a == v ? incident[0].b : incident[0].a;
    int b = incident[1].a == v ? incident[1].b : incident[1].a;
    out.vertices[static_cast<std::size_t>(a)].euler += -e;
    out.vertices[static_cast<std::size_t>(b)].euler += -e;
    rest.push_back({a, b, -static_cast<int>(e) * incident[0].sign * incident[1].sign});
    return remove_vertices(out, {v}, rest);
}

PlumbingGraph zero_chain_absorb(const PlumbingGraph& g, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw Error("absorb: bad vertex");
    if (g.vertices[static_cast<std::size_t>(v)].euler != 0) throw NotAbsorbable("euler not 0");
    if (g.vertices[static_cast<std::size_t>(v)].genus != 0) throw NotAbsorbable("genus");
    if (g.loop_count(v) > 0) throw NotAbsorbable("loop at the vertex");
    if (g.degree(v) != 2) throw NotAbsorbable("degree != 2");

    std::vector<PlumbingGraph::Edge> incident, rest;
    for (auto& ed : g.edges)
        (ed.a == v || ed.b == v ? incident : rest).push_back(ed);
    int a = incident[0].a == v ? incident[0].b : incident[0].a;
    int b = incident[1].a == v ? incident[1].b : incident[1].a;
    if (a == b)
        throw NotAbsorbable("both ends at one vertex: the merge is not an h1-preserving move");
    int flip = -incident[0].sign * incident[1].sign; // factor on former-b endpoints

    PlumbingGraph out = g;
    out.vertices[static_cast<std::size_t>(a)].euler += g.vertices[static_cast<std::size_t>(b)].euler;
    out.vertices[static_cast<std::size_t>(a)].origin.clear(); // merged vertex: provenance gone
    out.vertices[static_cast<std::size_t>(a)].alpha.reset();
    std::vector<PlumbingGraph::Edge> edges2;
    for (auto& ed : rest) {
        PlumbingGraph::Edge ne = ed;
        int mult = 1;
        if (ne.a == b) {
            ne.a = a;
            mult *= flip;
        }
        if (ne.b == b) {
            ne.b = a;
            mult *= flip;
        }
        ne.sign *= mult;
        edges2.push_back(ne);
    }
    return remove_vertices(out, {v, b}, edges2);
}

PlumbingGraph sign_normalize(const PlumbingGraph& g) {
    g.validate();
    std::size_t n = g.size();
    // lowest-index spanning tree over canonically ordered edges
    PlumbingGraph out = g;
    out.canonicalize_edges();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<std::size_t> tree;
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
        auto& e = out.edges[i];
        if (e.a == e.b) continue;
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            tree.push_back(i);
        }
    }
    // propagate flips from vertex 0 so tree edges become +1
    std::vector<int> flip(n, 0), visited(n, 0);
    std::vector<int> order{0};
    visited[0] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (auto ti : tree) {
            auto& e = out.edges[ti];
            int w = -1;
            if (e.a == v) w = e.b;
            else if (e.b == v) w = e.a;
            if (w < 0 || visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            int s = e.sign * (flip[static_cast<std::size_t>(v)] ? -1 : 1);
            flip[static_cast<std::size_t>(w)] = (s == -1);
            order.push_back(w);
        }
    }
    for (auto& e : out.edges) {
        if (e.a == e.b) continue; // loops are flip-invariant
        if (flip[static_cast<std::size_t>(e.a)]) e.sign = -e.sign;
        if (flip[static_cast<std::size_t>(e.b)]) e.sign = -e.sign;
    }
    out.canonicalize_edges();
    return out;
}

PlumbingGraph normalize(const PlumbingGraph& g) {
    PlumbingGraph cur = g;
    cur.validate();
    while (true) {
        bool moved = false;
        for (std::size_t v = 0; v < cur.size() && !moved; ++v) {
            long e = cur.vertices[v].euler;
            if ((e == 1 || e == -1) && cur.loop_count(static_cast<int>(v)) == 0 &&
                cur.degree(static_cast<int>(v)) <= 2 &&
                !(cur.degree(static_cast<int>(v)) == 0 && cur.size() == 1)) {
                cur = blow_down(cur, static_cast<int>(v));
                moved = true;
            }
        }
        if (moved) continue;
        for (std::size_t v = 0; v < cur.size() && !moved; ++v) {
            if (cur.vertices[v].euler != 0 || cur.loop_count(static_cast<int>(v)) != 0 ||
                cur.degree(static_cast<int>(v)) != 2)
                continue;
            // distinct neighbors required
            int a = -1, b = -1;
            for (auto& ed : cur.edges) {
                if (ed.a == static_cast<int>(v)) (a < 0 ? a : b) = ed.b;
                else if (ed.b == static_cast<int>(v)) (a < 0 ? a : b) = ed.a;
            }
            if (a == b) continue;
            cur = zero_chain_absorb(cur, static_cast<int>(v));
            moved = true;
        }
        if (!moved) break;
    }
    return sign_normalize(cur);
}

// ------------------------------------------------------------- isomorphism

namespace {

struct PairKey {
    int a, b;
    bool operator<(const PairKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

// multiset of signs between each vertex pair (and loops per vertex)
std::map<PairKey, std::pair<int, int>> pair_signs(const PlumbingGraph& g) {
    std::map<PairKey, std::pair<int, int>> m;
    for (auto& e : g.edges) {
        PairKey k{std::min(e.a, e.b), std::max(e.a, e.b)};
        if (e.sign > 0)
            m[k].first++;
        else
            m[k].second++;
    }
    return m;
}

} // namespace

bool isomorphic(const PlumbingGraph& ga, const PlumbingGraph& gb) {
    if (ga.size() > 64 || gb.size() > 64) throw TooLarge("isomorphism cap is 64 vertices");
    ga.validate();
    gb.validate();
    if (ga.size() != gb.size() || ga.edges.size() != gb.edges.size()) return false;

    std::size_t n = ga.size();
    auto profile = [](const PlumbingGraph& g, int v) {
        return std::tuple<long, int, int>{g.vertices[static_cast<std::size_t>(v)].euler,
                                          g.degree(v), g.loop_count(v)};
    };
    {
        std::vector<std::tuple<long, int, int>> pa, pb;
        for (std::size_t v = 0; v < n; ++v) {
            pa.push_back(profile(ga, static_cast<int>(v)));
            pb.push_back(profile(gb, static_cast<int>(v)));
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return false;
    }

    auto sa = pair_signs(ga);
    auto sb = pair_signs(gb);

    // unsigned adjacency counts
    auto count_between = [](const std::map<PairKey, std::pair<int, int>>& m, int a, int b) {
        auto it = m.find({std::min(a, b), std::max(a, b)});
        if (it == m.end()) return 0;
        return it->second.first + it->second.second;
    };

    std::vector<int> map_ab(n, -1), used(n, 0);

    // final check: signs match up to vertex flips (GF(2) consistency)
    auto signs_flip_equivalent = [&]() {
        // union-find with parity
        std::vector<int> par(n), rank_(n, 0), parity(n, 0);
        std::iota(par.begin(), par.end(), 0);
        std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
            int p = 0;
            while (par[static_cast<std::size_t>(x)] != x) {
                p ^= parity[static_cast<std::size_t>(x)];
                x = par[static_cast<std::size_t>(x)];
            }
            return {x, p};
        };
        auto unite = [&](int x, int y, int rel) {
            auto [rx, px] = find(x);
            auto [ry, py] = find(y);
            if (rx == ry) return (px ^ py) == rel;
            par[static_cast<std::size_t>(rx)] = ry;
            parity[static_cast<std::size_t>(rx)] = px ^ py ^ rel;
            return true;
        };
        for (auto& [k, cnt] : sa) {
            PairKey mapped{std::min(map_ab[static_cast<std::size_t>(k.a)],
                                    map_ab[static_cast<std::size_t>(k.b)]),
                           std::max(map_ab[static_cast<std::size_t>(k.a)],
                                    map_ab[static_cast<std::size_t>(k.b)])};
            auto it = sb.find(mapped);
            std::pair<int, int> other = it == sb.end() ? std::pair<int, int>{0, 0} : it->second;
            if (k.a == k.b) { // loops: flip-invariant
                if (cnt != other) return false;
                continue;
            }
            bool same_ok = (cnt == other);
            bool swap_ok = (cnt.first == other.second && cnt.second == other.first);
            if (!same_ok && !swap_ok) return false;
            if (same_ok && swap_ok) continue; // balanced, no constraint
            int rel = same_ok ? 0 : 1;
            if (!unite(k.a, k.b, rel)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t v) -> bool {
        if (v == n) return signs_flip_equivalent();
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (profile(ga, static_cast<int>(v)) != profile(gb, static_cast<int>(w))) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                if (count_between(sa, static_cast<int>(v), static_cast<int>(u)) !=
                    count_between(sb, static_cast<int>(w), map_ab[u]))
                    ok = false;
            if (!ok) continue;
            map_ab[v] = static_cast<int>(w);
            used[w] = 1;
            if (search(v + 1)) return true;
            used[w] = 0;
            map_ab[v] = -1;
        }
        return false;
    };
    return search(0);
}

} // namespace mfb
