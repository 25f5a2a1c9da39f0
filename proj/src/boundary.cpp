#include "mfb/boundary.hpp"
#include "mfb/errors.hpp"

#include <algorithm>

namespace mfb {

void PairingData::validate(std::size_t arrowhead_count) const {
    std::vector<int> covered(arrowhead_count + 1, 0);
    for (auto& p : pairs) {
        if (p.i < 1 || p.sigma_i < 1 || static_cast<std::size_t>(p.i) > arrowhead_count ||
            static_cast<std::size_t>(p.sigma_i) > arrowhead_count)
            throw PairingIncomplete("pair index out of range");
        ++covered[static_cast<std::size_t>(p.i)];
        if (p.sigma_i != p.i) ++covered[static_cast<std::size_t>(p.sigma_i)];
    }
    for (std::size_t k = 1; k <= arrowhead_count; ++k)
        if (covered[k] != 1)
            throw PairingIncomplete("arrowhead " + std::to_string(k) +
                                    " covered " + std::to_string(covered[k]) + " times");
}

long vertical_index(const PairData& p) {
    if (p.vi) return *p.vi;
    std::size_t need = p.self() ? 1 : 2;
    if (!p.v || p.lambda.size() != need)
        throw MissingVerticalData("pair {" + std::to_string(p.i) + "," +
                                  std::to_string(p.sigma_i) + "}");
    long sum = *p.v;
    for (long l : p.lambda) sum += l;
    return sum;
}

long alpha(const PairData& p, const ResolutionGraph& g) {
    if (p.alpha_override) return *p.alpha_override;
    if (g.multiplicities.empty()) throw Error("alpha: multiplicities not computed");
    auto m_at = [&](int arrow_1based) -> long {
        for (std::size_t k = 0; k < g.arrowheads.size(); ++k)
            if (g.arrowheads[k].branch + 1 == arrow_1based)
                return to_long(
                    g.multiplicities[k][static_cast<std::size_t>(g.arrowheads[k].attach)]);
        throw Error("alpha: arrowhead not found");
    };
    long a = vertical_index(p) - m_at(p.i);
    if (!p.self()) a -= m_at(p.sigma_i);
    return a;
}

PlumbingGraph y_graph() {
    PlumbingGraph y;
    y.vertices.push_back({-1, 0, "Y", std::nullopt});
    y.vertices.push_back({-2, 0, "Y", std::nullopt});
    y.vertices.push_back({-2, 0, "Y", std::nullopt});
    y.add_edge(0, 1, 1);
    y.add_edge(0, 2, 1);
    return y;
}

BoundaryGraph build_boundary_graph(const ResolutionGraph& g, const PairingData& pd) {
    pd.validate(g.arrowheads.size());
    if (g.multiplicities.empty()) throw Error("build_boundary_graph: multiplicities not computed");

    BoundaryGraph out;
    out.resolution_vertices = g.vertex_count();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out.graph.vertices.push_back({g.euler[v], 0, "E" + std::to_string(v), std::nullopt});
    for (auto& [a, b] : g.edges) out.graph.add_edge(a, b, 1);

    auto attach_of = [&](int arrow_1based) -> int {
        for (auto& ah : g.arrowheads)
            if (ah.branch + 1 == arrow_1based) return ah.attach;
        throw Error("build_boundary_graph: arrowhead not found");
    };

    // deterministic processing order, and orient each pair so i < sigma_i
    std::vector<PairData> pairs = pd.pairs;
    for (auto& p : pairs)
        if (p.sigma_i < p.i) {
            std::swap(p.i, p.sigma_i);
            if (p.lambda.size() == 2) std::swap(p.lambda[0], p.lambda[1]);
        }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairData& a, const PairData& b) { return a.i < b.i; });

    for (auto& p : pairs) {
        long a = alpha(p, g);
        int nv = static_cast<int>(out.graph.size());
        std::string origin = p.self() ? "pair:{" + std::to_string(p.i) + "}"
                                      : "pair:{" + std::to_string(p.i) + "," +
                                            std::to_string(p.sigma_i) + "}";
        out.graph.vertices.push_back({a, 0, origin, a});
        out.surgery.push_back({nv, p.i, p.sigma_i, a});
        if (p.self()) {
            out.graph.add_edge(attach_of(p.i), nv, 1);
            // Y star through a minus edge (droppable by R0, emitted as drawn)
            int y0 = static_cast<int>(out.graph.size());
            PlumbingGraph y = y_graph();
            for (auto& v : y.vertices) out.graph.vertices.push_back(v);
            for (auto& e : y.edges) out.graph.add_edge(y0 + e.a, y0 + e.b, e.sign);
            out.graph.add_edge(nv, y0, -1);
        } else {
            // the minus sign goes on the edge toward v(sigma_i); by R0(a) the
            // choice does not matter
            out.graph.add_edge(attach_of(p.i), nv, 1);
            out.graph.add_edge(attach_of(p.sigma_i), nv, -1);
        }
    }
    out.graph.canonicalize_edges();
    out.graph.validate();
    return out;
}

} // namespace mfb
