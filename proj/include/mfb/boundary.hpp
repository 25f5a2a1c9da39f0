#pragma once

#include "mfb/plumbing.hpp"
#include "mfb/resolution.hpp"

#include <optional>

namespace mfb {

// Vertical data for one orbit {i, sigma(i)} of the pairing. Arrowhead
// indices are 1-based. Either the pair's vertical index is given directly,
// or it is combined from lambda values and the H-vertical index v.
struct PairData {
    int i = 0;
    int sigma_i = 0;
    std::optional<long> vi;
    std::vector<long> lambda;           // one value for self-pairs, two otherwise
    std::optional<long> v;
    std::optional<long> alpha_override; // reproduces published outputs directly
    bool self() const { return i == sigma_i; }
};

struct PairingData {
    std::vector<PairData> pairs;
    // sigma is an involution and the pairs partition {1..l}
    void validate(std::size_t arrowhead_count) const;
};

// vi_j = lambda_i + lambda_sigma(i) + v_j  (i != sigma(i))
//      = lambda_i + v_j                    (i == sigma(i))
long vertical_index(const PairData& p);

// alpha_j = vi_j - sum of m_i(v(i)) over the pair's arrowheads
long alpha(const PairData& p, const ResolutionGraph& g);

// Plumbing model of the closed-up surgery piece: a (-1) vertex with two (-2)
// legs; index 0 is the attaching vertex.
PlumbingGraph y_graph();

struct BoundaryGraph {
    PlumbingGraph graph;
    struct SurgeryVertex {
        int vertex; // index into graph.vertices
        int i, sigma_i;
        long alpha;
    };
    std::vector<SurgeryVertex> surgery;
    std::size_t resolution_vertices = 0; // the copied Gamma block is [0, this)
};

// The surgery construction: copy Gamma, replace each arrowhead pair by a new
// vertex with Euler number alpha_j (joined to v(i) and v(sigma(i)), one edge
// minus-signed), and attach a Y star through a minus edge at self-pairs.
BoundaryGraph build_boundary_graph(const ResolutionGraph& g, const PairingData& pd);

} // namespace mfb
