#pragma once

#include "mfb/branch.hpp"
#include "mfb/matrix.hpp"

#include <optional>

namespace mfb {

// One infinitely near point of the cluster: its predecessor, the optional
// second proximity target (satellite points), and which branches pass
// through it with what multiplicity.
struct ClusterPoint {
    int parent = -1;
    std::optional<int> second_prox;
    std::vector<std::pair<int, long>> branch_mults; // (branch index, multiplicity)
};

// Dual graph of the minimal good embedded resolution.
struct ResolutionGraph {
    std::vector<long> euler;
    std::vector<std::pair<int, int>> edges; // a < b, tree
    struct Arrowhead {
        int branch; // 0-based branch index
        int attach; // vertex carrying the strict transform
    };
    std::vector<Arrowhead> arrowheads;
    std::vector<std::vector<Int>> multiplicities; // [arrowhead][vertex], filled by compute_multiplicities
    std::vector<ClusterPoint> cluster;            // empty when built from combinatorial input

    std::size_t vertex_count() const { return euler.size(); }
    IMat intersection_matrix() const;
    // connected tree, negative definite, arrowheads attach to existing vertices
    void validate() const;
};

// Minimal good embedded resolution of the branch set: grow the cluster of
// infinitely near points until strict transforms are separated, smooth, and
// the total transform has normal crossings; origin always blown up.
ResolutionGraph resolve(BranchSet& bs);

// Solve sum_v m_i(v) (E_v.E_w) + (D_i.E_w) = 0 for all w; verify every entry
// is a positive integer; cache into the graph. For cluster-built graphs the
// proximity recursion recomputes the same numbers independently and must agree.
void compute_multiplicities(ResolutionGraph& g);

// D_i . D_k = (-A^{-1}) at the attachment vertices, exact and integral.
// Diagonal entries are left zero.
IMat pairwise_intersections_from_graph(const ResolutionGraph& g);

// Independent multiplicity route: m_i(E_p) = mult_p(D_i) + sum over the
// points p is proximate to. Requires cluster data.
std::vector<std::vector<Int>> multiplicities_via_proximity(const ResolutionGraph& g);

} // namespace mfb
