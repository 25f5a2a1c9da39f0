#pragma once

#include "mfb/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfb {

// Plumbing graph of a closed oriented 3-manifold: genus-0 vertices with Euler
// numbers, signed edges, loops allowed. Edge sign -1 is the paper's "minus"
// decoration; undecorated edges are +1.
struct PlumbingGraph {
    struct Vertex {
        long euler = 0;
        int genus = 0;               // kept for generality, must be 0
        std::string origin;          // provenance annotation, optional
        std::optional<long> alpha;   // set for surgery vertices of a boundary graph
    };
    struct Edge {
        int a = 0, b = 0; // a <= b after canonicalization; a == b is a loop
        int sign = 1;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::size_t size() const { return vertices.size(); }
    void add_edge(int a, int b, int sign = 1);
    int degree(int v) const;     // endpoint count, loops contribute twice
    int loop_count(int v) const;
    void validate() const; // connected, genus 0, signs in {+1,-1}, ids in range
    void canonicalize_edges();
};

IMat intersection_matrix(const PlumbingGraph& g);

// H1(M^3(G)) = Z^{b1} + coker(intersection matrix), b1 the cycle rank.
AbelianGroup h1(const PlumbingGraph& g);

// Neumann moves. Preconditions per the calculus; NotBlowDownable /
// NotAbsorbable when they fail.
PlumbingGraph blow_down(const PlumbingGraph& g, int v);
PlumbingGraph zero_chain_absorb(const PlumbingGraph& g, int v);

// R0(a) normal form: all spanning-tree edge signs +1 (lowest-index tree,
// flips propagated from vertex 0), cycle signs are the invariant residue.
PlumbingGraph sign_normalize(const PlumbingGraph& g);

// Greedy blow-downs and 0-chain absorptions to a fixpoint, lowest vertex
// first, then sign_normalize.
PlumbingGraph normalize(const PlumbingGraph& g);

// Exact isomorphism respecting Euler numbers, edge multiplicities and edge
// signs up to per-vertex sign flips. TooLarge above 64 vertices.
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

} // namespace mfb
