#pragma once

#include "mfb/boundary.hpp"
#include "mfb/newton_puiseux.hpp"

namespace mfb {

// Germ (s, t) -> (s, t^2, t d(s, t)) with d(s, t) = g(s, t^2).
struct Sigma10Germ {
    BivarPoly d;
    FieldPtr field;
    // every t-exponent even, t does not divide d, d square-free
    static Sigma10Germ create(BivarPoly d, FieldPtr field);
};

// reduced image equation y g(x,y)^2 - z^2, for reporting only
std::string image_equation(const Sigma10Germ& germ);

// sigma: 0-based involution with branches_equal(iota(b_i), b_sigma[i]);
// PairingFailure when the involution does not close up on the branch set
std::vector<int> pairing(BranchSet& bs);

// lambda_i = -sum_{k != i} D_k . D_i  -  D_i . {t=0}
long lambda(BranchSet& bs, std::size_t i);

// C(Phi) = ord_s d(s, 0)
long crosscap_count(const Sigma10Germ& germ);

struct SumIdentityReport {
    long lhs = 0; // sum of vertical indices
    long rhs = 0; // -sum_{i != k} D_i . D_k - C(Phi)
    bool holds = false;
};

SumIdentityReport verify_sum_identity(const Sigma10Germ& germ);

struct Sigma10Result {
    FieldPtr field;
    BranchSet branches;
    ResolutionGraph graph;
    std::vector<int> sigma;     // 0-based
    std::vector<long> lambdas;  // per branch
    PairingData pairing_data;   // with v = 0
    BoundaryGraph boundary;
    SumIdentityReport identity;
    long crosscaps = 0;
};

// expand -> resolve -> pairing -> lambda -> alpha (v = 0) -> surgery graph,
// with the sum identity asserted; StageError carries the failing stage name
Sigma10Result compute_boundary(const Sigma10Germ& germ);

// same pipeline with user-supplied parametrizations replacing the expansion;
// each branch is validated against d first
Sigma10Result compute_boundary_with_branches(const Sigma10Germ& germ, BranchSet branches);

} // namespace mfb
