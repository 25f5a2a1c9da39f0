#pragma once

#include "mfb/poly.hpp"

#include <vector>

namespace mfb {

// Factorization of rational univariate polynomials.
//
// Strategy: squarefree decomposition (Yun), then factor each squarefree part
// over Z with a single big prime: choose p larger than twice the Mignotte
// coefficient bound, factor mod p (Cantor-Zassenhaus), and recombine factor
// subsets by trial division. No Hensel lifting needed at desk scale.

struct QFactorization {
    Rat lead;  // f = lead * prod(factors[i].first ^ factors[i].second), factors monic
    std::vector<std::pair<QPoly, int>> factors;
};

QFactorization factor_rational_poly(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

// Rational roots of f (each listed once; multiplicity via squarefree part).
std::vector<Rat> rational_roots(const QPoly& f);

} // namespace mfb
