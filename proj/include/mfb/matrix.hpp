#pragma once

#include "mfb/errors.hpp"
#include "mfb/rational.hpp"

#include <vector>

namespace mfb {

class IMat {
public:
    IMat() = default;
    IMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, Int(0)) {}
    static IMat identity(std::size_t n) {
        IMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& at(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    friend bool operator==(const IMat& a, const IMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend IMat operator*(const IMat& a, const IMat& b);

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> d_;
};

struct SmithResult {
    IMat S; // diagonal, non-negative, divisibility chain
    IMat U; // unimodular, rows x rows
    IMat V; // unimodular, cols x cols;  U * A * V = S
};

SmithResult smith_normal_form(const IMat& A);

// Exact solve of A x = b over Q with integrality verification.
// SingularMatrix when det A = 0, NonIntegralSolution when x is not integral.
std::vector<Int> solve_integer_linear(const IMat& A, const std::vector<Int>& b);

Int det_integer(const IMat& A); // fraction-free Bareiss

// Leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IMat& A);

// Inverse over Q; SingularMatrix if det = 0.
std::vector<std::vector<Rat>> inverse_rational(const IMat& A);

// H1-style invariant data of a finitely generated abelian group.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion; // invariant factors, each >= 2, d1 | d2 | ...

    static AbelianGroup cokernel(const IMat& A); // Z^cols -> Z^rows
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
    std::string str() const;
};

} // namespace mfb
