#include "mfb/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mfb {

IMat operator*(const IMat& a, const IMat& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    IMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

SmithResult smith_normal_form(const IMat& A) {
    SmithResult res{A, IMat::identity(A.rows()), IMat::identity(A.cols())};
    IMat& S = res.S;
    IMat& U = res.U;
    IMat& V = res.V;
    std::size_t m = A.rows(), n = A.cols();

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(S.at(a, j), S.at(b, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(S.at(i, a), S.at(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < n; ++j) S.at(dst, j) += f * S.at(src, j);
        for (std::size_t j = 0; j < m; ++j) U.at(dst, j) += f * U.at(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < m; ++i) S.at(i, dst) += f * S.at(i, src);
        for (std::size_t i = 0; i < n; ++i) V.at(i, dst) += f * V.at(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) S.at(r, j) = -S.at(r, j);
        for (std::size_t j = 0; j < m; ++j) U.at(r, j) = -U.at(r, j);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // pivot: entry of smallest absolute value in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (S.at(i, j) == 0) continue;
                Int v = abs(S.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S.at(i, t) == 0) continue;
                Int q = S.at(i, t) / S.at(t, t);
                addmul_row(i, t, -q);
                if (S.at(i, t) != 0) {
                    swap_rows(t, i); // remainder smaller than pivot, retry
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S.at(t, j) == 0) continue;
                Int q = S.at(t, j) / S.at(t, t);
                addmul_col(j, t, -q);
                if (S.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // divisibility: pivot must divide every later entry
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (S.at(i, j) % S.at(t, t) != 0) {
                    addmul_col(t, j, Int(1));
                    redo = true;
                }
        if (redo) continue; // re-run elimination at the same t
        if (S.at(t, t) < 0) negate_row(t);
        ++t;
    }
    return res;
}

std::vector<Int> solve_integer_linear(const IMat& A, const std::vector<Int>& b) {
    if (A.rows() != A.cols() || b.size() != A.rows()) throw Error("solve: shape mismatch");
    std::size_t n = A.rows();
    // rational Gaussian elimination on [A | b]
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(A.at(i, j));
        m[i][n] = Rat(b[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("solve_integer_linear");
        std::swap(m[piv], m[col]);
        Rat ip = 1 / m[col][col];
        for (std::size_t j = col; j <= n; ++j) m[col][j] *= ip;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Int> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(m[i][n]))
            throw NonIntegralSolution("entry " + std::to_string(i) + " = " + m[i][n].get_str());
        x[i] = m[i][n].get_num();
    }
    return x;
}

Int det_integer(const IMat& A) {
    if (A.rows() != A.cols()) throw Error("det: not square");
    std::size_t n = A.rows();
    if (n == 0) return 1;
    IMat m = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

bool is_negative_definite(const IMat& A) {
    if (A.rows() != A.cols()) return false;
    for (std::size_t k = 1; k <= A.rows(); ++k) {
        IMat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = A.at(i, j);
        Int d = det_integer(minor);
        if (k % 2 == 1 && d >= 0) return false;
        if (k % 2 == 0 && d <= 0) return false;
    }
    return true;
}

std::vector<std::vector<Rat>> inverse_rational(const IMat& A) {
    if (A.rows() != A.cols()) throw Error("inverse: not square");
    std::size_t n = A.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(A.at(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("inverse_rational");
        std::swap(m[piv], m[col]);
        Rat ip = 1 / m[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] *= ip;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

AbelianGroup AbelianGroup::cokernel(const IMat& A) {
    AbelianGroup g;
    SmithResult snf = smith_normal_form(A);
    std::size_t rank = 0;
    std::size_t k = std::min(A.rows(), A.cols());
    for (std::size_t i = 0; i < k; ++i) {
        const Int& d = snf.S.at(i, i);
        if (d == 0) continue;
        ++rank;
        if (d >= 2) g.torsion.push_back(d);
    }
    g.free_rank = static_cast<long>(A.rows() - rank);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace mfb
