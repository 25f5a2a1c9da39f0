#pragma once

#include "mfb/number_field.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace mfb {

// Truncated power series in one parameter tau over a number field.
// Invariant: every term with exponent < prec() is stored (sparse, sorted,
// no zero coefficients). prec() == EXACT means the series is a polynomial
// and known everywhere.
class Series {
public:
    static constexpr long EXACT = std::numeric_limits<long>::max();
    static constexpr long ORD_INF = std::numeric_limits<long>::max();

    Series() = default; // exact zero
    explicit Series(std::vector<std::pair<long, NFElem>> terms, long prec = EXACT);
    static Series monomial(const NFElem& c, long e, long prec = EXACT);
    static Series zero(long prec = EXACT) { return Series({}, prec); }

    long prec() const { return prec_; }
    bool is_exact() const { return prec_ == EXACT; }
    const std::vector<std::pair<long, NFElem>>& terms() const { return terms_; }

    // Order of the series. For a series with no visible term: ORD_INF when
    // exact (genuinely zero), nullopt when truncated (order not certified).
    std::optional<long> order() const;
    bool is_certainly_zero() const { return terms_.empty() && is_exact(); }

    NFElem coeff(long e) const;
    NFElem leading_coeff() const; // requires certified order

    Series truncated(long new_prec) const;
    Series shifted(long delta) const; // multiply by tau^delta; requires order+delta >= 0

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;
    friend bool operator==(const Series& a, const Series& b); // terms and prec

    Series scaled(const NFElem& c) const;       // multiply by a constant
    Series param_scaled(const NFElem& u) const; // tau -> u*tau
    Series stretched(long k) const;             // tau -> tau^k
    Series powed(long k) const;                 // series^k, k >= 0

    // a / b to at most `target` precision; exactness is preserved when the
    // division terminates. Requires ord(b) certified and ord(a) >= ord(b).
    static Series divide(const Series& a, const Series& b, long target);

    // map all coefficients into another field
    Series mapped(const FieldEmbedding& emb) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<std::pair<long, NFElem>> terms_;
    long prec_ = EXACT;
    void normalize();
};

// saturating helpers for precision arithmetic
inline long sat_add(long a, long b) {
    if (a == Series::EXACT || b == Series::EXACT) return Series::EXACT;
    return a + b;
}
inline long sat_min(long a, long b) { return a < b ? a : b; }

} // namespace mfb
