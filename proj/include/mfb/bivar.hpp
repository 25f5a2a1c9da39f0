#pragma once

#include "mfb/series.hpp"

#include <map>
#include <string>

namespace mfb {

// Sparse bivariate polynomial in (s, t) over a number field.
class BivarPoly {
public:
    using Key = std::pair<long, long>; // (s-exponent, t-exponent)

    BivarPoly() = default;
    explicit BivarPoly(std::map<Key, NFElem> terms);

    static BivarPoly variable_s() { return monomial(NFElem(1), 1, 0); }
    static BivarPoly variable_t() { return monomial(NFElem(1), 0, 1); }
    static BivarPoly constant(const NFElem& c) { return monomial(c, 0, 0); }
    static BivarPoly monomial(const NFElem& c, long es, long et);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, NFElem>& terms() const { return terms_; }
    long degree_s() const;
    long degree_t() const;

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const;
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.terms_ == b.terms_;
    }

    NFElem coeff(long es, long et) const;
    NFElem eval00() const { return coeff(0, 0); }

    bool divisible_by_s() const; // every term has s-exponent >= 1
    bool divisible_by_t() const;
    BivarPoly divided_by_s() const;
    BivarPoly divided_by_t() const;

    BivarPoly derivative_s() const;
    BivarPoly derivative_t() const;
    BivarPoly swapped() const; // s <-> t

    // t-coefficients as univariate polynomials in s (dense in t-degree)
    std::vector<NFPoly> t_coefficients() const;
    NFPoly at_t_zero() const;  // d(s, 0) as a polynomial in s
    NFPoly at_s_value(const NFElem& v) const; // d(v, t) as a polynomial in t

    // substitute parametrization s(tau), t(tau); truncated series result
    Series substitute(const Series& s, const Series& t) const;

    BivarPoly mapped(const FieldEmbedding& emb) const;

    std::string str() const;

private:
    std::map<Key, NFElem> terms_;
    void prune();
};

// True iff d has no repeated factor: no square s- or t-factor, squarefree
// t-content, and nonvanishing t-discriminant of the primitive part
// (evaluation-interpolation certificate, exact).
bool squarefree_check(const BivarPoly& d);

} // namespace mfb
