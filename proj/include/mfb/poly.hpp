#pragma once

#include "mfb/rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace mfb {

// Dense univariate polynomial over an exact coefficient type.
// T must provide +, -, *, ==, a default constructor meaning 0, and T(1).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(T v, std::size_t e) {
        std::vector<T> c(e + 1);
        c[e] = std::move(v);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const T& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    void set_coeff(std::size_t i, T v) {
        if (i >= c_.size()) c_.resize(i + 1);
        c_[i] = std::move(v);
        trim();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = T{} - c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] * s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // substitute another polynomial for the variable
    Poly compose(const Poly& g) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k{};
            for (std::size_t j = 0; j < i; ++j) k = k + T(1);
            r[i - 1] = c_[i] * k;
        }
        return Poly(std::move(r));
    }

    Poly shift_up(std::size_t e) const { // multiply by x^e
        if (is_zero()) return {};
        std::vector<T> r(c_.size() + e);
        std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(e));
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T{}) c_.pop_back();
    }
    std::vector<T> c_;
};

// Division with remainder; requires invert(lc of b) supplied by the caller.
template <class T, class Inv>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b, Inv&& invert) {
    assert(!b.is_zero());
    Poly<T> q, r = a;
    T ilc = invert(b.lc());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        T factor = r.lc() * ilc;
        q.set_coeff(shift, factor);
        r = r - (b * factor).shift_up(shift);
    }
    return {q, r};
}

template <class T, class Inv>
Poly<T> make_monic(const Poly<T>& a, Inv&& invert) {
    if (a.is_zero()) return a;
    return a * invert(a.lc());
}

template <class T, class Inv>
Poly<T> gcd_monic(Poly<T> a, Poly<T> b, Inv&& invert) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b, invert);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, invert);
}

// Yun's squarefree decomposition over a field of characteristic zero.
// Returns pairs (factor, multiplicity) with factor monic, multiplicities increasing.
template <class T, class Inv>
std::vector<std::pair<Poly<T>, int>> squarefree_decomposition(const Poly<T>& f, Inv&& invert) {
    std::vector<std::pair<Poly<T>, int>> out;
    if (f.degree() <= 0) return out;
    Poly<T> fp = f.derivative();
    Poly<T> a = gcd_monic(f, fp, invert);
    Poly<T> b = divrem(f, a, invert).first;
    Poly<T> c = divrem(fp, a, invert).first;
    Poly<T> d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly<T> g = gcd_monic(b, d, invert);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = divrem(b, g, invert).first;
        c = divrem(d, g, invert).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

using QPoly = Poly<Rat>;

inline Rat rat_inv(const Rat& v) {
    assert(v != 0);
    return 1 / v;
}

inline QPoly qgcd(const QPoly& a, const QPoly& b) {
    return gcd_monic(a, b, rat_inv);
}

// Resultant of two rational polynomials (Euclidean remainder sequence).
Rat resultant(QPoly a, QPoly b);

} // namespace mfb
