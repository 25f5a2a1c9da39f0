#include "mfb/bivar.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mfb {

BivarPoly::BivarPoly(std::map<Key, NFElem> terms) : terms_(std::move(terms)) { prune(); }

void BivarPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

BivarPoly BivarPoly::monomial(const NFElem& c, long es, long et) {
    BivarPoly p;
    if (!c.is_zero()) p.terms_[{es, et}] = c;
    return p;
}

long BivarPoly::degree_s() const {
    long d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

long BivarPoly::degree_t() const {
    long d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = c;
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            BivarPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_[k] = ca * cb;
            else
                it->second = it->second + ca * cb;
        }
    r.prune();
    return r;
}

NFElem BivarPoly::coeff(long es, long et) const {
    auto it = terms_.find({es, et});
    return it == terms_.end() ? NFElem(0) : it->second;
}

bool BivarPoly::divisible_by_s() const {
    if (terms_.empty()) return false;
    for (auto& [k, c] : terms_)
        if (k.first == 0) return false;
    return true;
}

bool BivarPoly::divisible_by_t() const {
    if (terms_.empty()) return false;
    for (auto& [k, c] : terms_)
        if (k.second == 0) return false;
    return true;
}

BivarPoly BivarPoly::divided_by_s() const {
    BivarPoly r;
    for (auto& [k, c] : terms_) {
        if (k.first < 1) throw Error("not divisible by s");
        r.terms_[{k.first - 1, k.second}] = c;
    }
    return r;
}

BivarPoly BivarPoly::divided_by_t() const {
    BivarPoly r;
    for (auto& [k, c] : terms_) {
        if (k.second < 1) throw Error("not divisible by t");
        r.terms_[{k.first, k.second - 1}] = c;
    }
    return r;
}

BivarPoly BivarPoly::derivative_s() const {
    BivarPoly r;
    for (auto& [k, c] : terms_)
        if (k.first >= 1) r.terms_[{k.first - 1, k.second}] = c * NFElem(Rat(k.first));
    r.prune();
    return r;
}

BivarPoly BivarPoly::derivative_t() const {
    BivarPoly r;
    for (auto& [k, c] : terms_)
        if (k.second >= 1) r.terms_[{k.first, k.second - 1}] = c * NFElem(Rat(k.second));
    r.prune();
    return r;
}

BivarPoly BivarPoly::swapped() const {
    BivarPoly r;
    for (auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

std::vector<NFPoly> BivarPoly::t_coefficients() const {
    long dt = degree_t();
    std::vector<NFPoly> out(static_cast<std::size_t>(dt + 1));
    for (long j = 0; j <= dt; ++j) {
        std::vector<NFElem> c;
        for (auto& [k, v] : terms_) {
            if (k.second != j) continue;
            if (static_cast<long>(c.size()) <= k.first) c.resize(k.first + 1);
            c[static_cast<std::size_t>(k.first)] = v;
        }
        out[static_cast<std::size_t>(j)] = NFPoly(std::move(c));
    }
    return out;
}

NFPoly BivarPoly::at_t_zero() const {
    std::vector<NFElem> c;
    for (auto& [k, v] : terms_) {
        if (k.second != 0) continue;
        if (static_cast<long>(c.size()) <= k.first) c.resize(k.first + 1);
        c[static_cast<std::size_t>(k.first)] = v;
    }
    return NFPoly(std::move(c));
}

NFPoly BivarPoly::at_s_value(const NFElem& v) const {
    std::vector<NFElem> c;
    for (auto& [k, coef] : terms_) {
        if (static_cast<long>(c.size()) <= k.second) c.resize(k.second + 1);
        c[static_cast<std::size_t>(k.second)] = c[static_cast<std::size_t>(k.second)] + coef * v.pow(k.first);
    }
    return NFPoly(std::move(c));
}

Series BivarPoly::substitute(const Series& s, const Series& t) const {
    // Horner in t over series, with s-coefficients evaluated by Horner too
    auto tc = t_coefficients();
    Series acc;
    for (std::size_t j = tc.size(); j-- > 0;) {
        acc = acc * t;
        // evaluate tc[j] at the series s
        const NFPoly& p = tc[j];
        Series val;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            val = val * s;
            val = val + Series::monomial(p.coeffs()[i], 0, Series::EXACT);
        }
        acc = acc + val;
    }
    return acc;
}

BivarPoly BivarPoly::mapped(const FieldEmbedding& emb) const {
    BivarPoly r;
    for (auto& [k, c] : terms_) r.terms_[k] = emb.map(c);
    r.prune();
    return r;
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool need_coeff = !(c == NFElem(1)) || (k.first == 0 && k.second == 0);
        if (need_coeff) os << "(" << c.str() << ")";
        if (k.first >= 1) {
            if (need_coeff) os << "*";
            os << "s";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second >= 1) {
            if (need_coeff || k.first >= 1) os << "*";
            os << "t";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

// ------------------------------------------------------------- squarefree

namespace {

// Resultant of two univariate polynomials over the field via the Euclidean
// remainder sequence.
NFElem nf_resultant(NFPoly a, NFPoly b) {
    if (a.is_zero() || b.is_zero()) return NFElem(0);
    NFElem acc(1);
    while (true) {
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
            std::swap(a, b);
        }
        if (b.degree() == 0) return acc * b.lc().pow(a.degree());
        auto [q, r] = divrem(a, b, nf_inv);
        (void)q;
        if (r.is_zero()) return NFElem(0);
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        acc = acc * b.lc().pow(a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

NFPoly nf_gcd(const NFPoly& a, const NFPoly& b) { return gcd_monic(a, b, nf_inv); }

} // namespace

bool squarefree_check(const BivarPoly& d) {
    if (d.is_zero()) throw Error("squarefree_check: zero polynomial");
    BivarPoly e = d;
    int s_power = 0, t_power = 0;
    while (e.divisible_by_s()) {
        e = e.divided_by_s();
        ++s_power;
    }
    while (e.divisible_by_t()) {
        e = e.divided_by_t();
        ++t_power;
    }
    if (s_power > 1 || t_power > 1) return false;
    if (e.degree_t() <= 0 && e.degree_s() <= 0) return true;

    // t-content: gcd of the s-coefficient polynomials
    auto tc = e.t_coefficients();
    NFPoly content;
    for (auto& p : tc) content = nf_gcd(content, p);
    if (content.degree() > 0) {
        // content must itself be squarefree
        if (nf_gcd(content, content.derivative()).degree() > 0) return false;
        NFPoly icontent = content;
        // divide out the content
        for (auto& p : tc) p = divrem(p, icontent, nf_inv).first;
    }
    if (e.degree_t() <= 0) return true;

    // primitive part squarefree in F(s)[t]: discriminant certificate by
    // evaluation at enough good points
    auto eval_at = [&](const NFElem& v) {
        std::vector<NFElem> c(tc.size());
        for (std::size_t j = 0; j < tc.size(); ++j) c[j] = tc[j].eval(v);
        return NFPoly(std::move(c));
    };
    long ds = 0, dt = static_cast<long>(tc.size()) - 1;
    for (auto& p : tc) ds = std::max(ds, p.degree());
    long bound = 2 * ds * dt + 1;
    long good = 0;
    for (long v = 0; good <= bound; ++v) {
        if (v > 8 * bound + 64) throw Error("squarefree_check: ran out of sample points");
        NFElem x{Rat(v)};
        if (tc.back().eval(x).is_zero()) continue; // leading coefficient vanished
        NFPoly pv = eval_at(x);
        NFPoly dv = pv.derivative();
        if (dv.is_zero()) continue;
        ++good;
        if (!nf_resultant(pv, dv).is_zero()) return true;
    }
    return false; // discriminant vanished at bound+1 good points: repeated factor
}

} // namespace mfb
