#include "mfb/series.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mfb {

Series::Series(std::vector<std::pair<long, NFElem>> terms, long prec)
    : terms_(std::move(terms)), prec_(prec) {
    normalize();
}

void Series::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, NFElem>> out;
    for (auto& [e, c] : terms_) {
        if (e < 0) throw Error("Series: negative exponent");
        if (prec_ != EXACT && e >= prec_) continue;
        if (!out.empty() && out.back().first == e)
            out.back().second = out.back().second + c;
        else
            out.emplace_back(e, c);
    }
    terms_.clear();
    for (auto& [e, c] : out)
        if (!c.is_zero()) terms_.emplace_back(e, std::move(c));
}

Series Series::monomial(const NFElem& c, long e, long prec) {
    return Series({{e, c}}, prec);
}

std::optional<long> Series::order() const {
    if (!terms_.empty()) return terms_.front().first;
    if (is_exact()) return ORD_INF;
    return std::nullopt;
}

NFElem Series::coeff(long e) const {
    for (const auto& [k, c] : terms_)
        if (k == e) return c;
    return NFElem(0);
}

NFElem Series::leading_coeff() const {
    if (terms_.empty()) throw Error("Series: no leading coefficient");
    return terms_.front().second;
}

Series Series::truncated(long new_prec) const {
    Series r = *this;
    r.prec_ = sat_min(prec_, new_prec);
    r.normalize();
    return r;
}

Series Series::shifted(long delta) const {
    Series r;
    r.prec_ = prec_ == EXACT ? EXACT : prec_ + delta;
    for (auto& [e, c] : terms_) {
        if (e + delta < 0) throw Error("Series: shift below zero");
        r.terms_.emplace_back(e + delta, c);
    }
    r.normalize();
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series r;
    r.prec_ = sat_min(a.prec_, b.prec_);
    r.terms_ = a.terms_;
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.normalize();
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::operator-() const {
    Series r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    // knowledge bound: min(prec_a + ord_b, prec_b + ord_a)
    long orda = a.terms_.empty() ? (a.is_exact() ? Series::EXACT : a.prec_) : a.terms_.front().first;
    long ordb = b.terms_.empty() ? (b.is_exact() ? Series::EXACT : b.prec_) : b.terms_.front().first;
    if (a.terms_.empty() && a.is_exact()) return Series::zero(Series::EXACT);
    if (b.terms_.empty() && b.is_exact()) return Series::zero(Series::EXACT);
    Series r;
    r.prec_ = sat_min(sat_add(a.prec_, ordb), sat_add(b.prec_, orda));
    std::map<long, NFElem> acc;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            long e = ea + eb;
            if (r.prec_ != Series::EXACT && e >= r.prec_) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ca * cb);
            else
                it->second = it->second + ca * cb;
        }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, c);
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

Series Series::scaled(const NFElem& c) const {
    Series r = *this;
    for (auto& [e, v] : r.terms_) v = v * c;
    r.normalize();
    return r;
}

Series Series::param_scaled(const NFElem& u) const {
    Series r = *this;
    for (auto& [e, v] : r.terms_) v = v * u.pow(e);
    r.normalize();
    return r;
}

Series Series::stretched(long k) const {
    if (k < 1) throw Error("Series: stretch factor must be positive");
    Series r;
    r.prec_ = prec_ == EXACT ? EXACT : prec_ * k;
    for (auto& [e, c] : terms_) r.terms_.emplace_back(e * k, c);
    return r;
}

Series Series::powed(long k) const {
    if (k < 0) throw Error("Series: negative power");
    Series acc = Series::monomial(NFElem(1), 0);
    Series base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Series Series::divide(const Series& a, const Series& b, long target) {
    auto ob = b.order();
    if (!ob || *ob == ORD_INF) throw DivisionByZero("series division");
    if (a.is_certainly_zero()) return Series::zero(EXACT);
    auto oa = a.order();
    if (oa && *oa != ORD_INF && *oa < *ob) throw Error("Series: division would be a Laurent series");

    long shift = *ob;
    // long division in increasing powers: q gets certified up to
    // min(prec a, prec b) - shift; a terminating exact division stays exact.
    long common = sat_min(a.prec_, b.prec_);
    long justified = common == EXACT ? EXACT : common - shift;
    long want = sat_min(justified, target);
    if (want == EXACT) want = target;

    Series rem = a;
    Series q;
    q.prec_ = want;
    NFElem ilead = b.leading_coeff().inv();
    while (true) {
        if (rem.terms_.empty()) {
            if (rem.is_exact() && a.is_exact() && b.is_exact()) q.prec_ = EXACT;
            break;
        }
        long e = rem.terms_.front().first - shift;
        if (e < 0) throw Error("Series: division misalignment");
        if (e >= want) break;
        NFElem coef = rem.terms_.front().second * ilead;
        q.terms_.emplace_back(e, coef);
        rem = rem - b.scaled(coef).shifted(e);
    }
    q.normalize();
    return q;
}

Series Series::mapped(const FieldEmbedding& emb) const {
    Series r = *this;
    for (auto& [e, c] : r.terms_) c = emb.map(c);
    r.normalize();
    return r;
}

std::string Series::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e == 1)
            os << "*" << var;
        else if (e > 1)
            os << "*" << var << "^" << e;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
}

} // namespace mfb
