#include "mfb/branch.hpp"
#include "mfb/cursor.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mfb {

using detail::RetryPrecision;
using detail::need_order;

namespace {

long egcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long x1, y1;
    long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

// ------------------------------------------------------------ PuiseuxRecipe

PuiseuxRecipe PuiseuxRecipe::mapped(const FieldEmbedding& emb) const {
    PuiseuxRecipe r = *this;
    for (auto& lv : r.levels) lv.z0 = emb.map(lv.z0);
    r.residual = residual.mapped(emb);
    return r;
}

std::pair<Series, Series> PuiseuxRecipe::realize(long prec) const {
    // lift the unique simple y-root of the residual through the origin
    NFElem g1 = residual.coeff(0, 1);
    if (!residual.coeff(0, 0).is_zero() || g1.is_zero())
        throw Error("PuiseuxRecipe: residual is not in simple-root form");
    NFElem ig1 = g1.inv();
    Series x = Series::monomial(NFElem(1), 1);
    Series partial; // exact polynomial prefix of y1
    for (long k = 1; k < prec; ++k) {
        NFElem ck = residual.substitute(x, partial).coeff(k);
        if (!ck.is_zero()) partial = partial + Series::monomial(-(ck * ig1), k);
    }
    bool terminated = residual.substitute(x, partial).is_certainly_zero();
    Series y1 = terminated ? partial : partial.truncated(prec);

    // recompose through the substitution chain, innermost level first
    Series X = Series::monomial(NFElem(1), 1);
    Series Y = y1;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        Series xq = X.powed(it->q);
        Y = xq * (Series::monomial(it->z0, 0) + Y);
        X = X.powed(it->p);
    }
    if (swapped) return {Y, X};
    return {X, Y};
}

// ------------------------------------------------------------ Branch

long Branch::truncation_order() const { return sat_min(s_.prec(), t_.prec()); }

void Branch::validate() const {
    auto os = s_.order(), ot = t_.order();
    long a = os.value_or(1), b = ot.value_or(1);
    if (std::min(a, b) < 1) throw Error("Branch: parametrization does not pass through the origin");
    if (defining_) {
        Series sub = defining_->substitute(s_, t_);
        if (!sub.terms().empty())
            throw Error("Branch: defining polynomial does not vanish on the parametrization");
    }
}

Branch Branch::exact(FieldPtr field, Series s, Series t, std::optional<BivarPoly> defining) {
    if (!s.is_exact() || !t.is_exact()) throw Error("Branch::exact needs exact series");
    // primitivity: reparametrize by tau -> tau^(1/g) when the exponent gcd is g > 1
    while (true) {
        long g = 0;
        for (auto& [e, c] : s.terms()) g = std::gcd(g, e);
        for (auto& [e, c] : t.terms()) g = std::gcd(g, e);
        if (g <= 1) break;
        auto shrink = [&](const Series& x) {
            std::vector<std::pair<long, NFElem>> terms;
            for (auto& [e, c] : x.terms()) terms.emplace_back(e / g, c);
            return Series(std::move(terms));
        };
        s = shrink(s);
        t = shrink(t);
    }
    Branch b;
    b.field_ = std::move(field);
    b.s_ = std::move(s);
    b.t_ = std::move(t);
    b.defining_ = std::move(defining);
    b.validate();
    return b;
}

Branch Branch::from_recipe(FieldPtr field, PuiseuxRecipe recipe, long initial_prec,
                           std::optional<BivarPoly> defining) {
    Branch b;
    b.field_ = std::move(field);
    b.recipe_ = std::move(recipe);
    auto [s, t] = b.recipe_->realize(initial_prec);
    b.s_ = std::move(s);
    b.t_ = std::move(t);
    b.defining_ = std::move(defining);
    b.validate();
    return b;
}

void Branch::ensure_prec(long prec) {
    if (truncation_order() >= prec) return;
    if (prec > TRUNCATION_CAP)
        throw TruncationExhausted("requested precision " + std::to_string(prec));
    if (!recipe_) throw Error("Branch: truncated series without a recipe");
    auto [s, t] = recipe_->realize(prec);
    s_ = std::move(s);
    t_ = std::move(t);
    if (t_negated_) t_ = -t_;
}

Branch Branch::involuted() const {
    Branch b = *this;
    b.t_ = -t_;
    b.t_negated_ = !t_negated_;
    if (defining_) {
        std::map<BivarPoly::Key, NFElem> flipped;
        for (auto& [k, c] : defining_->terms())
            flipped[k] = (k.second % 2 == 0) ? c : -c;
        b.defining_ = BivarPoly(std::move(flipped));
    }
    return b;
}

Branch Branch::mapped(const FieldEmbedding& emb) const {
    Branch b = *this;
    b.field_ = emb.to;
    b.s_ = s_.mapped(emb);
    b.t_ = t_.mapped(emb);
    if (defining_) b.defining_ = defining_->mapped(emb);
    if (recipe_) b.recipe_ = recipe_->mapped(emb);
    return b;
}

std::string Branch::str() const {
    std::ostringstream os;
    os << "(s = " << s_.str() << ", t = " << t_.str() << ")";
    return os.str();
}

// ------------------------------------------------------------ operations

namespace {

template <class F>
auto with_extension(std::vector<Branch*> branches, F&& fn) {
    long w = 16;
    while (true) {
        if (w > Branch::TRUNCATION_CAP) throw TruncationExhausted("series computation");
        for (Branch* b : branches) b->ensure_prec(w);
        try {
            return fn(w);
        } catch (RetryPrecision&) {
            w *= 2;
        }
    }
}

} // namespace

long branch_multiplicity(const Branch& b) {
    Branch copy = b;
    return with_extension({&copy}, [&](long) {
        long a = need_order(copy.s());
        long c = need_order(copy.t());
        long m = std::min(a, c);
        if (m >= Series::ORD_INF) throw Error("degenerate parametrization (0, 0)");
        return m;
    });
}

namespace {

using detail::Cursor;
using detail::Direction;
using detail::direction_of;
using detail::same_direction;
using detail::step_cursor;
using detail::cursor_mult;

// Noether: D_a . D_b = sum of mult*mult over shared infinitely near points
long noether_intersection(Branch& a, Branch& b) {
    return with_extension({&a, &b}, [&](long w) -> long {
        Cursor ca{a.s(), a.t()}, cb{b.s(), b.t()};
        long total = 0;
        for (long steps = 0; steps <= Branch::TRUNCATION_CAP; ++steps) {
            total += cursor_mult(ca) * cursor_mult(cb);
            Direction da = direction_of(ca);
            Direction db = direction_of(cb);
            if (!same_direction(da, db)) return total;
            ca = step_cursor(ca, da, w);
            cb = step_cursor(cb, db, w);
        }
        throw RetryPrecision{};
    });
}

long substitution_intersection(Branch& a, const BivarPoly& p) {
    return with_extension({&a}, [&](long) -> long {
        Series sub = p.substitute(a.s(), a.t());
        auto o = sub.order();
        if (!o) throw RetryPrecision{};
        if (*o >= Series::ORD_INF)
            throw IdenticalBranches("polynomial vanishes identically on the branch");
        return *o;
    });
}

} // namespace

long intersection_multiplicity(Branch& a, const BivarPoly& p) {
    return substitution_intersection(a, p);
}

long intersection_multiplicity(Branch& a, Branch& b) {
    if (branches_equal(a, b)) throw IdenticalBranches("intersection of a branch with itself");
    std::optional<long> via_poly;
    if (b.defining_polynomial())
        via_poly = substitution_intersection(a, *b.defining_polynomial());
    else if (a.defining_polynomial())
        via_poly = substitution_intersection(b, *a.defining_polynomial());
    if (via_poly && a.defining_polynomial() && b.defining_polynomial()) {
        long walk = noether_intersection(a, b);
        if (walk != *via_poly)
            throw Error("intersection routes disagree: " + std::to_string(walk) + " vs " +
                        std::to_string(*via_poly));
    }
    if (via_poly) return *via_poly;
    return noether_intersection(a, b);
}

Branch apply_involution(const Branch& b) { return b.involuted(); }

bool branches_equal(Branch& a, Branch& b) {
    if (!NumberField::same(a.field(), b.field()) && !a.field()->is_rationals() &&
        !b.field()->is_rationals())
        throw FieldMismatch("branches over incompatible fields");
    return with_extension({&a, &b}, [&](long) -> bool {
        const auto &sa = a.s().terms(), &ta = a.t().terms();
        const auto &sb = b.s().terms(), &tb = b.t().terms();
        if (sa.size() != sb.size() || ta.size() != tb.size()) return false;
        std::vector<std::pair<long, NFElem>> constraints; // u^e = value
        for (std::size_t i = 0; i < sa.size(); ++i) {
            if (sa[i].first != sb[i].first) return false;
            constraints.emplace_back(sa[i].first, sa[i].second * sb[i].second.inv());
        }
        for (std::size_t i = 0; i < ta.size(); ++i) {
            if (ta[i].first != tb[i].first) return false;
            constraints.emplace_back(ta[i].first, ta[i].second * tb[i].second.inv());
        }
        if (constraints.empty()) throw RetryPrecision{}; // nothing certified yet
        // derive u from u^e = r_e via the exponent Bezout combination;
        // primitive parametrizations have exponent gcd 1
        long g = 0;
        NFElem u_g(1); // u^g = u_g for the running gcd g
        for (auto& [e, r] : constraints) {
            long x, y;
            long g2 = egcd(g, e, x, y);
            u_g = u_g.pow(x) * r.pow(y);
            g = g2;
        }
        if (g != 1) {
            // exponent gcd not 1 on the certified window; exact series mean a
            // genuinely imprimitive pair, which the constructors exclude
            if (a.s().is_exact() && a.t().is_exact() && b.s().is_exact() && b.t().is_exact())
                throw Error("branches_equal: imprimitive exact parametrization");
            throw RetryPrecision{};
        }
        NFElem u = u_g;
        for (auto& [e, r] : constraints)
            if (!(u.pow(e) == r)) return false;
        return true;
    });
}

// ------------------------------------------------- characteristic exponents

namespace {

// f(g(tau)) for ord g >= 1
Series compose_series(const Series& f, const Series& g) {
    Series acc;
    Series gp = Series::monomial(NFElem(1), 0);
    long cur = 0;
    for (auto& [e, c] : f.terms()) {
        gp = gp * g.powed(e - cur);
        cur = e;
        acc = acc + gp.scaled(c);
    }
    return acc.truncated(f.prec());
}

// w with v(w(tau)) = tau, for v = tau * unit, lc(v) = 1
Series revert_series(const Series& v, long prec) {
    Series tau = Series::monomial(NFElem(1), 1, prec);
    Series h = Series::divide(v, Series::monomial(NFElem(1), 1), prec) -
               Series::monomial(NFElem(1), 0); // v/tau - 1, ord >= 1
    Series w = tau;
    for (long k = 0; k < prec; ++k) {
        Series hw = compose_series(h, w).truncated(prec);
        Series unit = Series::monomial(NFElem(1), 0) + hw;
        w = (tau * Series::divide(Series::monomial(NFElem(1), 0), unit, prec)).truncated(prec);
    }
    return w;
}

} // namespace

std::vector<Rat> characteristic_exponents(Branch& b) {
    return with_extension({&b}, [&](long w) -> std::vector<Rat> {
        Series S = b.s(), T = b.t();
        long os = need_order(S), ot = need_order(T);
        if (std::min(os, ot) >= Series::ORD_INF) throw Error("degenerate parametrization");
        if (ot < os) {
            std::swap(S, T);
            std::swap(os, ot);
        }
        long m = os;
        if (m == 1) return {};
        // normalize: reparametrize so S becomes c * tau^m exactly
        Series T2 = T;
        if (!(S.terms().size() == 1 && S.is_exact())) {
            NFElem cm = S.leading_coeff();
            Series unit = Series::divide(S, Series::monomial(cm, m), w);
            Series u = unit - Series::monomial(NFElem(1), 0); // ord >= 1
            // (1+u)^(1/m) via the binomial series
            Series bin = Series::monomial(NFElem(1), 0);
            Series upow = Series::monomial(NFElem(1), 0);
            Rat coeff(1);
            for (long k = 1; k <= w; ++k) {
                coeff *= (Rat(1) / Rat(m) - Rat(k - 1)) / Rat(k);
                upow = (upow * u).truncated(w);
                bin = bin + upow.scaled(NFElem(coeff));
            }
            Series v = (Series::monomial(NFElem(1), 1) * bin).truncated(w);
            Series inv = revert_series(v, w);
            T2 = compose_series(T, inv);
        }
        std::vector<Rat> chars;
        long g = m;
        for (auto& [e, c] : T2.terms()) {
            if (std::gcd(g, e) < g) {
                chars.push_back(Rat(e) / Rat(m));
                g = std::gcd(g, e);
            }
            if (g == 1) break;
        }
        if (g != 1) throw RetryPrecision{};
        return chars;
    });
}

} // namespace mfb
