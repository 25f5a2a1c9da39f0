#include "mfb/qfactor.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <functional>

namespace mfb {

Rat resultant(QPoly a, QPoly b) {
    // Euclidean remainder sequence: for a = qb + r,
    // res(a,b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b,r).
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat acc(1);
    while (true) {
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
            std::swap(a, b);
        }
        if (b.degree() == 0) return acc * pow(b.lc(), a.degree());
        auto [q, r] = divrem(a, b, rat_inv);
        (void)q;
        if (r.is_zero()) return Rat(0);
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        acc = acc * pow(b.lc(), a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

using ZPoly = std::vector<Int>; // dense, c[i] = coeff of x^i, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return QPoly(std::move(c));
}

// Clear denominators and content: f = (num/den) * primitive(p)
ZPoly to_primitive_z(const QPoly& f) {
    Int den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
    ZPoly p(f.coeffs().size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat v = f.coeffs()[i] * Rat(den);
        p[i] = v.get_num();
    }
    Int cont = zcontent(p);
    if (cont > 1)
        for (auto& c : p) c /= cont;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

Int mod_sym(const Int& a, const Int& p) { // symmetric representative in (-p/2, p/2]
    Int r = a % p;
    if (r < 0) r += p;
    if (2 * r > p) r -= p;
    return r;
}

Int mod_pos(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int inv_mod(const Int& a, const Int& p) {
    Int x, y;
    Int g = gcdext(mod_pos(a, p), p, x, y);
    if (g != 1) throw Error("inv_mod: not invertible");
    return mod_pos(x, p);
}

struct Zp {
    Int p;
    ZPoly reduce(ZPoly f) const {
        for (auto& c : f) c = mod_pos(c, p);
        ztrim(f);
        return f;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        ztrim(r);
        return r;
    }
    ZPoly sub(ZPoly a, const ZPoly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), Int(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_pos(a[i] - b[i], p);
        ztrim(a);
        return a;
    }
    ZPoly monic(ZPoly f) const {
        if (f.empty()) return f;
        Int il = inv_mod(f.back(), p);
        for (auto& c : f) c = (c * il) % p;
        return f;
    }
    ZPoly rem(ZPoly a, const ZPoly& b) const {
        Int il = inv_mod(b.back(), p);
        while (zdeg(a) >= zdeg(b) && !a.empty()) {
            Int f = (a.back() * il) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_pos(a[shift + i] - f * b[i], p);
            ztrim(a);
        }
        return a;
    }
    ZPoly quot(ZPoly a, const ZPoly& b) const {
        ZPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Int(0));
        Int il = inv_mod(b.back(), p);
        while (zdeg(a) >= zdeg(b) && !a.empty()) {
            Int f = (a.back() * il) % p;
            std::size_t shift = a.size() - b.size();
            q[shift] = f;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_pos(a[shift + i] - f * b[i], p);
            ztrim(a);
        }
        ztrim(q);
        return q;
    }
    ZPoly gcd(ZPoly a, ZPoly b) const {
        while (!b.empty()) {
            ZPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : monic(a);
    }
    // base^e mod f, e an arbitrary-precision exponent
    ZPoly powmod(ZPoly base, Int e, const ZPoly& f) const {
        ZPoly acc{Int(1)};
        base = rem(std::move(base), f);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base), f);
            base = rem(mul(base, base), f);
            e >>= 1;
        }
        return acc;
    }
};

// Cantor-Zassenhaus equal-degree splitting of g (monic squarefree mod p,
// all irreducible factors of degree d). Deterministic seed for reproducibility.
void equal_degree_split(const Zp& zp, const ZPoly& g, long d, std::vector<ZPoly>& out,
                        gmp_randclass& rng) {
    if (zdeg(g) == d) {
        out.push_back(g);
        return;
    }
    Int pd = pow(zp.p, static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;
    while (true) {
        ZPoly u(static_cast<std::size_t>(zdeg(g)), Int(0));
        for (auto& c : u) c = rng.get_z_range(zp.p);
        ztrim(u);
        if (u.empty()) continue;
        ZPoly w = zp.powmod(u, e, g);
        if (w.empty()) continue;
        w[0] = mod_pos(w[0] - 1, zp.p);
        ztrim(w);
        ZPoly h = zp.gcd(w, g);
        if (!h.empty() && zdeg(h) > 0 && zdeg(h) < zdeg(g)) {
            equal_degree_split(zp, h, d, out, rng);
            equal_degree_split(zp, zp.quot(g, h), d, out, rng);
            return;
        }
    }
}

std::vector<ZPoly> factor_mod_p(const Zp& zp, ZPoly f) {
    std::vector<ZPoly> out;
    f = zp.monic(std::move(f));
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(42);
    // distinct-degree
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;
    long d = 0;
    while (zdeg(f) > 0) {
        ++d;
        if (2 * d > zdeg(f)) {
            out.push_back(f);
            break;
        }
        h = zp.powmod(h, zp.p, f);
        ZPoly g = zp.gcd(zp.sub(h, x), f);
        if (zdeg(g) > 0) {
            equal_degree_split(zp, g, d, out, rng);
            f = zp.quot(f, g);
            h = zp.rem(h, f);
        }
    }
    return out;
}

// Exact trial division over Z: returns quotient if divisible.
bool zdivide(const ZPoly& f, const ZPoly& g, ZPoly& q) {
    QPoly qf = to_qpoly(f), qg = to_qpoly(g);
    auto [quo, rem] = divrem(qf, qg, rat_inv);
    if (!rem.is_zero()) return false;
    for (const auto& c : quo.coeffs())
        if (!is_integer(c)) return false;
    q.assign(quo.coeffs().size(), Int(0));
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = quo.coeffs()[i].get_num();
    return true;
}

// Factor a primitive squarefree f over Z into irreducible primitive factors.
std::vector<ZPoly> factor_squarefree_primitive(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) <= 0) return out;
    // x | f
    while (f[0] == 0) {
        out.push_back(ZPoly{Int(0), Int(1)});
        f.erase(f.begin());
    }
    if (zdeg(f) == 0) return out;
    if (zdeg(f) == 1) {
        out.push_back(f);
        return out;
    }
    // Mignotte bound for coefficients of any integer factor of f (times lc)
    Int norm1 = 0;
    for (const auto& c : f) norm1 += abs(c);
    Int bound = (Int(1) << static_cast<unsigned>(zdeg(f) + 2)) * norm1 * abs(f.back());
    Int p = bound * 2 + 3;
    Zp zp;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        zp.p = p;
        if (f.back() % p == 0) continue;
        // need f squarefree mod p
        ZPoly fb = zp.reduce(f);
        ZPoly d = fb;
        // derivative mod p
        ZPoly der(fb.size() > 1 ? fb.size() - 1 : 0, Int(0));
        for (std::size_t i = 1; i < fb.size(); ++i) der[i - 1] = (fb[i] * Int(i)) % p;
        ztrim(der);
        if (der.empty()) continue;
        if (zdeg(zp.gcd(fb, der)) != 0) continue;
        break;
    }
    std::vector<ZPoly> modular = factor_mod_p(zp, zp.reduce(f));
    std::sort(modular.begin(), modular.end(),
              [](const ZPoly& a, const ZPoly& b) { return zdeg(a) < zdeg(b); });

    // subset recombination with symmetric lift
    auto lift_candidate = [&](const std::vector<std::size_t>& idx) {
        ZPoly prod{mod_pos(f.back(), zp.p)};
        for (auto i : idx) prod = zp.mul(prod, modular[i]);
        for (auto& c : prod) c = mod_sym(c, zp.p);
        Int cont = zcontent(prod);
        if (cont > 1)
            for (auto& c : prod) c /= cont;
        if (!prod.empty() && prod.back() < 0)
            for (auto& c : prod) c = -c;
        return prod;
    };
    std::size_t size = 1;
    while (2 * size <= modular.size()) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t depth) -> bool {
            if (depth == size) {
                ZPoly cand = lift_candidate(pick);
                ZPoly q;
                if (zdeg(cand) > 0 && zdivide(f, cand, q)) {
                    out.push_back(cand);
                    // remove the used modular factors, largest index first
                    for (std::size_t k = size; k-- > 0;)
                        modular.erase(modular.begin() + static_cast<long>(pick[k]));
                    f = q;
                    return true;
                }
                return false;
            }
            for (std::size_t i = start; i < modular.size(); ++i) {
                pick[depth] = i;
                if (rec(i + 1, depth + 1)) return true;
            }
            return false;
        };
        found = rec(0, 0);
        if (!found) ++size;
    }
    if (zdeg(f) > 0) out.push_back(f);
    return out;
}

} // namespace

QFactorization factor_rational_poly(const QPoly& f) {
    if (f.is_zero()) throw Error("factor_rational_poly: zero polynomial");
    QFactorization res;
    res.lead = f.lc();
    if (f.degree() == 0) return res;
    auto squarefree = squarefree_decomposition(f, rat_inv);
    for (auto& [part, mult] : squarefree) {
        ZPoly z = to_primitive_z(part);
        for (auto& irr : factor_squarefree_primitive(z)) {
            QPoly q = to_qpoly(irr);
            q = make_monic(q, rat_inv);
            res.factors.emplace_back(std::move(q), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return a.first.coeffs() < b.first.coeffs();
              });
    return res;
}

bool is_irreducible_over_q(const QPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto fac = factor_rational_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<Rat> rational_roots(const QPoly& f) {
    std::vector<Rat> roots;
    auto fac = factor_rational_poly(f);
    for (auto& [g, mult] : fac.factors) {
        (void)mult;
        if (g.degree() == 1) roots.push_back(-g[0]); // monic: x + c
    }
    return roots;
}

} // namespace mfb
