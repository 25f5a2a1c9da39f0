#include "mfb/number_field.hpp"
#include "mfb/qfactor.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mfb {

// ---------------------------------------------------------------- NFElem

NFElem::NFElem(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw Error("NFElem: null field in explicit constructor");
    c_.resize(field_->degree(), Rat(0));
    reduce();
}

bool NFElem::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElem::rational_value() const {
    if (!is_rational()) throw Error("NFElem: not rational: " + str());
    return c_.empty() ? Rat(0) : c_[0];
}

void NFElem::reduce() {
    if (!field_) return;
    std::size_t n = field_->degree();
    if (c_.size() <= n) {
        c_.resize(n, Rat(0));
        return;
    }
    const auto& m = field_->minimal_polynomial().coeffs(); // monic, degree n
    for (std::size_t i = c_.size(); i-- > n;) {
        Rat f = c_[i];
        if (f == 0) continue;
        c_[i] = 0;
        for (std::size_t j = 0; j < n; ++j) c_[i - n + j] -= f * m[j];
    }
    c_.resize(n);
}

void NFElem::unify(NFElem& a, NFElem& b) {
    if (NumberField::same(a.field_, b.field_)) return;
    if (!a.field_) {
        Rat v = a.c_.empty() ? Rat(0) : a.c_[0];
        a = b.field_->from_rational(v);
        return;
    }
    if (!b.field_) {
        Rat v = b.c_.empty() ? Rat(0) : b.c_[0];
        b = a.field_->from_rational(v);
        return;
    }
    if (a.field_->is_rationals()) {
        a = b.field_->from_rational(a.rational_value());
        return;
    }
    if (b.field_->is_rationals()) {
        b = a.field_->from_rational(b.rational_value());
        return;
    }
    throw FieldMismatch(a.field_->generator_name() + " vs " + b.field_->generator_name());
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem x = a, y = b;
    NFElem::unify(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem x = a, y = b;
    NFElem::unify(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    NFElem x = a, y = b;
    NFElem::unify(x, y);
    std::vector<Rat> prod(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j)
            if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
    }
    NFElem r;
    r.field_ = x.field_;
    r.c_ = std::move(prod);
    r.reduce();
    if (!r.field_) r.c_.resize(1);
    return r;
}

bool operator==(const NFElem& a, const NFElem& b) {
    NFElem x = a, y = b;
    NFElem::unify(x, y);
    return x.c_ == y.c_;
}

NFElem NFElem::inv() const {
    if (is_zero()) throw DivisionByZero("field element");
    if (!field_ || is_rational()) {
        NFElem r = *this;
        r.c_[0] = 1 / c_[0];
        for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
        return r;
    }
    // extended Euclid of the coefficient polynomial against the minimal polynomial
    QPoly a{std::vector<Rat>(c_)};
    const QPoly& m = field_->minimal_polynomial();
    QPoly r0 = m, r1 = a, s0{}, s1 = QPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1, rat_inv);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (constant, since m irreducible and a nonzero of lower degree)
    if (r0.degree() != 0) throw Error("inv: gcd with minimal polynomial not constant");
    QPoly u = s0 * (1 / r0.lc());
    std::vector<Rat> uc = u.coeffs();
    NFElem out;
    out.field_ = field_;
    out.c_ = std::move(uc);
    out.c_.resize(field_->degree(), Rat(0));
    return out;
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    NFElem acc(Rat(1));
    NFElem base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool NFElem::lex_less(const NFElem& a, const NFElem& b) {
    NFElem x = a, y = b;
    unify(x, y);
    return x.c_ < y.c_;
}

std::string NFElem::str() const {
    std::string gen = field_ ? field_->generator_name() : "";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0 || v != 1 || gen.empty()) {
            os << v.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << gen;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- NumberField

static void check_minpoly_shape(const QPoly& m) {
    if (m.degree() < 1) throw Error("minimal polynomial must have degree >= 1");
    if (m.lc() != 1) throw Error("minimal polynomial must be monic");
    for (const auto& c : m.coeffs())
        if (!is_integer(c)) throw Error("minimal polynomial must have integer coefficients");
}

FieldPtr NumberField::create(const std::string& generator, const QPoly& minimal_polynomial) {
    check_minpoly_shape(minimal_polynomial);
    if (minimal_polynomial.degree() > 8)
        throw UnsupportedDegree("irreducibility check supports degree <= 8, got " +
                                std::to_string(minimal_polynomial.degree()));
    if (minimal_polynomial.degree() > 1 && !is_irreducible_over_q(minimal_polynomial))
        throw Error("minimal polynomial is reducible over Q");
    return FieldPtr(new NumberField(generator, minimal_polynomial));
}

FieldPtr NumberField::create_certified(const std::string& generator, const QPoly& minimal_polynomial) {
    check_minpoly_shape(minimal_polynomial);
    if (minimal_polynomial.degree() > max_degree())
        throw UnsupportedDegree("field degree " + std::to_string(minimal_polynomial.degree()) +
                                " exceeds cap " + std::to_string(max_degree()));
    return FieldPtr(new NumberField(generator, minimal_polynomial));
}

FieldPtr NumberField::rationals() {
    static FieldPtr q = FieldPtr(new NumberField("q", QPoly(std::vector<Rat>{Rat(0), Rat(1)})));
    return q;
}

NFElem NumberField::generator() const {
    std::vector<Rat> c(degree(), Rat(0));
    if (degree() == 1) {
        // Q: the generator is a root of x, i.e. zero
        return NFElem(shared_from_this(), std::move(c));
    }
    c[1] = 1;
    return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::element(std::vector<Rat> coeffs) const {
    return NFElem(shared_from_this(), std::move(coeffs));
}

NFElem NumberField::from_rational(const Rat& v) const {
    std::vector<Rat> c(degree(), Rat(0));
    c[0] = v;
    return NFElem(shared_from_this(), std::move(c));
}

bool NumberField::same(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->generator_name() == b->generator_name() &&
           a->minimal_polynomial() == b->minimal_polynomial();
}

long NumberField::max_degree() {
    if (const char* env = std::getenv("MILNOR_MAX_DEGREE")) {
        long v = std::atol(env);
        if (v >= 1) return v;
    }
    return 16;
}

// ---------------------------------------------------------------- embeddings

NFElem FieldEmbedding::map(const NFElem& x) const {
    if (!x.field() || x.is_rational()) {
        Rat v = x.coeffs().empty() ? Rat(0) : x.coeffs()[0];
        return to->from_rational(v);
    }
    if (!NumberField::same(x.field(), from))
        throw FieldMismatch("embedding applied to element of a different field");
    NFElem acc = to->from_rational(Rat(0));
    for (std::size_t i = x.coeffs().size(); i-- > 0;)
        acc = acc * generator_image + to->from_rational(x.coeffs()[i]);
    return acc;
}

NFPoly FieldEmbedding::map(const NFPoly& p) const {
    std::vector<NFElem> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = map(p.coeffs()[i]);
    return NFPoly(std::move(c));
}

// ------------------------------------------------- resultants over Q[z]

namespace {

// Bivariate polynomial in (z, w) stored as w-coefficient list of Q[z] polys.
struct BiPoly {
    std::vector<QPoly> wc; // wc[j] = coefficient of w^j, a polynomial in z
    void trim() {
        while (!wc.empty() && wc.back().is_zero()) wc.pop_back();
    }
    long wdeg() const { return static_cast<long>(wc.size()) - 1; }
    long zdeg() const {
        long d = -1;
        for (const auto& p : wc) d = std::max(d, p.degree());
        return d;
    }
};

// h over F, as H(z,w) with theta -> w. Then substitute z -> z - k*w.
BiPoly lift_and_shift(const NFPoly& h, long k) {
    BiPoly out;
    // (z - k w)^i expanded incrementally
    std::vector<std::vector<Rat>> zw; // zw[j] = coeff of w^j as z-poly coeffs? use direct expansion
    // direct: for each i, binomials
    long m = h.degree();
    std::vector<std::vector<QPoly>> pw; // pw[i][j] = coeff of w^j in (z-kw)^i
    pw.resize(static_cast<std::size_t>(m) + 1);
    pw[0] = {QPoly::constant(Rat(1))};
    QPoly z = QPoly::monomial(Rat(1), 1);
    for (long i = 1; i <= m; ++i) {
        const auto& prev = pw[static_cast<std::size_t>(i - 1)];
        std::vector<QPoly> cur(prev.size() + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            cur[j] = cur[j] + prev[j] * z;              // * z
            cur[j + 1] = cur[j + 1] + prev[j] * Rat(-k); // * (-k w)
        }
        pw[static_cast<std::size_t>(i)] = std::move(cur);
    }
    for (long i = 0; i <= m; ++i) {
        const NFElem& ci = h[static_cast<std::size_t>(i)];
        // ci as polynomial in theta -> w
        for (std::size_t t = 0; t < ci.coeffs().size(); ++t) {
            Rat v = ci.coeffs()[t];
            if (v == 0) continue;
            const auto& piece = pw[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < piece.size(); ++j) {
                std::size_t widx = j + t;
                if (out.wc.size() <= widx) out.wc.resize(widx + 1);
                out.wc[widx] = out.wc[widx] + piece[j] * v;
            }
        }
    }
    out.trim();
    return out;
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat ipiv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * ipiv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Sylvester resultant Res_w(A, B(z,w)) as a polynomial in z, A monic in w.
// Evaluation-interpolation: the matrix dimensions are fixed by the formal
// w-degree of B, so specialization commutes with the determinant.
QPoly resultant_w(const QPoly& A, const BiPoly& B) {
    long n = A.degree();
    long d = B.wdeg();
    if (d < 0) return {};
    if (d == 0) {
        // Res_w(A, b0(z)) = b0(z)^n
        QPoly r = QPoly::constant(Rat(1));
        for (long i = 0; i < n; ++i) r = r * B.wc[0];
        return r;
    }
    long D = n * B.zdeg();
    if (D < 0) D = 0;
    std::vector<Rat> xs, ys;
    std::size_t size = static_cast<std::size_t>(n + d);
    for (long t = 0; static_cast<long>(xs.size()) <= D; ++t) {
        Rat zt(t);
        std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size, Rat(0)));
        // d rows of A shifts
        for (long r = 0; r < d; ++r)
            for (long j = 0; j <= n; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - j)] =
                    A[static_cast<std::size_t>(j)];
        // n rows of B shifts
        for (long r = 0; r < n; ++r)
            for (long j = 0; j <= d; ++j)
                m[static_cast<std::size_t>(d + r)][static_cast<std::size_t>(r + d - j)] =
                    B.wc[static_cast<std::size_t>(j)].eval(zt);
        xs.push_back(zt);
        ys.push_back(det_rational(std::move(m)));
    }
    // Lagrange interpolation
    QPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly li = QPoly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li = li * QPoly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + li * (ys[i] / denom);
    }
    return acc;
}

bool squarefree_q(const QPoly& f) {
    if (f.degree() <= 0) return false;
    return qgcd(f, f.derivative()).degree() == 0;
}

} // namespace

// ---------------------------------------------------------------- adjoin_root

std::string fresh_generator_name(const std::vector<std::string>& used) {
    for (char c = 'a'; c <= 'z'; ++c) {
        std::string name(1, c);
        if (name == "s" || name == "t" || name == "x") continue;
        if (std::find(used.begin(), used.end(), name) == used.end()) return name;
    }
    throw Error("generator name pool exhausted");
}

AdjoinResult adjoin_root(const FieldPtr& F, const NFPoly& h, const std::string& generator_hint) {
    if (h.degree() < 1 || !(h.lc() == NFElem(1)))
        throw Error("adjoin_root: polynomial must be monic of degree >= 1");
    FieldEmbedding identity{F, F, F->generator()};
    if (h.degree() == 1) return {F, identity, -h[0]};

    long total = static_cast<long>(F->degree()) * h.degree();
    if (F->is_rationals()) total = h.degree();
    if (total > NumberField::max_degree())
        throw UnsupportedDegree("extension degree " + std::to_string(total) + " exceeds cap");

    auto integralize = [](const QPoly& monic_min, Rat& scale) -> QPoly {
        // replace root b by c*b so the minimal polynomial gets integer coefficients
        Int den = 1;
        for (const auto& a : monic_min.coeffs()) den = lcm(den, a.get_den());
        scale = Rat(den);
        long n = monic_min.degree();
        std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
        for (long i = 0; i <= n; ++i)
            c[static_cast<std::size_t>(i)] =
                monic_min[static_cast<std::size_t>(i)] * pow(scale, n - i);
        return QPoly(std::move(c));
    };

    if (F->is_rationals()) {
        // h already has rational coefficients
        std::vector<Rat> qc(static_cast<std::size_t>(h.degree()) + 1);
        for (long i = 0; i <= h.degree(); ++i)
            qc[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)].rational_value();
        QPoly hq(std::move(qc));
        Rat scale;
        QPoly mp = integralize(hq, scale);
        FieldPtr G = NumberField::create_certified(generator_hint, mp);
        NFElem root = G->generator() * NFElem(Rat(1) / scale);
        return {G, FieldEmbedding{F, G, G->from_rational(Rat(0))}, root};
    }

    const QPoly& M = F->minimal_polynomial();
    for (long k = 1; k < 64; ++k) {
        BiPoly B = lift_and_shift(h, k);
        QPoly N = resultant_w(M, B);
        if (!squarefree_q(N)) continue;
        N = make_monic(N, rat_inv);
        Rat scale;
        QPoly mp = integralize(N, scale);
        FieldPtr G = NumberField::create_certified(generator_hint, mp);
        NFElem gamma = G->generator() * NFElem(Rat(1) / scale); // root of N: beta + k*theta

        // theta image: linear gcd of M(w) and H(gamma - k w, w) over G
        NFElem e1 = gamma;                         // z-value
        NFElem mk = G->from_rational(Rat(-k));     // coefficient of w
        // Build H(e1 + mk*w, w) in G[w]
        NFPoly wpoly; // variable w over G
        {
            std::vector<NFElem> c{e1, mk};
            wpoly = NFPoly(std::move(c));
        }
        // H(z, w) = sum_i c_i(w) z^i with c_i(w) rational w-polys
        NFPoly Bw; // accumulate in G[w]
        {
            NFPoly acc;
            for (long i = h.degree(); i >= 0; --i) {
                acc = acc * wpoly;
                const NFElem& ci = h[static_cast<std::size_t>(i)];
                // ci's theta-coefficients become a w-polynomial
                std::vector<NFElem> cw(ci.coeffs().size());
                for (std::size_t j = 0; j < cw.size(); ++j)
                    cw[j] = G->from_rational(ci.coeffs()[j]);
                acc = acc + NFPoly(std::move(cw));
            }
            Bw = std::move(acc);
        }
        NFPoly Mw;
        {
            std::vector<NFElem> c(M.coeffs().size());
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = G->from_rational(M.coeffs()[j]);
            Mw = NFPoly(std::move(c));
        }
        NFPoly g = gcd_monic(Mw, Bw, nf_inv);
        if (g.degree() != 1) continue; // unlucky k
        NFElem theta_img = -g[0];
        NFElem root = gamma - G->from_rational(Rat(k)) * theta_img;
        FieldEmbedding emb{F, G, theta_img};
        // sanity: h maps to zero at root
        NFPoly hg = emb.map(h);
        if (!hg.eval(root).is_zero()) throw Error("adjoin_root: internal consistency failure");
        return {G, emb, root};
    }
    throw Error("adjoin_root: no squarefree norm found");
}

// ---------------------------------------------------------------- Trager

std::vector<NFPoly> factor_over_field(const FieldPtr& F, const NFPoly& g) {
    std::vector<NFPoly> out;
    if (g.degree() < 1) return out;
    if (F->is_rationals()) {
        std::vector<Rat> qc(static_cast<std::size_t>(g.degree()) + 1);
        for (long i = 0; i <= g.degree(); ++i)
            qc[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)].rational_value();
        auto fac = factor_rational_poly(QPoly(std::move(qc)));
        for (auto& [q, mult] : fac.factors) {
            if (mult != 1) throw Error("factor_over_field expects squarefree input");
            std::vector<NFElem> c(q.coeffs().size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = NFElem(q.coeffs()[i]);
            out.emplace_back(std::move(c));
        }
        return out;
    }
    const QPoly& M = F->minimal_polynomial();
    for (long k = 0; k < 64; ++k) {
        BiPoly B = lift_and_shift(g, k);
        QPoly N = resultant_w(M, B);
        if (!squarefree_q(N)) continue;
        auto fac = factor_rational_poly(make_monic(N, rat_inv));
        NFElem ktheta = F->generator() * NFElem(Rat(k));
        NFPoly shift; // z + k theta
        {
            std::vector<NFElem> c{ktheta, NFElem(1)};
            shift = NFPoly(std::move(c));
        }
        NFPoly rest = g;
        for (auto& [ni, mult] : fac.factors) {
            (void)mult;
            // n_i(z + k theta) over F
            NFPoly nif;
            {
                NFPoly acc;
                for (long i = ni.degree(); i >= 0; --i) {
                    acc = acc * shift;
                    acc = acc + NFPoly::constant(F->from_rational(ni[static_cast<std::size_t>(i)]));
                }
                nif = std::move(acc);
            }
            NFPoly fi = gcd_monic(rest, nif, nf_inv);
            if (fi.degree() >= 1) {
                rest = divrem(rest, fi, nf_inv).first;
                out.push_back(std::move(fi));
            }
        }
        long degsum = 0;
        for (const auto& f : out) degsum += f.degree();
        if (degsum != g.degree() || rest.degree() != 0) throw Error("Trager factorization incomplete");
        std::sort(out.begin(), out.end(), [](const NFPoly& a, const NFPoly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
                if (a.coeffs()[i] == b.coeffs()[i]) continue;
                return NFElem::lex_less(a.coeffs()[i], b.coeffs()[i]);
            }
            return false;
        });
        return out;
    }
    throw Error("factor_over_field: no squarefree norm found");
}

// ---------------------------------------------------------------- splitting

SplitResult split_completely(const FieldPtr& F, const NFPoly& g) {
    if (g.degree() < 1) throw Error("split_completely: need degree >= 1");
    SplitResult res;
    res.field = F;
    res.embedding = FieldEmbedding{F, F, F->generator()};

    struct Pending {
        NFPoly poly;
        int mult;
    };
    std::vector<Pending> queue;
    for (auto& [p, m] : squarefree_decomposition(make_monic(g, nf_inv), nf_inv))
        queue.push_back({p, m});

    std::vector<std::string> used{F->generator_name(), "q"};

    while (!queue.empty()) {
        Pending item = std::move(queue.back());
        queue.pop_back();
        if (item.poly.degree() < 1) continue;
        auto factors = factor_over_field(res.field, item.poly);
        std::vector<NFPoly> nonlinear;
        for (auto& f : factors) {
            if (f.degree() == 1)
                res.roots.emplace_back(-f[0], item.mult);
            else
                nonlinear.push_back(std::move(f));
        }
        if (nonlinear.empty()) continue;

        // adjoin a root of the first nonlinear factor and remap all state
        std::string name = fresh_generator_name(used);
        AdjoinResult adj = adjoin_root(res.field, nonlinear.front(), name);
        used.push_back(name);
        for (auto& [r, m] : res.roots) {
            (void)m;
            r = adj.embedding.map(r);
        }
        for (auto& p : queue) p.poly = adj.embedding.map(p.poly);
        res.embedding =
            FieldEmbedding{F, adj.field, adj.embedding.map(res.embedding.generator_image)};
        res.field = adj.field;

        NFPoly h = adj.embedding.map(nonlinear.front());
        NFPoly lin(std::vector<NFElem>{-adj.root, adj.field->from_rational(Rat(1))});
        NFPoly rest = divrem(h, lin, nf_inv).first;
        res.roots.emplace_back(adj.root, item.mult);
        if (rest.degree() >= 1) queue.push_back({rest, item.mult});
        for (std::size_t i = 1; i < nonlinear.size(); ++i)
            queue.push_back({adj.embedding.map(nonlinear[i]), item.mult});
    }

    std::sort(res.roots.begin(), res.roots.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return NFElem::lex_less(a.first, b.first);
    });
    return res;
}

} // namespace mfb
