#include "mfb/newton_puiseux.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mfb {

namespace {

constexpr int kMaxDepth = 32;

struct Edge {
    long ja, ia; // endpoint with smaller y-exponent
    long jb, ib; // endpoint with larger y-exponent
    long p, q;   // slope q/p in lowest terms, steps of (p, -q) along the edge
    long count;  // number of lattice steps
};

// Newton polygon edges of g facing the origin: lower hull of (j = t-exp,
// i = s-exp) between the pure-x point and the pure-y point, negative slopes.
std::vector<Edge> polygon_edges(const BivarPoly& g) {
    std::map<long, long> min_i; // j -> minimal i
    for (auto& [k, c] : g.terms()) {
        auto it = min_i.find(k.second);
        if (it == min_i.end() || k.first < it->second) min_i[k.second] = k.first;
    }
    std::vector<std::pair<long, long>> pts(min_i.begin(), min_i.end()); // (j, i)
    // lower convex hull (j increasing)
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep right turns: cross((b-a), (p-a)) <= 0 pops b
            long cross = (b.first - a.first) * (p.second - a.second) -
                         (b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        auto [ja, ia] = hull[k];
        auto [jb, ib] = hull[k + 1];
        if (ib >= ia) continue; // non-negative slope: not towards the origin
        long dj = jb - ja, di = ia - ib;
        long g0 = std::gcd(dj, di);
        edges.push_back({ja, ia, jb, ib, dj / g0, di / g0, g0});
    }
    return edges;
}

// g(x^p, x^q (z0 + y)) / x^w
BivarPoly packet_substitute(const BivarPoly& g, long p, long q, const NFElem& z0) {
    long w = -1;
    for (auto& [k, c] : g.terms()) {
        long val = p * k.first + q * k.second;
        if (w < 0 || val < w) w = val;
    }
    std::map<BivarPoly::Key, NFElem> acc;
    for (auto& [k, c] : g.terms()) {
        long i = k.first, j = k.second;
        long base = p * i + q * j - w;
        // (z0 + y)^j expanded binomially
        NFElem zpow = z0.pow(j);
        NFElem z0inv;
        bool invertible = !z0.is_zero();
        if (invertible) z0inv = z0.inv();
        Rat binom(1);
        for (long k2 = 0; k2 <= j; ++k2) {
            NFElem coeff = c * NFElem(binom) * (invertible ? zpow : (k2 == j ? NFElem(1) : NFElem(0)));
            if (!coeff.is_zero()) {
                auto key = BivarPoly::Key{base, k2};
                auto it = acc.find(key);
                if (it == acc.end())
                    acc[key] = coeff;
                else
                    it->second = it->second + coeff;
            }
            // advance binom(j, k2) and z0^(j-k2)
            binom = binom * Rat(j - k2) / Rat(k2 + 1);
            if (invertible) zpow = zpow * z0inv;
        }
    }
    return BivarPoly(std::move(acc));
}

struct WorkItem {
    BivarPoly g;
    std::vector<PuiseuxRecipe::Level> levels;
    bool swapped = false;
    int depth = 0;
    bool single_edge = false;
    Edge edge{};
};

struct Expander {
    FieldPtr field;
    FieldEmbedding from_input;
    std::vector<std::string> used;
    std::deque<WorkItem> queue;
    std::vector<PuiseuxRecipe> done;

    void remap_all(const FieldEmbedding& emb, WorkItem* current,
                   std::vector<std::pair<NFElem, int>>* pending_roots) {
        for (auto& it : queue) {
            it.g = it.g.mapped(emb);
            for (auto& lv : it.levels) lv.z0 = emb.map(lv.z0);
        }
        for (auto& r : done) r = r.mapped(emb);
        if (current) {
            current->g = current->g.mapped(emb);
            for (auto& lv : current->levels) lv.z0 = emb.map(lv.z0);
        }
        if (pending_roots)
            for (auto& [r, m] : *pending_roots) r = emb.map(r);
        from_input = FieldEmbedding{from_input.from, emb.to, emb.map(from_input.generator_image)};
        field = emb.to;
        used.push_back(emb.to->generator_name());
    }
};

void process_item(Expander& ex, WorkItem item);

void process_edge(Expander& ex, WorkItem& item, const Edge& edge) {
    // edge polynomial phi(w), w the p-th power of the leading coefficient
    std::vector<NFElem> phi(static_cast<std::size_t>(edge.count) + 1);
    for (long r = 0; r <= edge.count; ++r)
        phi[static_cast<std::size_t>(r)] =
            item.g.coeff(edge.ia - r * edge.q, edge.ja + r * edge.p);
    NFPoly phipoly{std::move(phi)};
    SplitResult sp = split_completely(ex.field, phipoly);
    if (!NumberField::same(sp.field, ex.field)) ex.remap_all(sp.embedding, &item, nullptr);
    std::vector<std::pair<NFElem, int>> roots = sp.roots;

    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
        NFElem w0 = roots[ri].first;
        int r0 = roots[ri].second;
        if (w0.is_zero()) throw Error("newton polygon: zero edge root");
        NFElem z0;
        if (edge.p == 1) {
            z0 = w0;
        } else {
            // some p-th root of w0, from the smallest-degree factor of z^p - w0
            std::vector<NFElem> zc(static_cast<std::size_t>(edge.p) + 1);
            zc[0] = -w0;
            zc[static_cast<std::size_t>(edge.p)] = NFElem(1);
            NFPoly zp{std::move(zc)};
            auto factors = factor_over_field(ex.field, zp); // sorted by degree
            const NFPoly& f0 = factors.front();
            if (f0.degree() == 1) {
                z0 = -f0[0];
            } else {
                std::vector<std::string> used = ex.used;
                used.push_back(ex.field->generator_name());
                AdjoinResult adj = adjoin_root(ex.field, f0, fresh_generator_name(used));
                ex.remap_all(adj.embedding, &item, &roots);
                z0 = adj.root;
                w0 = roots[ri].first;
            }
        }
        BivarPoly gsub = packet_substitute(item.g, edge.p, edge.q, z0);
        std::vector<PuiseuxRecipe::Level> levels = item.levels;
        levels.push_back({edge.p, edge.q, z0});
        if (r0 == 1) {
            if (!gsub.coeff(0, 0).is_zero() || gsub.coeff(0, 1).is_zero())
                throw Error("newton polygon: residual not in simple-root form");
            PuiseuxRecipe rec;
            rec.levels = std::move(levels);
            rec.residual = std::move(gsub);
            rec.swapped = item.swapped;
            ex.done.push_back(std::move(rec));
        } else {
            WorkItem child;
            child.g = std::move(gsub);
            child.levels = std::move(levels);
            child.swapped = item.swapped;
            child.depth = item.depth + 1;
            ex.queue.push_back(std::move(child));
        }
    }
}

void process_item(Expander& ex, WorkItem item) {
    if (item.depth > kMaxDepth) throw Error("newton polygon recursion exceeded depth cap");

    // exact sub-branches y = 0
    while (item.g.divisible_by_t()) {
        item.g = item.g.divided_by_t();
        PuiseuxRecipe rec;
        rec.levels = item.levels;
        rec.residual = BivarPoly::variable_t(); // G = y: the zero series is the root
        rec.swapped = item.swapped;
        ex.done.push_back(std::move(rec));
    }
    if (item.g.degree_t() <= 0) return;          // no further y-branches
    if (!item.g.eval00().is_zero()) return;      // packet remainder misses the origin

    if (item.single_edge) {
        process_edge(ex, item, item.edge);
        return;
    }
    auto edges = polygon_edges(item.g);
    if (item.depth == 0) {
        // top level: orient each edge to keep the parametrization field small
        // (ramification = min(p, q)); steep edges are processed transposed
        for (auto& e : edges) {
            WorkItem one;
            one.levels = item.levels;
            one.depth = item.depth;
            one.single_edge = true;
            if (e.p <= e.q) {
                one.g = item.g;
                one.swapped = item.swapped;
                one.edge = e;
            } else {
                one.g = item.g.swapped();
                one.swapped = !item.swapped;
                one.edge = Edge{e.ib, e.jb, e.ia, e.ja, e.q, e.p, e.count};
            }
            ex.queue.push_back(std::move(one));
        }
        return;
    }
    for (auto& e : edges) process_edge(ex, item, e);
}

} // namespace

ExpandResult expand(const BivarPoly& d, const FieldPtr& field, long min_order) {
    if (d.is_zero()) throw Error("expand: zero polynomial");
    if (!d.eval00().is_zero()) throw NotVanishingAtOrigin(d.str());

    BivarPoly body = d;
    bool axis_s = body.divisible_by_s(); // branch {s = 0}
    if (axis_s) body = body.divided_by_s();
    bool axis_t = body.divisible_by_t(); // branch {t = 0}
    if (axis_t) body = body.divided_by_t();

    Expander ex;
    ex.field = field;
    ex.from_input = FieldEmbedding{field, field, field->generator()};
    ex.used = {field->generator_name(), "q"};

    if (body.eval00().is_zero() && body.degree_t() > 0) {
        WorkItem root;
        root.g = body;
        root.depth = 0;
        ex.queue.push_back(std::move(root));
        while (!ex.queue.empty()) {
            WorkItem item = std::move(ex.queue.front());
            ex.queue.pop_front();
            process_item(ex, item);
        }
    }

    ExpandResult res;
    res.field = ex.field;
    res.embedding = ex.from_input;
    res.branches.field = ex.field;
    res.branches.provenance = d.str();

    BivarPoly body_mapped = body.mapped(res.embedding);

    if (axis_s)
        res.branches.branches.push_back(Branch::exact(
            ex.field, Series::zero(), Series::monomial(NFElem(1), 1), BivarPoly::variable_s()));
    if (axis_t)
        res.branches.branches.push_back(Branch::exact(
            ex.field, Series::monomial(NFElem(1), 1), Series::zero(), BivarPoly::variable_t()));

    bool single_packet = ex.done.size() == 1;
    for (auto& rec : ex.done) {
        std::optional<BivarPoly> def;
        long ram = 1;
        for (auto& lv : rec.levels) ram *= lv.p;
        // defining polynomial when it is immediate: the whole body for a
        // single packet, or t - y(s) for an unramified terminating series
        long probe = std::min<long>(std::max<long>(min_order, 8), Branch::TRUNCATION_CAP);
        auto [ps, pt] = rec.realize(probe);
        if (single_packet) {
            def = body_mapped;
        } else if (ram == 1) {
            const Series& dep = rec.swapped ? ps : pt; // dependent coordinate
            if (dep.is_exact()) {
                BivarPoly expr = rec.swapped ? BivarPoly::variable_s() : BivarPoly::variable_t();
                for (auto& [e, c] : dep.terms()) {
                    BivarPoly mono = rec.swapped ? BivarPoly::monomial(c, 0, e)
                                                 : BivarPoly::monomial(c, e, 0);
                    expr = expr - mono;
                }
                def = expr;
            }
        }
        res.branches.branches.push_back(Branch::from_recipe(ex.field, rec, probe, std::move(def)));
    }

    // invariant: branches pairwise distinct (guaranteed by square-freeness)
    for (std::size_t i = 0; i < res.branches.branches.size(); ++i)
        for (std::size_t j = i + 1; j < res.branches.branches.size(); ++j)
            if (branches_equal(res.branches.branches[i], res.branches.branches[j]))
                throw Error("expand: duplicate branches (input not square-free?)");
    for (auto& b : res.branches.branches) b.ensure_prec(min_order);
    return res;
}

} // namespace mfb
