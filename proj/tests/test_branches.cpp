#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfb/branch.hpp"
#include "mfb/newton_puiseux.hpp"

using namespace mfb;

namespace {

FieldPtr QI() {
    static FieldPtr f = NumberField::create("i", QPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}));
    return f;
}

Series mono(const NFElem& c, long e) { return Series::monomial(c, e); }

Branch mk(FieldPtr f, Series s, Series t, std::optional<BivarPoly> def = std::nullopt) {
    return Branch::exact(std::move(f), std::move(s), std::move(t), std::move(def));
}

NFElem I() { return QI()->generator(); }

BivarPoly parse_terms(std::vector<std::tuple<long, long, NFElem>> terms) {
    std::map<BivarPoly::Key, NFElem> m;
    for (auto& [es, et, c] : terms) m[{es, et}] = c;
    return BivarPoly(std::move(m));
}

} // namespace

TEST_CASE("branch multiplicity") {
    CHECK(branch_multiplicity(mk(QI(), mono(NFElem(1), 1), mono(I(), 1))) == 1);
    // F_4 branch shape: s = z*tau^4, t = tau^3
    CHECK(branch_multiplicity(mk(QI(), mono(I(), 4), mono(NFElem(1), 3))) == 3);
    CHECK(branch_multiplicity(mk(QI(), Series::zero(), mono(NFElem(1), 1))) == 1);
}

TEST_CASE("intersection multiplicity against polynomials") {
    // (tau, i tau) against t + i s -> ord(2 i tau) = 1
    Branch b1 = mk(QI(), mono(NFElem(1), 1), mono(I(), 1));
    BivarPoly p1 = parse_terms({{0, 1, NFElem(1)}, {1, 0, I()}});
    CHECK(intersection_multiplicity(b1, p1) == 1);

    // (tau, i tau^n) against t + i s^n -> n
    for (long n = 2; n <= 4; ++n) {
        Branch bn = mk(QI(), mono(NFElem(1), 1), mono(I(), n));
        BivarPoly pn = parse_terms({{0, 1, NFElem(1)}, {n, 0, I()}});
        CHECK(intersection_multiplicity(bn, pn) == n);
    }

    // (0, tau) against t = 0 axis polynomial -> 1
    Branch ax = mk(QI(), Series::zero(), mono(NFElem(1), 1));
    CHECK(intersection_multiplicity(ax, BivarPoly::variable_t()) == 1);

    // (i tau^k, tau) against t -> 1 (B_k branch against {t=0})
    for (long k = 1; k <= 4; ++k) {
        Branch bk = mk(QI(), mono(I(), k), mono(NFElem(1), 1));
        CHECK(intersection_multiplicity(bk, BivarPoly::variable_t()) == 1);
    }
}

TEST_CASE("intersection multiplicity between branches, both routes agree") {
    // transverse smooth pair (S_1): t = +- i s
    Branch a = mk(QI(), mono(NFElem(1), 1), mono(I(), 1),
                  parse_terms({{0, 1, NFElem(1)}, {1, 0, -I()}}));
    Branch b = mk(QI(), mono(NFElem(1), 1), mono(-I(), 1),
                  parse_terms({{0, 1, NFElem(1)}, {1, 0, I()}}));
    CHECK(intersection_multiplicity(a, b) == 1); // cross-checks walk vs substitution

    // tangent pair (S_3): t = +- i s^2, contact 2
    Branch c = mk(QI(), mono(NFElem(1), 1), mono(I(), 2),
                  parse_terms({{0, 1, NFElem(1)}, {2, 0, -I()}}));
    Branch d = mk(QI(), mono(NFElem(1), 1), mono(-I(), 2),
                  parse_terms({{0, 1, NFElem(1)}, {2, 0, I()}}));
    CHECK(intersection_multiplicity(c, d) == 2);

    // cusp vs axis: (tau^2, i tau^3) vs {s = 0}: walk-only on one side
    Branch cusp = mk(QI(), mono(NFElem(1), 2), mono(I(), 3));
    Branch axis = mk(QI(), Series::zero(), mono(NFElem(1), 1), BivarPoly::variable_s());
    CHECK(intersection_multiplicity(cusp, axis) == 2);
    CHECK(intersection_multiplicity(axis, cusp) == 2);

    // Noether bound: I(a, b) >= mult(a) * mult(b)
    CHECK(intersection_multiplicity(cusp, axis) >=
          branch_multiplicity(cusp) * branch_multiplicity(axis));

    Branch a2 = a;
    CHECK_THROWS_AS(intersection_multiplicity(a, a2), IdenticalBranches);
}

TEST_CASE("involution and branch equality") {
    Branch b = mk(QI(), mono(NFElem(1), 1), mono(I(), 1));
    Branch ib = apply_involution(b);
    CHECK(ib.t().coeff(1) == -I());
    CHECK(ib.s() == b.s());

    // (0, tau) -> (0, -tau) equals the original under tau -> -tau
    Branch ax = mk(QI(), Series::zero(), mono(NFElem(1), 1));
    Branch iax = apply_involution(ax);
    CHECK(branches_equal(ax, iax));

    // (i tau^k, tau), k even: involution fixes the branch; k odd: it does not
    for (long k = 1; k <= 4; ++k) {
        Branch bk = mk(QI(), mono(I(), k), mono(NFElem(1), 1));
        Branch ibk = apply_involution(bk);
        CHECK(branches_equal(bk, ibk) == (k % 2 == 0));
    }

    // (tau, i tau) vs (tau, -i tau): distinct branches
    Branch p = mk(QI(), mono(NFElem(1), 1), mono(I(), 1));
    Branch q = mk(QI(), mono(NFElem(1), 1), mono(-I(), 1));
    Branch p2 = p;
    CHECK(branches_equal(p, p2));
    CHECK_FALSE(branches_equal(p, q));

    // involution is an involution
    Branch back = apply_involution(apply_involution(p));
    CHECK(branches_equal(p, back));

    // equality respects reparametrization by units compatible with exponents
    Branch r1 = mk(QI(), mono(NFElem(1), 2), mono(I(), 3));
    Branch r2 = mk(QI(), mono(NFElem(1), 2), mono(-I(), 3)); // tau -> -tau
    CHECK(branches_equal(r1, r2));
}

TEST_CASE("characteristic exponents") {
    Branch smooth = mk(QI(), mono(NFElem(1), 1), mono(I(), 3));
    CHECK(characteristic_exponents(smooth).empty());

    Branch cusp34 = mk(QI(), mono(-NFElem(1), 4), mono(NFElem(1), 3));
    auto ce = characteristic_exponents(cusp34);
    REQUIRE(ce.size() == 1);
    CHECK(ce[0] == Rat(4) / Rat(3));

    Branch ax = mk(QI(), Series::zero(), mono(NFElem(1), 1));
    CHECK(characteristic_exponents(ax).empty());

    // (2,5): s = tau^2, t = tau^5
    Branch c25 = mk(QI(), mono(NFElem(1), 2), mono(I(), 5));
    auto ce2 = characteristic_exponents(c25);
    REQUIRE(ce2.size() == 1);
    CHECK(ce2[0] == Rat(5) / Rat(2));

    // two Puiseux pairs: s = tau^4, t = tau^6 + tau^7  ->  3/2 and 7/4
    Branch two = mk(QI(), mono(NFElem(1), 4),
                    Series({{6, NFElem(1)}, {7, NFElem(1)}}));
    auto ce3 = characteristic_exponents(two);
    REQUIRE(ce3.size() == 2);
    CHECK(ce3[0] == Rat(6) / Rat(4));
    CHECK(ce3[1] == Rat(7) / Rat(4));

    // normalization handles a non-monomial independent coordinate:
    // same germ as (3,4) after s-unit perturbation
    Branch messy = mk(QI(), Series({{3, NFElem(1)}, {4, NFElem(1)}}), mono(NFElem(1), 4));
    auto ce4 = characteristic_exponents(messy);
    REQUIRE(ce4.size() == 1);
    CHECK(ce4[0] == Rat(4) / Rat(3));
}

TEST_CASE("newton-puiseux expansion: spec examples") {
    auto QQ = NumberField::rationals();

    // d = t^2 + s^2 over Q(i): branches (tau, +-i tau)
    BivarPoly d1 = parse_terms({{0, 2, NFElem(1)}, {2, 0, NFElem(1)}});
    auto r1 = expand(d1, QI(), 16);
    REQUIRE(r1.branches.branches.size() == 2);
    for (auto& b : r1.branches.branches) {
        CHECK(branch_multiplicity(b) == 1);
        Branch bb = b;
        BivarPoly dm = d1.mapped(r1.embedding);
        Series sub = dm.substitute(bb.s(), bb.t());
        CHECK(sub.terms().empty());
    }
    CHECK(NumberField::same(r1.field, QI()));

    // d = s over Q: one branch (0, tau)
    auto r2 = expand(BivarPoly::variable_s(), QQ, 16);
    REQUIRE(r2.branches.branches.size() == 1);
    CHECK(r2.branches.branches[0].s().is_certainly_zero());

    // d = s^3 + t^4 over Q: one branch, t = tau^3, s = -tau^4(unit), no extension
    BivarPoly d3 = parse_terms({{3, 0, NFElem(1)}, {0, 4, NFElem(1)}});
    auto r3 = expand(d3, QQ, 16);
    REQUIRE(r3.branches.branches.size() == 1);
    CHECK(r3.field->is_rationals());
    Branch& f4 = r3.branches.branches[0];
    CHECK(branch_multiplicity(f4) == 3);
    CHECK(f4.t() == Series::monomial(NFElem(1), 3));
    CHECK(f4.s().coeff(4) == NFElem(-1));
    REQUIRE(f4.defining_polynomial().has_value());

    // d = s (t^2 + s^(2n)): three branches {s=0}, (tau, +-i tau^n)
    for (long n = 1; n <= 3; ++n) {
        BivarPoly d4 = BivarPoly::variable_s() *
                       parse_terms({{0, 2, NFElem(1)}, {2 * n, 0, NFElem(1)}});
        auto r4 = expand(d4, QQ, 16);
        REQUIRE(r4.branches.branches.size() == 3);
        CHECK(r4.field->degree() == 2); // needs i
        // sum over branches of intersection with a generic line equals ord of d
        long total = 0;
        BivarPoly line = parse_terms({{1, 0, NFElem(1)}, {0, 1, NFElem(Rat(7))}}); // s + 7t
        for (auto& b : r4.branches.branches) {
            Branch bb = b;
            total += intersection_multiplicity(bb, line);
        }
        CHECK(total == 3); // lowest total degree of d4
    }

    // branch count stable under min_order increase
    BivarPoly d5 = parse_terms({{0, 2, NFElem(1)}, {5, 0, NFElem(1)}});
    auto r5a = expand(d5, QQ, 8);
    auto r5b = expand(d5, QQ, 32);
    CHECK(r5a.branches.branches.size() == r5b.branches.branches.size());
    REQUIRE(r5a.branches.branches.size() == 1);
    // (2,5) cusp: parametrization satisfies d to full precision
    Branch c = r5b.branches.branches[0];
    BivarPoly dm = d5.mapped(r5b.embedding);
    CHECK(dm.substitute(c.s(), c.t()).terms().empty());

    CHECK_THROWS_AS(expand(parse_terms({{0, 0, NFElem(1)}, {1, 0, NFElem(1)}}), QQ, 8),
                    NotVanishingAtOrigin);
}

TEST_CASE("squarefree check") {
    CHECK(squarefree_check(parse_terms({{0, 2, NFElem(1)}, {2, 0, NFElem(1)}}))); // t^2+s^2
    // (t-s)^2
    BivarPoly ts = parse_terms({{0, 1, NFElem(1)}, {1, 0, NFElem(-1)}});
    CHECK_FALSE(squarefree_check(ts * ts));
    // s(t^2 + s^(2n))
    BivarPoly c5 = BivarPoly::variable_s() * parse_terms({{0, 2, NFElem(1)}, {4, 0, NFElem(1)}});
    CHECK(squarefree_check(c5));
    CHECK_FALSE(squarefree_check(BivarPoly::variable_s() * BivarPoly::variable_s()));
    // s^2 t + t^3 = t(s^2 + t^2): squarefree
    CHECK(squarefree_check(parse_terms({{2, 1, NFElem(1)}, {0, 3, NFElem(1)}})));
    // repeated s-only factor mixed in: s^2(t^2+s)
    CHECK_FALSE(squarefree_check(BivarPoly::variable_s() * BivarPoly::variable_s() *
                                 parse_terms({{0, 2, NFElem(1)}, {1, 0, NFElem(1)}})));
}

TEST_CASE("newton-puiseux ramified branch over extension") {
    // t^3 - 2 s^3... use t^3 - 2 s^4 : one branch with ram 3 needing cbrt(2)
    auto QQ = NumberField::rationals();
    BivarPoly d = parse_terms({{0, 3, NFElem(1)}, {4, 0, NFElem(-2)}});
    auto r = expand(d, QQ, 24);
    REQUIRE(r.branches.branches.size() == 1);
    Branch b = r.branches.branches[0];
    CHECK(branch_multiplicity(b) == 3);
    BivarPoly dm = d.mapped(r.embedding);
    CHECK(dm.substitute(b.s(), b.t()).terms().empty());
    auto ce = characteristic_exponents(b);
    REQUIRE(ce.size() == 1);
    CHECK(ce[0] == Rat(4) / Rat(3));
}
