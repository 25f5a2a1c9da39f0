#pragma once

#include "mfb/series.hpp"

namespace mfb::detail {

// signal: a certified order/leading coefficient is missing; extend the
// branch series and retry the computation
struct RetryPrecision {};

inline long need_order(const Series& x) {
    auto o = x.order();
    if (!o) throw RetryPrecision{};
    return *o;
}

// Local parametrization of a branch at an infinitely near point.
struct Cursor {
    Series s, t;
};

// Direction of the branch at the current point:
//   kind 0: towards [1:0] (ord s < ord t), the branch is tangent to {t=0}
//   kind 2: towards [0:1] (ord s > ord t), tangent to {s=0}
//   kind 1: free point with coordinate c = lc(s)/lc(t), transverse to both axes
struct Direction {
    int kind = 1;
    NFElem c;
};

inline Direction direction_of(const Cursor& cur) {
    long a = need_order(cur.s);
    long b = need_order(cur.t);
    if (a > b) return {2, NFElem(0)};
    if (a < b) return {0, NFElem(0)};
    return {1, cur.s.leading_coeff() * cur.t.leading_coeff().inv()};
}

inline bool same_direction(const Direction& x, const Direction& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == 1) return x.c == y.c;
    return true;
}

inline bool direction_less(const Direction& x, const Direction& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.kind == 1) return NFElem::lex_less(x.c, y.c);
    return false;
}

inline Cursor step_cursor(const Cursor& cur, const Direction& dir, long target) {
    Cursor nxt;
    if (dir.kind == 2) {
        nxt.s = Series::divide(cur.s, cur.t, target);
        nxt.t = cur.t;
    } else if (dir.kind == 0) {
        nxt.s = cur.s;
        nxt.t = Series::divide(cur.t, cur.s, target);
    } else {
        nxt.s = Series::divide(cur.s, cur.t, target) - Series::monomial(dir.c, 0);
        nxt.t = cur.t;
    }
    return nxt;
}

inline long cursor_mult(const Cursor& cur) {
    long a = need_order(cur.s);
    long b = need_order(cur.t);
    long m = a < b ? a : b;
    if (m >= Series::ORD_INF) throw Error("degenerate parametrization (0, 0)");
    return m;
}

} // namespace mfb::detail
