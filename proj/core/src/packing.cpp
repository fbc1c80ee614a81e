#include "apollonite/packing.hpp"

#include <algorithm>
#include <sstream>

namespace apollonite {

RatPoint Circle::center() const {
    if (c == 0) throw std::domain_error("a line has no centre");
    return {Rational(w.re, c), Rational(w.im, c)};
}

std::string to_string(const Circle& c) {
    std::ostringstream s;
    s << "(" << c.c << "," << c.w.re << "," << c.w.im << ")";
    return s.str();
}

std::string to_string(QuadKind k) {
    switch (k) {
        case QuadKind::proper: return "proper";
        case QuadKind::semi_proper_base: return "semi-proper-base";
        default: return "improper";
    }
}

bool descartes_holds(const Quadruple& q) {
    Int sc = 0, sc2 = 0;
    GaussInt sw, sw2;
    for (const auto& x : q.C) {
        sc = ck::add(sc, x.c);
        sc2 = ck::add(sc2, ck::mul(x.c, x.c));
        sw += x.w;
        sw2 += x.w * x.w;
    }
    return ck::mul(sc, sc) == ck::mul(2, sc2) && sw * sw == GaussInt(2) * sw2;
}

Circle soddy_complete(const Circle& c1, const Circle& c2, const Circle& c3, const Circle& c4) {
    if (!descartes_holds(Quadruple{{c1, c2, c3, c4}}))
        throw std::invalid_argument("circles do not satisfy the Descartes identities");
    return 2 * (c1 + c2 + c3) - c4;
}

RatPoint tangency_point(const Circle& a, const Circle& b) {
    if (a.is_line() && b.is_line()) throw std::invalid_argument("two lines have no finite tangency point");
    if (!a.is_line() && !b.is_line()) {
        // |c_b w_a - c_a w_b| = c_a + c_b  <=>  external tangency
        GaussInt d = GaussInt(b.c) * a.w - GaussInt(a.c) * b.w;
        Int s = ck::add(a.c, b.c);
        if (d.norm() != ck::mul(s, s)) throw std::invalid_argument("circles are not tangent");
    }
    Int s = ck::add(a.c, b.c);
    GaussInt w = a.w + b.w;
    return {Rational(w.re, s), Rational(w.im, s)};
}

namespace {

bool is_unit_circle_at(const Circle& c) { return c.c == 1 && floor_mod(c.w.re, 2) == 1 && floor_mod(c.w.im, 2) == 0; }

bool matches_base(const Quadruple& q) {
    if (!is_unit_circle_at(q[0])) return false;
    for (int r = 0; r < 3; ++r) {
        Quadruple p = parent_rotation(q, r);
        if (p[1] == Circle{1, q[0].w + GaussInt(0, 2)} && p[2] == Circle{0, 1} && p[3] == Circle{0, -1}) return true;
    }
    return false;
}

}  // namespace

QuadKind classify_quadruple(const Quadruple& q) {
    if (!descartes_holds(q)) throw std::invalid_argument("quadruple violates the Descartes identities");
    if (matches_base(q)) return QuadKind::semi_proper_base;
    if (q[0].c <= std::max({q[1].c, q[2].c, q[3].c})) return QuadKind::improper;
    RatPoint t1 = tangency_point(q[0], q[1]);
    RatPoint t2 = tangency_point(q[0], q[2]);
    RatPoint t3 = tangency_point(q[0], q[3]);
    return orientation(t1, t2, t3) < 0 ? QuadKind::proper : QuadKind::improper;
}

Circle apply_symmetry(const Circle& c, Symmetry s) {
    switch (s) {
        case Symmetry::negate: return {c.c, -c.w};
        case Symmetry::conjugate: return {c.c, c.w.conj()};
        case Symmetry::shift_i: return {c.c, c.w + GaussInt(0, ck::mul(2, c.c))};
        default: return {c.c, c.w + GaussInt(ck::mul(2, c.c), 0)};
    }
}

Quadruple parent_rotation(const Quadruple& q, int r) {
    Quadruple p = q;
    for (int k = 0; k < ((r % 3) + 3) % 3; ++k) p = Quadruple{{p[0], p[2], p[3], p[1]}};
    return p;
}

Quadruple successor(const Quadruple& q) {
    return Quadruple{{2 * (q[0] + q[2] + q[3]) - q[1], q[0], q[2], q[3]}};
}

Quadruple base_quadruple(GaussInt z) {
    GaussInt w = GaussInt(1) + GaussInt(2) * z;
    return Quadruple{{Circle{1, w}, Circle{1, w + GaussInt(0, 2)}, Circle{0, 1}, Circle{0, -1}}};
}

namespace {

// Outside the closed disc of a circle (lines bound the band and are never crossed).
bool outside_disc(const Circle& c, const RatPoint& p) {
    if (c.is_line()) return true;
    Rational dx = Rational(c.c) * p.x - Rational(c.w.re);
    Rational dy = Rational(c.c) * p.y - Rational(c.w.im);
    return dx * dx + dy * dy > Rational(1);
}

}  // namespace

bool gap_contains(const Circle& a, const Circle& b, const Circle& c, const RatPoint& p) {
    RatPoint t0 = tangency_point(a, b), t1 = tangency_point(b, c), t2 = tangency_point(c, a);
    int o0 = orientation(t0, t1, p), o1 = orientation(t1, t2, p), o2 = orientation(t2, t0, p);
    bool inside = (o0 >= 0 && o1 >= 0 && o2 >= 0) || (o0 <= 0 && o1 <= 0 && o2 <= 0);
    return inside && outside_disc(a, p) && outside_disc(b, p) && outside_disc(c, p);
}

bool gap_meets(const Circle& a, const Circle& b, const Circle& c, const Window& w) {
    RatPoint t[3] = {tangency_point(a, b), tangency_point(b, c), tangency_point(c, a)};
    Rational x0 = std::min({t[0].x, t[1].x, t[2].x}), x1 = std::max({t[0].x, t[1].x, t[2].x});
    Rational y0 = std::min({t[0].y, t[1].y, t[2].y}), y1 = std::max({t[0].y, t[1].y, t[2].y});
    return !(x1 < w.x0 || w.x1 < x0 || y1 < w.y0 || w.y1 < y0);
}

int canonical_rotation(const Quadruple& q) {
    int best = 0;
    auto key = [&](int r) {
        Quadruple p = parent_rotation(q, r);
        return std::array<Int, 3>{p[1].c, p[2].c, p[3].c};
    };
    for (int r = 1; r < 3; ++r)
        if (key(r) > key(best)) best = r;
    return best;
}

std::vector<Quadruple> enumerate_band(Int max_curvature, const Window& w) {
    struct Empty {};
    std::vector<Quadruple> out;
    ForestWalk<Empty> walk;
    walk.base = [](GaussInt) { return Empty{}; };
    walk.rotate = [](const Empty& e) { return e; };
    walk.succeed = [](const Empty& e) { return e; };
    walk.visit = [&](const Quadruple& q, const Empty&) { out.push_back(parent_rotation(q, canonical_rotation(q))); };
    walk.run(max_curvature, w);
    std::sort(out.begin(), out.end(), [](const Quadruple& a, const Quadruple& b) { return a.C < b.C; });
    return out;
}

}  // namespace apollonite
