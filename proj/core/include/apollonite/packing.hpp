#pragma once

// Circles of the band packing in curvature coordinates, Descartes quadruples,
// and the semi-proper forest walk that generates them.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apollonite/exactmath.hpp"

namespace apollonite {

// (c, w) with w = c*z for a circle of curvature c centred at z.
// Lines carry c = 0 and w = +1 or -1, the normal pointing away from the
// circles on their side of the band.
struct Circle {
    Int c = 0;
    GaussInt w;

    bool is_line() const { return c == 0; }
    RatPoint center() const;
    friend Circle operator+(const Circle& a, const Circle& b) { return {ck::add(a.c, b.c), a.w + b.w}; }
    friend Circle operator-(const Circle& a, const Circle& b) { return {ck::sub(a.c, b.c), a.w - b.w}; }
    friend Circle operator*(Int k, const Circle& a) { return {ck::mul(k, a.c), GaussInt(k) * a.w}; }
    friend bool operator==(const Circle&, const Circle&) = default;
    friend auto operator<=>(const Circle& a, const Circle& b) {
        if (auto o = a.c <=> b.c; o != 0) return o;
        return a.w <=> b.w;
    }
};

struct CircleHash {
    std::size_t operator()(const Circle& c) const noexcept {
        return GaussHash{}(c.w) ^ (static_cast<std::size_t>(c.c) * 0x100000001B3ull);
    }
};

std::string to_string(const Circle& c);  // "(c,cx,cy)"

enum class QuadKind { proper, semi_proper_base, improper };
std::string to_string(QuadKind k);

struct Quadruple {
    std::array<Circle, 4> C;

    const Circle& operator[](int i) const { return C[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

bool descartes_holds(const Quadruple& q);

// 2(c1+c2+c3) - c4, after checking the four circles form a Descartes quadruple.
Circle soddy_complete(const Circle& c1, const Circle& c2, const Circle& c3, const Circle& c4);

// Common point (w1+w2)/(c1+c2) of two tangent circles.
RatPoint tangency_point(const Circle& c1, const Circle& c2);

QuadKind classify_quadruple(const Quadruple& q);

enum class Symmetry { negate, conjugate, shift_i, shift_1 };
Circle apply_symmetry(const Circle& c, Symmetry s);

// (C0,C2,C3,C1), applied r times
Quadruple parent_rotation(const Quadruple& q, int r = 1);
// (2(C0+C2+C3)-C1, C0, C2, C3)
Quadruple successor(const Quadruple& q);
// ((1,1+2z),(1,1+2z+2i),(0,1),(0,-1))
Quadruple base_quadruple(GaussInt z);

// Closed axis-aligned rectangle of centre coordinates.
struct Window {
    Rational x0, x1, y0, y1;
    static Window square(Rational lo, Rational hi) { return {lo, hi, lo, hi}; }
    bool contains(const RatPoint& p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

// The curvilinear triangle bounded by three mutually tangent circles.
bool gap_contains(const Circle& a, const Circle& b, const Circle& c, const RatPoint& p);
bool gap_meets(const Circle& a, const Circle& b, const Circle& c, const Window& w);

// Depth-first walk of the proper quadruples descending from the base
// quadruples whose cell meets the window. Each node carries a payload
// transported along successor and rotation moves.
template <class P>
struct ForestWalk {
    std::function<P(GaussInt z)> base;
    std::function<P(const P&)> rotate;
    std::function<P(const P&)> succeed;
    std::function<void(const Quadruple&, const P&)> visit;

    void run(Int max_curvature, const Window& w) const {
        // base z owns the cell [2Re z, 2Re z+2] x [2Im z, 2Im z+2]
        Int zx0 = floor_div(w.x0.floor(), 2) - 1, zx1 = floor_div(w.x1.floor(), 2);
        Int zy0 = floor_div(w.y0.floor(), 2) - 1, zy1 = floor_div(w.y1.floor(), 2);
        for (Int zx = zx0; zx <= zx1; ++zx) {
            for (Int zy = zy0; zy <= zy1; ++zy) {
                GaussInt z{zx, zy};
                Quadruple q = base_quadruple(z);
                P p = base(z);
                for (int r = 1; r <= 2; ++r) {
                    q = parent_rotation(q);
                    p = rotate(p);
                    descend(successor(q), succeed(p), max_curvature, w);
                }
            }
        }
    }

private:
    void descend(const Quadruple& q, const P& p, Int max_curvature, const Window& w) const {
        if (q[0].c > max_curvature) return;
        if (!gap_meets(q[1], q[2], q[3], w)) return;
        if (w.contains(q[0].center())) visit(q, p);
        Quadruple rq = q;
        P rp = p;
        for (int r = 0; r < 3; ++r) {
            descend(successor(rq), succeed(rp), max_curvature, w);
            rq = parent_rotation(rq);
            rp = rotate(rp);
        }
    }
};

// Every proper quadruple with child curvature <= max_curvature and child
// centre in the window, once each, in the canonical parent rotation.
std::vector<Quadruple> enumerate_band(Int max_curvature, const Window& w);

// Parent rotation whose (c1,c2,c3) is lexicographically largest.
int canonical_rotation(const Quadruple& q);

}  // namespace apollonite
