#include "apollonite/latvec.hpp"

namespace apollonite {

VATriple base_vectors(GaussInt z) {
    // z = 0: v = (-1, 0, 1) and a = (-1-i, 1, i) for (C2,C1), (C3,C2), (C1,C3)
    VATriple t;
    t.p32 = {0, 1};
    t.p21 = {-1, GaussInt(-1, -1) - z};
    t.p13 = {1, z + I};
    return t;
}

VATriple rotate_pairs(const VATriple& t, int r) {
    VATriple u = t;
    for (int k = 0; k < ((r % 3) + 3) % 3; ++k) u = VATriple{u.p32, u.p13, u.p21};
    return u;
}

VATriple successor_vectors(const VATriple& t) {
    VATriple u;
    u.p21 = {t.p21.v - I * t.p32.v, t.p21.a + I * t.p32.a};
    u.p32 = t.p32;
    u.p13 = {t.p13.v + I * t.p32.v, t.p13.a - I * t.p32.a};
    return u;
}

VAPair ChildVectors::from_child(int i) const {
    const VAPair& p = to_child[static_cast<std::size_t>(i - 1)];
    return {I * p.v, -(I * p.a)};
}

ChildVectors child_vectors(const VATriple& t) {
    ChildVectors cv;
    cv.to_child[0] = {t.p13.v - I * t.p21.v, t.p13.a + I * t.p21.a};
    cv.to_child[1] = {t.p21.v - I * t.p32.v, t.p21.a + I * t.p32.a};
    cv.to_child[2] = {t.p32.v - I * t.p13.v, t.p32.a + I * t.p13.a};
    return cv;
}

RatSym2 peak_matrix(const Circle& c) {
    if (c.is_line()) throw std::invalid_argument("peak matrix of a line");
    Rational r(1, c.c);
    RatPoint z = c.center();
    Rational h(1, 2);
    return {h * (r + z.x), h * z.y, h * (r - z.x)};
}

Lattice2::Lattice2(GaussInt b1, GaussInt b2) : b1_(b1), b2_(b2) {
    if (det() == 0) throw std::invalid_argument("degenerate lattice basis");
    // Euclid on the second coordinates
    GaussInt u = b1, w = b2;
    while (w.im != 0) {
        Int q = floor_div(u.im, w.im);
        u = u - GaussInt(q) * w;
        std::swap(u, w);
    }
    // now w has zero second coordinate, u carries gcd of the second coordinates
    if (u.im < 0) u = -u;
    if (w.re < 0) w = -w;
    p_ = w.re;
    s_ = u.im;
    r_ = floor_mod(u.re, p_);
}

bool Lattice2::contains(GaussInt x) const {
    GaussInt rem = reduce(x);
    return rem == GaussInt{};
}

GaussInt Lattice2::reduce(GaussInt x, GaussInt* lambda) const {
    Int k2 = floor_div(x.im, s_);
    Int xr = ck::sub(x.re, ck::mul(k2, r_));
    Int k1 = floor_div(xr, p_);
    GaussInt lam{ck::add(ck::mul(k1, p_), ck::mul(k2, r_)), ck::mul(k2, s_)};
    if (lambda) *lambda = lam;
    return x - lam;
}

std::pair<Int, Int> Lattice2::coords(GaussInt lambda) const {
    Int d = det();
    Int n1 = lambda.cross(b2_);   // lambda x b2 = k1 (b1 x b2)
    Int n2 = b1_.cross(lambda);
    if (n1 % d != 0 || n2 % d != 0) throw std::invalid_argument("vector not in lattice");
    return {n1 / d, n2 / d};
}

std::vector<GaussInt> Lattice2::residues() const {
    std::vector<GaussInt> out;
    out.reserve(static_cast<std::size_t>(index()));
    for (Int y = 0; y < s_; ++y)
        for (Int x = 0; x < p_; ++x) out.push_back({x, y});
    return out;
}

std::vector<GaussInt> Lattice2::points_in(Int x0, Int x1, Int y0, Int y1) const {
    std::vector<GaussInt> out;
    for (Int m = ceil_div(y0, s_); m <= floor_div(y1, s_); ++m) {
        Int off = ck::mul(m, r_);
        for (Int n = ceil_div(ck::sub(x0, off), p_); n <= floor_div(ck::sub(x1, off), p_); ++n)
            out.push_back({ck::add(ck::mul(n, p_), off), ck::mul(m, s_)});
    }
    return out;
}

LCReport lattice_LC(const Circle& c, const Lattice2& lambda) {
    RatSym2 A = peak_matrix(c);
    LCReport rep;
    rep.lambda = lambda;
    rep.lambda_in_LC = apply_integral(A, lambda.b1(), nullptr) && apply_integral(A, lambda.b2(), nullptr);
    for (GaussInt r : lambda.residues()) {
        if (r == GaussInt{}) continue;
        if (apply_integral(A, r, nullptr)) ++rep.extra_residues;
    }
    return rep;
}

}  // namespace apollonite
