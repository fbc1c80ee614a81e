#include "apollonite/odometer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "apollonite/band.hpp"

namespace apollonite {

namespace {

// (1/2)(1+i) a as a rational point
RatPoint half_one_plus_i(GaussInt a) {
    return {Rational(a.re - a.im, 2), Rational(a.re + a.im, 2)};
}

RatPoint scaled(const RatPoint& p, int s) { return s > 0 ? p : RatPoint{-p.x, -p.y}; }

std::optional<GaussInt> integral(const RatPoint& p) {
    if (!p.x.is_integer() || !p.y.is_integer()) return std::nullopt;
    return GaussInt{p.x.num(), p.y.num()};
}

Int choose2(Int k) { return ck::mul(k, ck::sub(k, 1)) / 2; }

std::string pt(GaussInt x) { return to_string(x); }

}  // namespace

Int TileOdometer::at(GaussInt x) const {
    auto it = std::lower_bound(tile.footprint.begin(), tile.footprint.end(), x);
    if (it == tile.footprint.end() || *it != x) throw std::out_of_range("vertex outside the tile odometer domain");
    return values[static_cast<std::size_t>(it - tile.footprint.begin())];
}

RatPoint average_slope(const Tile& t, const std::function<Int(GaussInt)>& h) {
    if (t.degenerate()) return {};
    Int sx = 0, sy = 0;
    for (GaussInt s : t.squares) {
        Int h00 = h(s), h10 = h(s + GaussInt(1)), h01 = h(s + I), h11 = h(s + GaussInt(1, 1));
        sx = ck::add(sx, ck::add(ck::sub(h10, h00), ck::sub(h11, h01)));
        sy = ck::add(sy, ck::add(ck::sub(h01, h00), ck::sub(h11, h10)));
    }
    Int d = ck::mul(2, t.area());
    return {Rational(sx, d), Rational(sy, d)};
}

TileOdometer build_tile_odometer(BandPacking& band, const Circle& c) {
    TileOdometer out;
    out.circle = c;
    const TileBuild& tb = band.tile(c);
    out.tile = tb.tile;
    if (c.is_line()) {
        out.values = {0};
        return out;
    }
    if (c.c == 1) {
        // (0,0,0,m) on the unit square, m = Im of the centre over two
        Int m = c.w.im / 2;
        for (GaussInt v : out.tile.footprint) out.values.push_back(v == GaussInt(1, 1) ? m : 0);
        out.slope = average_slope(out.tile, [&](GaussInt x) { return out.at(x); });
        return out;
    }
    const ForestNode& node = band.node(c);
    const Quadruple& q = node.quad;
    const TileOdometer* hp[4] = {nullptr, &band.tile_odometer(q[1]), &band.tile_odometer(q[2]),
                                 &band.tile_odometer(q[3])};
    GaussInt akj[4] = {{}, node.pairs.p32.a, node.pairs.p13.a, node.pairs.p21.a};
    RatPoint S0 = hp[1]->slope + half_one_plus_i(akj[1]);

    struct Piece {
        const SubTile* part;
        GaussInt alpha;
        Int constant = 0;
        bool resolved = false;
        Int raw(const TileOdometer& h, GaussInt x) const { return ck::add(h.at(x - part->shift), alpha.dot(x)); }
    };
    std::vector<Piece> pieces;
    for (const auto& st : tb.parts) {
        if (st.tile.degenerate()) continue;
        RatPoint target = S0 + scaled(half_one_plus_i(akj[st.i]), st.sign);
        auto alpha = integral(target - hp[st.i]->slope);
        if (!alpha) throw Falsification("non-integral subodometer slope offset in " + to_string(c));
        pieces.push_back({&st, *alpha});
    }
    pieces.front().resolved = true;
    std::map<GaussInt, Int> value;
    auto absorb = [&](const Piece& p) {
        const TileOdometer& h = *hp[p.part->i];
        for (GaussInt x : p.part->tile.footprint) {
            Int v = ck::add(p.raw(h, x), p.constant);
            auto [it, fresh] = value.emplace(x, v);
            if (!fresh && it->second != v)
                throw Falsification("incompatible subodometers at " + pt(x) + " in " + to_string(c));
        }
    };
    absorb(pieces.front());
    for (bool progress = true; progress;) {
        progress = false;
        for (auto& p : pieces) {
            if (p.resolved) continue;
            for (GaussInt x : p.part->tile.footprint) {
                auto it = value.find(x);
                if (it == value.end()) continue;
                p.constant = ck::sub(it->second, p.raw(*hp[p.part->i], x));
                p.resolved = true;
                absorb(p);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    for (const auto& p : pieces)
        if (!p.resolved) throw Falsification("subodometers do not overlap in " + to_string(c));

    Int lo = 0;
    bool first = true;
    for (GaussInt v : out.tile.footprint) {
        auto it = value.find(v);
        if (it == value.end()) throw Falsification("tile odometer undefined at " + pt(v) + " in " + to_string(c));
        lo = first ? it->second : std::min(lo, it->second);
        first = false;
        out.values.push_back(it->second);
    }
    for (auto& v : out.values) v -= lo;
    out.slope = average_slope(out.tile, [&](GaussInt x) { return out.at(x); });
    if (!(out.slope == S0)) throw Falsification("tile odometer slope mismatch in " + to_string(c));
    return out;
}

GlobalOdometer::GlobalOdometer(Circle c, GaussInt v1, GaussInt v2, GaussInt a1, GaussInt a2, Int beta1,
                               Int beta2, const std::vector<std::pair<GaussInt, Int>>& known)
    : circle_(c), lattice_(v1, v2) {
    v_ = {v1, v2, -(v1 + v2)};
    a_ = {a1, a2, -(a1 + a2)};
    beta_ = {beta1, beta2, 0};
    auto n = static_cast<std::size_t>(lattice_.index());
    reps_.assign(n, GaussInt{});
    rep_values_.assign(n, 0);
    std::vector<bool> have(n, false);
    for (const auto& [x, val] : known) {
        auto idx = static_cast<std::size_t>(lattice_.residue_index(lattice_.reduce(x)));
        if (!have[idx]) {
            have[idx] = true;
            reps_[idx] = x;
            rep_values_[idx] = val;
            continue;
        }
        GaussInt lam = x - reps_[idx];
        Int expect = ck::add(ck::add(rep_values_[idx], reps_[idx].dot(affine(lam))), beta(lam));
        if (expect != val) throw Falsification("periodicity violated at " + pt(x) + " for " + to_string(c));
    }
    if (std::find(have.begin(), have.end(), false) != have.end())
        throw std::invalid_argument("known values miss a residue class");
    Int g0 = (*this)(GaussInt{});
    for (auto& v : rep_values_) v -= g0;
    beta_[2] = beta(v_[2]);
}

GaussInt GlobalOdometer::affine(GaussInt lambda) const {
    auto [k1, k2] = lattice_.coords(lambda);
    return GaussInt(k1) * a_[0] + GaussInt(k2) * a_[1];
}

Int GlobalOdometer::beta(GaussInt lambda) const {
    auto [k1, k2] = lattice_.coords(lambda);
    Int s = ck::add(ck::mul(k1, beta_[0]), ck::mul(k2, beta_[1]));
    s = ck::add(s, ck::mul(choose2(k1), v_[0].dot(a_[0])));
    s = ck::add(s, ck::mul(choose2(k2), v_[1].dot(a_[1])));
    s = ck::add(s, ck::mul(ck::mul(k1, k2), v_[0].dot(a_[1])));
    return s;
}

Int GlobalOdometer::operator()(GaussInt x) const {
    auto idx = static_cast<std::size_t>(lattice_.residue_index(lattice_.reduce(x)));
    GaussInt r = reps_[idx];
    GaussInt lam = x - r;
    return ck::add(ck::add(rep_values_[idx], r.dot(affine(lam))), beta(lam));
}

RatPoint GlobalOdometer::periodic_b() const {
    // b.v_i = beta_i - v_i.a_i / 2
    Rational r1 = Rational(beta_[0]) - Rational(v_[0].dot(a_[0]), 2);
    Rational r2 = Rational(beta_[1]) - Rational(v_[1].dot(a_[1]), 2);
    Rational det(v_[0].cross(v_[1]));
    Rational bx = (r1 * Rational(v_[1].im) - r2 * Rational(v_[0].im)) / det;
    Rational by = (Rational(v_[0].re) * r2 - Rational(v_[1].re) * r1) / det;
    return {bx, by};
}

GlobalOdometer GlobalOdometer::plus_quadratic(const Circle& c, const std::function<Int(GaussInt)>& h,
                                              GaussInt da1, GaussInt da2) const {
    std::vector<std::pair<GaussInt, Int>> known;
    for (std::size_t k = 0; k < reps_.size(); ++k) known.emplace_back(reps_[k], ck::add(rep_values_[k], h(reps_[k])));
    return GlobalOdometer(c, v_[0], v_[1], a_[0] + da1, a_[1] + da2, ck::add(beta_[0], h(v_[0])),
                          ck::add(beta_[1], h(v_[1])), known);
}

GlobalOdometer globalize(const TileOdometer& h, const ChildVectors& cv) {
    const Tile& t = h.tile;
    if (t.degenerate()) throw std::invalid_argument("lines have no periodic odometer");
    Int beta[3];
    for (int i = 0; i < 3; ++i) {
        GaussInt v = cv.to_child[static_cast<std::size_t>(i)].v;
        GaussInt a = cv.to_child[static_cast<std::size_t>(i)].a;
        std::optional<Int> b;
        for (GaussInt y : t.footprint) {
            if (!t.has_vertex(y - v)) continue;
            Int bi = ck::sub(ck::sub(h.at(y), h.at(y - v)), (y - v).dot(a));
            if (b && *b != bi)
                throw Falsification("tile odometer is not compatible with its translate by " + pt(v) + " for " +
                                    to_string(h.circle));
            b = bi;
        }
        if (!b) throw Falsification("tile does not meet its translate by " + pt(v) + " for " + to_string(h.circle));
        beta[i] = *b;
    }
    std::vector<std::pair<GaussInt, Int>> known;
    for (GaussInt s : t.squares) known.emplace_back(s, h.at(s));
    GlobalOdometer g(h.circle, cv.to_child[0].v, cv.to_child[1].v, cv.to_child[0].a, cv.to_child[1].a, beta[0],
                     beta[1], known);
    if (g.beta_of(2) != beta[2]) throw Falsification("third lattice constant mismatch for " + to_string(h.circle));
    std::optional<Int> shift;
    for (GaussInt y : t.footprint) {
        Int d = ck::sub(g(y), h.at(y));
        if (shift && *shift != d) throw Falsification("global odometer disagrees with the tile odometer at " + pt(y));
        shift = d;
    }
    return g;
}

FordParents ford_parents(Int p, Int q) {
    if (q < 1 || gcd(p, q) != 1) throw std::invalid_argument("not a reduced fraction");
    if (q == 1) return {1, 0, ck::sub(p, 1), 1};
    // inverse of p modulo q
    Int inv = 0;
    for (Int t = 1; t < q; ++t)
        if (floor_mod(ck::mul(p, t), q) == 1) inv = t;
    FordParents f{};
    f.q1 = floor_mod(-inv, q);
    f.p1 = (1 + f.q1 * p) / q;
    f.q2 = inv == 0 ? q : inv;
    f.p2 = (f.q2 * p - 1) / q;
    return f;
}

namespace {

Int ford_base(Int p, GaussInt x) { return ck::add(choose2(x.re), ck::mul(p, ck::mul(x.re, x.im))); }

}  // namespace

std::map<GaussInt, Int> ford_square_values(Int p, Int q) {
    std::map<GaussInt, Int> out;
    if (q == 1) {
        for (Int a = 0; a <= 1; ++a)
            for (Int b = 0; b <= 1; ++b) out[{a, b}] = ford_base(p, {a, b});
        return out;
    }
    FordParents f = ford_parents(p, q);
    GlobalOdometer g1 = ford_odometer(f.p1, f.q1);
    GlobalOdometer g2 = ford_odometer(f.p2, f.q2);
    auto in = [](GaussInt x, Int x0, Int x1, Int y0, Int y1) {
        return x0 <= x.re && x.re <= x1 && y0 <= x.im && x.im <= y1;
    };
    for (Int a = 0; a <= q; ++a) {
        for (Int b = 0; b <= q; ++b) {
            GaussInt x{a, b};
            std::vector<Int> vals;
            if (!in(x, 2, q - 2, 2, q - 2)) vals.push_back(ceil_div(ck::mul(p, ck::mul(a, b)), q));
            if (in(x, 0, f.q1, 0, f.q1)) vals.push_back(g1(x));
            if (in(x, f.q2, q, f.q2, q))
                vals.push_back(g1(x - GaussInt(f.q2, f.q2)) + GaussInt(f.p2, f.p2).dot(x) - f.p2 * f.q2 + 1);
            if (in(x, f.q1, q, 0, f.q2)) vals.push_back(g2(x - GaussInt(f.q1, 0)) + GaussInt(0, f.p1).dot(x));
            if (in(x, 0, f.q2, f.q1, q)) vals.push_back(g2(x - GaussInt(0, f.q1)) + GaussInt(f.p1, 0).dot(x));
            if (vals.empty()) throw Falsification("Ford subdomains miss " + pt(x));
            for (Int v : vals)
                if (v != vals.front())
                    throw Falsification("Ford copy rules disagree at " + pt(x) + " for p/q = " + std::to_string(p) +
                                        "/" + std::to_string(q));
            out[x] = vals.front();
        }
    }
    return out;
}

GlobalOdometer ford_odometer(Int p, Int q) {
    FordParents f = ford_parents(p, q);
    auto vals = ford_square_values(p, q);
    std::vector<std::pair<GaussInt, Int>> known(vals.begin(), vals.end());
    Circle c{ck::mul(q, q), GaussInt(1, ck::mul(2, ck::mul(p, q)))};
    return GlobalOdometer(c, {0, -q}, {q, f.q1}, {-p, 0}, {f.p1, p}, 0, ck::mul(f.q1, p), known);
}

Circle diamond_circle(Int k) {
    Int c = ck::mul(2, ck::mul(k, k + 1));
    return {c, GaussInt(ck::sub(ck::mul(2, ck::mul(k, k)), 1), c)};
}

bool in_diamond_tile(Int k, GaussInt x) {
    Int a = std::abs(x.re), b = std::abs(x.im - k);
    return std::max({a, b, a + b - 1}) <= k;
}

bool in_diamond_interior(Int k, GaussInt x) { return std::abs(x.re) + std::abs(x.im - k) <= k - 1; }

Int diamond_closed_form(Int, GaussInt x) {
    Int a = std::abs(x.re);
    Int d = x.re - x.im;
    return ck::sub(choose2(a), floor_div(ck::mul(d, d), 4));
}

GlobalOdometer diamond_odometer(Int k) {
    if (k < 1) throw std::invalid_argument("diamond index must be positive");
    std::vector<std::pair<GaussInt, Int>> known;
    for (Int a = -k; a <= k; ++a)
        for (Int b = 0; b <= 2 * k; ++b)
            if (in_diamond_tile(k, {a, b})) known.emplace_back(GaussInt{a, b}, diamond_closed_form(k, {a, b}));
    return GlobalOdometer(diamond_circle(k), {0, -2 * k}, {k + 1, k}, {-k, k - 1}, {k, 1}, -k * (k - 2),
                          k * (k + 1) / 2, known);
}

Int laplacian_at(const std::function<Int(GaussInt)>& g, GaussInt x) {
    Int c = g(x);
    Int s = 0;
    for (GaussInt d : {GaussInt(1), GaussInt(-1), I, -I}) s = ck::add(s, ck::sub(g(x + d), c));
    return s;
}

PatternGrid laplacian(const GlobalOdometer& g, Int x0, Int y0, Int width, Int height) {
    PatternGrid p{x0, y0, width, height, {}};
    p.values.reserve(static_cast<std::size_t>(width * height));
    auto f = [&](GaussInt x) { return g(x); };
    for (Int y = y0; y < y0 + height; ++y)
        for (Int x = x0; x < x0 + width; ++x) p.values.push_back(static_cast<int>(laplacian_at(f, {x, y})));
    return p;
}

namespace {

struct Frame {
    Int x0, y0, w, h;
};

Frame footprint_frame(const Tile& t) {
    Int x0 = t.footprint.front().re, x1 = x0, y0 = t.footprint.front().im, y1 = y0;
    for (GaussInt v : t.footprint) {
        x0 = std::min(x0, v.re);
        x1 = std::max(x1, v.re);
        y0 = std::min(y0, v.im);
        y1 = std::max(y1, v.im);
    }
    return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

// Solve d(x) = a.x + b on the points; nullopt when d is not integer affine there.
std::optional<std::pair<GaussInt, Int>> fit_affine(const std::vector<GaussInt>& pts,
                                                   const std::function<Int(GaussInt)>& d) {
    if (pts.empty()) return std::pair<GaussInt, Int>{};
    GaussInt p0 = pts.front();
    std::optional<GaussInt> e1, e2;
    for (GaussInt p : pts) {
        GaussInt e = p - p0;
        if (e == GaussInt{}) continue;
        if (!e1) e1 = p;
        else if ((*e1 - p0).cross(e) != 0) {
            e2 = p;
            break;
        }
    }
    GaussInt a;
    Int d0 = d(p0);
    if (e1 && e2) {
        GaussInt u = *e1 - p0, w = *e2 - p0;
        Int r1 = d(*e1) - d0, r2 = d(*e2) - d0;
        Int det = u.cross(w);
        Int ax = r1 * w.im - r2 * u.im, ay = u.re * r2 - w.re * r1;
        if (ax % det != 0 || ay % det != 0) return std::nullopt;
        a = {ax / det, ay / det};
    } else if (e1) {
        // collinear points: any integer a with a.u = r works; try the axis directions
        GaussInt u = *e1 - p0;
        Int r = d(*e1) - d0;
        if (u.re != 0 && r % u.re == 0 && u.im == 0) a = {r / u.re, 0};
        else if (u.im != 0 && r % u.im == 0 && u.re == 0) a = {0, r / u.im};
        else return std::nullopt;
    }
    Int b = d0 - a.dot(p0);
    for (GaussInt p : pts)
        if (d(p) != a.dot(p) + b) return std::nullopt;
    return std::pair{a, b};
}

}  // namespace

bool affine_equivalent(const std::function<Int(GaussInt)>& f1, const std::function<Int(GaussInt)>& f2, GaussInt t,
                       const std::vector<GaussInt>& points) {
    return fit_affine(points, [&](GaussInt x) { return f1(x) - f2(x + t); }).has_value();
}

std::optional<GaussInt> match_translation(const GlobalOdometer& g1, const GlobalOdometer& g2,
                                          const std::vector<GaussInt>& points) {
    auto f1 = [&](GaussInt x) { return g1(x); };
    auto f2 = [&](GaussInt x) { return g2(x); };
    std::vector<Int> lap1;
    for (GaussInt x : points) lap1.push_back(laplacian_at(f1, x));
    for (GaussInt t : g2.lattice().residues()) {
        bool same = true;
        for (std::size_t k = 0; k < points.size() && same; ++k)
            same = laplacian_at(f2, points[k] + t) == lap1[k];
        if (same && affine_equivalent(f1, f2, t, points)) return t;
    }
    return std::nullopt;
}

Report verify_odometer(BandPacking& band, const Circle& c, int samples) {
    Report rep;
    const GlobalOdometer* gp = nullptr;
    try {
        gp = &band.odometer(c);
        rep.add("gluing", true);
    } catch (const Falsification& e) {
        rep.add("gluing", false, e.what());
        return rep;
    }
    const GlobalOdometer& g = *gp;
    const TileOdometer& h = band.tile_odometer(c);
    const Tile& t = h.tile;
    auto f = [&](GaussInt x) { return g(x); };

    // affine vectors a_i = A v_i
    RatSym2 A = peak_matrix(c);
    bool av = true;
    for (int i = 0; i < 3; ++i) {
        GaussInt a;
        av = av && apply_integral(A, g.v(i), &a) && a == g.a(i);
    }
    rep.add("a_i0 = A v_i0", av);

    // 180 degree symmetry of the tile odometer up to odometer translation
    GaussInt P = t.centroid.twice;
    bool sym = fit_affine(t.footprint, [&](GaussInt x) { return h.at(x) - h.at(P - x); }).has_value();
    rep.add("tile odometer 180 symmetry", sym);

    // periodicity on sampled pairs
    Frame fr = footprint_frame(t);
    std::mt19937_64 rng(0x5eed ^ static_cast<std::uint64_t>(c.c));
    std::uniform_int_distribution<Int> dx(fr.x0 - 2 * fr.w, fr.x0 + 3 * fr.w), dy(fr.y0 - 2 * fr.h, fr.y0 + 3 * fr.h),
        dk(-3, 3);
    bool per = true;
    std::string bad;
    for (int s = 0; s < samples && per; ++s) {
        GaussInt x{dx(rng), dy(rng)};
        GaussInt v = GaussInt(dk(rng)) * g.v(0) + GaussInt(dk(rng)) * g.v(1);
        GaussInt Av;
        if (!apply_integral(A, v, &Av)) {
            per = false;
            bad = "A v not integral for v = " + pt(v);
            break;
        }
        if (g(x + v) != g(x) + x.dot(Av) + g(v)) {
            per = false;
            bad = "x = " + pt(x) + ", v = " + pt(v);
        }
    }
    rep.add("periodicity on sampled pairs", per && g(GaussInt{}) == 0, bad);

    // Laplacian bounds on a window three tile boxes wide
    PatternGrid grid = laplacian(g, fr.x0 - fr.w, fr.y0 - fr.h, 3 * fr.w, 3 * fr.h);
    bool le1 = true, range = true;
    for (int v : grid.values) {
        le1 = le1 && v <= 1;
        range = range && v >= -2 && v <= 1;
    }
    rep.add("Laplacian <= 1 on window", le1);
    rep.add("Laplacian values in {-2,-1,0,1}", range);

    bool web = true;
    std::string webbad;
    for (GaussInt b : t.boundary())
        if (laplacian_at(f, b) != 1) {
            web = false;
            webbad = pt(b);
            break;
        }
    rep.add("Laplacian = 1 on the web", web, webbad);

    Int sum = 0;
    for (GaussInt s : t.squares) sum += laplacian_at(f, s);
    rep.add("Laplacian sum over a period = 1", sum == 1, std::to_string(sum));
    return rep;
}

Report verify_interior_formula(BandPacking& band, const Circle& c) {
    Report rep;
    if (c.c <= 1) return rep;
    const TileBuild& tb = band.tile(c);
    const GlobalOdometer& g = band.odometer(c);
    auto f = [&](GaussInt x) { return g(x); };
    const Tile& t = tb.tile;
    bool centroid_vertex = t.centroid.is_integral();
    GaussInt cen = centroid_vertex ? t.centroid.to_int() : GaussInt{};
    Int checked_formula = 0, checked_inherit = 0;
    bool ok = true;
    std::string bad;
    for (GaussInt x : t.footprint) {
        if (t.on_boundary(x)) continue;
        Int k = 0;
        for (const auto& st : tb.parts)
            if (st.tile.on_boundary(x)) ++k;
        Int lap = laplacian_at(f, x);
        if (k >= 2) {
            Int expect = 3 - k - ((centroid_vertex && x == cen) ? 1 : 0);
            ++checked_formula;
            if (lap != expect) {
                ok = false;
                bad = "k = " + std::to_string(k) + " at " + pt(x) + ": " + std::to_string(lap);
            }
            continue;
        }
        const SubTile* inside = nullptr;
        for (const auto& st : tb.parts)
            if (!st.tile.degenerate() && st.tile.interior(x)) inside = &st;
        if (!inside) {
            ok = false;
            bad = "vertex " + pt(x) + " in no subtile interior";
            continue;
        }
        const GlobalOdometer& gi = band.odometer(inside->circle);
        Int expect = laplacian_at([&](GaussInt y) { return gi(y); }, x - inside->shift);
        ++checked_inherit;
        if (lap != expect) {
            ok = false;
            bad = "inherited value differs at " + pt(x);
        }
    }
    rep.add("interior Laplacian formula", ok,
            bad.empty() ? std::to_string(checked_formula) + " web vertices, " + std::to_string(checked_inherit) +
                              " inherited"
                        : bad);
    return rep;
}

MaximalityReport maximality_probe(const GlobalOdometer& g, const Tile& t, int max_size) {
    MaximalityReport rep;
    std::vector<GaussInt> cells;
    for (GaussInt x : t.footprint)
        if (!t.on_boundary(x)) cells.push_back(x);
    std::set<GaussInt> allowed(cells.begin(), cells.end());
    std::map<GaussInt, Int> lap;
    auto f = [&](GaussInt x) { return g(x); };
    for (GaussInt x : cells) lap[x] = laplacian_at(f, x);
    const GaussInt dirs[4] = {GaussInt(1), GaussInt(-1), I, -I};

    std::vector<GaussInt> cur;
    auto simply_connected = [&]() {
        if (cur.size() < 8) return true;  // a hole needs at least eight surrounding vertices
        Int x0 = cur[0].re, x1 = x0, y0 = cur[0].im, y1 = y0;
        for (GaussInt p : cur) {
            x0 = std::min(x0, p.re);
            x1 = std::max(x1, p.re);
            y0 = std::min(y0, p.im);
            y1 = std::max(y1, p.im);
        }
        std::set<GaussInt> in(cur.begin(), cur.end()), seen;
        std::vector<GaussInt> stack{{x0 - 1, y0 - 1}};
        seen.insert(stack.back());
        while (!stack.empty()) {
            GaussInt p = stack.back();
            stack.pop_back();
            for (GaussInt d : dirs) {
                GaussInt n = p + d;
                if (n.re < x0 - 1 || n.re > x1 + 1 || n.im < y0 - 1 || n.im > y1 + 1) continue;
                if (in.count(n) || seen.count(n)) continue;
                seen.insert(n);
                stack.push_back(n);
            }
        }
        return static_cast<Int>(seen.size() + in.size()) == (x1 - x0 + 3) * (y1 - y0 + 3);
    };
    auto test = [&]() {
        ++rep.sets_checked;
        if (!simply_connected()) return;
        std::set<GaussInt> in(cur.begin(), cur.end());
        for (GaussInt x : cur) {
            Int n = 0;
            for (GaussInt d : dirs) n += in.count(x + d);
            if (lap[x] + 4 - n > 1) return;
        }
        if (rep.ok) {
            rep.ok = false;
            rep.counterexample = cur;
        }
    };
    // Redelmeier enumeration of connected sets rooted at their smallest cell
    std::function<void(std::vector<GaussInt>, std::set<GaussInt>&, GaussInt)> grow =
        [&](std::vector<GaussInt> untried, std::set<GaussInt>& seen, GaussInt root) {
            while (!untried.empty()) {
                GaussInt x = untried.back();
                untried.pop_back();
                cur.push_back(x);
                test();
                if (static_cast<int>(cur.size()) < max_size) {
                    std::vector<GaussInt> next = untried;
                    std::vector<GaussInt> added;
                    for (GaussInt d : dirs) {
                        GaussInt n = x + d;
                        if (n < root || !allowed.count(n) || seen.count(n)) continue;
                        seen.insert(n);
                        added.push_back(n);
                        next.push_back(n);
                    }
                    grow(next, seen, root);
                    for (GaussInt n : added) seen.erase(n);
                }
                cur.pop_back();
            }
        };
    for (GaussInt r : cells) {
        std::set<GaussInt> seen{r};
        grow({r}, seen, r);
    }
    return rep;
}

Int harmonic_h(GaussInt w, GaussInt x) {
    Int t1 = ck::mul(x.re, x.re + 1) / 2, t2 = ck::mul(x.im, x.im + 1) / 2;
    return ck::add(ck::sub(ck::mul(w.re, t1), ck::mul(w.re, t2)), ck::mul(w.im, ck::mul(x.re, x.im)));
}

GlobalOdometer harmonic_shift(const GlobalOdometer& g, GaussInt w) {
    const Circle& c = g.circle();
    Circle shifted{c.c, c.w + GaussInt(ck::mul(2, c.c)) * w};
    auto M = [&](GaussInt v) { return GaussInt(w.re * v.re + w.im * v.im, w.im * v.re - w.re * v.im); };
    return g.plus_quadratic(shifted, [&](GaussInt x) { return harmonic_h(w, x); }, M(g.v(0)), M(g.v(1)));
}

Int floor_rational_plus_sqrt(const Rational& r, Int m) {
    if (m < 0) throw std::invalid_argument("negative radicand");
    auto fits = [&](Int n) {
        Rational d = Rational(n) - r;
        return d.sign() <= 0 || d * d <= Rational(m);
    };
    Int n = ck::add(r.floor(), isqrt(m));
    while (fits(n + 1)) ++n;
    while (!fits(n)) --n;
    return n;
}

namespace {

std::vector<Int> psd_values(const RatSym2& A, Int x0, Int x1, Int y0, Int y1, Int pad) {
    std::set<GaussInt> P;
    for (Int b = y0; b <= y1; ++b)
        for (Int a = x0; a <= x1; ++a) {
            auto [u, v] = ratsym_apply(A, {a, b});
            for (Int da = -1; da <= 1; ++da)
                for (Int db = -1; db <= 1; ++db) P.insert(GaussInt{u.floor() + da, v.floor() + db});
        }
    std::vector<std::pair<GaussInt, Int>> fy;
    for (Int b = y0 - pad; b <= y1 + pad; ++b)
        for (Int a = x0 - pad; a <= x1 + pad; ++a) {
            GaussInt y{a, b};
            fy.emplace_back(y, floor_rational_plus_sqrt(A.half_form(y), y.norm()));
        }
    std::vector<std::pair<GaussInt, Int>> lines;
    for (GaussInt p : P) {
        Int m = INT64_MAX;
        for (const auto& [y, v] : fy) m = std::min(m, ck::sub(v, p.dot(y)));
        lines.emplace_back(p, m);
    }
    std::vector<Int> out;
    for (Int b = y0; b <= y1; ++b)
        for (Int a = x0; a <= x1; ++a) {
            Int best = INT64_MIN;
            for (const auto& [p, m] : lines) best = std::max(best, ck::add(p.dot({a, b}), m));
            out.push_back(best);
        }
    return out;
}

}  // namespace

PsdApprox psd_integer_approx(const RatSym2& A, Int x0, Int x1, Int y0, Int y1) {
    if (!A.psd()) throw std::invalid_argument("matrix is not positive semidefinite");
    PsdApprox out;
    out.x0 = x0 - 1;
    out.y0 = y0 - 1;
    out.width = x1 - x0 + 3;
    out.height = y1 - y0 + 3;
    Int diam = std::max(x1 - x0, y1 - y0) + 2;
    out.values = psd_values(A, x0 - 1, x1 + 1, y0 - 1, y1 + 1, diam);
    out.stable = psd_values(A, x0 - 1, x1 + 1, y0 - 1, y1 + 1, 2 * diam) == out.values;
    return out;
}

}  // namespace apollonite
