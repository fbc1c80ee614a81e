#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "apollonite/band.hpp"
#include "apollonite/verify.hpp"

using namespace apollonite;

namespace {

Circle C(Int c, Int x, Int y) { return {c, {x, y}}; }

const GaussInt dirs[4] = {GaussInt(1), GaussInt(-1), I, -I};

// edge-connected, Euler characteristic 1, and no vertex where only two
// diagonally opposite squares meet
bool oracle_disk(const std::vector<GaussInt>& sq) {
    std::set<GaussInt> s(sq.begin(), sq.end()), seen{sq.front()};
    std::vector<GaussInt> st{sq.front()};
    while (!st.empty()) {
        GaussInt p = st.back();
        st.pop_back();
        for (GaussInt d : dirs)
            if (s.count(p + d) && seen.insert(p + d).second) st.push_back(p + d);
    }
    if (seen.size() != s.size()) return false;
    std::set<GaussInt> verts;
    std::set<std::pair<GaussInt, GaussInt>> edges;
    for (GaussInt x : sq) {
        GaussInt c[4] = {x, x + GaussInt(1), x + GaussInt(1, 1), x + I};
        for (int k = 0; k < 4; ++k) {
            verts.insert(c[k]);
            edges.insert(std::minmax(c[k], c[(k + 1) % 4]));
        }
    }
    if (static_cast<Int>(verts.size()) - static_cast<Int>(edges.size()) + static_cast<Int>(sq.size()) != 1) return false;
    for (GaussInt v : verts) {
        bool ll = s.count(v - GaussInt(1, 1)), lr = s.count(v - I), ul = s.count(v - GaussInt(1)), ur = s.count(v);
        if ((ll && ur && !lr && !ul) || (lr && ul && !ll && !ur)) return false;
    }
    return true;
}

bool oracle_rot90(const Tile& t) {
    std::set<GaussInt> s(t.squares.begin(), t.squares.end());
    // square centres in twice-coordinates are 2x + (1,1)
    GaussInt c = t.centroid.twice;
    for (GaussInt x : t.squares) {
        GaussInt m = x + x + GaussInt(1, 1);
        GaussInt r = c + I * (m - c);
        GaussInt ll = r - GaussInt(1, 1);
        if (ll.re % 2 || ll.im % 2) return false;
        if (!s.count({ll.re / 2, ll.im / 2})) return false;
    }
    return true;
}

// number of translates T + lambda covering each square of a window around T
bool oracle_cover(const Tile& t, const Lattice2& L) {
    Int x0 = t.squares.front().re, x1 = x0, y0 = t.squares.front().im, y1 = y0;
    for (GaussInt s : t.squares) {
        x0 = std::min(x0, s.re), x1 = std::max(x1, s.re);
        y0 = std::min(y0, s.im), y1 = std::max(y1, s.im);
    }
    Int w = x1 - x0 + 1, h = y1 - y0 + 1;
    std::map<GaussInt, int> cover;
    for (GaussInt lam : L.points_in(-2 * w, 2 * w, -2 * h, 2 * h))
        for (GaussInt s : t.squares) ++cover[s + lam];
    for (Int y = y0 - h; y <= y1 + h; ++y)
        for (Int x = x0 - w; x <= x1 + w; ++x)
            if (cover[{x, y}] != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("the curvature-4 tile is a 2x2 block") {
    BandPacking band;
    const Tile& t = band.tile(C(4, 1, 4)).tile;
    CHECK(t.squares == std::vector<GaussInt>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});
    CHECK(t.footprint.size() == 9);
    CHECK(t.interior({0, 0}));
    CHECK(t.boundary().size() == 8);
}

TEST_CASE("base tiles") {
    BandPacking band;
    const Tile& unit = band.tile(C(1, 1, 0)).tile;
    CHECK(unit.area() == 1);
    CHECK(verify_tiling(unit, band.node(C(1, 1, 0)).lattice).exact_cover);
    // the line parent of (4,1,4) gives a degenerate part inside F(T_0)
    const TileBuild& tb = band.tile(C(4, 1, 4));
    int degenerate = 0;
    for (const auto& p : tb.parts)
        if (p.tile.degenerate()) {
            ++degenerate;
            CHECK(p.tile.footprint.size() == 1);
            CHECK(tb.tile.has_vertex(p.tile.footprint.front()));
        }
    CHECK(degenerate == 2);
}

TEST_CASE("decomposition of the (153,17,120) tile") {
    BandPacking band;
    const TileBuild& tb = band.tile(C(153, 17, 120));
    CHECK(tb.tile.area() == 153);
    REQUIRE(tb.precursor);
    CHECK(*tb.precursor == C(25, 1, 20));
    std::multiset<Int> areas;
    std::vector<const SubTile*> big;
    for (const auto& p : tb.parts) {
        areas.insert(p.tile.area());
        if (p.tile.area() == 76) big.push_back(&p);
    }
    CHECK(areas == std::multiset<Int>{4, 4, 9, 9, 76, 76});
    REQUIRE(big.size() == 2);
    CHECK(intersect_sorted(big[0]->tile.squares, big[1]->tile.squares).size() == 25);
    CHECK(check_tile(band, C(153, 17, 120)).ok());
}

TEST_CASE("double decomposition") {
    BandPacking band;
    auto dd = double_decomposition(band, C(153, 17, 120));
    CHECK(dd.applicable);
    CHECK(dd.overlap_circle == C(25, 1, 20));
    CHECK(dd.q4m_equals_s4p);
    CHECK(dd.q_covers);
    CHECK(dd.s_covers);
    auto ford = double_decomposition(band, C(64, 1, 48));
    CHECK(ford.overlap_circle == C(4, 1, 4));
    CHECK_FALSE(double_decomposition(band, C(4, 1, 4)).applicable);
}

TEST_CASE("tiles against independent oracles") {
    BandPacking band;
    for (const Circle& c : band_circles(band, 200)) {
        CAPTURE(to_string(c));
        const Tile& t = band.tile(c).tile;
        const Lattice2& L = band.node(c).lattice;
        CHECK(t.area() == c.c);
        CHECK(oracle_disk(t.squares));
        CHECK(is_disk(t));
        CHECK(oracle_rot90(t));
        CHECK(is_rot90_symmetric(t));
        CHECK(oracle_cover(t, L));
        TilingReport tr = verify_tiling(t, L);
        CHECK(tr.exact_cover);
        if (c.c > 1) {
            CHECK(tr.contacts.size() == 6);
            CHECK(tr.contacts_touch);
        }
    }
}

TEST_CASE("disk detection rejects holes and pinches") {
    Circle c = C(8, 0, 0);
    std::vector<GaussInt> ring;
    for (Int y = 0; y < 3; ++y)
        for (Int x = 0; x < 3; ++x)
            if (x != 1 || y != 1) ring.push_back({x, y});
    CHECK_FALSE(is_disk(square_region(c, ring)));
    CHECK_FALSE(oracle_disk(ring));
    std::vector<GaussInt> pinch{{0, 0}, {1, 1}};
    CHECK_FALSE(is_disk(square_region(c, pinch)));
    CHECK_FALSE(oracle_disk(pinch));
}

TEST_CASE("touching") {
    BandPacking band;
    const Tile& t = band.tile(C(4, 1, 4)).tile;
    CHECK(tiles_touch(t, t.translated({2, 1})));
    CHECK_FALSE(tiles_touch(t, t.translated({2, 2})));  // corner contact only
    CHECK_FALSE(tiles_touch(t, t.translated({1, 0})));  // overlap
    CHECK(touching_triple(t, {2, 1}, {0, 2}));
}

TEST_CASE("strings") {
    BandPacking band;
    const Tile& t = band.tile(C(12, 7, 12)).tile;
    const Lattice2& L = band.node(C(12, 7, 12)).lattice;
    CHECK(boundary_string(t, L, {}, {}) == std::vector<GaussInt>{{0, 0}});
    GaussInt b1 = L.b1();
    auto two = boundary_string(t, L, {}, b1);
    if (tiles_touch(t, t.translated(b1))) CHECK(two.size() == 2);
    for (const Circle& c : band_circles(band, 200)) CHECK(check_boundary_strings(band, c).ok());
}
