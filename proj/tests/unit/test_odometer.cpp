#include <doctest.h>

#include <cmath>
#include <random>

#include "apollonite/band.hpp"
#include "apollonite/verify.hpp"

using namespace apollonite;

namespace {

Circle C(Int c, Int x, Int y) { return {c, {x, y}}; }

Int lap(const GlobalOdometer& g, GaussInt x) {
    return g(x + GaussInt(1)) + g(x - GaussInt(1)) + g(x + I) + g(x - I) - 4 * g(x);
}

}  // namespace

TEST_CASE("ford closed form") {
    GlobalOdometer g11 = ford_odometer(1, 1);
    CHECK(g11({2, 3}) == 7);
    for (Int q = 2; q <= 9; ++q)
        for (Int p = 0; p < q; ++p) {
            if (gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto vals = ford_square_values(p, q);
            GlobalOdometer g = ford_odometer(p, q);
            for (Int a = 0; a <= q; ++a) {
                CHECK(vals.at({a, 0}) == 0);
                CHECK(vals.at({0, a}) == 0);
                CHECK(vals.at({a, 1}) == ceil_div(p * a, q));
            }
            for (Int a = 0; a <= q; ++a)
                for (Int b = 0; b <= q; ++b) {
                    bool strip = a < 2 || b < 2 || a > q - 2 || b > q - 2;
                    if (strip) CHECK(vals.at({a, b}) == ceil_div(p * a * b, q));
                    bool rim = a == 0 || b == 0 || a == q || b == q;
                    if (rim) CHECK(lap(g, {a, b}) == 1);
                    CHECK(g({a, b}) - g({0, 0}) == vals.at({a, b}) - vals.at({0, 0}));
                }
            // translation by (0,-q)
            for (GaussInt x : {GaussInt(3, 5), GaussInt(-7, 2), GaussInt(0, 0)})
                CHECK(g(x + GaussInt(0, -q)) == g(x) - p * x.re + g({0, -q}));
        }
    CHECK(ford_square_values(3, 8).at({5, 1}) == 2);
}

TEST_CASE("ford parents") {
    auto f = ford_parents(3, 8);
    CHECK(f.p1 * 8 - f.q1 * 3 == 1);
    CHECK(f.p2 * 8 - f.q2 * 3 == -1);
    CHECK(f.q1 + f.q2 == 8);
    CHECK(f.p1 + f.p2 == 3);
    CHECK_THROWS(ford_parents(2, 4));
}

TEST_CASE("diamond closed form") {
    CHECK(diamond_closed_form(2, {0, 0}) == 0);
    CHECK(diamond_closed_form(2, {2, 1}) == 1);
    for (Int k = 1; k <= 6; ++k) {
        GlobalOdometer g = diamond_odometer(k);
        CHECK(g.circle() == C(2 * k * (k + 1), 2 * k * k - 1, 2 * k * (k + 1)));
        for (Int a = -k; a <= k; ++a)
            for (Int b = 0; b <= 2 * k; ++b) {
                GaussInt x{a, b};
                if (!in_diamond_interior(k, x)) continue;
                Int want = ((a + b) % 2 == 0 ? 1 : -1) - (a == 0 ? 1 : 0);
                CHECK(lap(g, x) == want);
            }
    }
}

TEST_CASE("closed forms match the recursive odometers") {
    BandPacking band;
    for (Int q = 1; q <= 12; ++q)
        for (Int p = 0; p < q; ++p)
            if (gcd(p, q) == 1) CHECK(check_ford_oracle(band, p, q).ok());
    for (Int k = 1; k <= 8; ++k) CHECK(check_diamond_oracle(band, k).ok());
}

TEST_CASE("curvature-1 tile odometer") {
    BandPacking band;
    for (Int m = -2; m <= 2; ++m) {
        const TileOdometer& h = band.tile_odometer(C(1, 1, 2 * m));
        CHECK(h.at({0, 0}) == 0);
        CHECK(h.at({1, 0}) == 0);
        CHECK(h.at({0, 1}) == 0);
        CHECK(h.at({1, 1}) == m);
    }
}

TEST_CASE("periodicity and normalisation against direct evaluation") {
    BandPacking band;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> coord(-60, 60), coef(-4, 4);
    for (const Circle& c : band_circles(band, 100)) {
        CAPTURE(to_string(c));
        const GlobalOdometer& g = band.odometer(c);
        CHECK(g({0, 0}) == 0);
        RatSym2 A = peak_matrix(c);
        for (int i = 0; i < 2; ++i) {
            GaussInt a;
            REQUIRE(apply_integral(A, g.v(i), &a));
            CHECK(a == g.a(i));
            CHECK(g(g.v(i)) == g.beta_of(i));
        }
        for (int s = 0; s < 40; ++s) {
            GaussInt x{coord(rng), coord(rng)};
            GaussInt v = GaussInt(coef(rng)) * g.v(0) + GaussInt(coef(rng)) * g.v(1);
            GaussInt av;
            REQUIRE(apply_integral(A, v, &av));
            CHECK(g(x + v) == g(x) + x.dot(av) + g(v));
        }
    }
}

TEST_CASE("Laplacian bounds, web and fundamental-domain sum") {
    BandPacking band;
    for (const Circle& c : band_circles(band, 100)) {
        CAPTURE(to_string(c));
        const GlobalOdometer& g = band.odometer(c);
        const Lattice2& L = g.lattice();
        Int sum = 0;
        for (GaussInt r : L.residues()) sum += lap(g, r);
        CHECK(sum == 1);
        const Tile& t = band.tile(c).tile;
        for (GaussInt b : t.boundary()) CHECK(lap(g, b) == 1);
        Int w = L.hermite_p(), h = L.hermite_s();
        bool bounded = true;
        for (Int y = -h; y < 2 * h; ++y)
            for (Int x = -w; x < 2 * w; ++x) {
                Int d = lap(g, {x, y});
                bounded = bounded && d <= 1 && d >= -2;
            }
        CHECK(bounded);
    }
}

TEST_CASE("interior formula cases") {
    BandPacking band;
    // (4,1,4): the centroid lies on four subtiles
    CHECK(lap(band.odometer(C(4, 1, 4)), {0, 0}) == -2);
    for (const Circle& c : band_circles(band, 150)) CHECK(verify_interior_formula(band, c).ok());
    CHECK(laplacian_at([](GaussInt x) { return 3 * x.re - 5 * x.im + 11; }, {4, -9}) == 0);
}

TEST_CASE("maximality probe") {
    GlobalOdometer g = ford_odometer(1, 2);
    CHECK(lap(g, {1, 1}) == -2);
    BandPacking band;
    auto m = maximality_probe(band.odometer(C(4, 1, 4)), band.tile(C(4, 1, 4)).tile, 4);
    CHECK(m.ok);
    CHECK(m.sets_checked == 1);
    auto big = maximality_probe(band.odometer(C(153, 17, 120)), band.tile(C(153, 17, 120)).tile, 4);
    CHECK(big.ok);
    CHECK(big.sets_checked > 100);
}

TEST_CASE("harmonic shift") {
    BandPacking band;
    const GlobalOdometer& g = band.odometer(C(9, 1, 6));
    GlobalOdometer same = harmonic_shift(g, {0, 0});
    for (Int x = -5; x <= 5; ++x) CHECK(same({x, 2 * x - 1}) == g({x, 2 * x - 1}));
    for (GaussInt w : {GaussInt(1, 0), GaussInt(0, 1), GaussInt(2, -1)}) {
        GlobalOdometer s = harmonic_shift(g, w);
        CHECK(s.circle() == Circle{9, g.circle().w + GaussInt(18) * w});
        CHECK(band.contains(s.circle()));
        for (Int y = -6; y <= 6; ++y)
            for (Int x = -6; x <= 6; ++x) {
                CHECK(laplacian_at([&](GaussInt p) { return harmonic_h(w, p); }, {x, y}) == 0);
                CHECK(lap(s, {x, y}) == lap(g, {x, y}));
            }
    }
    RatSym2 d = peak_matrix(C(9, 1 + 18, 6)) - peak_matrix(C(9, 1, 6));
    CHECK(d == RatSym2{1, 0, -1});
}

TEST_CASE("integer approximation of positive semidefinite forms") {
    CHECK(floor_rational_plus_sqrt(Rational(1, 2), 2) == 1);
    CHECK(floor_rational_plus_sqrt(Rational(-3, 2), 9) == 1);
    CHECK(floor_rational_plus_sqrt(0, 0) == 0);
    RatSym2 mats[3] = {{0, 0, 0}, {1, 0, 1}, {Rational(2, 3), Rational(1, 3), Rational(1, 2)}};
    for (const auto& A : mats) {
        PsdApprox r = psd_integer_approx(A, -8, 8, -8, 8);
        CHECK(r.stable);
        for (Int y = -8; y <= 8; ++y)
            for (Int x = -8; x <= 8; ++x) {
                GaussInt p{x, y};
                Int d = r.at(p + GaussInt(1)) + r.at(p - GaussInt(1)) + r.at(p + I) + r.at(p - I) - 4 * r.at(p);
                CHECK(d >= 0);
                double q = A.half_form(p).to_double();
                CHECK(std::abs(static_cast<double>(r.at(p)) - q) <= std::sqrt(static_cast<double>(p.norm())) + 1);
            }
    }
    CHECK_THROWS(psd_integer_approx(RatSym2{1, 2, 1}, 0, 1, 0, 1));
}
