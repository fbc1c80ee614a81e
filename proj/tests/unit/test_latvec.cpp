#include <doctest.h>

#include "apollonite/band.hpp"
#include "apollonite/verify.hpp"

using namespace apollonite;

namespace {

Circle C(Int c, Int x, Int y) { return {c, {x, y}}; }

bool identity(const Circle& ci, const Circle& cj, const VAPair& p) {
    return p.v * p.v == GaussInt(cj.c) * ci.w - GaussInt(ci.c) * cj.w && GaussInt(2) * p.v * p.a == ci.w + cj.w;
}

}  // namespace

TEST_CASE("base vectors") {
    for (GaussInt z : {GaussInt(0, 0), GaussInt(1, 1), GaussInt(-2, 3)}) {
        VATriple t = base_vectors(z);
        Quadruple q = base_quadruple(z);
        CHECK(t.p21.v + t.p32.v + t.p13.v == GaussInt{});
        CHECK(t.p21.a + t.p32.a + t.p13.a == GaussInt{});
        CHECK(t.p32 == VAPair{{0, 0}, {1, 0}});
        CHECK(identity(q[2], q[1], t.p21));
        CHECK(identity(q[3], q[2], t.p32));
        CHECK(identity(q[1], q[3], t.p13));
    }
    CHECK(base_vectors({1, 1}).p13.a == GaussInt(1, 2));
}

TEST_CASE("ford and diamond vectors") {
    BandPacking band;
    const auto& f = band.node(C(4, 1, 4));
    CHECK(f.quad[1] == C(1, 1, 2));
    CHECK(f.child.to_child[0] == VAPair{{2, 1}, {1, 1}});
    CHECK(f.child.to_child[1] == VAPair{{-2, 1}, {0, -1}});
    CHECK(f.child.to_child[2] == VAPair{{0, -2}, {-1, 0}});
    CHECK(f.child.from_child(1) == VAPair{{-1, 2}, {1, -1}});

    const auto& d = band.node(C(12, 7, 12));
    CHECK(d.quad[1] == C(4, 1, 4));
    CHECK(d.quad[2] == C(1, 1, 2));
    CHECK(d.child.to_child[1] == VAPair{{3, 2}, {2, 1}});
    CHECK(d.child.to_child[0] == VAPair{{0, -4}, {-2, 1}});

    for (Int q = 2; q <= 12; ++q)
        for (Int p = 0; p < q; ++p)
            if (gcd(p, q) == 1) CHECK(check_ford_table(band, p, q).ok());
    for (Int k = 1; k <= 8; ++k) CHECK(check_diamond_table(band, k).ok());
}

TEST_CASE("peak matrices") {
    CHECK(peak_matrix(C(1, 1, 0)) == RatSym2{1, 0, 0});
    CHECK(peak_matrix(C(4, 1, 4)) == RatSym2{Rational(1, 4), Rational(1, 2), 0});
    for (Int q = 1; q <= 9; ++q)
        for (Int p = 0; p < q; ++p)
            if (gcd(p, q) == 1)
                CHECK(peak_matrix(C(q * q, 1, 2 * p * q)) == RatSym2{Rational(1, q * q), Rational(p, q), 0});
    CHECK_THROWS(peak_matrix(C(0, 1, 0)));
}

TEST_CASE("lattices") {
    BandPacking band;
    CHECK(band.node(C(1, 1, 0)).lattice == Lattice2({1, 0}, {0, 1}));
    const Lattice2& L = band.node(C(4, 1, 4)).lattice;
    CHECK(L == Lattice2({2, 1}, {-2, 1}));
    CHECK(std::abs(L.det()) == 4);
    CHECK(std::abs(band.node(C(153, 17, 120)).lattice.det()) == 153);

    Lattice2 M({3, 1}, {1, 2});
    CHECK(M.index() == 5);
    CHECK(M.residues().size() == 5);
    GaussInt lam;
    GaussInt r = M.reduce({17, -4}, &lam);
    CHECK(M.contains(lam));
    CHECK(r + lam == GaussInt(17, -4));
    auto [k1, k2] = M.coords({4, 3});
    CHECK(k1 == 1);
    CHECK(k2 == 1);
}

TEST_CASE("L_C equals Lambda_C against a brute-force residue count") {
    BandPacking band;
    for (const Circle& c : band_circles(band, 120)) {
        RatSym2 A = peak_matrix(c);
        const Lattice2& L = band.node(c).lattice;
        // an index-c lattice contains c Z^2 and meets [0,c)^2 in exactly c points
        Int count = 0;
        bool inside = true;
        for (Int y = 0; y < c.c; ++y)
            for (Int x = 0; x < c.c; ++x)
                if (apply_integral(A, {x, y}, nullptr)) {
                    ++count;
                    inside = inside && L.contains({x, y});
                }
        CHECK(count == c.c);
        CHECK(inside);
        CHECK(lattice_LC(c, L).equal());
    }
}

TEST_CASE("every generated quadruple satisfies the lattice identities") {
    BandPacking band;
    for (const auto& n : band.enumerate(300, Window::square(0, 2))) CHECK(check_quadruple_identities(n).ok());
}
