#pragma once

// Tile odometers, the periodic global odometer g_C, Laplacian patterns, the
// Ford and diamond closed forms, and the integer approximation lemma.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "apollonite/latvec.hpp"
#include "apollonite/packing.hpp"
#include "apollonite/report.hpp"
#include "apollonite/tiles.hpp"

namespace apollonite {

class BandPacking;

struct TileOdometer {
    Circle circle;
    Tile tile;                // domain is tile.footprint
    std::vector<Int> values;  // aligned with tile.footprint
    RatPoint slope;           // average gradient over the squares of the tile

    Int at(GaussInt x) const;
    bool defined(GaussInt x) const { return tile.has_vertex(x); }
};

// (1/|T|) sum over squares of the mean horizontal and vertical differences
RatPoint average_slope(const Tile& t, const std::function<Int(GaussInt)>& h);

// Glue the six subodometers of the decomposition. Throws Falsification when
// overlapping subodometers are not compatible.
TileOdometer build_tile_odometer(BandPacking& band, const Circle& c);

// g with g(x+v) = g(x) + x.a(v) + g(v) for v in the lattice, g(0) = 0.
class GlobalOdometer {
public:
    GlobalOdometer() = default;
    // v1, v2 basis with affine vectors a1, a2 = A v_i and constants beta_i = g(v_i) - g(0);
    // `known` lists values of g up to one additive constant on a set meeting every residue class.
    GlobalOdometer(Circle c, GaussInt v1, GaussInt v2, GaussInt a1, GaussInt a2, Int beta1, Int beta2,
                   const std::vector<std::pair<GaussInt, Int>>& known);

    Int operator()(GaussInt x) const;
    // x.a(lambda) + g(lambda) for lambda in the lattice
    GaussInt affine(GaussInt lambda) const;
    Int beta(GaussInt lambda) const;

    const Circle& circle() const { return circle_; }
    const Lattice2& lattice() const { return lattice_; }
    GaussInt v(int i) const { return v_[static_cast<std::size_t>(i)]; }
    GaussInt a(int i) const { return a_[static_cast<std::size_t>(i)]; }
    Int beta_of(int i) const { return beta_[static_cast<std::size_t>(i)]; }
    // the vector b of the periodic-difference form g(x) - x^T A x/2 - b.x
    RatPoint periodic_b() const;
    // g + h for a quadratic h with h(0) = 0 and h(x+v) - h(x) = x.dA v + h(v); da_i = dA v_i
    GlobalOdometer plus_quadratic(const Circle& c, const std::function<Int(GaussInt)>& h, GaussInt da1,
                                  GaussInt da2) const;

private:
    Circle circle_;
    Lattice2 lattice_;
    std::array<GaussInt, 3> v_{}, a_{};
    std::array<Int, 3> beta_{};
    std::vector<GaussInt> reps_;  // indexed by residue
    std::vector<Int> rep_values_;
};

// g from a tile odometer and the child vectors (v_{i0}, a_{i0}).
GlobalOdometer globalize(const TileOdometer& h, const ChildVectors& cv);

// Ford circles: g_{pq} = ceil(p x1 x2 / q) near the boundary of [0,q]^2
GlobalOdometer ford_odometer(Int p, Int q);
// values of g_{pq} on [0,q]^2 by the E1..E4 copy rules
std::map<GaussInt, Int> ford_square_values(Int p, Int q);
struct FordParents {
    Int p1, q1, p2, q2;
};
FordParents ford_parents(Int p, Int q);

// Diamond circles (2k(k+1), 2k^2-1, 2k(k+1))
GlobalOdometer diamond_odometer(Int k);
Int diamond_closed_form(Int k, GaussInt x);
bool in_diamond_tile(Int k, GaussInt x);
bool in_diamond_interior(Int k, GaussInt x);
Circle diamond_circle(Int k);

struct PatternGrid {
    Int x0 = 0, y0 = 0, width = 0, height = 0;
    std::vector<int> values;  // row-major from y0 upward
    int at(Int x, Int y) const { return values[static_cast<std::size_t>((y - y0) * width + (x - x0))]; }
};

Int laplacian_at(const std::function<Int(GaussInt)>& g, GaussInt x);
PatternGrid laplacian(const GlobalOdometer& g, Int x0, Int y0, Int width, Int height);

// Gluing, periodicity on sampled pairs, superharmonicity on a three-period
// window, the web property and the fundamental-domain Laplacian sum.
Report verify_odometer(BandPacking& band, const Circle& c, int samples = 100);

// Interior vertices on k >= 2 subtile boundaries satisfy Lap g = 3 - k - [x = centroid];
// the remaining interior vertices inherit the pattern of the subtile containing them.
Report verify_interior_formula(BandPacking& band, const Circle& c);

struct MaximalityReport {
    Int sets_checked = 0;
    bool ok = true;
    std::vector<GaussInt> counterexample;
};
MaximalityReport maximality_probe(const GlobalOdometer& g, const Tile& t, int max_size);

// g + h_w for the circle shifted by 2w
GlobalOdometer harmonic_shift(const GlobalOdometer& g, GaussInt w);
Int harmonic_h(GaussInt w, GaussInt x);

// sup_p inf_y floor(q(y) + |y|) + p.(x - y), q(y) = y^T A y / 2, on [x0,x1] x [y0,y1]
struct PsdApprox {
    Int x0, y0, width, height;  // window padded by one vertex on each side
    std::vector<Int> values;
    bool stable = false;        // unchanged when the y range is doubled
    Int at(GaussInt x) const {
        return values[static_cast<std::size_t>((x.im - y0) * width + (x.re - x0))];
    }
};
PsdApprox psd_integer_approx(const RatSym2& A, Int x0, Int x1, Int y0, Int y1);
// floor(r + sqrt(m)) exactly
Int floor_rational_plus_sqrt(const Rational& r, Int m);

// f1(x) = f2(x + t) + a.x + b on every listed point, for some integer a, b.
bool affine_equivalent(const std::function<Int(GaussInt)>& f1, const std::function<Int(GaussInt)>& f2,
                       GaussInt t, const std::vector<GaussInt>& points);

// Translation t making the Laplacian patterns of two odometers coincide on the points.
std::optional<GaussInt> match_translation(const GlobalOdometer& g1, const GlobalOdometer& g2,
                                          const std::vector<GaussInt>& points);

}  // namespace apollonite
