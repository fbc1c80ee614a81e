#pragma once

// Fundamental tiles T_C: recursive construction, decomposition, tiling and
// boundary-string checks.

#include <optional>
#include <vector>

#include "apollonite/latvec.hpp"
#include "apollonite/packing.hpp"
#include "apollonite/report.hpp"

namespace apollonite {

class BandPacking;

// A finite set of unit squares s_x = x + [0,1]^2, identified by lower-left
// corners x. A degenerate tile has no squares and a single footprint vertex.
struct Tile {
    Circle circle;
    std::vector<GaussInt> squares;    // sorted
    std::vector<GaussInt> footprint;  // sorted vertex set F(T)
    HalfGauss centroid;

    bool degenerate() const { return squares.empty(); }
    Int area() const { return static_cast<Int>(squares.size()); }
    bool has_square(GaussInt x) const;
    bool has_vertex(GaussInt x) const;
    Tile translated(GaussInt d) const;
    // vertices of F(T) lying in some square outside T (all of F(T) when degenerate)
    std::vector<GaussInt> boundary() const;
    bool on_boundary(GaussInt x) const;
    bool interior(GaussInt x) const { return has_vertex(x) && !on_boundary(x); }
};

Tile make_tile(const Circle& c, std::vector<GaussInt> squares);
// squares and footprint only, for sets without central symmetry
Tile square_region(const Circle& c, std::vector<GaussInt> squares);
Tile degenerate_tile(const Circle& c, GaussInt vertex);
// translate so the centroid lies in {0, 1/2, i/2, (1+i)/2}
GaussInt canonical_shift(const Tile& t);

// edge-connected, no holes, no pinch vertices
bool is_disk(const Tile& t);
// rotating by i about the centroid maps the square set to itself
bool is_rot90_symmetric(const Tile& t);

std::vector<GaussInt> intersect_sorted(const std::vector<GaussInt>& a, const std::vector<GaussInt>& b);

struct SubTile {
    int i = 0;     // parent index 1..3
    int sign = 0;  // +1 or -1
    Circle circle;
    GaussInt shift;  // canonical tile of `circle` translated by shift
    Tile tile;
};

struct TileBuild {
    Tile tile;                       // canonical anchoring
    std::vector<SubTile> parts;      // empty for base cases
    std::optional<Circle> precursor; // C4 = 2(C1+C2+C3) - C0
};

// Def. of the prototile: T0 is the union of the six translated parent tiles
// with centroid offsets +-(1/2)(v_kj - i v_kj).
TileBuild build_tile(BandPacking& band, const Circle& c);

// Touching relation: disjoint square sets whose common boundary is a simple
// path with at least two vertices.
bool tiles_touch(const Tile& a, const Tile& b);
// offsets u in the lattice with F(T) and F(T+u) meeting
std::vector<GaussInt> contact_offsets(const Tile& t, const Lattice2& L);

struct TilingReport {
    bool exact_cover = false;
    Int window_squares = 0;
    std::vector<GaussInt> contacts;  // lattice offsets of tiles meeting T
    bool contacts_touch = false;     // every contact is a proper touching
    Report report;
};

// Exhaustive check on a window three tile-boxes wide: the inner third is
// covered exactly once by T + lattice.
TilingReport verify_tiling(const Tile& t, const Lattice2& L);

// T, T+a, T+b pairwise touch and share exactly one boundary vertex.
bool touching_triple(const Tile& t, GaussInt a, GaussInt b);

struct DoubleDecomposition {
    bool applicable = false;
    // Q_i^+- decompose T_1^+, S_i^+- decompose T_1^-, i = 4,2,3
    std::vector<SubTile> Q, S;
    bool q4m_equals_s4p = false;
    bool q_covers = false, s_covers = false;
    Circle overlap_circle;
};

DoubleDecomposition double_decomposition(BandPacking& band, const Circle& c);

// Tiles of the regular tiling T + L between translates `from` and `to`
// (given as lattice offsets), as a left-handed approximation of the segment.
std::vector<GaussInt> boundary_string(const Tile& t, const Lattice2& L, GaussInt from, GaussInt to);

// The C_i string from R_i^- to R_i^+ equals the concatenation through T_i^-.
Report check_boundary_strings(BandPacking& band, const Circle& c);

}  // namespace apollonite
