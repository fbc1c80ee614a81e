#pragma once

// Abelian sandpile started from a single pile at the origin, and a
// heuristic comparison of its stable pattern with odometer Laplacians.

#include <array>
#include <vector>

#include "apollonite/exactmath.hpp"
#include "apollonite/odometer.hpp"
#include "apollonite/packing.hpp"

namespace apollonite {

struct ChipConfig {
    Int x0 = 0, y0 = 0, width = 0, height = 0;  // bounding box of the occupied sites
    std::vector<Int> grid;                      // row-major from y0 upward
    Int total = 0;

    Int at(Int x, Int y) const {
        if (x < x0 || y < y0 || x >= x0 + width || y >= y0 + height) return 0;
        return grid[static_cast<std::size_t>((y - y0) * width + (x - x0))];
    }
    Int max() const;
    Int sum() const;
    friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

enum class Schedule { fifo, lifo };

ChipConfig stabilize(Int chips, Schedule schedule = Schedule::fifo);

struct PatternMatch {
    Circle circle;
    Int area = 0;               // largest matching rectangle
    Int x0 = 0, y0 = 0, w = 0, h = 0;
    GaussInt shift;             // pattern translate
    int symmetry = 0;           // 0..3 rotations, 4..7 rotations after conjugation
};

// For each pattern, the largest axis-aligned rectangle of sites where the
// chip count equals offset + Lap g(sigma(x) + t) for a symmetry sigma of the
// square lattice and a translate t.
std::vector<PatternMatch> compare_patterns(const ChipConfig& s, const std::vector<GlobalOdometer>& library,
                                           int offset = 2);

// Largest all-true rectangle of a row-major mask: {area, x, y, w, h}.
std::array<Int, 5> largest_rectangle(const std::vector<char>& mask, Int width, Int height);

}  // namespace apollonite
