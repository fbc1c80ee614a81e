#pragma once

// Per-circle invariant suites used by the CLI `verify` command and the
// acceptance runner.

#include "apollonite/band.hpp"
#include "apollonite/report.hpp"

namespace apollonite {

struct VerifyOptions {
    bool lattice = true;
    bool tiles = true;
    bool strings = true;
    bool odometer = true;
    bool interior = true;
    int maximality_size = 0;  // 0 disables the probe
    int samples = 100;
};

// Descartes identities, the pair identities v^2 = c'w - cw', 2va = w + w',
// Re(conj v13 v21) = -c1 and its rotations, sums of the three pairs, |v|^2 = c + c',
// a_{i0} = A v_{i0}, |det Lambda| = c.
Report check_quadruple_identities(const ForestNode& n);

// Area, disk, rotation, tiling with six touching neighbours, touching triples,
// area Soddy relation, subtile overlap and complements, double decomposition.
Report check_tile(BandPacking& band, const Circle& c);

Report verify_circle(BandPacking& band, const Circle& c, const VerifyOptions& opt = {});

// Every child circle with curvature <= max_curvature and centre in [0,2]^2.
std::vector<Circle> band_circles(BandPacking& band, Int max_curvature);
Report verify_band(BandPacking& band, Int max_curvature, const VerifyOptions& opt = {});

// The vector tables for Ford and diamond circles; a(C3,C0) is compared
// against -p, the value the Ford translation rules use.
Report check_ford_table(BandPacking& band, Int p, Int q);
Report check_diamond_table(BandPacking& band, Int k);

// The recursive odometer against the closed constructions.
Report check_ford_oracle(BandPacking& band, Int p, Int q);
Report check_diamond_oracle(BandPacking& band, Int k);

}  // namespace apollonite
