#pragma once

// Session context: the semi-proper forest with its vector pairs, and caches
// of tiles and odometers keyed by circle.

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "apollonite/latvec.hpp"
#include "apollonite/odometer.hpp"
#include "apollonite/packing.hpp"
#include "apollonite/tiles.hpp"

namespace apollonite {

struct ForestNode {
    Quadruple quad;  // canonical parent rotation; the base quadruple for curvature 1
    VATriple pairs;
    ChildVectors child;
    Lattice2 lattice;  // Lambda_{C0} = Z v10 + Z v20
    bool base = false;
};

class BandPacking {
public:
    // The quadruple whose child is c. Throws for lines and for circles not in the packing.
    const ForestNode& node(const Circle& c);
    bool contains(const Circle& c);

    // Proper quadruples (with pairs) whose child lies in the window.
    std::vector<ForestNode> enumerate(Int max_curvature, const Window& w);

    const TileBuild& tile(const Circle& c);
    const TileOdometer& tile_odometer(const Circle& c);
    const GlobalOdometer& odometer(const Circle& c);

private:
    ForestNode make_node(const Quadruple& q, const VATriple& t, bool base) const;
    const ForestNode& remember(const ForestNode& n);

    std::recursive_mutex mu_;
    std::unordered_map<Circle, ForestNode, CircleHash> nodes_;
    std::unordered_map<Circle, std::unique_ptr<TileBuild>, CircleHash> tiles_;
    std::unordered_map<Circle, std::unique_ptr<TileOdometer>, CircleHash> tile_odos_;
    std::unordered_map<Circle, std::unique_ptr<GlobalOdometer>, CircleHash> odos_;
};

}  // namespace apollonite
