#include "apollonite/band.hpp"

#include <algorithm>

namespace apollonite {

ForestNode BandPacking::make_node(const Quadruple& q, const VATriple& t, bool base) const {
    ForestNode n;
    if (base) {
        n.quad = q;
        n.pairs = t;
    } else {
        int r = canonical_rotation(q);
        n.quad = parent_rotation(q, r);
        n.pairs = rotate_pairs(t, r);
    }
    n.base = base;
    n.child = child_vectors(n.pairs);
    if (base) {
        n.lattice = Lattice2(GaussInt(1), I);
    } else {
        n.lattice = Lattice2(n.child.to_child[0].v, n.child.to_child[1].v);
    }
    return n;
}

const ForestNode& BandPacking::remember(const ForestNode& n) {
    auto [it, inserted] = nodes_.emplace(n.quad[0], n);
    return it->second;
}

const ForestNode& BandPacking::node(const Circle& c) {
    std::lock_guard lock(mu_);
    if (auto it = nodes_.find(c); it != nodes_.end()) return it->second;
    if (c.is_line()) throw std::invalid_argument("lines have no parent quadruple");
    if (c.c < 0) throw std::invalid_argument("negative curvature");
    if (c.c == 1) {
        if (floor_mod(c.w.re, 2) != 1 || floor_mod(c.w.im, 2) != 0)
            throw std::invalid_argument("not a circle of the band packing: " + to_string(c));
        GaussInt z{floor_div(c.w.re - 1, 2), floor_div(c.w.im, 2)};
        return remember(make_node(base_quadruple(z), base_vectors(z), true));
    }
    RatPoint p = c.center();
    GaussInt z{floor_div(p.x.floor(), 2), floor_div(p.y.floor(), 2)};
    Quadruple q0 = base_quadruple(z);
    VATriple t0 = base_vectors(z);
    std::vector<std::pair<Quadruple, VATriple>> next;
    for (int r = 1; r <= 2; ++r)
        next.emplace_back(successor(parent_rotation(q0, r)), successor_vectors(rotate_pairs(t0, r)));
    for (;;) {
        bool moved = false;
        for (const auto& [q, t] : next) {
            if (q[0] == c) return remember(make_node(q, t, false));
            if (q[0].c < c.c && gap_contains(q[1], q[2], q[3], p)) {
                std::vector<std::pair<Quadruple, VATriple>> sub;
                for (int r = 0; r < 3; ++r)
                    sub.emplace_back(successor(parent_rotation(q, r)), successor_vectors(rotate_pairs(t, r)));
                next = std::move(sub);
                moved = true;
                break;
            }
        }
        if (!moved) throw std::invalid_argument("not a circle of the band packing: " + to_string(c));
    }
}

bool BandPacking::contains(const Circle& c) {
    try {
        node(c);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<ForestNode> BandPacking::enumerate(Int max_curvature, const Window& w) {
    std::vector<ForestNode> out;
    ForestWalk<VATriple> walk;
    walk.base = [](GaussInt z) { return base_vectors(z); };
    walk.rotate = [](const VATriple& t) { return rotate_pairs(t); };
    walk.succeed = [](const VATriple& t) { return successor_vectors(t); };
    walk.visit = [&](const Quadruple& q, const VATriple& t) { out.push_back(make_node(q, t, false)); };
    walk.run(max_curvature, w);
    std::sort(out.begin(), out.end(), [](const ForestNode& a, const ForestNode& b) { return a.quad.C < b.quad.C; });
    std::lock_guard lock(mu_);
    for (const auto& n : out) remember(n);
    return out;
}

const TileBuild& BandPacking::tile(const Circle& c) {
    std::lock_guard lock(mu_);
    if (auto it = tiles_.find(c); it != tiles_.end()) return *it->second;
    auto b = std::make_unique<TileBuild>(build_tile(*this, c));
    return *tiles_.emplace(c, std::move(b)).first->second;
}

const TileOdometer& BandPacking::tile_odometer(const Circle& c) {
    std::lock_guard lock(mu_);
    if (auto it = tile_odos_.find(c); it != tile_odos_.end()) return *it->second;
    auto h = std::make_unique<TileOdometer>(build_tile_odometer(*this, c));
    return *tile_odos_.emplace(c, std::move(h)).first->second;
}

const GlobalOdometer& BandPacking::odometer(const Circle& c) {
    std::lock_guard lock(mu_);
    if (auto it = odos_.find(c); it != odos_.end()) return *it->second;
    auto g = std::make_unique<GlobalOdometer>(globalize(tile_odometer(c), node(c).child));
    return *odos_.emplace(c, std::move(g)).first->second;
}

}  // namespace apollonite
