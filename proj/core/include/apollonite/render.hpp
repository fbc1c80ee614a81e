#pragma once

// PGM and ASCII renderings of Laplacian patterns and sandpiles.

#include <string>

#include "apollonite/odometer.hpp"
#include "apollonite/sandpile.hpp"

namespace apollonite {

class BandPacking;

enum class RenderFormat { ascii, pgm };

struct RenderSpec {
    RenderFormat format = RenderFormat::pgm;
    bool outline = false;  // mark the web of tile boundaries (PGM only)
};

// 1 -> 0, 0 -> 85, -1 -> 170, -2 -> 255
unsigned char gray_level(int laplacian);
// 1 -> '#', 0 -> '+', -1 -> '.', -2 -> ' '
char glyph(int laplacian);

// One pixel or character per vertex, top row first.
std::string render(const PatternGrid& grid, const RenderSpec& spec, const std::vector<bool>* web = nullptr);

// Pattern over the bounding box of the canonical tile's squares; `web`
// receives the mask of vertices on tile boundaries of the tiling.
PatternGrid fundamental_domain_grid(BandPacking& band, const Circle& c, std::vector<bool>* web = nullptr);

// Chip counts 0..3 as grays 255, 170, 85, 0.
std::string render_sandpile_pgm(const ChipConfig& s);

// ASCII picture of a tile: '#' for squares, '.' elsewhere in its box.
std::string render_tile_ascii(const Tile& t);

}  // namespace apollonite
