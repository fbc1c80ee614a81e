#include "apollonite/render.hpp"

#include <algorithm>
#include <stdexcept>

#include "apollonite/band.hpp"

namespace apollonite {

unsigned char gray_level(int v) {
    switch (v) {
        case 1: return 0;
        case 0: return 85;
        case -1: return 170;
        case -2: return 255;
        default: throw std::out_of_range("Laplacian value outside the palette: " + std::to_string(v));
    }
}

char glyph(int v) {
    switch (v) {
        case 1: return '#';
        case 0: return '+';
        case -1: return '.';
        case -2: return ' ';
        default: throw std::out_of_range("Laplacian value outside the palette: " + std::to_string(v));
    }
}

namespace {

std::string pgm_header(Int w, Int h) { return "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n"; }

}  // namespace

std::string render(const PatternGrid& grid, const RenderSpec& spec, const std::vector<bool>* web) {
    std::string out;
    if (spec.format == RenderFormat::pgm) {
        out = pgm_header(grid.width, grid.height);
        for (Int y = grid.y0 + grid.height - 1; y >= grid.y0; --y)
            for (Int x = grid.x0; x < grid.x0 + grid.width; ++x) {
                auto k = static_cast<std::size_t>((y - grid.y0) * grid.width + (x - grid.x0));
                bool mark = spec.outline && web && (*web)[k];
                out.push_back(static_cast<char>(mark ? 200 : gray_level(grid.values[k])));
            }
        return out;
    }
    for (Int y = grid.y0 + grid.height - 1; y >= grid.y0; --y) {
        for (Int x = grid.x0; x < grid.x0 + grid.width; ++x) out.push_back(glyph(grid.at(x, y)));
        out.push_back('\n');
    }
    return out;
}

PatternGrid fundamental_domain_grid(BandPacking& band, const Circle& c, std::vector<bool>* web) {
    const Tile& t = band.tile(c).tile;
    const GlobalOdometer& g = band.odometer(c);
    Int x0 = t.squares.front().re, x1 = x0, y0 = t.squares.front().im, y1 = y0;
    for (GaussInt s : t.squares) {
        x0 = std::min(x0, s.re);
        x1 = std::max(x1, s.re);
        y0 = std::min(y0, s.im);
        y1 = std::max(y1, s.im);
    }
    PatternGrid grid = laplacian(g, x0, y0, x1 - x0 + 1, y1 - y0 + 1);
    if (web) {
        const Lattice2& L = g.lattice();
        std::vector<bool> onweb(static_cast<std::size_t>(L.index()), false);
        for (GaussInt b : t.boundary()) onweb[static_cast<std::size_t>(L.residue_index(L.reduce(b)))] = true;
        web->clear();
        for (Int y = y0; y <= y1; ++y)
            for (Int x = x0; x <= x1; ++x)
                web->push_back(onweb[static_cast<std::size_t>(L.residue_index(L.reduce({x, y})))]);
    }
    return grid;
}

std::string render_sandpile_pgm(const ChipConfig& s) {
    static const unsigned char level[4] = {255, 170, 85, 0};
    std::string out = pgm_header(s.width, s.height);
    for (Int y = s.y0 + s.height - 1; y >= s.y0; --y)
        for (Int x = s.x0; x < s.x0 + s.width; ++x) {
            Int v = s.at(x, y);
            if (v < 0 || v > 3) throw std::out_of_range("unstable site in sandpile rendering");
            out.push_back(static_cast<char>(level[v]));
        }
    return out;
}

std::string render_tile_ascii(const Tile& t) {
    if (t.degenerate()) return "o\n";
    Int x0 = t.squares.front().re, x1 = x0, y0 = t.squares.front().im, y1 = y0;
    for (GaussInt s : t.squares) {
        x0 = std::min(x0, s.re);
        x1 = std::max(x1, s.re);
        y0 = std::min(y0, s.im);
        y1 = std::max(y1, s.im);
    }
    std::string out;
    for (Int y = y1; y >= y0; --y) {
        for (Int x = x0; x <= x1; ++x) out.push_back(t.has_square({x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

}  // namespace apollonite
