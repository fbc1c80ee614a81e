#include "apollonite/sandpile.hpp"

#include <algorithm>
#include <deque>

namespace apollonite {

Int ChipConfig::max() const {
    Int m = 0;
    for (Int v : grid) m = std::max(m, v);
    return m;
}

Int ChipConfig::sum() const {
    Int s = 0;
    for (Int v : grid) s = ck::add(s, v);
    return s;
}

namespace {

class Sheet {
public:
    explicit Sheet(Int radius) { resize(radius); }

    Int radius() const { return r_; }
    Int& at(GaussInt p) { return cells_[index(p)]; }
    char& queued(GaussInt p) { return flags_[index(p)]; }
    bool near_edge(GaussInt p) const { return std::max(std::abs(p.re), std::abs(p.im)) >= r_ - 1; }

    void grow() {
        Sheet bigger(2 * r_);
        for (Int y = -r_; y <= r_; ++y)
            for (Int x = -r_; x <= r_; ++x) {
                bigger.at({x, y}) = at({x, y});
                bigger.queued({x, y}) = queued({x, y});
            }
        *this = std::move(bigger);
    }

private:
    void resize(Int r) {
        r_ = r;
        side_ = 2 * r + 1;
        cells_.assign(static_cast<std::size_t>(side_ * side_), 0);
        flags_.assign(static_cast<std::size_t>(side_ * side_), 0);
    }
    std::size_t index(GaussInt p) const { return static_cast<std::size_t>((p.im + r_) * side_ + (p.re + r_)); }

    Int r_ = 0, side_ = 0;
    std::vector<Int> cells_;
    std::vector<char> flags_;
};

}  // namespace

ChipConfig stabilize(Int chips, Schedule schedule) {
    if (chips < 0) throw std::invalid_argument("negative chip count");
    Sheet sheet(isqrt(chips) / 2 + 4);
    sheet.at({}) = chips;
    std::deque<GaussInt> work;
    if (chips >= 4) {
        work.push_back({});
        sheet.queued({}) = true;
    }
    const GaussInt dirs[4] = {GaussInt(1), GaussInt(-1), I, -I};
    while (!work.empty()) {
        GaussInt p;
        if (schedule == Schedule::fifo) {
            p = work.front();
            work.pop_front();
        } else {
            p = work.back();
            work.pop_back();
        }
        sheet.queued(p) = false;
        if (sheet.near_edge(p)) sheet.grow();
        Int k = sheet.at(p) / 4;
        if (k == 0) continue;
        sheet.at(p) -= 4 * k;
        for (GaussInt d : dirs) {
            GaussInt n = p + d;
            Int& v = sheet.at(n);
            v += k;
            if (v >= 4 && !sheet.queued(n)) {
                sheet.queued(n) = true;
                work.push_back(n);
            }
        }
    }
    ChipConfig out;
    out.total = chips;
    Int r = sheet.radius();
    Int x0 = r, x1 = -r, y0 = r, y1 = -r;
    for (Int y = -r; y <= r; ++y)
        for (Int x = -r; x <= r; ++x)
            if (sheet.at({x, y}) > 0) {
                x0 = std::min(x0, x);
                x1 = std::max(x1, x);
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
            }
    if (x0 > x1) return out;
    out.x0 = x0;
    out.y0 = y0;
    out.width = x1 - x0 + 1;
    out.height = y1 - y0 + 1;
    for (Int y = y0; y <= y1; ++y)
        for (Int x = x0; x <= x1; ++x) out.grid.push_back(sheet.at({x, y}));
    return out;
}

std::array<Int, 5> largest_rectangle(const std::vector<char>& mask, Int width, Int height) {
    std::array<Int, 5> best{0, 0, 0, 0, 0};
    std::vector<Int> run(static_cast<std::size_t>(width), 0);
    for (Int y = 0; y < height; ++y) {
        for (Int x = 0; x < width; ++x) {
            auto i = static_cast<std::size_t>(x);
            run[i] = mask[static_cast<std::size_t>(y * width + x)] ? run[i] + 1 : 0;
        }
        // histogram of upward runs ending at row y
        std::vector<Int> stack;
        for (Int x = 0; x <= width; ++x) {
            Int hgt = x < width ? run[static_cast<std::size_t>(x)] : 0;
            while (!stack.empty() && run[static_cast<std::size_t>(stack.back())] >= hgt) {
                Int top = run[static_cast<std::size_t>(stack.back())];
                stack.pop_back();
                Int left = stack.empty() ? 0 : stack.back() + 1;
                Int area = top * (x - left);
                if (area > best[0]) best = {area, left, y - top + 1, x - left, top};
            }
            stack.push_back(x);
        }
    }
    return best;
}

std::vector<PatternMatch> compare_patterns(const ChipConfig& s, const std::vector<GlobalOdometer>& library,
                                           int offset) {
    std::vector<PatternMatch> out;
    for (const auto& g : library) {
        PatternMatch best;
        best.circle = g.circle();
        if (s.width == 0) {
            out.push_back(best);
            continue;
        }
        const Lattice2& L = g.lattice();
        std::vector<Int> lap(static_cast<std::size_t>(L.index()));
        auto f = [&](GaussInt x) { return g(x); };
        for (GaussInt r : L.residues()) lap[static_cast<std::size_t>(L.residue_index(r))] = laplacian_at(f, r);
        auto pattern = [&](GaussInt y) { return lap[static_cast<std::size_t>(L.residue_index(L.reduce(y)))]; };
        std::vector<char> mask(static_cast<std::size_t>(s.width * s.height));
        for (int sym = 0; sym < 8; ++sym) {
            for (GaussInt t : L.residues()) {
                for (Int y = 0; y < s.height; ++y)
                    for (Int x = 0; x < s.width; ++x) {
                        GaussInt p{s.x0 + x, s.y0 + y};
                        if (sym >= 4) p = p.conj();
                        p = gi_rot(p, sym % 4);
                        mask[static_cast<std::size_t>(y * s.width + x)] =
                            s.at(s.x0 + x, s.y0 + y) == offset + pattern(p + t);
                    }
                auto r = largest_rectangle(mask, s.width, s.height);
                if (r[0] > best.area) {
                    best.area = r[0];
                    best.x0 = s.x0 + r[1];
                    best.y0 = s.y0 + r[2];
                    best.w = r[3];
                    best.h = r[4];
                    best.shift = t;
                    best.symmetry = sym;
                }
            }
        }
        out.push_back(best);
    }
    return out;
}

}  // namespace apollonite
