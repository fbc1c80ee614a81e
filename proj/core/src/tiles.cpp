#include "apollonite/tiles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "apollonite/band.hpp"

namespace apollonite {

namespace {

std::vector<GaussInt> corners(GaussInt x) { return {x, x + GaussInt(1), x + I, x + GaussInt(1, 1)}; }

struct Box {
    Int x0, x1, y0, y1;
};

Box bbox(const std::vector<GaussInt>& pts) {
    Box b{pts.front().re, pts.front().re, pts.front().im, pts.front().im};
    for (GaussInt p : pts) {
        b.x0 = std::min(b.x0, p.re);
        b.x1 = std::max(b.x1, p.re);
        b.y0 = std::min(b.y0, p.im);
        b.y1 = std::max(b.y1, p.im);
    }
    return b;
}

// Number of 4-connected components among `cells`.
int components(const std::vector<GaussInt>& cells) {
    std::unordered_set<GaussInt, GaussHash> left(cells.begin(), cells.end());
    int n = 0;
    while (!left.empty()) {
        ++n;
        std::vector<GaussInt> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            GaussInt x = stack.back();
            stack.pop_back();
            for (GaussInt d : {GaussInt(1), GaussInt(-1), I, -I}) {
                auto it = left.find(x + d);
                if (it != left.end()) {
                    stack.push_back(*it);
                    left.erase(it);
                }
            }
        }
    }
    return n;
}

}  // namespace

bool Tile::has_square(GaussInt x) const { return std::binary_search(squares.begin(), squares.end(), x); }

bool Tile::has_vertex(GaussInt x) const { return std::binary_search(footprint.begin(), footprint.end(), x); }

Tile Tile::translated(GaussInt d) const {
    Tile t = *this;
    for (auto& s : t.squares) s += d;
    for (auto& v : t.footprint) v += d;
    t.centroid = centroid + HalfGauss::from_int(d);
    return t;
}

bool Tile::on_boundary(GaussInt x) const {
    if (!has_vertex(x)) return false;
    if (degenerate()) return true;
    for (GaussInt s : {x, x - GaussInt(1), x - I, x - GaussInt(1, 1)})
        if (!has_square(s)) return true;
    return false;
}

std::vector<GaussInt> Tile::boundary() const {
    std::vector<GaussInt> out;
    for (GaussInt v : footprint)
        if (on_boundary(v)) out.push_back(v);
    return out;
}

Tile square_region(const Circle& c, std::vector<GaussInt> squares) {
    if (squares.empty()) throw std::invalid_argument("a non-degenerate tile needs squares");
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    Tile t;
    t.circle = c;
    t.squares = std::move(squares);
    for (GaussInt s : t.squares)
        for (GaussInt v : corners(s)) t.footprint.push_back(v);
    std::sort(t.footprint.begin(), t.footprint.end());
    t.footprint.erase(std::unique(t.footprint.begin(), t.footprint.end()), t.footprint.end());
    return t;
}

Tile make_tile(const Circle& c, std::vector<GaussInt> squares) {
    Tile t = square_region(c, std::move(squares));
    GaussInt sum;
    for (GaussInt s : t.squares) sum += GaussInt(2) * s + GaussInt(1, 1);
    Int n = t.area();
    if (sum.re % n != 0 || sum.im % n != 0) throw Falsification("tile centroid is not half-integral for " + to_string(c));
    t.centroid = HalfGauss::half({sum.re / n, sum.im / n});
    return t;
}

Tile degenerate_tile(const Circle& c, GaussInt vertex) {
    Tile t;
    t.circle = c;
    t.footprint = {vertex};
    t.centroid = HalfGauss::from_int(vertex);
    return t;
}

GaussInt canonical_shift(const Tile& t) {
    return {-floor_div(t.centroid.twice.re, 2), -floor_div(t.centroid.twice.im, 2)};
}

bool is_disk(const Tile& t) {
    if (t.degenerate()) return true;
    if (components(t.squares) != 1) return false;
    Box b = bbox(t.squares);
    std::vector<GaussInt> outside;
    for (Int y = b.y0 - 1; y <= b.y1 + 1; ++y)
        for (Int x = b.x0 - 1; x <= b.x1 + 1; ++x)
            if (!t.has_square({x, y})) outside.push_back({x, y});
    if (components(outside) != 1) return false;
    // a vertex where the tile meets itself only diagonally
    for (GaussInt v : t.footprint) {
        bool ne = t.has_square(v), nw = t.has_square(v - GaussInt(1));
        bool se = t.has_square(v - I), sw = t.has_square(v - GaussInt(1, 1));
        if ((ne && sw && !nw && !se) || (nw && se && !ne && !sw)) return false;
    }
    return true;
}

bool is_rot90_symmetric(const Tile& t) {
    GaussInt c = t.centroid.twice;
    for (GaussInt s : t.squares) {
        GaussInt mid = GaussInt(2) * s + GaussInt(1, 1);
        GaussInt rot = c + I * (mid - c) - GaussInt(1, 1);
        if (rot.re % 2 != 0 || rot.im % 2 != 0) return false;
        if (!t.has_square({rot.re / 2, rot.im / 2})) return false;
    }
    return true;
}

std::vector<GaussInt> intersect_sorted(const std::vector<GaussInt>& a, const std::vector<GaussInt>& b) {
    std::vector<GaussInt> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

TileBuild build_tile(BandPacking& band, const Circle& c) {
    TileBuild out;
    if (c.is_line()) {
        out.tile = degenerate_tile(c, {});
        return out;
    }
    if (c.c == 1) {
        band.node(c);  // membership check
        out.tile = make_tile(c, {GaussInt{}});
        return out;
    }
    const ForestNode& node = band.node(c);
    const Quadruple& q = node.quad;
    const Tile* parent[4] = {nullptr, &band.tile(q[1]).tile, &band.tile(q[2]).tile, &band.tile(q[3]).tile};
    // v_kj for i = 1,2,3 with (i,j,k) a rotation of (1,2,3)
    GaussInt vkj[4] = {{}, node.pairs.p32.v, node.pairs.p13.v, node.pairs.p21.v};
    GaussInt rot = GaussInt(1, -1);
    GaussInt P = parent[1]->centroid.twice + rot * vkj[1];

    std::vector<GaussInt> squares;
    for (int i = 1; i <= 3; ++i) {
        for (int sign : {+1, -1}) {
            GaussInt target = P + GaussInt(sign) * rot * vkj[i];
            GaussInt diff = target - parent[i]->centroid.twice;
            if (diff.re % 2 != 0 || diff.im % 2 != 0)
                throw Falsification("subtile offset is not integral for " + to_string(c));
            GaussInt shift{diff.re / 2, diff.im / 2};
            SubTile st{i, sign, q[i], shift, parent[i]->translated(shift)};
            squares.insert(squares.end(), st.tile.squares.begin(), st.tile.squares.end());
            out.parts.push_back(std::move(st));
        }
    }
    Tile t = make_tile(c, std::move(squares));
    if (t.centroid.twice != P) throw Falsification("prototile centroid mismatch for " + to_string(c));
    for (const auto& st : out.parts)
        if (st.tile.degenerate() && !t.has_vertex(st.tile.footprint.front()))
            throw Falsification("degenerate subtile outside the footprint of " + to_string(c));
    out.precursor = 2 * (q[1] + q[2] + q[3]) - q[0];

    GaussInt d = canonical_shift(t);
    out.tile = t.translated(d);
    for (auto& st : out.parts) {
        st.shift += d;
        st.tile = st.tile.translated(d);
    }
    return out;
}

namespace {


// Unit edges separating a square of `a` from a square of `b`.
std::vector<std::pair<GaussInt, GaussInt>> shared_edges(const Tile& a, const Tile& b) {
    std::vector<std::pair<GaussInt, GaussInt>> out;
    for (GaussInt s : a.squares) {
        if (b.has_square(s - I)) out.push_back({s, s + GaussInt(1)});
        if (b.has_square(s + I)) out.push_back({s + I, s + GaussInt(1, 1)});
        if (b.has_square(s - GaussInt(1))) out.push_back({s, s + I});
        if (b.has_square(s + GaussInt(1))) out.push_back({s + GaussInt(1), s + GaussInt(1, 1)});
    }
    return out;
}

}  // namespace

bool tiles_touch(const Tile& a, const Tile& b) {
    if (a.degenerate() && b.degenerate()) return false;
    if (a.degenerate()) return tiles_touch(b, a);
    if (b.degenerate()) {
        GaussInt v = b.footprint.front();
        return a.on_boundary(v);
    }
    if (!intersect_sorted(a.squares, b.squares).empty()) return false;
    auto edges = shared_edges(a, b);
    if (edges.empty()) return false;
    std::map<GaussInt, int> degree;
    for (auto& [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<GaussInt> verts;
    for (auto& [v, d] : degree) {
        if (d > 2) return false;
        verts.push_back(v);
    }
    if (static_cast<Int>(edges.size()) != static_cast<Int>(verts.size()) - 1) return false;
    // connectivity of the edge graph
    std::map<GaussInt, std::vector<GaussInt>> adj;
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<GaussInt> seen{verts.front()};
    std::vector<GaussInt> stack{verts.front()};
    while (!stack.empty()) {
        GaussInt x = stack.back();
        stack.pop_back();
        for (GaussInt y : adj[x])
            if (seen.insert(y).second) stack.push_back(y);
    }
    if (seen.size() != verts.size()) return false;
    // no contact outside the path
    return intersect_sorted(a.footprint, b.footprint) == verts;
}

std::vector<GaussInt> contact_offsets(const Tile& t, const Lattice2& L) {
    Box b = bbox(t.footprint);
    Int w = b.x1 - b.x0, h = b.y1 - b.y0;
    std::vector<GaussInt> out;
    for (GaussInt lam : L.points_in(-w, w, -h, h)) {
        if (lam == GaussInt{}) continue;
        if (!intersect_sorted(t.footprint, t.translated(lam).footprint).empty()) out.push_back(lam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TilingReport verify_tiling(const Tile& t, const Lattice2& L) {
    TilingReport rep;
    if (t.degenerate()) {
        rep.report.add("tiling", false, "degenerate tile");
        return rep;
    }
    Box b = bbox(t.squares);
    Int W = b.x1 - b.x0 + 1, H = b.y1 - b.y0 + 1;
    Int ix0 = b.x0 - W, iy0 = b.y0 - H, iw = 3 * W, ih = 3 * H;
    std::vector<int> count(static_cast<std::size_t>(iw * ih), 0);
    for (GaussInt lam : L.points_in(-2 * W, 2 * W, -2 * H, 2 * H)) {
        for (GaussInt s : t.squares) {
            GaussInt x = s + lam;
            Int cx = x.re - ix0, cy = x.im - iy0;
            if (cx < 0 || cy < 0 || cx >= iw || cy >= ih) continue;
            ++count[static_cast<std::size_t>(cy * iw + cx)];
        }
    }
    rep.window_squares = iw * ih;
    rep.exact_cover = std::all_of(count.begin(), count.end(), [](int k) { return k == 1; });
    rep.report.add("exact cover", rep.exact_cover,
                   std::to_string(iw) + "x" + std::to_string(ih) + " squares");
    rep.contacts = contact_offsets(t, L);
    rep.contacts_touch = true;
    for (GaussInt u : rep.contacts)
        if (!tiles_touch(t, t.translated(u))) rep.contacts_touch = false;
    if (t.circle.c > 1) {
        rep.report.add("six neighbours", rep.contacts.size() == 6, std::to_string(rep.contacts.size()) + " contacts");
        rep.report.add("neighbours touch", rep.contacts_touch);
    }
    return rep;
}

bool touching_triple(const Tile& t, GaussInt a, GaussInt b) {
    Tile ta = t.translated(a), tb = t.translated(b);
    if (!tiles_touch(t, ta) || !tiles_touch(t, tb) || !tiles_touch(ta, tb)) return false;
    auto common = intersect_sorted(intersect_sorted(t.footprint, ta.footprint), tb.footprint);
    return common.size() == 1;
}

DoubleDecomposition double_decomposition(BandPacking& band, const Circle& c) {
    DoubleDecomposition dd;
    if (c.c <= 1) return dd;
    const ForestNode& node = band.node(c);
    if (node.quad[1].c <= 1) return dd;
    const TileBuild& tb = band.tile(c);
    const TileBuild& t1 = band.tile(node.quad[1]);
    const SubTile* plus = nullptr;
    const SubTile* minus = nullptr;
    for (const auto& st : tb.parts) {
        if (st.i != 1) continue;
        (st.sign > 0 ? plus : minus) = &st;
    }
    dd.applicable = true;
    dd.overlap_circle = *tb.precursor;
    auto lift = [](const SubTile& st, GaussInt d) {
        SubTile s = st;
        s.shift += d;
        s.tile = st.tile.translated(d);
        return s;
    };
    std::vector<GaussInt> qs, ss;
    for (const auto& st : t1.parts) {
        dd.Q.push_back(lift(st, plus->shift));
        dd.S.push_back(lift(st, minus->shift));
        qs.insert(qs.end(), dd.Q.back().tile.squares.begin(), dd.Q.back().tile.squares.end());
        ss.insert(ss.end(), dd.S.back().tile.squares.begin(), dd.S.back().tile.squares.end());
    }
    auto norm = [](std::vector<GaussInt> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    dd.q_covers = norm(qs) == plus->tile.squares;
    dd.s_covers = norm(ss) == minus->tile.squares;
    // the precursor C4 is a parent of C1; one copy from each side coincides
    for (const auto& sq : dd.Q) {
        if (sq.circle != dd.overlap_circle) continue;
        for (const auto& ss : dd.S)
            if (ss.circle == dd.overlap_circle && ss.sign != sq.sign && ss.tile.squares == sq.tile.squares &&
                ss.tile.footprint == sq.tile.footprint)
                dd.q4m_equals_s4p = true;
    }
    return dd;
}

std::vector<GaussInt> boundary_string(const Tile& t, const Lattice2& L, GaussInt from, GaussInt to) {
    if (from == to) return {from};
    std::vector<GaussInt> steps;
    for (GaussInt u : contact_offsets(t, L))
        if (tiles_touch(t, t.translated(u))) steps.push_back(u);
    // unit squares meeting at a corner count as neighbours for the witness
    std::vector<GaussInt> witness = steps;
    if (t.area() == 1)
        for (GaussInt u : {GaussInt{1, 1}, GaussInt{1, -1}, GaussInt{-1, 1}, GaussInt{-1, -1}}) witness.push_back(u);
    GaussInt D = to - from;
    Int len2 = D.norm();
    Box b = bbox(t.footprint);
    Int diam = (b.x1 - b.x0) + (b.y1 - b.y0) + 2;
    Int slack = ck::mul(ck::mul(diam, diam), 4) + len2;
    auto in_layer = [&](GaussInt p) {
        if (D.cross(p) < 0) return false;
        Int dp = D.dot(p);
        if (dp < -slack || dp > len2 + slack) return false;
        for (GaussInt u : witness)
            if (D.cross(p + u) < 0) return true;
        return false;
    };
    std::map<GaussInt, GaussInt> prev;
    std::deque<GaussInt> queue{GaussInt{}};
    prev[GaussInt{}] = GaussInt{};
    while (!queue.empty()) {
        GaussInt p = queue.front();
        queue.pop_front();
        for (GaussInt u : steps) {
            GaussInt n = p + u;
            if (prev.count(n)) continue;
            if (n != D && !in_layer(n)) continue;
            prev[n] = p;
            if (n == D) {
                std::vector<GaussInt> path{D};
                for (GaussInt x = D; x != GaussInt{};) {
                    x = prev[x];
                    path.push_back(x);
                }
                std::reverse(path.begin(), path.end());
                for (auto& x : path) x += from;
                return path;
            }
            queue.push_back(n);
        }
    }
    throw Falsification("no string between the given tiles");
}

Report check_boundary_strings(BandPacking& band, const Circle& c) {
    Report rep;
    const ForestNode& node = band.node(c);
    if (node.base) return rep;
    const TileBuild& tb = band.tile(c);
    for (int i = 1; i <= 3; ++i) {
        const Circle& ci = node.quad[i];
        if (ci.c <= 0) continue;
        std::string tag = "C" + std::to_string(i) + " ";
        GaussInt vi0 = node.child.to_child[static_cast<std::size_t>(i - 1)].v;
        GaussInt v0i = node.child.from_child(i).v;
        HalfGauss cr_minus = tb.tile.centroid + HalfGauss::half(vi0 - v0i);
        HalfGauss cr_plus = tb.tile.centroid + HalfGauss::half(vi0 + v0i);
        const SubTile* tminus = nullptr;
        for (const auto& st : tb.parts)
            if (st.i == i && st.sign < 0) tminus = &st;
        const Tile& ti = band.tile(ci).tile;
        const Lattice2& Li = band.node(ci).lattice;
        HalfGauss d_minus = cr_minus - ti.centroid;
        if (!d_minus.is_integral()) {
            rep.add(tag + "R- anchoring", false, "centroid offset not integral");
            continue;
        }
        GaussInt a = (tminus->tile.centroid - cr_minus).to_int();
        GaussInt b = (cr_plus - cr_minus).to_int();
        bool in_lattice = Li.contains(a) && Li.contains(b);
        rep.add(tag + "offsets in lattice", in_lattice);
        if (!in_lattice) continue;
        auto whole = boundary_string(ti, Li, GaussInt{}, b);
        auto first = boundary_string(ti, Li, GaussInt{}, a);
        auto second = boundary_string(ti, Li, a, b);
        std::vector<GaussInt> joined = first;
        joined.insert(joined.end(), second.begin() + 1, second.end());
        rep.add(tag + "string concatenation", joined == whole,
                std::to_string(whole.size()) + " tiles");
    }
    return rep;
}

}  // namespace apollonite
