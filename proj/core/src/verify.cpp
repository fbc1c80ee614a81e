#include "apollonite/verify.hpp"

#include <algorithm>

namespace apollonite {

namespace {

std::string ctag(const Circle& c) { return to_string(c) + " "; }

// pair identities for (Ci, Cj) with v = v(Ci,Cj), a = a(Ci,Cj)
bool pair_ok(const Circle& ci, const Circle& cj, const VAPair& p) {
    GaussInt sq = p.v * p.v;
    GaussInt want = GaussInt(cj.c) * ci.w - GaussInt(ci.c) * cj.w;
    return sq == want && GaussInt(2) * p.v * p.a == ci.w + cj.w;
}

}  // namespace

Report check_quadruple_identities(const ForestNode& n) {
    Report rep;
    const Quadruple& q = n.quad;
    rep.add("Descartes identities", descartes_holds(q));
    const VATriple& t = n.pairs;
    rep.add("parent pairs sum to zero",
            t.p21.v + t.p32.v + t.p13.v == GaussInt{} && t.p21.a + t.p32.a + t.p13.a == GaussInt{});
    bool pairs = pair_ok(q[2], q[1], t.p21) && pair_ok(q[3], q[2], t.p32) && pair_ok(q[1], q[3], t.p13);
    rep.add("parent pair identities", pairs);
    bool re = (t.p13.v.conj() * t.p21.v).re == -q[1].c && (t.p21.v.conj() * t.p32.v).re == -q[2].c &&
              (t.p32.v.conj() * t.p13.v).re == -q[3].c;
    rep.add("Re(conj v13 v21) = -c1", re);
    GaussInt vs, as;
    bool child = true, norms = true, aav = true;
    RatSym2 A = peak_matrix(q[0]);
    for (int i = 1; i <= 3; ++i) {
        const VAPair& p = n.child.to_child[static_cast<std::size_t>(i - 1)];
        vs += p.v;
        as += p.a;
        child = child && pair_ok(q[i], q[0], p) && pair_ok(q[0], q[i], n.child.from_child(i));
        if (!n.base) norms = norms && p.v.norm() == q[0].c + q[i].c;
        GaussInt a;
        aav = aav && apply_integral(A, p.v, &a) && a == p.a;
    }
    rep.add("child pairs sum to zero", vs == GaussInt{} && as == GaussInt{});
    rep.add("child pair identities", child);
    if (!n.base) rep.add("|v_i0|^2 = c0 + ci", norms);
    rep.add("a_i0 = A v_i0", aav);
    rep.add("|det Lambda| = c", std::abs(n.lattice.det()) == q[0].c && n.lattice.index() == q[0].c);
    return rep;
}

Report check_tile(BandPacking& band, const Circle& c) {
    Report rep;
    const TileBuild& tb = band.tile(c);
    const Tile& t = tb.tile;
    const ForestNode& node = band.node(c);
    rep.add("area = c", t.area() == c.c, std::to_string(t.area()));
    rep.add("disk", is_disk(t));
    rep.add("90 degree symmetry", is_rot90_symmetric(t));
    TilingReport tr = verify_tiling(t, node.lattice);
    rep.merge(tr.report, "tiling ");
    if (c.c > 1) {
        GaussInt v1 = node.child.to_child[0].v, v2 = node.child.to_child[1].v, v3 = node.child.to_child[2].v;
        GaussInt ring[6] = {v1, -v3, v2, -v1, v3, -v2};
        bool triples = true;
        for (int k = 0; k < 6; ++k) triples = triples && touching_triple(t, ring[k], ring[(k + 1) % 6]);
        rep.add("touching triples", triples);
    }
    if (tb.parts.empty()) return rep;

    Int parents = 0;
    for (int i = 1; i <= 3; ++i) parents += node.quad[i].c;
    const Circle& c4 = *tb.precursor;
    Int a4 = band.tile(c4).tile.area();
    rep.add("area Soddy relation", t.area() + a4 == 2 * parents);
    const SubTile* t1[2] = {nullptr, nullptr};
    Int sum = 0;
    bool complements = true;
    for (const auto& st : tb.parts) {
        sum += st.tile.area();
        if (st.i == 1) t1[st.sign > 0 ? 0 : 1] = &st;
        if (st.tile.degenerate()) continue;
        std::vector<GaussInt> rest;
        std::set_difference(t.squares.begin(), t.squares.end(), st.tile.squares.begin(), st.tile.squares.end(),
                            std::back_inserter(rest));
        if (!rest.empty() && !is_disk(square_region(c, rest))) complements = false;
    }
    Int overlap = static_cast<Int>(intersect_sorted(t1[0]->tile.squares, t1[1]->tile.squares).size());
    rep.add("T1+ and T1- overlap in a precursor tile", overlap == a4, std::to_string(overlap));
    rep.add("no other subtile overlaps", sum - overlap == t.area());
    rep.add("subtile complements are disks", complements);

    DoubleDecomposition dd = double_decomposition(band, c);
    if (dd.applicable) {
        rep.add("double decomposition covers", dd.q_covers && dd.s_covers);
        rep.add("Q4- = S4+", dd.q4m_equals_s4p);
    }
    return rep;
}

Report verify_circle(BandPacking& band, const Circle& c, const VerifyOptions& opt) {
    Report rep;
    std::string tag = ctag(c);
    try {
        const ForestNode& node = band.node(c);
        if (opt.lattice) {
            rep.merge(check_quadruple_identities(node), tag);
            rep.add(tag + "L_C = Lambda_C", lattice_LC(c, node.lattice).equal());
        }
        if (opt.tiles) rep.merge(check_tile(band, c), tag);
        if (opt.strings) rep.merge(check_boundary_strings(band, c), tag);
        if (opt.odometer) rep.merge(verify_odometer(band, c, opt.samples), tag);
        if (opt.interior) rep.merge(verify_interior_formula(band, c), tag);
        if (opt.maximality_size > 0 && c.c > 1) {
            auto m = maximality_probe(band.odometer(c), band.tile(c).tile, opt.maximality_size);
            std::string detail = std::to_string(m.sets_checked) + " sets";
            if (!m.ok) {
                detail = "counterexample:";
                for (GaussInt x : m.counterexample) detail += " " + to_string(x);
            }
            rep.add(tag + "maximality probe", m.ok, detail);
        }
    } catch (const Falsification& e) {
        rep.add(tag + "construction", false, e.what());
    } catch (const OverflowError& e) {
        rep.add(tag + "construction", false, e.what());
    }
    return rep;
}

std::vector<Circle> band_circles(BandPacking& band, Int max_curvature) {
    std::vector<Circle> out;
    // the curvature-1 circles with centres in [0,2]^2
    if (max_curvature >= 1) {
        out.push_back({1, GaussInt(1, 0)});
        out.push_back({1, GaussInt(1, 2)});
    }
    for (const auto& n : band.enumerate(max_curvature, Window::square(0, 2))) out.push_back(n.quad[0]);
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_band(BandPacking& band, Int max_curvature, const VerifyOptions& opt) {
    Report rep;
    for (const Circle& c : band_circles(band, max_curvature)) rep.merge(verify_circle(band, c, opt));
    return rep;
}

namespace {

// child vectors of c with the parents rotated so that quad[1] == first
std::optional<ChildVectors> vectors_from(BandPacking& band, const Circle& c, const Circle& first) {
    const ForestNode& n = band.node(c);
    for (int r = 0; r < 3; ++r)
        if (parent_rotation(n.quad, r)[1] == first) return child_vectors(rotate_pairs(n.pairs, r));
    return std::nullopt;
}

Report compare_table(const std::string& tag, const std::optional<ChildVectors>& cv, const GaussInt v[3],
                     const GaussInt a[3]) {
    Report rep;
    if (!cv) {
        rep.add(tag + "parents", false, "expected parent not found");
        return rep;
    }
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const VAPair& p = cv->to_child[static_cast<std::size_t>(i)];
        if (p.v != v[i] || p.a != a[i]) {
            ok = false;
            detail += "i=" + std::to_string(i + 1) + " got (" + to_string(p.v) + "," + to_string(p.a) + ") ";
        }
    }
    rep.add(tag + "vector table", ok, detail);
    return rep;
}

}  // namespace

Report check_ford_table(BandPacking& band, Int p, Int q) {
    FordParents f = ford_parents(p, q);
    Circle c{q * q, GaussInt(1, 2 * p * q)};
    Circle c1{f.q1 * f.q1, GaussInt(1, 2 * f.p1 * f.q1)};
    GaussInt v[3] = {{q, f.q1}, {-q, f.q2}, {0, -q}};
    GaussInt a[3] = {{f.p1, p}, {f.p2, -p}, {-p, 0}};
    return compare_table("Ford " + std::to_string(p) + "/" + std::to_string(q) + " ", vectors_from(band, c, c1), v, a);
}

Report check_diamond_table(BandPacking& band, Int k) {
    Circle c = diamond_circle(k);
    Circle c1{1, GaussInt(1, 2)};
    GaussInt v[3] = {{k + 1, k}, {-k - 1, k}, {0, -2 * k}};
    GaussInt a[3] = {{k, 1}, {0, -k}, {-k, k - 1}};
    return compare_table("diamond " + std::to_string(k) + " ", vectors_from(band, c, c1), v, a);
}

namespace {

Report oracle(const std::string& tag, const GlobalOdometer& rec, const GlobalOdometer& closed) {
    Report rep;
    std::vector<GaussInt> pts;
    Int side = 0;
    for (int i = 0; i < 2; ++i) side = std::max({side, std::abs(rec.v(i).re), std::abs(rec.v(i).im)});
    side += 2;
    for (Int y = -side; y <= side; ++y)
        for (Int x = -side; x <= side; ++x) pts.push_back({x, y});
    auto t = match_translation(rec, closed, pts);
    rep.add(tag + "odometer translation", t.has_value(), t ? "shift " + to_string(*t) : "no match");
    return rep;
}

}  // namespace

Report check_ford_oracle(BandPacking& band, Int p, Int q) {
    Circle c{q * q, GaussInt(1, 2 * p * q)};
    return oracle("Ford " + std::to_string(p) + "/" + std::to_string(q) + " ", band.odometer(c), ford_odometer(p, q));
}

Report check_diamond_oracle(BandPacking& band, Int k) {
    return oracle("diamond " + std::to_string(k) + " ", band.odometer(diamond_circle(k)), diamond_odometer(k));
}

}  // namespace apollonite
