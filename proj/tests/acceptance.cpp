// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "apollonite/render.hpp"
#include "apollonite/sandpile.hpp"
#include "apollonite/verify.hpp"

using namespace apollonite;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
    void take(const Report& r, const std::string& where = {}) {
        if (const Check* f = r.first_failure()) fail(where + f->name + (f->detail.empty() ? "" : ": " + f->detail));
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) o.fail("over budget");
    char timing[64];
    if (budget_s > 0)
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, budget_s);
    else
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << timing << "]";
    if (!o.ok) std::cout << "  " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failures;
}

const Window unit_cell = Window::square(0, 2);

template <class F>
void each_ford(Int max_q, F f) {
    for (Int q = 1; q <= max_q; ++q)
        for (Int p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) f(p, q);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main() {
    BandPacking band;

    criterion(1, "Descartes identities and Soddy completion", 10, [&] {
        Outcome o;
        auto quads = enumerate_band(500, unit_cell);
        if (quads.empty()) o.fail("no quadruples enumerated");
        for (const Quadruple& q : quads) {
            if (classify_quadruple(q) != QuadKind::proper) o.fail("improper quadruple " + to_string(q[0]));
            if (!descartes_holds(q)) o.fail("Descartes fails at " + to_string(q[0]));
        }
        const Quadruple& q = band.node(Circle{153, {17, 120}}).quad;
        Circle pre = soddy_complete(q[1], q[2], q[3], q[0]);
        if (pre != Circle{25, {1, 20}}) o.fail("precursor of (153,17,120) is " + to_string(pre));
        return o;
    });

    criterion(2, "lattice identities and vector tables", 10, [&] {
        Outcome o;
        for (const ForestNode& n : band.enumerate(500, unit_cell)) o.take(check_quadruple_identities(n));
        each_ford(12, [&](Int p, Int q) {
            if (q >= 2) o.take(check_ford_table(band, p, q));
        });
        for (Int k = 1; k <= 8; ++k) o.take(check_diamond_table(band, k));
        return o;
    });

    auto circles200 = band_circles(band, 200);

    criterion(3, "tiles for c <= 200", 120, [&] {
        Outcome o;
        for (const Circle& c : circles200) o.take(check_tile(band, c), to_string(c) + " ");
        return o;
    });

    criterion(4, "odometers for c <= 200", 300, [&] {
        Outcome o;
        for (const Circle& c : circles200) {
            o.take(verify_odometer(band, c, 100), to_string(c) + " ");
            o.take(verify_interior_formula(band, c), to_string(c) + " ");
        }
        return o;
    });

    criterion(5, "recursive odometers match the Ford and diamond constructions", 0, [&] {
        Outcome o;
        each_ford(12, [&](Int p, Int q) { o.take(check_ford_oracle(band, p, q)); });
        for (Int k = 1; k <= 8; ++k) o.take(check_diamond_oracle(band, k));
        return o;
    });

    criterion(6, "maximality probe for c <= 60, |Y| <= 6", 300, [&] {
        Outcome o;
        Int sets = 0;
        for (const Circle& c : band_circles(band, 60)) {
            if (c.c == 1) continue;
            auto m = maximality_probe(band.odometer(c), band.tile(c).tile, 6);
            sets += m.sets_checked;
            if (!m.ok) o.fail("no witness vertex for a set in " + to_string(c));
        }
        if (sets == 0) o.fail("no sets checked");
        GlobalOdometer g = ford_odometer(1, 2);
        Int lap = laplacian_at([&](GaussInt x) { return g(x); }, GaussInt{1, 1});
        if (lap != -2) o.fail("Ford 1/2 Laplacian at (1,1) is " + std::to_string(lap));
        return o;
    });

    criterion(7, "L_C equals Lambda_C for c <= 200", 0, [&] {
        Outcome o;
        for (const Circle& c : circles200) {
            const ForestNode& n = band.node(c);
            if (!lattice_LC(c, n.lattice).equal()) o.fail("residue sweep differs at " + to_string(c));
        }
        return o;
    });

    criterion(8, "integer approximation of PSD forms", 10, [&] {
        Outcome o;
        const RatSym2 shift{Rational(7, 16), 0, Rational(7, 16)};
        const std::pair<const char*, RatSym2> mats[] = {
            {"0", RatSym2{0, 0, 0}},
            {"I", RatSym2{1, 0, 1}},
            {"I/2", RatSym2{Rational(1, 2), 0, Rational(1, 2)}},
            {"A(4,1,4)+7/16 I", peak_matrix(Circle{4, {1, 4}}) + shift},
        };
        for (const auto& [label, A] : mats) {
            PsdApprox g = psd_integer_approx(A, -20, 20, -20, 20);
            for (Int y = -20; y <= 20; ++y)
                for (Int x = -20; x <= 20; ++x) {
                    GaussInt p{x, y};
                    Int lap = g.at({x + 1, y}) + g.at({x - 1, y}) + g.at({x, y + 1}) + g.at({x, y - 1}) - 4 * g.at(p);
                    if (lap < 0) o.fail(std::string(label) + ": negative Laplacian at " + to_string(p));
                    // |g - q| <= |x| + 1, squared to stay exact: (g - q - 1)^2 <= |x|^2 when g - q > 1
                    Rational d = Rational(g.at(p)) - A.half_form(p);
                    if (d < 0) d = -d;
                    if (d > Rational(1) && (d - Rational(1)) * (d - Rational(1)) > Rational(p.norm()))
                        o.fail(std::string(label) + ": too far from the form at " + to_string(p));
                }
        }
        return o;
    });

    criterion(9, "sandpile conservation, stability and schedule independence", 60, [&] {
        Outcome o;
        for (Int n : {Int{4}, Int{1000}, Int{100000}}) {
            ChipConfig a = stabilize(n, Schedule::fifo);
            ChipConfig b = stabilize(n, Schedule::lifo);
            std::string tag = "n=" + std::to_string(n) + ": ";
            if (a.sum() != n) o.fail(tag + "chips not conserved");
            if (a.max() > 3) o.fail(tag + "unstable site");
            if (!(a == b)) o.fail(tag + "schedules disagree");
        }
        return o;
    });

    criterion(10, "fundamental-domain PGMs match the golden files", 0, [&] {
        Outcome o;
        for (Circle c : {Circle{153, {17, 120}}, Circle{76, {7, 60}}, Circle{4, {1, 4}}, Circle{9, {1, 6}},
                         Circle{25, {1, 20}}}) {
            std::vector<bool> web;
            PatternGrid grid = fundamental_domain_grid(band, c, &web);
            RenderSpec spec{RenderFormat::pgm, true};
            std::string got = render(grid, spec, &web);
            std::string name = "fundamental_" + std::to_string(c.c) + "_" + std::to_string(c.w.re) + "_" +
                               std::to_string(c.w.im) + ".pgm";
            std::string want = slurp(std::string(APOLLONITE_GOLDEN_DIR) + "/" + name);
            if (want.empty()) o.fail("missing golden " + name);
            else if (got != want) o.fail(name + " differs");
        }
        return o;
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
