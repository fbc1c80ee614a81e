#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apollonite/render.hpp"
#include "apollonite/sandpile.hpp"
#include "apollonite/verify.hpp"
#include "cache.hpp"

namespace apollonite::cli {

using nlohmann::json;

namespace {

std::vector<Int> parse_ints(const std::string& s, char sep, std::size_t count, const char* what) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size()) throw std::invalid_argument(std::string("malformed ") + what + ": " + s);
        out.push_back(v);
    }
    if (out.size() != count) throw std::invalid_argument(std::string("malformed ") + what + ": " + s);
    return out;
}

json enc(GaussInt v) { return json::array({v.re, v.im}); }
json enc(const Circle& c) { return json::array({c.c, c.w.re, c.w.im}); }

std::string fmt(const Rational& r) { return to_string(r); }

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("cannot write " + path);
}

int print_report(const Report& rep, std::ostream& out, bool verbose) {
    std::size_t bad = 0;
    for (const auto& c : rep.checks) {
        if (!c.ok) ++bad;
        if (!c.ok || verbose)
            out << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
    out << rep.checks.size() << " checks, " << bad << " failed\n";
    return bad ? verification_failed : ok;
}

struct Options {
    std::string circle;
    Int max_curv = 0;
    bool json = false, text = false, ascii = false, outline = false, verbose = false;
    std::string window, origin = "0,0", out_path, schedule = "fifo";
    int maximality = 0, samples = 100;
    Int p = 1, q = 2, k = 1, chips = 0, top = 5;
};

int cmd_circles(const Options& o, std::ostream& out) {
    BandPacking band;
    Window w = Window::square(0, 2);
    if (!o.window.empty()) {
        auto v = parse_ints(o.window, ',', 4, "window");
        w = {v[0], v[1], v[2], v[3]};
    }
    auto nodes = band.enumerate(o.max_curv, w);
    if (o.json) {
        json j = json::array();
        for (const auto& n : nodes) {
            json q = json::array();
            for (const Circle& c : n.quad.C) q.push_back(enc(c));
            j.push_back(q);
        }
        out << j.dump() << "\n";
        return ok;
    }
    for (const auto& n : nodes) {
        out << to_string(n.quad[0]) << "  parents";
        for (int i = 1; i <= 3; ++i) out << " " << to_string(n.quad[i]);
        out << "\n";
    }
    return ok;
}

int cmd_vectors(const Options& o, std::ostream& out) {
    Circle c = parse_circle(o.circle);
    BandPacking band;
    CacheEntry e = Cache::from_env().lookup(band, c);
    ChildVectors cv = child_vectors(e.pairs);
    RatSym2 A = peak_matrix(c);
    if (!o.text) {
        json j;
        j["circle"] = enc(c);
        j["parents"] = json::array({enc(e.quad[1]), enc(e.quad[2]), enc(e.quad[3])});
        j["to_child"] = json::array();
        for (const auto& p : cv.to_child) j["to_child"].push_back({{"v", enc(p.v)}, {"a", enc(p.a)}});
        j["peak_matrix"] = json::array({fmt(A.a11), fmt(A.a12), fmt(A.a22)});
        out << j.dump(2) << "\n";
        return ok;
    }
    out << "circle  " << to_string(c) << "\n";
    for (int i = 1; i <= 3; ++i) {
        const VAPair& p = cv.to_child[static_cast<std::size_t>(i - 1)];
        out << "C" << i << " " << std::left << std::setw(14) << to_string(e.quad[i]) << " v = " << std::setw(10)
            << to_string(p.v) << " a = " << to_string(p.a) << "\n";
    }
    Lattice2 L(cv.to_child[0].v, cv.to_child[1].v);
    out << "lattice Z(" << to_string(L.b1()) << ") + Z(" << to_string(L.b2()) << "), det " << L.det() << "\n";
    out << "A_C     [[" << fmt(A.a11) << ", " << fmt(A.a12) << "], [" << fmt(A.a12) << ", " << fmt(A.a22) << "]]\n";
    return ok;
}

int cmd_tile(const Options& o, std::ostream& out) {
    Circle c = parse_circle(o.circle);
    BandPacking band;
    CacheEntry e = Cache::from_env().lookup(band, c);
    Tile t = make_tile(c, e.squares);
    if (o.json) {
        json j;
        j["circle"] = enc(c);
        j["area"] = t.area();
        j["centroid_twice"] = enc(t.centroid.twice);
        j["squares"] = json::array();
        for (GaussInt s : t.squares) j["squares"].push_back(enc(s));
        out << j.dump() << "\n";
        return ok;
    }
    out << render_tile_ascii(t);
    return ok;
}

int cmd_pattern(const Options& o, std::ostream& out) {
    Circle c = parse_circle(o.circle);
    BandPacking band;
    PatternGrid grid;
    std::vector<bool> web;
    if (o.window.empty()) {
        grid = fundamental_domain_grid(band, c, &web);
    } else {
        auto wh = parse_ints(o.window, 'x', 2, "window");
        auto org = parse_ints(o.origin, ',', 2, "origin");
        if (wh[0] <= 0 || wh[1] <= 0) throw std::invalid_argument("window must be positive");
        grid = laplacian(band.odometer(c), org[0], org[1], wh[0], wh[1]);
        const Lattice2& L = band.odometer(c).lattice();
        const Tile& t = band.tile(c).tile;
        std::vector<bool> on(static_cast<std::size_t>(L.index()), false);
        for (GaussInt b : t.boundary()) on[static_cast<std::size_t>(L.residue_index(L.reduce(b)))] = true;
        for (Int y = grid.y0; y < grid.y0 + grid.height; ++y)
            for (Int x = grid.x0; x < grid.x0 + grid.width; ++x)
                web.push_back(on[static_cast<std::size_t>(L.residue_index(L.reduce({x, y})))]);
    }
    RenderSpec spec{o.ascii ? RenderFormat::ascii : RenderFormat::pgm, o.outline};
    std::string bytes = render(grid, spec, &web);
    if (!o.out_path.empty()) {
        write_file(o.out_path, bytes);
        out << "wrote " << o.out_path << " (" << grid.width << "x" << grid.height << ")\n";
    } else if (o.ascii) {
        out << bytes;
    } else {
        throw std::invalid_argument("pattern needs --out for PGM output, or --ascii");
    }
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    BandPacking band;
    VerifyOptions vo;
    vo.maximality_size = o.maximality;
    vo.samples = o.samples;
    Report rep;
    if (!o.circle.empty()) {
        rep = verify_circle(band, parse_circle(o.circle), vo);
    } else {
        if (o.max_curv <= 0) throw std::invalid_argument("verify needs --circle or a positive --max-curv");
        auto circles = band_circles(band, o.max_curv);
        for (const Circle& c : circles) rep.merge(verify_circle(band, c, vo));
        out << circles.size() << " circles\n";
    }
    return print_report(rep, out, o.verbose);
}

int cmd_ford(const Options& o, std::ostream& out) {
    if (o.q < 1 || gcd(o.p, o.q) != 1) throw std::invalid_argument("ford needs q >= 1 and gcd(p,q) = 1");
    BandPacking band;
    Report rep;
    if (o.q >= 2) rep.merge(check_ford_table(band, o.p, o.q));
    rep.merge(check_ford_oracle(band, o.p, o.q));
    auto vals = ford_square_values(o.p, o.q);
    out << "g on [0," << o.q << "]^2, top row first\n";
    for (Int y = o.q; y >= 0; --y) {
        for (Int x = 0; x <= o.q; ++x) out << std::setw(5) << vals.at({x, y});
        out << "\n";
    }
    return print_report(rep, out, true);
}

int cmd_diamond(const Options& o, std::ostream& out) {
    if (o.k < 1) throw std::invalid_argument("diamond needs k >= 1");
    BandPacking band;
    Report rep;
    rep.merge(check_diamond_table(band, o.k));
    rep.merge(check_diamond_oracle(band, o.k));
    out << "circle " << to_string(diamond_circle(o.k)) << "\n";
    Int r = 2 * o.k + 1;
    for (Int y = r; y >= -r; --y) {
        for (Int x = -r; x <= r; ++x) {
            GaussInt p{x, y};
            if (in_diamond_tile(o.k, p))
                out << std::setw(5) << diamond_closed_form(o.k, p);
            else
                out << "    .";
        }
        out << "\n";
    }
    return print_report(rep, out, true);
}

Schedule parse_schedule(const std::string& s) {
    if (s == "fifo") return Schedule::fifo;
    if (s == "lifo") return Schedule::lifo;
    throw std::invalid_argument("schedule must be fifo or lifo");
}

int cmd_sandpile(const Options& o, std::ostream& out) {
    if (o.chips < 0) throw std::invalid_argument("chips must be non-negative");
    ChipConfig s = stabilize(o.chips, parse_schedule(o.schedule));
    out << "chips " << s.sum() << "  box " << s.width << "x" << s.height << " at (" << s.x0 << "," << s.y0
        << ")  max " << s.max() << "\n";
    if (!o.out_path.empty()) {
        write_file(o.out_path, render_sandpile_pgm(s));
        out << "wrote " << o.out_path << "\n";
    }
    if (o.ascii)
        for (Int y = s.y0 + s.height - 1; y >= s.y0; --y) {
            for (Int x = s.x0; x < s.x0 + s.width; ++x) out << s.at(x, y);
            out << "\n";
        }
    return s.sum() == o.chips && s.max() <= 3 ? ok : verification_failed;
}

int cmd_sandpile_compare(const Options& o, std::ostream& out) {
    if (o.chips < 0) throw std::invalid_argument("chips must be non-negative");
    BandPacking band;
    std::vector<GlobalOdometer> lib;
    for (const Circle& c : band_circles(band, o.max_curv)) lib.push_back(band.odometer(c));
    ChipConfig s = stabilize(o.chips);
    auto matches = compare_patterns(s, lib);
    std::stable_sort(matches.begin(), matches.end(),
                     [](const PatternMatch& a, const PatternMatch& b) { return a.area > b.area; });
    out << "chips " << o.chips << ", " << lib.size() << " patterns (heuristic, not asserted)\n";
    for (std::size_t i = 0; i < matches.size() && static_cast<Int>(i) < o.top; ++i) {
        const auto& m = matches[i];
        out << std::left << std::setw(16) << to_string(m.circle) << " area " << std::setw(6) << m.area << " rect "
            << m.w << "x" << m.h << " at (" << m.x0 << "," << m.y0 << ")  symmetry " << m.symmetry << "\n";
    }
    return ok;
}

}  // namespace

Circle parse_circle(const std::string& s) {
    auto v = parse_ints(s, ',', 3, "circle");
    return {v[0], {v[1], v[2]}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer superharmonic matrices of the Apollonian band packing"};
    app.name("apollonite");
    app.require_subcommand(1);
    Options o;

    auto* circles = app.add_subcommand("circles", "child circles of proper quadruples");
    circles->add_option("--max-curv", o.max_curv, "largest curvature")->required();
    circles->add_option("--window", o.window, "x0,x1,y0,y1 for child centres (default 0,2,0,2)");
    circles->add_flag("--json", o.json);

    auto* vectors = app.add_subcommand("vectors", "lattice and affine vectors of a circle");
    vectors->add_option("--circle", o.circle, "c,cx,cy")->required();
    vectors->add_flag("--text", o.text, "table instead of JSON");

    auto* tile = app.add_subcommand("tile", "fundamental tile of a circle");
    tile->add_option("--circle", o.circle, "c,cx,cy")->required();
    auto* tj = tile->add_flag("--json", o.json);
    tile->add_flag("--ascii", o.ascii)->excludes(tj);

    auto* pattern = app.add_subcommand("pattern", "Laplacian pattern of the odometer");
    pattern->add_option("--circle", o.circle, "c,cx,cy")->required();
    pattern->add_option("--window", o.window, "WxH (default: the tile's bounding box)");
    pattern->add_option("--origin", o.origin, "x,y of the lower-left vertex");
    auto* po = pattern->add_option("--out", o.out_path, "PGM output file");
    pattern->add_flag("--ascii", o.ascii)->excludes(po);
    pattern->add_flag("--outline", o.outline, "mark the tile boundaries");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    auto* vc = verify->add_option("--circle", o.circle, "c,cx,cy");
    verify->add_option("--max-curv", o.max_curv, "every child circle up to this curvature")->excludes(vc);
    verify->add_option("--maximality", o.maximality, "probe sets up to this size");
    verify->add_option("--samples", o.samples, "periodicity samples per circle");
    verify->add_flag("-v,--verbose", o.verbose);

    auto* ford = app.add_subcommand("ford", "closed-form Ford odometer");
    ford->add_option("--p", o.p)->required();
    ford->add_option("--q", o.q)->required();

    auto* diamond = app.add_subcommand("diamond", "closed-form diamond odometer");
    diamond->add_option("--k", o.k)->required();

    auto* sandpile = app.add_subcommand("sandpile", "stabilize a single pile");
    sandpile->add_option("--chips", o.chips)->required();
    sandpile->add_option("--schedule", o.schedule, "fifo or lifo");
    sandpile->add_option("--out", o.out_path, "PGM output file");
    sandpile->add_flag("--ascii", o.ascii);

    auto* compare = app.add_subcommand("sandpile-compare", "match sandpile regions against odometer patterns");
    compare->add_option("--chips", o.chips)->required();
    compare->add_option("--max-curv", o.max_curv, "pattern library bound")->default_val(30);
    compare->add_option("--top", o.top, "matches to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return usage_error;
    }

    try {
        if (*circles) return cmd_circles(o, out);
        if (*vectors) return cmd_vectors(o, out);
        if (*tile) return cmd_tile(o, out);
        if (*pattern) return cmd_pattern(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*ford) return cmd_ford(o, out);
        if (*diamond) return cmd_diamond(o, out);
        if (*sandpile) return cmd_sandpile(o, out);
        if (*compare) return cmd_sandpile_compare(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const Falsification& e) {
        err << "falsified: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    }
    return usage_error;
}

}  // namespace apollonite::cli
