#include "cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace apollonite::cli {

using nlohmann::json;

namespace {

json enc(GaussInt v) { return json::array({v.re, v.im}); }
GaussInt dec_gauss(const json& j) { return {j.at(0).get<Int>(), j.at(1).get<Int>()}; }

json enc(const Circle& c) { return json::array({c.c, c.w.re, c.w.im}); }
Circle dec_circle(const json& j) { return {j.at(0).get<Int>(), {j.at(1).get<Int>(), j.at(2).get<Int>()}}; }

json enc(const VAPair& p) { return json{{"v", enc(p.v)}, {"a", enc(p.a)}}; }
VAPair dec_pair(const json& j) { return {dec_gauss(j.at("v")), dec_gauss(j.at("a"))}; }

}  // namespace

Cache Cache::from_env() {
    const char* env = std::getenv("APOLLONITE_CACHE");
    if (!env || !*env) return Cache(std::nullopt);
    return Cache(std::filesystem::path(env));
}

std::filesystem::path Cache::file(const Circle& c) const {
    return *dir_ / ("v" + std::to_string(version)) /
           (std::to_string(c.c) + "_" + std::to_string(c.w.re) + "_" + std::to_string(c.w.im) + ".json");
}

std::optional<CacheEntry> Cache::load(const Circle& c) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(file(c));
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("version").get<int>() != version || dec_circle(j.at("circle")) != c) return std::nullopt;
        CacheEntry e;
        for (int i = 0; i < 4; ++i) e.quad.C[static_cast<std::size_t>(i)] = dec_circle(j.at("quadruple").at(i));
        e.pairs = {dec_pair(j.at("p21")), dec_pair(j.at("p32")), dec_pair(j.at("p13"))};
        for (const auto& s : j.at("squares")) e.squares.push_back(dec_gauss(s));
        return e;
    } catch (const json::exception&) {
        return std::nullopt;  // unreadable entries are recomputed
    }
}

void Cache::store(const Circle& c, const CacheEntry& e) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(file(c).parent_path(), ec);
    if (ec) return;
    json j;
    j["version"] = version;
    j["circle"] = enc(c);
    j["quadruple"] = json::array();
    for (const Circle& q : e.quad.C) j["quadruple"].push_back(enc(q));
    j["p21"] = enc(e.pairs.p21);
    j["p32"] = enc(e.pairs.p32);
    j["p13"] = enc(e.pairs.p13);
    j["squares"] = json::array();
    for (GaussInt s : e.squares) j["squares"].push_back(enc(s));
    // write then rename so readers never see a partial file
    auto tmp = file(c);
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
        if (!out) return;
    }
    std::filesystem::rename(tmp, file(c), ec);
}

CacheEntry Cache::lookup(BandPacking& band, const Circle& c) const {
    if (auto e = load(c)) return *e;
    const ForestNode& n = band.node(c);
    CacheEntry e{n.quad, n.pairs, band.tile(c).tile.squares};
    store(c, e);
    return e;
}

}  // namespace apollonite::cli
