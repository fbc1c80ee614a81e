#pragma once

// Optional on-disk cache of vector pairs and tiles, one JSON file per circle
// under $APOLLONITE_CACHE/v1/. Entries from another format version are ignored.

#include <filesystem>
#include <optional>
#include <vector>

#include "apollonite/band.hpp"

namespace apollonite::cli {

struct CacheEntry {
    Quadruple quad;
    VATriple pairs;
    std::vector<GaussInt> squares;
};

class Cache {
public:
    // Reads APOLLONITE_CACHE; an unset or empty variable disables the cache.
    static Cache from_env();
    explicit Cache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

    bool enabled() const { return dir_.has_value(); }
    std::optional<CacheEntry> load(const Circle& c) const;
    void store(const Circle& c, const CacheEntry& e) const;

    // cached entry if present, otherwise computed from the band and stored
    CacheEntry lookup(BandPacking& band, const Circle& c) const;

    static constexpr int version = 1;

private:
    std::filesystem::path file(const Circle& c) const;
    std::optional<std::filesystem::path> dir_;
};

}  // namespace apollonite::cli
