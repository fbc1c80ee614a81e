#include <doctest.h>

#include <map>

#include "apollonite/band.hpp"
#include "apollonite/sandpile.hpp"
#include "apollonite/verify.hpp"

using namespace apollonite;

namespace {

// one toppling at a time, scanning the whole sheet
std::map<GaussInt, Int> naive(Int n) {
    std::map<GaussInt, Int> s{{{0, 0}, n}};
    for (bool moved = true; moved;) {
        moved = false;
        for (auto it = s.begin(); it != s.end(); ++it) {
            if (it->second < 4) continue;
            GaussInt p = it->first;
            it->second -= 4;
            for (GaussInt d : {GaussInt(1), GaussInt(-1), I, -I}) s[p + d] += 1;
            moved = true;
            break;
        }
    }
    return s;
}

}  // namespace

TEST_CASE("small piles") {
    ChipConfig three = stabilize(3);
    CHECK(three.at(0, 0) == 3);
    CHECK(three.sum() == 3);
    ChipConfig four = stabilize(4);
    CHECK(four.at(0, 0) == 0);
    for (auto [x, y] : {std::pair<Int, Int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) CHECK(four.at(x, y) == 1);
    CHECK(stabilize(0).sum() == 0);
    CHECK_THROWS(stabilize(-1));
}

TEST_CASE("stabilization matches one-at-a-time toppling") {
    for (Int n : {5, 17, 64, 250, 1000}) {
        CAPTURE(n);
        auto want = naive(n);
        ChipConfig got = stabilize(n, Schedule::lifo);
        for (const auto& [p, v] : want) CHECK(got.at(p.re, p.im) == v);
        CHECK(got.sum() == n);
    }
}

TEST_CASE("schedules agree") {
    ChipConfig a = stabilize(10000, Schedule::fifo), b = stabilize(10000, Schedule::lifo);
    CHECK(a == b);
    CHECK(a.sum() == 10000);
    CHECK(a.max() <= 3);
    // the pile keeps the symmetries of the square
    for (Int y = a.y0; y < a.y0 + a.height; ++y)
        for (Int x = a.x0; x < a.x0 + a.width; ++x) {
            CHECK(a.at(x, y) == a.at(-x, y));
            CHECK(a.at(x, y) == a.at(y, x));
        }
}

TEST_CASE("largest rectangle") {
    std::vector<char> mask{1, 1, 0, 1,  //
                           1, 1, 1, 1,  //
                           0, 1, 1, 1};
    auto r = largest_rectangle(mask, 4, 3);
    CHECK(r[0] == 6);
    std::vector<char> none(6, 0);
    CHECK(largest_rectangle(none, 3, 2)[0] == 0);
}

TEST_CASE("pattern comparison is a heuristic report") {
    BandPacking band;
    std::vector<GlobalOdometer> lib{band.odometer({1, {1, 0}}), band.odometer({4, {1, 4}})};
    auto empty = compare_patterns(stabilize(0), lib);
    REQUIRE(empty.size() == 2);
    for (const auto& m : empty) CHECK(m.area == 0);
    auto small = compare_patterns(stabilize(4), lib);
    CHECK(small.size() == 2);
    auto big = compare_patterns(stabilize(3000), lib);
    for (const auto& m : big) CHECK(m.area == m.w * m.h);
}
