#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "gpedim/canonical.hpp"
#include "gpedim/errors.hpp"

using namespace gpedim;

namespace {

// Every image of {x, y, z} under the 2n dihedral maps, kept when it contains 0.
std::set<CanonicalPair> orbit_pairs(Index n, Index x, Index y, Index z) {
    std::set<CanonicalPair> out;
    for (Index sign : {1, -1}) {
        for (Index c = 0; c < n; ++c) {
            std::set<Index> image{mod(sign * x + c, n), mod(sign * y + c, n), mod(sign * z + c, n)};
            if (image.count(0) != 0) {
                image.erase(0);
                out.insert({*image.begin(), *image.rbegin()});
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("S_n membership and enumeration") {
    CHECK(in_S(100, {1, 41}));
    CHECK(in_S(100, {33, 66}));
    CHECK_FALSE(in_S(100, {34, 68}));
    CHECK_FALSE(in_S(100, {1, 1}));
    CHECK_FALSE(in_S(100, {10, 56}));

    const auto s100 = enumerate_S(100);
    CHECK(s100.size() == 833);
    CHECK(std::is_sorted(s100.begin(), s100.end()));
    for (const auto& p : s100) {
        REQUIRE(in_S(100, p));
    }
}

TEST_CASE("canonical examples") {
    CHECK(canonicalize_triple(100, 99, 0, 40) == CanonicalPair{1, 41});
    CHECK(canonicalize_triple(100, 7, 14, 21) == CanonicalPair{7, 14});
    CHECK_THROWS_AS(canonicalize_triple(100, 3, 103, 5), DomainError);
}

TEST_CASE("canonical pair is the least S_n point of the orbit") {
    std::mt19937_64 rng(99);
    for (Index n : {30, 101}) {
        std::uniform_int_distribution<Index> pick(0, n - 1);
        for (int trial = 0; trial < 500; ++trial) {
            Index x = pick(rng), y = pick(rng), z = pick(rng);
            if (x == y || y == z || x == z) {
                continue;
            }
            std::optional<CanonicalPair> least;
            for (const auto& p : orbit_pairs(n, x, y, z)) {
                if (in_S(n, p)) {
                    least = p;
                    break;
                }
            }
            REQUIRE(least.has_value());
            REQUIRE(canonicalize_triple(n, x, y, z) == *least);
        }
    }
}

TEST_CASE("S_n covers every triple class") {
    for (Index n : {9, 14, 31}) {
        std::set<CanonicalPair> seen;
        for (Index y = 1; y < n; ++y) {
            for (Index z = y + 1; z < n; ++z) {
                seen.insert(canonicalize_triple(n, 0, y, z));
            }
        }
        for (const auto& p : seen) {
            CHECK(in_S(n, p));
        }
    }
}
