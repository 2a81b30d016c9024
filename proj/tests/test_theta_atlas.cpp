#include "doctest.h"

#include "permpoly/theta_atlas.hpp"

using namespace permpoly;

TEST_CASE("atlas counts for small d") {
    ThetaAtlas a3 = enumerate_valid_theta(3);
    CHECK(a3.valid.size() == 1);
    CHECK(a3.classes.size() == 1);
    CHECK(a3.valid[0].coeffs == std::vector<u64>{0});

    ThetaAtlas a5 = enumerate_valid_theta(5);
    CHECK(a5.valid.size() == 1);
    CHECK(a5.classes.size() == 1);

    ThetaAtlas a7 = enumerate_valid_theta(7);
    REQUIRE(a7.valid.size() == 3);
    // theta_hat = mu x^2 with mu in {0, 2, -2}
    std::set<std::vector<u64>> got;
    for (const ThetaMap& m : a7.valid) got.insert(m.coeffs);
    const std::set<std::vector<u64>> want{{0, 0, 0}, {0, 2, 0}, {0, 5, 0}};
    CHECK(got == want);

    ThetaAtlas a11 = enumerate_valid_theta(11);
    CHECK(a11.valid.size() == 25);
    CHECK(a11.classes.size() == 5);

    ThetaAtlas a13 = enumerate_valid_theta(13);
    CHECK(a13.valid.size() == 133);
    CHECK(a13.classes.size() == 14);
}

TEST_CASE("atlas rejects out-of-range d") {
    CHECK_THROWS_AS(enumerate_valid_theta(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_valid_theta(9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_valid_theta(37), std::invalid_argument);
}

TEST_CASE("orbit action") {
    ThetaMap theta{7, {0, 2, 0}};
    CHECK(orbit_action(theta, 1) == theta);
    // alpha = -1: a_i -> a_i * (-1)^{2i-1} = -a_i
    CHECK(orbit_action(theta, 6).coeffs == std::vector<u64>{0, 5, 0});
    // alpha = 3: a_2 -> 2 * 3^3 = 54 = 5 (mod 7)
    CHECK(orbit_action(theta, 3).coeffs == std::vector<u64>{0, 5, 0});
    CHECK_THROWS_AS(orbit_action(theta, 0), std::invalid_argument);
}

TEST_CASE("orbit closure partitions the valid set") {
    for (u64 d : {7ull, 11ull, 13ull}) {
        ThetaAtlas atlas = enumerate_valid_theta(d);
        std::size_t total = 0;
        std::set<std::vector<u64>> seen;
        for (const auto& cls : atlas.classes) {
            total += cls.orbit.size();
            CHECK(cls.representative.coeffs == cls.orbit.front().coeffs);
            for (const ThetaMap& m : cls.orbit) {
                CHECK(seen.insert(m.coeffs).second);
                // representative is lexicographically least
                CHECK(cls.representative.coeffs <= m.coeffs);
            }
        }
        CHECK(total == atlas.valid.size());
    }
}

TEST_CASE("the zero map is always valid") {
    for (u64 d : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        ThetaAtlas atlas = enumerate_valid_theta(d);
        bool has_zero = false;
        for (const ThetaMap& m : atlas.valid) {
            bool zero = true;
            for (u64 c : m.coeffs) zero = zero && c == 0;
            has_zero = has_zero || zero;
        }
        CHECK(has_zero);
        // definitional property: x + theta_hat(x^2) hits all residues
        for (const ThetaMap& m : atlas.valid) {
            std::set<u64> image;
            for (u64 x = 0; x < d; ++x) image.insert((x + m.eval(x * x % d)) % d);
            CHECK(image.size() == d);
        }
    }
}

TEST_CASE("d=11 atlas reproduces the corollary's set C") {
    CHECK(atlas_matches_c_set());
}
