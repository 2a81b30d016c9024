#include "doctest.h"

#include "permpoly/int_math.hpp"

using namespace permpoly::nt;

TEST_CASE("powmod and mulmod basics") {
    CHECK(powmod(2, 10, 1000000007) == 1024);
    CHECK(powmod(3, 0, 97) == 1);
    CHECK(powmod(0, 5, 97) == 0);
    CHECK(mulmod(u64(1) << 40, u64(1) << 40, (u64(1) << 61) - 1) ==
          u64((u128(1) << 80) % ((u64(1) << 61) - 1)));
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime64(2));
    CHECK(is_prime64(3));
    CHECK_FALSE(is_prime64(1));
    CHECK_FALSE(is_prime64(561));   // Carmichael
    CHECK(is_prime64(104729));
    CHECK(is_prime64((u64(1) << 61) - 1));
    CHECK_FALSE(is_prime64(u64(3215031751)));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("factor64 recovers known factorizations") {
    auto f = factor64(600851475143ull);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<u64, int>{71, 1});
    CHECK(f[3] == std::pair<u64, int>{6857, 1});

    f = factor64(1);
    CHECK(f.empty());

    f = factor64(1024);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == std::pair<u64, int>{2, 10});

    // product of two ~24-bit primes, exercises rho
    const u64 a = 16777213, b = 16777199;
    f = factor64(a * b);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == b);
    CHECK(f[1].first == a);
}

TEST_CASE("prime power decomposition") {
    auto pp = prime_power_decompose(343);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 7);
    CHECK(pp->second == 3);
    CHECK_FALSE(prime_power_decompose(12).has_value());
    CHECK_FALSE(prime_power_decompose(1).has_value());
    pp = prime_power_decompose(2);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 2);
    CHECK(pp->second == 1);
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(49) == std::vector<u64>{1, 7, 49});
}
