#ifndef PERMPOLY_INT_MATH_HPP
#define PERMPOLY_INT_MATH_HPP

// Integer utilities used throughout: modular arithmetic on 64-bit values,
// deterministic primality testing, factorization (trial division plus
// Pollard rho), and a small deterministic RNG for sampling in tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permpoly::nt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// splitmix64: deterministic cross-platform generator for test sampling.
struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    u64 below(u64 bound) { return bound ? next() % bound : 0; }
};

namespace detail {

inline u64 pollard_rho(u64 n, u64 c) {
    // Brent's cycle variant.
    u64 x = 2, y = 2, d = 1, q = 1, ys = 2;
    const unsigned m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 r = 1;
    while (d == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && d == 1) {
            ys = y;
            u64 lim = std::min<u64>(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            d = std::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (d == n) {
        do {
            ys = f(ys);
            d = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (d == 1);
    }
    return d;
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime64(n)) { out.push_back(n); return; }
    u64 d = n;
    for (u64 c = 1; d == n; ++c) d = pollard_rho(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

// Prime factorization of n, as (prime, exponent) pairs sorted by prime.
inline std::vector<std::pair<u64, int>> factor64(u64 n) {
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                  41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    if (n > 1) detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factor64(n)) out.push_back(p);
    return out;
}

// Writes q as p^n with p prime, if possible.
inline std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
    if (q < 2) return std::nullopt;
    auto fac = factor64(q);
    if (fac.size() != 1) return std::nullopt;
    return std::make_pair(fac[0].first, static_cast<unsigned>(fac[0].second));
}

// All divisors of n, sorted ascending.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto& [p, e] : factor64(n)) {
        const std::size_t sz = out.size();
        u64 pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permpoly::nt

#endif  // PERMPOLY_INT_MATH_HPP
