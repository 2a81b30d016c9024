#ifndef PERMPOLY_THETA_ATLAS_HPP
#define PERMPOLY_THETA_ATLAS_HPP

// Exhaustive enumeration, for odd prime d, of the maps theta_hat in F_d[x]
// with theta_hat(0) = 0 and deg(theta_hat) < (d-1)/2 such that
// x + theta_hat(x^2) permutes F_d, together with their classification under
// the equivalence theta_hat(x) ~ theta_hat(alpha^2 x)/alpha, alpha in F_d^*.

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "permpoly/criteria.hpp"

namespace permpoly {

inline constexpr u64 kThetaAtlasMaxD = 31;

struct ThetaAtlas {
    u64 d = 0;
    std::vector<ThetaMap> valid;  // enumeration order (odometer, a_1 fastest)
    struct EquivClass {
        ThetaMap representative;        // lexicographically least coefficient vector
        std::vector<ThetaMap> orbit;    // sorted by coefficient vector
    };
    std::vector<EquivClass> classes;    // sorted by representative
};

// Coefficient vector of theta_hat(alpha^2 x)/alpha: a_i -> a_i * alpha^{2i-1}.
inline ThetaMap orbit_action(const ThetaMap& theta, u64 alpha) {
    const u64 d = theta.d;
    alpha %= d;
    if (alpha == 0) throw std::invalid_argument("orbit_action: alpha must be nonzero");
    ThetaMap out;
    out.d = d;
    out.coeffs.resize(theta.coeffs.size());
    u64 apow = alpha;  // alpha^{2i-1}, starting at i = 1
    const u64 a2 = alpha * alpha % d;
    for (std::size_t i = 0; i < theta.coeffs.size(); ++i) {
        out.coeffs[i] = theta.coeffs[i] * apow % d;
        apow = apow * a2 % d;
    }
    return out;
}

namespace detail {

inline bool theta_hat_is_valid(u64 d, const std::vector<u64>& coeffs, const std::vector<u64>& squares) {
    // x + theta_hat(x^2) bijective on Z/d, checked with a bitmask (d <= 31 fits u32).
    u32 seen = 0;
    for (u64 x = 0; x < d; ++x) {
        u64 y = squares[x];
        u64 acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * y + coeffs[i]) % d;
        const u64 img = (x + acc * y) % d;
        const u32 bit = u32(1) << img;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

}  // namespace detail

inline ThetaAtlas enumerate_valid_theta(u64 d, unsigned workers = 1) {
    if (d < 3 || d > kThetaAtlasMaxD || d % 2 == 0 || !nt::is_prime64(d)) {
        throw std::invalid_argument("enumerate_valid_theta: d must be an odd prime <= 31");
    }
    ThetaAtlas atlas;
    atlas.d = d;
    const u64 half = (d - 1) / 2;
    const u64 free_coeffs = half - 1;  // strict degree: top coefficient forced to 0
    std::vector<u64> squares(d);
    for (u64 x = 0; x < d; ++x) squares[x] = x * x % d;

    // Odometer with a_1 fastest; the leading free coefficient is slowest, so
    // slicing on it keeps each worker's output a contiguous block of the
    // enumeration order.
    auto scan_slice = [&](u64 lead, std::vector<ThetaMap>& out) {
        std::vector<u64> a(free_coeffs, 0);
        if (free_coeffs > 0) a[free_coeffs - 1] = lead;
        for (;;) {
            if (detail::theta_hat_is_valid(d, a, squares)) {
                ThetaMap theta;
                theta.d = d;
                theta.coeffs = a;
                theta.coeffs.resize(half, 0);
                out.push_back(std::move(theta));
            }
            std::size_t i = 0;
            while (i + 1 < free_coeffs && ++a[i] == d) a[i++] = 0;
            if (i + 1 >= free_coeffs) break;  // keep the leading coefficient fixed
        }
    };
    if (free_coeffs == 0) {
        std::vector<u64> empty;
        if (detail::theta_hat_is_valid(d, empty, squares)) {
            atlas.valid.push_back(ThetaMap{d, std::vector<u64>(half, 0)});
        }
    } else if (workers <= 1 || d < 11) {
        for (u64 lead = 0; lead < d; ++lead) scan_slice(lead, atlas.valid);
    } else {
        std::vector<std::vector<ThetaMap>> slices(d);
        std::atomic<u64> next{0};
        auto work = [&] {
            for (;;) {
                const u64 lead = next.fetch_add(1);
                if (lead >= d) break;
                scan_slice(lead, slices[lead]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<u64>(workers, d); ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
        for (auto& slice : slices) {
            for (ThetaMap& theta : slice) atlas.valid.push_back(std::move(theta));
        }
    }

    // orbit closure under the alpha-action
    std::set<std::vector<u64>> valid_set;
    for (const ThetaMap& theta : atlas.valid) valid_set.insert(theta.coeffs);
    std::set<std::vector<u64>> classified;
    for (const ThetaMap& theta : atlas.valid) {
        if (classified.count(theta.coeffs)) continue;
        std::set<std::vector<u64>> orbit;
        for (u64 alpha = 1; alpha < d; ++alpha) {
            ThetaMap img = orbit_action(theta, alpha);
            if (!valid_set.count(img.coeffs)) {
                throw std::logic_error("enumerate_valid_theta: orbit escaped the valid set (internal error)");
            }
            orbit.insert(std::move(img.coeffs));
        }
        ThetaAtlas::EquivClass cls;
        cls.representative = ThetaMap{d, *orbit.begin()};
        for (const auto& coeffs : orbit) {
            classified.insert(coeffs);
            cls.orbit.push_back(ThetaMap{d, coeffs});
        }
        atlas.classes.push_back(std::move(cls));
    }
    std::sort(atlas.classes.begin(), atlas.classes.end(),
              [](const ThetaAtlas::EquivClass& x, const ThetaAtlas::EquivClass& y) {
                  return x.representative.coeffs < y.representative.coeffs;
              });
    return atlas;
}

// The nonzero valid theta_hat for d = 11, restricted to the squares
// {1, 3, 4, 5, 9} via i -> theta_hat(i^2), must reproduce the corollary's
// set C exactly.
inline bool atlas_matches_c_set() {
    const ThetaAtlas atlas = enumerate_valid_theta(11);
    const auto& sq = detail::d11_squares();
    std::set<std::array<u64, 5>> from_atlas;
    for (const ThetaMap& theta : atlas.valid) {
        bool zero = true;
        for (u64 c : theta.coeffs) zero = zero && c == 0;
        if (zero) continue;
        std::array<u64, 5> values{};
        for (int j = 0; j < 5; ++j) values[j] = theta.eval(sq[j] * sq[j] % 11);
        from_atlas.insert(values);
    }
    std::set<std::array<u64, 5>> from_c;
    for (const auto& entry : c_set_d11()) from_c.insert(entry.values);
    return from_atlas == from_c;
}

}  // namespace permpoly

#endif  // PERMPOLY_THETA_ATLAS_HPP
