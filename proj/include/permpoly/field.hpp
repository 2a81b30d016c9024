#ifndef PERMPOLY_FIELD_HPP
#define PERMPOLY_FIELD_HPP

// Exact arithmetic in F_q for prime-power q = p^n, q <= 2^48.
//
// Elements are stored as packed indices: an element with power-basis
// coordinates (c_0, ..., c_{n-1}) has index sum c_i * p^i, so index order is
// the canonical total order used for deterministic iteration everywhere.
// Index 0 is the zero element and index 1 is the multiplicative identity.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permpoly/int_math.hpp"

namespace permpoly {

using nt::u128;
using nt::u32;
using nt::u64;

// Tested envelope for field sizes; q-1 must factor with the trial-division +
// Pollard-rho factorizer, which is comfortable up to this bound.
inline constexpr u64 kMaxFieldOrder = 1ull << 48;
// Full-enumeration bound for the permutation oracle.
inline constexpr u64 kOracleMaxOrder = 1'000'000;
// dlog_in_subgroup switches from table lookup to baby-step giant-step here.
inline constexpr u64 kDlogTableMax = 1'000'000;
// SubgroupContext materializes the element list only up to this order.
inline constexpr u64 kSubgroupMaterializeMax = 1ull << 22;

struct FieldSpec {
    u64 p = 0;
    unsigned n = 1;
    // n+1 residues, constant term first, monic; empty means "search for the
    // lexicographically smallest irreducible monic polynomial" (n > 1 only).
    std::vector<u64> modulus;
};

struct FieldElement {
    u64 idx = 0;
    friend bool operator==(FieldElement a, FieldElement b) { return a.idx == b.idx; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.idx != b.idx; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.idx < b.idx; }
};

namespace detail {

// Dense polynomial helpers over F_p (coefficients low-degree first, u64
// residues). Only used for modulus search/validation, so clarity over speed.
using Poly = std::vector<u64>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + nt::mulmod(a[i], b[j], p)) % p;
        }
    }
    // reduce mod monic f
    const std::size_t deg_f = f.size() - 1;
    for (std::size_t i = c.size(); i-- > deg_f;) {
        const u64 coef = c[i] % p;
        if (coef == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < deg_f; ++j) {
            // x^i = x^{i-deg_f} * x^{deg_f} = -x^{i-deg_f} * (f - x^{deg_f})
            const u64 sub = nt::mulmod(coef, f[j], p);
            c[i - deg_f + j] = (c[i - deg_f + j] + p - sub) % p;
        }
    }
    c.resize(deg_f);
    poly_trim(c);
    return c;
}

inline Poly poly_pow_mod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b (b made monic on the fly)
        const u64 lead_inv = nt::powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const u64 c = nt::mulmod(a.back(), lead_inv, p);
            if (c != 0) {
                const std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    a[off + i] = (a[off + i] + p - nt::mulmod(c, b[i], p)) % p;
                }
            }
            a.pop_back();
            poly_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for a monic degree-n polynomial over F_p.
inline bool poly_irreducible(const Poly& f, u64 p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    const Poly x{0, 1};
    // x^{p^i} mod f for i = 1..n, keeping the iterates we need.
    std::vector<u64> prime_divs = nt::distinct_prime_factors(n);
    Poly t = x;
    std::vector<Poly> checkpoints;  // at exponents n/l
    for (std::size_t i = 1; i <= n; ++i) {
        t = poly_pow_mod(t, p, f, p);
        for (u64 l : prime_divs) {
            if (i == n / l) checkpoints.push_back(t);
        }
    }
    // Require x^{p^n} == x mod f.
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    // Require gcd(x^{p^{n/l}} - x, f) == 1 for every prime l | n.
    for (const Poly& cp : checkpoints) {
        Poly g = cp;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        poly_trim(g);
        Poly d = poly_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

class Field {
  public:
    // build_field: validates the spec, searching for a modulus when absent.
    static Field build(const FieldSpec& spec) { return Field(spec); }

    u64 p() const { return p_; }
    unsigned degree() const { return n_; }
    u64 order() const { return q_; }               // q = p^n
    u64 unit_group_order() const { return L_; }    // q - 1
    const std::vector<u64>& modulus() const { return modulus_; }  // empty for n == 1
    const std::vector<std::pair<u64, int>>& unit_order_factors() const { return factors_L_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement from_index(u64 idx) const {
        if (idx >= q_) throw std::invalid_argument("Field: element index out of range");
        return {idx};
    }
    // Scalar embedding of an integer (reduced mod p).
    FieldElement from_scalar(u64 c) const { return {c % p_}; }

    FieldElement from_coeffs(const std::vector<u64>& coeffs) const {
        if (coeffs.size() > n_) throw std::invalid_argument("Field: too many coordinates");
        u64 idx = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * p_ + coeffs[i] % p_;
        return {idx};
    }
    std::vector<u64> coeffs(FieldElement x) const {
        std::vector<u64> out(n_);
        u64 v = x.idx;
        for (unsigned i = 0; i < n_; ++i) { out[i] = v % p_; v /= p_; }
        return out;
    }

    bool is_zero(FieldElement x) const { return x.idx == 0; }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (n_ == 1) {
            u64 s = a.idx + b.idx;
            return {s >= p_ ? s - p_ : s};
        }
        u64 out = 0, pw = 1, av = a.idx, bv = b.idx;
        while (av || bv) {
            u64 s = av % p_ + bv % p_;
            if (s >= p_) s -= p_;
            out += s * pw;
            pw *= p_;
            av /= p_;
            bv /= p_;
        }
        return {out};
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        if (n_ == 1) return {a.idx >= b.idx ? a.idx - b.idx : a.idx + p_ - b.idx};
        u64 out = 0, pw = 1, av = a.idx, bv = b.idx;
        while (av || bv) {
            u64 da = av % p_, db = bv % p_;
            out += (da >= db ? da - db : da + p_ - db) * pw;
            pw *= p_;
            av /= p_;
            bv /= p_;
        }
        return {out};
    }

    FieldElement neg(FieldElement a) const { return sub(zero(), a); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (n_ == 1) return {nt::mulmod(a.idx, b.idx, p_)};
        if (a.idx == 0 || b.idx == 0) return {0};
        u64 da[kMaxDegree], db[kMaxDegree];
        u64 conv[2 * kMaxDegree];
        unpack(a.idx, da);
        unpack(b.idx, db);
        const unsigned m = 2 * n_ - 1;
        for (unsigned i = 0; i < m; ++i) conv[i] = 0;
        for (unsigned i = 0; i < n_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < n_; ++j) conv[i + j] += da[i] * db[j];
        }
        // fold x^{n+k} down using x^n = xn_red_
        for (unsigned i = m; i-- > n_;) {
            const u64 c = conv[i] % p_;
            if (c == 0) continue;
            for (unsigned j = 0; j < n_; ++j) conv[i - n_ + j] += c * xn_red_[j];
        }
        u64 out = 0, pw = 1;
        for (unsigned i = 0; i < n_; ++i) {
            out += (conv[i] % p_) * pw;
            pw *= p_;
        }
        return {out};
    }

    // Literal x^e for e >= 0 (0^0 = 1). Callers handling exponents larger
    // than 2^64 reduce mod q-1 first for nonzero bases.
    FieldElement pow(FieldElement x, u64 e) const {
        if (e == 0) return one();
        if (x.idx == 0) return zero();
        FieldElement r = one(), b = x;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(FieldElement x) const {
        if (x.idx == 0) throw std::domain_error("Field: inverse of zero");
        return pow(x, q_ - 2);
    }

    // Least m >= 1 with x^m = 1, by descending through the factorization of
    // q-1 prime by prime.
    u64 element_order(FieldElement x) const {
        if (x.idx == 0) throw std::domain_error("Field: order of zero is undefined");
        u64 m = L_;
        for (auto& [pf, e] : factors_L_) {
            while (m % pf == 0 && pow(x, m / pf) == one()) m /= pf;
        }
        return m;
    }

    // Smallest generator of F_q^* in the canonical element order.
    FieldElement primitive_root() const {
        if (L_ == 1) return one();
        for (u64 idx = 2; idx < q_; ++idx) {
            FieldElement cand{idx};
            bool ok = true;
            for (auto& [pf, e] : factors_L_) {
                if (pow(cand, L_ / pf) == one()) { ok = false; break; }
            }
            if (ok) return cand;
        }
        throw std::logic_error("Field: no primitive root found (internal error)");
    }

  private:
    static constexpr unsigned kMaxDegree = 48;

    explicit Field(const FieldSpec& spec) {
        if (!nt::is_prime64(spec.p)) throw std::invalid_argument("Field: characteristic must be prime");
        if (spec.n < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
        if (spec.n > kMaxDegree) throw std::invalid_argument("Field: extension degree too large");
        p_ = spec.p;
        n_ = spec.n;
        q_ = 1;
        for (unsigned i = 0; i < n_; ++i) {
            if (q_ > kMaxFieldOrder / p_) throw std::invalid_argument("Field: q exceeds supported bound 2^48");
            q_ *= p_;
        }
        if (q_ > kMaxFieldOrder) throw std::invalid_argument("Field: q exceeds supported bound 2^48");
        L_ = q_ - 1;
        if (n_ == 1) {
            if (!spec.modulus.empty()) {
                throw std::invalid_argument("Field: modulus is only meaningful for n > 1");
            }
        } else {
            if (spec.modulus.empty()) {
                modulus_ = search_modulus(p_, n_);
            } else {
                if (spec.modulus.size() != n_ + 1) {
                    throw std::invalid_argument("Field: modulus must have n+1 coefficients");
                }
                modulus_ = spec.modulus;
                for (u64& c : modulus_) c %= p_;
                if (modulus_.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
                if (!detail::poly_irreducible(modulus_, p_)) {
                    throw std::invalid_argument("Field: modulus is reducible over F_p");
                }
            }
            xn_red_.resize(n_);
            for (unsigned i = 0; i < n_; ++i) xn_red_[i] = (p_ - modulus_[i]) % p_;
        }
        factors_L_ = L_ >= 2 ? nt::factor64(L_) : std::vector<std::pair<u64, int>>{};
    }

    // Lexicographically smallest monic irreducible of degree n: minimize the
    // coefficient tuple (c_0, c_1, ..., c_{n-1}) compared from c_0.
    static std::vector<u64> search_modulus(u64 p, unsigned n) {
        std::vector<u64> c(n, 0);
        for (;;) {
            std::vector<u64> f(c);
            f.push_back(1);
            if (detail::poly_irreducible(f, p)) return f;
            // increment the tuple in lex order: last coordinate fastest
            unsigned i = n;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) throw std::logic_error("Field: no irreducible polynomial found (internal error)");
            }
        }
    }

    void unpack(u64 idx, u64* out) const {
        for (unsigned i = 0; i < n_; ++i) { out[i] = idx % p_; idx /= p_; }
    }

    u64 p_ = 0;
    unsigned n_ = 1;
    u64 q_ = 0;
    u64 L_ = 0;
    std::vector<u64> modulus_;
    std::vector<u64> xn_red_;
    std::vector<std::pair<u64, int>> factors_L_;
};

// The group mu_d of d-th roots of unity, with a chosen generator omega of
// exact order d. Immutable after construction; safe to share across threads.
struct SubgroupContext {
    const Field* field = nullptr;
    u64 d = 0;
    FieldElement omega;
    // Present iff d <= kSubgroupMaterializeMax; elements[j] = omega^j.
    std::vector<FieldElement> elements;
    // Present iff d <= kDlogTableMax; element index -> exponent.
    std::unordered_map<u64, u64> log_table;

    bool has_elements() const { return !elements.empty() || d == 0; }
};

inline SubgroupContext roots_of_unity(const Field& field, u64 d) {
    if (d == 0 || field.unit_group_order() % d != 0) {
        throw std::invalid_argument("roots_of_unity: d must divide q-1");
    }
    SubgroupContext ctx;
    ctx.field = &field;
    ctx.d = d;
    const FieldElement g = field.primitive_root();
    ctx.omega = field.pow(g, field.unit_group_order() / d);
    if (d <= kSubgroupMaterializeMax) {
        ctx.elements.reserve(d);
        FieldElement cur = field.one();
        for (u64 j = 0; j < d; ++j) {
            ctx.elements.push_back(cur);
            cur = field.mul(cur, ctx.omega);
        }
        if (d <= kDlogTableMax) {
            ctx.log_table.reserve(d * 2);
            for (u64 j = 0; j < d; ++j) ctx.log_table.emplace(ctx.elements[j].idx, j);
        }
    }
    return ctx;
}

// Discrete log base omega inside mu_d: table lookup when available, baby-step
// giant-step otherwise.
inline u64 dlog_in_subgroup(const SubgroupContext& ctx, FieldElement x) {
    const Field& F = *ctx.field;
    if (F.is_zero(x) || F.pow(x, ctx.d) != F.one()) {
        throw std::invalid_argument("dlog_in_subgroup: element is not a d-th root of unity");
    }
    if (!ctx.log_table.empty() || ctx.d == 1) {
        if (ctx.d == 1) return 0;
        auto it = ctx.log_table.find(x.idx);
        if (it == ctx.log_table.end()) throw std::logic_error("dlog_in_subgroup: table miss (internal error)");
        return it->second;
    }
    u64 m = 1;
    while (m * m < ctx.d) ++m;
    std::unordered_map<u64, u64> baby;
    baby.reserve(m * 2);
    FieldElement cur = F.one();
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(cur.idx, j);
        cur = F.mul(cur, ctx.omega);
    }
    const FieldElement giant = F.inv(F.pow(ctx.omega, m));
    FieldElement y = x;
    for (u64 i = 0; i * m <= ctx.d; ++i) {
        auto it = baby.find(y.idx);
        if (it != baby.end()) return (i * m + it->second) % ctx.d;
        y = F.mul(y, giant);
    }
    throw std::logic_error("dlog_in_subgroup: BSGS failed (internal error)");
}

// Definitional permutation oracle: enumerates the image of every element in
// canonical order and checks for a repeat with a visited table.
template <typename Fn>
bool is_permutation_oracle(const Field& field, Fn&& map) {
    if (field.order() > kOracleMaxOrder) {
        throw std::invalid_argument("is_permutation_oracle: q too large for full enumeration");
    }
    std::vector<bool> visited(field.order(), false);
    for (u64 idx = 0; idx < field.order(); ++idx) {
        const FieldElement y = map(field.from_index(idx));
        if (visited[y.idx]) return false;
        visited[y.idx] = true;
    }
    return true;
}

}  // namespace permpoly

#endif  // PERMPOLY_FIELD_HPP
