#ifndef PERMPOLY_FAMILY_HPP
#define PERMPOLY_FAMILY_HPP

// The polynomial family under study: f(x) = x^r * h_k(x^v)^t over F_q, where
// h_k(x) = x^{k-1} + x^{k-2} + ... + 1. Evaluation keeps exponents as
// arbitrary integers and reduces mod q-1 only for nonzero bases, so r, v, k, t
// may be astronomically large without overflow.

#include <stdexcept>

#include "permpoly/field.hpp"

namespace permpoly {

struct FamilyParams {
    u64 r = 1;
    u64 v = 1;
    u64 k = 1;
    u64 t = 1;
};

// s = gcd(v, q-1), d = (q-1)/s, e = v/s, n_lin = (2r + (k-1)vt) mod d.
struct DerivedParams {
    u64 s = 0;
    u64 d = 0;
    u64 e = 0;
    u64 n_lin = 0;
};

inline void validate_params(const FamilyParams& params) {
    if (params.r < 1 || params.v < 1 || params.k < 1 || params.t < 1) {
        throw std::invalid_argument("FamilyParams: r, v, k, t must be positive");
    }
}

inline DerivedParams derive(const Field& field, const FamilyParams& params) {
    validate_params(params);
    const u64 L = field.unit_group_order();  // q - 1 >= 1
    DerivedParams out;
    out.s = std::gcd(params.v, L);
    out.d = L / out.s;
    out.e = params.v / out.s;
    // (2r + (k-1)*v*t) mod d, in 128-bit to dodge overflow
    u128 n = u128(2) * (params.r % out.d);
    n += u128((params.k - 1) % out.d) * (params.v % out.d) % out.d * (params.t % out.d);
    out.n_lin = static_cast<u64>(n % out.d);
    if (std::gcd(out.d, out.e) != 1) {
        throw std::logic_error("derive: gcd(d, e) != 1 (internal error)");
    }
    return out;
}

// h_k(x): equals k mod p at x = 1 (removable singularity of the quotient
// form), (x^k - 1)/(x - 1) elsewhere, and 1 at x = 0.
inline FieldElement eval_hk(const Field& field, u64 k, FieldElement x) {
    if (k < 1) throw std::invalid_argument("eval_hk: k must be positive");
    if (field.is_zero(x)) return field.one();
    if (x == field.one()) return field.from_scalar(k);
    const u64 L = field.unit_group_order();
    const FieldElement num = field.sub(field.pow(x, k % L), field.one());
    const FieldElement den = field.sub(x, field.one());
    return field.mul(num, field.inv(den));
}

inline FieldElement eval_f(const Field& field, const FamilyParams& params, FieldElement x) {
    validate_params(params);
    if (field.is_zero(x)) return field.zero();  // r >= 1
    const u64 L = field.unit_group_order();
    const FieldElement y = field.pow(x, params.v % L);
    const FieldElement h = eval_hk(field, params.k, y);
    if (field.is_zero(h)) return field.zero();  // t >= 1
    return field.mul(field.pow(x, params.r % L), field.pow(h, params.t % L));
}

// ghat(zeta) = zeta^r * h_k(zeta^e)^{st}, the map whose bijectivity on mu_d
// decides whether f permutes F_q. For zeta != 1 this equals
// zeta^r * ((1 - zeta^{ek}) / (1 - zeta^e))^{st}.
inline FieldElement ghat_on_mu_d(const Field& field, const FamilyParams& params,
                                 const DerivedParams& derived, FieldElement zeta) {
    validate_params(params);
    if (field.is_zero(zeta) || field.pow(zeta, derived.d) != field.one()) {
        throw std::invalid_argument("ghat_on_mu_d: zeta is not a d-th root of unity");
    }
    const u64 L = field.unit_group_order();
    const u64 st = static_cast<u64>(u128(derived.s) % L * (params.t % L) % L);
    const FieldElement h = eval_hk(field, params.k, field.pow(zeta, derived.e % L));
    if (field.is_zero(h)) return field.zero();
    return field.mul(field.pow(zeta, params.r % L), field.pow(h, st));
}

inline bool family_permutes_by_oracle(const Field& field, const FamilyParams& params) {
    return is_permutation_oracle(field, [&](FieldElement x) { return eval_f(field, params, x); });
}

}  // namespace permpoly

#endif  // PERMPOLY_FAMILY_HPP
