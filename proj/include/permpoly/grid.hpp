#ifndef PERMPOLY_GRID_HPP
#define PERMPOLY_GRID_HPP

// Table-driven sweep engine for exhaustive (r, v, k, t) grids over a fixed
// field. Everything runs in the discrete-log domain of a fixed primitive
// root g: nonzero elements become exponents in [0, q-1), h_k value tables are
// updated incrementally in k, and both the criteria pipeline and the
// brute-force oracle reduce to tight integer loops. Verdicts are identical to
// the generic permpoly::decide / is_permutation_oracle pair (cross-checked in
// the test suite); this engine makes full grids over every prime power
// q <= 343 affordable.
//
// Loop order is k (outer, incremental h_k), then t, then v, then r. Workers
// split the k range; per-tuple accumulation goes through a Sink merged
// deterministically in chunk order.

#include <atomic>
#include <thread>

#include "permpoly/criteria.hpp"

namespace permpoly::grid {

using u8 = std::uint8_t;

inline constexpr u32 kMark = 0xFFFFFFFFu;

// Exp/log tables for one field, plus the few coordinate operations the log
// domain cannot express (add one, subtract).
struct LogField {
    u32 q = 0, p = 0, n = 1, L = 0;
    u32 g = 0;                 // primitive root (element index)
    std::vector<u32> expo;     // size 2L: expo[j] = g^j, doubled to skip a mod
    std::vector<u32> lg;       // size q: lg[idx]; lg[0] = kMark

    static LogField build(const Field& field) {
        if (field.order() > kOracleMaxOrder) {
            throw std::invalid_argument("LogField: q too large for table construction");
        }
        LogField lf;
        lf.q = static_cast<u32>(field.order());
        lf.p = static_cast<u32>(field.p());
        lf.n = field.degree();
        lf.L = lf.q - 1;
        const FieldElement g = field.primitive_root();
        lf.g = static_cast<u32>(g.idx);
        lf.expo.assign(2 * std::size_t(lf.L), 0);
        lf.lg.assign(lf.q, kMark);
        FieldElement cur = field.one();
        for (u32 j = 0; j < lf.L; ++j) {
            lf.expo[j] = static_cast<u32>(cur.idx);
            lf.expo[j + lf.L] = static_cast<u32>(cur.idx);
            lf.lg[cur.idx] = j;
            cur = field.mul(cur, g);
        }
        if (cur != field.one()) throw std::logic_error("LogField: generator order mismatch");
        return lf;
    }

    u32 add_one(u32 idx) const {
        const u32 c0 = idx % p;
        return c0 + 1 == p ? idx - c0 : idx + 1;
    }

    u32 sub(u32 a, u32 b) const {
        if (n == 1) return a >= b ? a - b : a + p - b;
        u32 out = 0, pw = 1;
        while (a || b) {
            const u32 da = a % p, db = b % p;
            out += (da >= db ? da - db : da + p - db) * pw;
            pw *= p;
            a /= p;
            b /= p;
        }
        return out;
    }
};

// Immutable per-field context shared by all workers.
struct FieldGridCtx {
    Field field;
    LogField lf;
    u32 L = 0;
    std::vector<u32> gcd_with_L;            // [v in 0..L]; gcd(0, L) = L
    std::vector<u32> divs;                  // divisors of L, ascending
    std::vector<u32> s_index;               // [v] -> index of gcd(v, L) in divs
    std::vector<u32> d_index;               // [v] -> index of L / gcd(v, L) in divs
    std::vector<std::vector<u8>> coprime;   // [div idx][r in 0..L]: gcd(r, div) == 1
    std::vector<std::vector<u8>> ok2;       // [div idx][x in 0..div): gcd(div, x) <= 2
    std::vector<u8> odd_prime;              // [div idx]

    static FieldGridCtx build(u64 q) {
        auto pp = nt::prime_power_decompose(q);
        if (!pp) throw std::invalid_argument("FieldGridCtx: q must be a prime power");
        return build_from(Field::build({pp->first, pp->second, {}}));
    }

    static FieldGridCtx build_from(Field field) {
        FieldGridCtx fc{std::move(field)};
        fc.lf = LogField::build(fc.field);
        fc.L = fc.lf.L;
        const u32 L = fc.L;
        fc.gcd_with_L.resize(std::size_t(L) + 1);
        fc.gcd_with_L[0] = L;
        for (u32 v = 1; v <= L; ++v) fc.gcd_with_L[v] = static_cast<u32>(std::gcd<u64, u64>(v, L));
        for (u64 dv : nt::divisors(L)) fc.divs.push_back(static_cast<u32>(dv));
        auto div_idx = [&fc](u32 dv) {
            return static_cast<u32>(std::lower_bound(fc.divs.begin(), fc.divs.end(), dv) -
                                    fc.divs.begin());
        };
        fc.s_index.resize(std::size_t(L) + 1);
        fc.d_index.resize(std::size_t(L) + 1);
        for (u32 v = 0; v <= L; ++v) {
            const u32 s = fc.gcd_with_L[v];
            fc.s_index[v] = div_idx(s);
            fc.d_index[v] = div_idx(L / s);
        }
        fc.coprime.resize(fc.divs.size());
        fc.ok2.resize(fc.divs.size());
        fc.odd_prime.resize(fc.divs.size());
        for (std::size_t i = 0; i < fc.divs.size(); ++i) {
            const u32 dv = fc.divs[i];
            fc.coprime[i].resize(std::size_t(L) + 1);
            for (u32 r = 0; r <= L; ++r) fc.coprime[i][r] = std::gcd(r, dv) == 1;
            fc.ok2[i].resize(dv);
            for (u32 x = 0; x < dv; ++x) {
                fc.ok2[i][x] = (x == 0 ? dv : static_cast<u32>(std::gcd(x, dv))) <= 2;
            }
            fc.odd_prime[i] = dv >= 3 && dv % 2 == 1 && nt::is_prime64(dv);
        }
        return fc;
    }

  private:
    explicit FieldGridCtx(Field f) : field(std::move(f)) {}
};

// Requested sub-grid; zeros mean "up to the natural bound" (q-1 or q).
struct SweepRanges {
    u64 r_lo = 1, r_hi = 0;
    u64 v_lo = 1, v_hi = 0;
    u64 k_lo = 1, k_hi = 0;
    u64 t_lo = 1, t_hi = 3;
};

enum : u8 { kPathD1 = 0, kPathD2 = 1, kPathClosed = 2, kPathChi = 3, kPathGeneral = 4 };

// What the sink sees for one tuple. star/chi/prop45 are only
// meaningful when gate123 holds and d is an odd prime (chi/prop45 only when
// options.consistency is set).
struct TupleInfo {
    u32 r = 0, v = 0, k = 0, t = 0;
    u32 s = 0, d = 0, e = 0;
    bool verdict = false;
    bool oracle = false;
    bool gate123 = false;
    bool cond3 = false;
    bool star = false;
    bool chi = false;
    bool prop45 = false;
    u8 path = kPathGeneral;
};

struct SweepOptions {
    bool with_oracle = true;
    bool consistency = false;
};

namespace detail {

struct Scratch {
    std::vector<u32> hval, H, TH;
    std::vector<u64> stamp;
    u64 epoch = 0;
    std::vector<u32> psi;             // psi(i), i in [1, (d-1)/2]
    std::vector<u32> psix;            // psi extended to [0, d)
    std::vector<u32> blog;            // log-domain ghat offsets, j in [0, d)
    std::vector<u8> sigma1, sigmam1;  // per divisor index, for the current (k, t)

    void resize(u32 L, std::size_t ndivs) {
        hval.assign(L, 0);
        H.assign(L, 0);
        TH.assign(L, 0);
        stamp.assign(std::max<u32>(L, 1), 0);
        epoch = 0;
        sigma1.assign(ndivs, 0);
        sigmam1.assign(ndivs, 0);
    }
};

// h_k(g^w) for all w, from scratch (start of a k-chunk).
inline void init_hval(const FieldGridCtx& fc, u64 k, std::vector<u32>& hval) {
    const LogField& lf = fc.lf;
    const u32 L = lf.L;
    if (k == 1) {
        for (u32 w = 0; w < L; ++w) hval[w] = 1;
        return;
    }
    hval[0] = static_cast<u32>(k % lf.p);  // h_k(1) = k mod p
    for (u32 w = 1; w < L; ++w) {
        const u32 yk = lf.expo[static_cast<u64>(w) * (k % L) % L];
        const u32 num = lf.sub(yk, 1);
        if (num == 0) {
            hval[w] = 0;
            continue;
        }
        const u32 den = lf.sub(lf.expo[w], 1);
        hval[w] = lf.expo[lf.lg[num] + L - lf.lg[den]];
    }
}

// Brute-force oracle: f(g^j) has log (r j + t H[v j]) when defined; kMark
// means a nonzero point maps to 0 = f(0). True iff no repeat among all q
// images.
inline bool oracle_fast(const u32* TH, u64* stamp, u64 epoch, u32 L, u32 r_red, u32 v_red) {
    const u32 th0 = TH[0];
    if (th0 == kMark) return false;
    stamp[th0] = epoch;
    u32 w = 0, a = 0;
    for (u32 j = 1; j < L; ++j) {
        w += v_red;
        if (w >= L) w -= L;
        a += r_red;
        if (a >= L) a -= L;
        const u32 th = TH[w];
        if (th == kMark) return false;
        u32 m = a + th;
        if (m >= L) m -= L;
        if (stamp[m] == epoch) return false;
        stamp[m] = epoch;
    }
    return true;
}

inline bool chi_fast(const u32* psix, u64* stamp, u64 epoch, u32 d, u32 n) {
    stamp[0] = epoch;  // chi(0) = 0
    u32 a = 0;
    for (u32 i = 1; i < d; ++i) {
        a += n;
        if (a >= d) a -= d;
        u32 c = a + psix[i];
        if (c >= d) c -= d;
        if (stamp[c] == epoch) return false;
        stamp[c] = epoch;
    }
    return true;
}

// Conditions (4) and (5): the logs r s j + blog[j], j in [1, d), must be
// pairwise distinct and avoid the log of the sign.
inline bool prop45_fast(const u32* blog, u64* stamp, u64 epoch, u32 L, u32 d, u32 rs,
                        u32 sign_log) {
    u32 a = 0;
    for (u32 j = 1; j < d; ++j) {
        a += rs;
        if (a >= L) a -= L;
        u32 m = a + blog[j];
        if (m >= L) m -= L;
        if (m == sign_log) return false;
        if (stamp[m] == epoch) return false;
        stamp[m] = epoch;
    }
    return true;
}

// d = 11 C-set keys (base-11 packed value tuples on the squares 1,3,4,5,9).
inline const std::array<u32, 24>& c_set_keys_d11() {
    static const std::array<u32, 24> keys = [] {
        std::array<u32, 24> out{};
        const auto& cs = c_set_d11();
        if (cs.size() != 24) throw std::logic_error("c_set_d11: unexpected size");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            u32 key = 0;
            for (u64 val : cs[i].values) key = key * 11 + static_cast<u32>(val);
            out[i] = key;
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return keys;
}

inline constexpr std::array<u32, 11> kInv11{0, 1, 6, 4, 3, 9, 2, 8, 7, 5, 10};

}  // namespace detail

// Sweeps k in [k_lo, k_hi] over one field, calling the sink for every tuple.
// Sink contract:
//   void tuple(const FieldGridCtx&, const TupleInfo&);
//   void psi_observed(u32 d, const std::vector<u32>& psi_values);
template <typename Sink>
void sweep_k_range(const FieldGridCtx& fc, const SweepRanges& ranges, const SweepOptions& opts,
                   u64 k_lo, u64 k_hi, detail::Scratch& sc, Sink& sink) {
    const LogField& lf = fc.lf;
    const u32 L = fc.L;
    const u32 p = lf.p;
    const u64 r_hi = ranges.r_hi ? std::min<u64>(ranges.r_hi, L) : L;
    const u64 v_hi = ranges.v_hi ? std::min<u64>(ranges.v_hi, L) : L;
    if (ranges.r_lo > r_hi || ranges.v_lo > v_hi || ranges.t_lo > ranges.t_hi || k_lo > k_hi) {
        return;
    }

    sc.resize(L, fc.divs.size());
    detail::init_hval(fc, k_lo, sc.hval);

    TupleInfo info;
    for (u64 k = k_lo; k <= k_hi; ++k) {
        if (k > k_lo) {
            // h_k(y) = y * h_{k-1}(y) + 1
            for (u32 w = 0; w < L; ++w) {
                const u32 hv = sc.hval[w];
                const u32 prod = hv ? lf.expo[static_cast<u64>(lf.lg[hv]) + w] : 0;
                sc.hval[w] = lf.add_one(prod);
            }
        }
        for (u32 w = 0; w < L; ++w) sc.H[w] = sc.hval[w] ? lf.lg[sc.hval[w]] : kMark;

        const u32 km = static_cast<u32>(k % p);
        const bool k_odd = (k & 1) != 0;
        info.k = static_cast<u32>(k);

        for (u64 t = ranges.t_lo; t <= ranges.t_hi; ++t) {
            info.t = static_cast<u32>(t);
            const u32 t_red = static_cast<u32>(t % L);
            for (u32 w = 0; w < L; ++w) {
                sc.TH[w] = sc.H[w] == kMark
                               ? kMark
                               : static_cast<u32>(static_cast<u64>(t_red) * sc.H[w] % L);
            }
            // sigma(s) = k^{st} mod p, hoisted over the tau(L) possible s
            for (std::size_t i = 0; i < fc.divs.size(); ++i) {
                u64 sigma;
                if (km == 0) {
                    sigma = 0;
                } else if (p == 2) {
                    sigma = 1;
                } else {
                    const u64 e = static_cast<u64>(u128(fc.divs[i] % (p - 1)) * (t % (p - 1)) %
                                                   (p - 1));
                    sigma = nt::powmod(km, e, p);
                }
                sc.sigma1[i] = sigma == 1;
                sc.sigmam1[i] = sigma == p - 1;
            }

            for (u64 v = ranges.v_lo; v <= v_hi; ++v) {
                const u32 s = fc.gcd_with_L[v];
                const u32 d = L / s;
                const u32 e = static_cast<u32>(v / s);
                const u32 sidx = fc.s_index[v];
                const u32 didx = fc.d_index[v];
                const u32 v_red = static_cast<u32>(v % L);
                const u32 stL = static_cast<u32>(static_cast<u64>(s) * t_red % L);
                const bool d_odd = (d & 1) != 0;
                const bool is_odd_prime = fc.odd_prime[didx];
                const bool c1k = d == 1 || std::gcd<u64, u64>(k % d, d) == 1;
                const u32 c_lin =
                    d == 1 ? 0
                           : static_cast<u32>((u128(v % d) * (t % d) % d) * ((k - 1) % d) % d);
                const u8* cop = fc.coprime[sidx].data();
                const u8* ok2d = fc.ok2[didx].data();
                const bool sg1 = sc.sigma1[sidx], sgm1 = sc.sigmam1[sidx];

                info.v = static_cast<u32>(v);
                info.s = s;
                info.d = d;
                info.e = e;

                // lazy per-(k, t, v) data
                bool psi_ready = false, star = false;
                bool psix_ready = false, blog_ready = false;

                auto ensure_psi = [&] {
                    if (psi_ready) return;
                    psi_ready = true;
                    const u32 half = (d - 1) / 2;
                    sc.psi.assign(half, 0);
                    star = true;
                    const u32 ke = static_cast<u32>(static_cast<u64>(k % d) * (e % d) % d);
                    const u32 em = e % d;
                    u32 ia = 0, ib = 0;
                    for (u32 i = 1; i <= half; ++i) {
                        ia += ke;
                        if (ia >= d) ia -= d;
                        ib += em;
                        if (ib >= d) ib -= d;
                        const u32 num = lf.sub(lf.expo[static_cast<u64>(s) * ia],
                                               lf.expo[static_cast<u64>(s) * (d - ia)]);
                        const u32 den = lf.sub(lf.expo[static_cast<u64>(s) * ib],
                                               lf.expo[static_cast<u64>(s) * (d - ib)]);
                        u32 diff = lf.lg[num] + L - lf.lg[den];
                        if (diff >= L) diff -= L;
                        const u64 vlog = static_cast<u64>(diff) * stL % L;
                        if (vlog % s != 0) {
                            throw std::logic_error("sweep: psi value escaped mu_d (internal error)");
                        }
                        sc.psi[i - 1] = static_cast<u32>(vlog / s);
                        star = star && sc.psi[i - 1] == 0;
                    }
                    sink.psi_observed(d, sc.psi);
                };
                auto ensure_psix = [&] {
                    if (psix_ready) return;
                    psix_ready = true;
                    sc.psix.assign(d, 0);
                    for (u32 i = 1; i < d; ++i) {
                        const u32 half_i = 2 * i > d ? d - i : i;
                        sc.psix[i] = sc.psi[half_i - 1];
                    }
                };
                auto ensure_blog = [&] {
                    if (blog_ready) return;
                    blog_ready = true;
                    sc.blog.assign(d, 0);
                    for (u32 j = 1; j < d; ++j) {
                        const u32 wj = static_cast<u32>(
                            static_cast<u64>(s) * (static_cast<u64>(e % d) * j % d));
                        const u32 h = sc.H[wj % L];
                        if (h == kMark) {
                            throw std::logic_error("sweep: ghat vanished with gcd(d,k)=1 (internal error)");
                        }
                        sc.blog[j] = static_cast<u32>(static_cast<u64>(stL) * h % L);
                    }
                };

                // d = 7 epsilon families and d = 11 C-set match, given n
                auto closed_family_match = [&](u32 n) -> bool {
                    if (d == 7) {
                        const u32 want1[3] = {2 * n % 7, 4 * n % 7, n % 7};
                        bool m1 = true, m2 = true;
                        for (int i = 0; i < 3; ++i) {
                            m1 = m1 && sc.psi[i] == want1[i];
                            m2 = m2 && sc.psi[i] == (7 - want1[i]) % 7;
                        }
                        return m1 || m2;
                    }
                    // d == 11: psi * n^{-1} on squares {1,3,4,5,9} must be in C
                    const u32 inv = detail::kInv11[n % 11];
                    u32 key = 0;
                    for (u32 i : {0u, 2u, 3u, 4u, 1u}) key = key * 11 + sc.psi[i] * inv % 11;
                    const auto& keys = detail::c_set_keys_d11();
                    return std::binary_search(keys.begin(), keys.end(), key);
                };

                u32 n = static_cast<u32>((2 * ranges.r_lo + c_lin) % d);
                for (u64 r = ranges.r_lo; r <= r_hi; ++r) {
                    info.r = static_cast<u32>(r);
                    const u32 r_red = static_cast<u32>(r % L);
                    const bool cop_rs = cop[r] != 0;
                    info.star = info.chi = info.prop45 = false;
                    info.gate123 = false;
                    if (d == 1) {
                        info.cond3 = sg1;
                        info.verdict = cop_rs && km != 0;
                        info.path = kPathD1;
                    } else if (d == 2) {
                        info.cond3 = (r & 1) ? sg1 : sgm1;
                        info.verdict = cop_rs && k_odd && km != 0 && info.cond3;
                        info.path = kPathD2;
                    } else {
                        info.cond3 = d_odd ? sg1 : ((r & 1) ? sg1 : sgm1);
                        const bool gate = cop_rs && c1k && ok2d[n] && info.cond3;
                        info.gate123 = gate;
                        if (!gate) {
                            info.verdict = false;
                            info.path = kPathGeneral;
                        } else if (is_odd_prime) {
                            ensure_psi();
                            info.star = star;
                            if (d == 3) {
                                info.verdict = true;
                                info.path = kPathClosed;
                            } else if (d == 5) {
                                info.verdict = star;
                                info.path = kPathClosed;
                            } else if (d == 7 || d == 11) {
                                info.verdict = star || closed_family_match(n);
                                info.path = kPathClosed;
                            } else {
                                ensure_psix();
                                ++sc.epoch;
                                info.chi = detail::chi_fast(sc.psix.data(), sc.stamp.data(),
                                                            sc.epoch, d, n);
                                info.verdict = info.chi;
                                info.path = kPathChi;
                            }
                            if (opts.consistency) {
                                if (info.path == kPathClosed) {
                                    ensure_psix();
                                    ++sc.epoch;
                                    info.chi = detail::chi_fast(sc.psix.data(), sc.stamp.data(),
                                                                sc.epoch, d, n);
                                }
                                ensure_blog();
                                ++sc.epoch;
                                info.prop45 = detail::prop45_fast(
                                    sc.blog.data(), sc.stamp.data(), sc.epoch, L, d,
                                    static_cast<u32>(static_cast<u64>(r_red) * s % L), 0);
                            }
                        } else {
                            ensure_blog();
                            ++sc.epoch;
                            const u32 sign_log = d_odd ? 0 : ((r & 1) ? 0 : L / 2);
                            info.prop45 = detail::prop45_fast(
                                sc.blog.data(), sc.stamp.data(), sc.epoch, L, d,
                                static_cast<u32>(static_cast<u64>(r_red) * s % L), sign_log);
                            info.verdict = info.prop45;
                            info.path = kPathGeneral;
                        }
                    }
                    if (opts.with_oracle) {
                        ++sc.epoch;
                        info.oracle = detail::oracle_fast(sc.TH.data(), sc.stamp.data(), sc.epoch,
                                                          L, r_red, v_red);
                    }
                    sink.tuple(fc, info);
                    n += 2;
                    if (n >= d) n -= d;
                    if (n >= d) n -= d;  // d = 1 or 2 keep n < d
                }
            }
        }
    }
}

// Splits the k range into chunks and sweeps them on a pool of workers. One
// sink per chunk (copied from the prototype), merged in chunk order, so
// results are independent of the worker count.
template <typename Sink>
Sink parallel_field_sweep(const FieldGridCtx& fc, const SweepRanges& ranges,
                          const SweepOptions& opts, unsigned workers, Sink prototype = Sink{}) {
    const u64 k_lo = ranges.k_lo;
    const u64 k_hi = ranges.k_hi ? std::min<u64>(ranges.k_hi, fc.field.order()) : fc.field.order();
    Sink total = prototype;
    if (k_lo > k_hi) return total;
    if (workers == 0) workers = 1;
    const u64 k_count = k_hi - k_lo + 1;
    const u64 chunk = std::max<u64>(1, k_count / (static_cast<u64>(workers) * 8) + 1);
    const std::size_t nchunks = static_cast<std::size_t>((k_count + chunk - 1) / chunk);
    std::vector<Sink> results(nchunks, prototype);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        detail::Scratch sc;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= nchunks) break;
            const u64 lo = k_lo + static_cast<u64>(i) * chunk;
            const u64 hi = std::min<u64>(k_hi, lo + chunk - 1);
            sweep_k_range(fc, ranges, opts, lo, hi, sc, results[i]);
        }
    };
    if (workers == 1 || nchunks == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    for (Sink& part : results) total.merge(std::move(part));
    return total;
}

}  // namespace permpoly::grid

#endif  // PERMPOLY_GRID_HPP
