#ifndef PERMPOLY_SEARCH_HPP
#define PERMPOLY_SEARCH_HPP

// Grid search driver behind `permpoly search`: sweeps the requested
// (q, r, v, k, t) grid with the table engine, re-derives a full report for
// every emitted tuple, and serializes records in canonical (q, r, v, k, t)
// order. Output is byte-identical for any worker count: workers only split
// the k range, and records are buffered and sorted before emission.

#include <functional>

#include "permpoly/grid.hpp"
#include "permpoly/report.hpp"

namespace permpoly {

struct SearchJob {
    std::vector<u64> qs;                    // prime powers, ascending
    std::optional<FieldSpec> custom_field;  // overrides qs when set
    u64 r_lo = 1, r_hi = 0;                 // 0 = q-1
    u64 v_lo = 1, v_hi = 0;                 // 0 = q-1
    u64 k_lo = 1, k_hi = 0;                 // 0 = q
    u64 t_lo = 1, t_hi = 3;
    bool with_oracle = false;
    bool emit_all = false;
    unsigned workers = 1;
    enum class Format { kCsv, kJsonLines } format = Format::kCsv;
};

struct SearchSummary {
    u64 tuples = 0;
    u64 emitted = 0;
    u64 per_path[5] = {0, 0, 0, 0, 0};  // verdict-true counts per decision path
};

namespace detail {

struct HitSink {
    struct Hit {
        u32 r, v, k, t;
        bool verdict, oracle;
    };
    bool emit_all = false;
    u64 tuples = 0;
    std::vector<Hit> hits;
    void tuple(const grid::FieldGridCtx&, const grid::TupleInfo& ti) {
        ++tuples;
        if (emit_all || ti.verdict) {
            hits.push_back({ti.r, ti.v, ti.k, ti.t, ti.verdict, ti.oracle});
        }
    }
    void psi_observed(u32, const std::vector<u32>&) {}
    void merge(HitSink&& o) {
        tuples += o.tuples;
        hits.insert(hits.end(), o.hits.begin(), o.hits.end());
    }
};

}  // namespace detail

// Runs the job, passing each serialized record line to `emit` in canonical
// order. Returns the summary (printed by the CLI on stderr).
inline SearchSummary run_search(const SearchJob& job,
                                const std::function<void(const std::string&)>& emit) {
    SearchSummary summary;
    if (job.format == SearchJob::Format::kCsv) emit(csv_header());

    const std::size_t nfields = job.custom_field ? 1 : job.qs.size();
    for (std::size_t fi = 0; fi < nfields; ++fi) {
        grid::FieldGridCtx fc = job.custom_field
                                    ? grid::FieldGridCtx::build_from(Field::build(*job.custom_field))
                                    : grid::FieldGridCtx::build(job.qs[fi]);
        if (job.with_oracle && fc.field.order() > kOracleMaxOrder) {
            throw std::invalid_argument("search: --oracle requires q <= 10^6");
        }
        grid::SweepRanges ranges;
        ranges.r_lo = job.r_lo;
        ranges.r_hi = job.r_hi;
        ranges.v_lo = job.v_lo;
        ranges.v_hi = job.v_hi;
        ranges.k_lo = job.k_lo;
        ranges.k_hi = job.k_hi;
        ranges.t_lo = job.t_lo;
        ranges.t_hi = job.t_hi;
        grid::SweepOptions opts;
        opts.with_oracle = job.with_oracle;
        opts.consistency = false;

        // r-windows bound the buffered record count under --all
        const u64 L = fc.field.unit_group_order();
        const u64 r_hi = ranges.r_hi ? std::min<u64>(ranges.r_hi, L) : L;
        u64 window = L;
        if (job.emit_all) {
            const u64 v_hi = ranges.v_hi ? std::min<u64>(ranges.v_hi, L) : L;
            const u64 k_hi = ranges.k_hi ? std::min<u64>(ranges.k_hi, fc.field.order())
                                         : fc.field.order();
            const u64 per_r = std::max<u64>(1, (v_hi - ranges.v_lo + 1) *
                                                   (k_hi - ranges.k_lo + 1) *
                                                   (ranges.t_hi - ranges.t_lo + 1));
            window = std::max<u64>(1, 1000000 / per_r);
        }
        for (u64 r_base = ranges.r_lo; r_base <= r_hi; r_base += window) {
            grid::SweepRanges chunk = ranges;
            chunk.r_lo = r_base;
            chunk.r_hi = std::min<u64>(r_hi, r_base + window - 1);
            detail::HitSink proto;
            proto.emit_all = job.emit_all;
            detail::HitSink sink =
                grid::parallel_field_sweep<detail::HitSink>(fc, chunk, opts, job.workers, proto);
            summary.tuples += sink.tuples;
            std::sort(sink.hits.begin(), sink.hits.end(),
                      [](const detail::HitSink::Hit& a, const detail::HitSink::Hit& b) {
                          return std::tie(a.r, a.v, a.k, a.t) < std::tie(b.r, b.v, b.k, b.t);
                      });
            for (const auto& hit : sink.hits) {
                const FamilyParams params{hit.r, hit.v, hit.k, hit.t};
                const CriterionReport rep = decide(fc.field, params);
                if (rep.verdict != hit.verdict) {
                    throw std::logic_error("search: fast and generic verdicts disagree");
                }
                const DerivedParams derived = derive(fc.field, params);
                ResultRecord rec = make_record(fc.field, params, derived, rep);
                if (job.with_oracle) {
                    rec.oracle_verdict = hit.oracle;
                    if (hit.oracle != rep.verdict) {
                        throw std::logic_error(
                            "search: criterion disagrees with the brute-force oracle");
                    }
                }
                if (rep.verdict) ++summary.per_path[static_cast<int>(rep.path)];
                ++summary.emitted;
                emit(job.format == SearchJob::Format::kCsv ? to_csv(rec) : to_json(rec).dump());
            }
        }
    }
    return summary;
}

}  // namespace permpoly

#endif  // PERMPOLY_SEARCH_HPP
