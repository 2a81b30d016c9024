// permpoly: decide whether f(x) = x^r (1 + x^v + ... + x^{(k-1)v})^t
// permutes F_q, search parameter grids, enumerate theta-hat atlases, and run
// the full verification suite.
//
// Exit codes: 0 success (check: f permutes), 1 check: f does not permute /
// verify-paper: some check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>

#include "permpoly/paper_checks.hpp"
#include "permpoly/search.hpp"

namespace {

using namespace permpoly;

// "a..b" or a single value
bool parse_range(const std::string& text, u64& lo, u64& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoull(text);
        } else {
            lo = std::stoull(text.substr(0, pos));
            hi = std::stoull(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

// comma-separated values and "a..b" spans; ranges keep prime powers only
bool parse_q_list(const std::string& text, std::vector<u64>& out) {
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(start, comma - start);
        if (piece.empty()) return false;
        u64 lo = 0, hi = 0;
        if (!parse_range(piece, lo, hi)) return false;
        if (lo == hi) {
            if (!nt::prime_power_decompose(lo)) return false;  // explicit q must be exact
            out.push_back(lo);
        } else {
            for (u64 q = lo; q <= hi; ++q) {
                if (nt::prime_power_decompose(q)) out.push_back(q);
            }
        }
        start = comma + 1;
        if (comma == text.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return !out.empty();
}

struct FieldArgs {
    std::string q_text;
    u64 p = 0;
    unsigned n = 1;
    std::string modulus_text;

    bool has_custom() const { return p != 0; }

    std::optional<FieldSpec> to_spec() const {
        if (!has_custom()) return std::nullopt;
        FieldSpec spec;
        spec.p = p;
        spec.n = n;
        if (!modulus_text.empty()) {
            std::size_t start = 0;
            while (start <= modulus_text.size()) {
                std::size_t comma = modulus_text.find(',', start);
                if (comma == std::string::npos) comma = modulus_text.size();
                spec.modulus.push_back(std::stoull(modulus_text.substr(start, comma - start)));
                start = comma + 1;
                if (comma == modulus_text.size()) break;
            }
        }
        return spec;
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--q", args.q_text,
                    "field order q (check: one prime power; search: list/ranges)");
    cmd->add_option("--p", args.p, "field characteristic (with --n)");
    cmd->add_option("--n", args.n, "extension degree (with --p)")->default_val(1);
    cmd->add_option("--modulus", args.modulus_text,
                    "comma-separated modulus coefficients, constant first (n > 1)");
}

int cmd_check(const FieldArgs& fargs, u64 r, u64 v, u64 k, u64 t, bool with_oracle, bool json) {
    FieldSpec spec;
    if (fargs.has_custom()) {
        spec = *fargs.to_spec();
    } else {
        u64 q = 0;
        try {
            q = std::stoull(fargs.q_text);
        } catch (const std::exception&) {
            std::cerr << "error: --q must be a prime power\n";
            return 2;
        }
        const auto pp = nt::prime_power_decompose(q);
        if (!pp) {
            std::cerr << "error: q = " << q << " is not a prime power\n";
            return 2;
        }
        spec = {pp->first, pp->second, {}};
    }
    const Field field = Field::build(spec);
    if (with_oracle && field.order() > kOracleMaxOrder) {
        std::cerr << "error: --oracle requires q <= 10^6\n";
        return 2;
    }
    const FamilyParams params{r, v, k, t};
    const CriterionReport rep = decide(field, params, {with_oracle});
    const DerivedParams derived = derive(field, params);
    const ResultRecord rec = make_record(field, params, derived, rep);
    if (json) {
        std::cout << to_json(rec).dump() << "\n";
    } else {
        std::cout << "f(x) = x^" << r << " * h_" << k << "(x^" << v << ")^" << t << " over F_"
                  << field.order() << " (p=" << field.p() << ", n=" << field.degree() << ")\n";
        std::cout << "  s=" << derived.s << " d=" << derived.d << " e=" << derived.e
                  << " n_lin=" << derived.n_lin << "\n";
        std::cout << "  path: " << to_string(rep.path) << "\n";
        for (const ConditionResult& c : rep.conditions) {
            std::cout << "  condition " << c.id << ": " << (c.ok ? "holds" : "fails") << "\n";
        }
        if (rep.star_holds) std::cout << "  (*): " << (*rep.star_holds ? "holds" : "fails") << "\n";
        if (rep.epsilon) std::cout << "  epsilon family: " << *rep.epsilon << "\n";
        if (rep.matched_psi_family) std::cout << "  psi family: " << *rep.matched_psi_family << "\n";
        if (rep.oracle_verdict) {
            std::cout << "  oracle: " << (*rep.oracle_verdict ? "permutation" : "not a permutation")
                      << " (agrees)\n";
        }
        std::cout << "VERDICT: f " << (rep.verdict ? "permutes" : "does not permute") << " F_"
                  << field.order() << "\n";
    }
    return rep.verdict ? 0 : 1;
}

int cmd_search(const FieldArgs& fargs, const std::string& r_text, const std::string& v_text,
               const std::string& k_text, const std::string& t_text, bool with_oracle,
               bool emit_all, bool json, bool csv, unsigned workers) {
    SearchJob job;
    if (fargs.has_custom()) {
        job.custom_field = fargs.to_spec();
    } else if (!parse_q_list(fargs.q_text, job.qs)) {
        std::cerr << "error: --q must list prime powers (values or ranges a..b)\n";
        return 2;
    }
    if (!r_text.empty() && !parse_range(r_text, job.r_lo, job.r_hi)) {
        std::cerr << "error: bad --r range\n";
        return 2;
    }
    if (!v_text.empty() && !parse_range(v_text, job.v_lo, job.v_hi)) {
        std::cerr << "error: bad --v range\n";
        return 2;
    }
    if (!k_text.empty() && !parse_range(k_text, job.k_lo, job.k_hi)) {
        std::cerr << "error: bad --k range\n";
        return 2;
    }
    if (!t_text.empty() && !parse_range(t_text, job.t_lo, job.t_hi)) {
        std::cerr << "error: bad --t range\n";
        return 2;
    }
    job.with_oracle = with_oracle;
    job.emit_all = emit_all;
    job.workers = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    if (json && csv) {
        std::cerr << "error: pick one of --json / --csv\n";
        return 2;
    }
    job.format = json ? SearchJob::Format::kJsonLines : SearchJob::Format::kCsv;
    const SearchSummary summary =
        run_search(job, [](const std::string& line) { std::cout << line << "\n"; });
    std::cerr << "searched " << summary.tuples << " tuples, emitted " << summary.emitted
              << " records; permutation polynomials per path:"
              << " EASY_D1=" << summary.per_path[0] << " EASY_D2=" << summary.per_path[1]
              << " PRIME_D_CLOSED_FORM=" << summary.per_path[2]
              << " PRIME_D_CHI=" << summary.per_path[3]
              << " GENERAL_PROP=" << summary.per_path[4] << "\n";
    return 0;
}

int cmd_theta_atlas(u64 d, bool json, unsigned workers) {
    const ThetaAtlas atlas = enumerate_valid_theta(d, workers);
    if (json) {
        std::cout << atlas_to_json(atlas).dump() << "\n";
        return 0;
    }
    std::cout << "d=" << d << ": " << atlas.valid.size() << " valid maps, "
              << atlas.classes.size() << " equivalence classes\n";
    for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
        const auto& cls = atlas.classes[i];
        std::cout << "  class " << i + 1 << ": representative "
                  << theta_poly_string(cls.representative) << " (orbit size " << cls.orbit.size()
                  << ")\n";
    }
    return 0;
}

int cmd_verify_paper(bool quick, unsigned workers, bool corrupt_c_set) {
    checks::PaperCheckOptions opts;
    opts.quick = quick;
    opts.workers = workers;
    opts.corrupt_c_set = corrupt_c_set;
    const auto results = checks::run_paper_checks(opts);
    double total = 0.0;
    for (const auto& res : results) {
        std::printf("[%s] %-62s %9.2fs  %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                    res.seconds, res.detail.c_str());
        total += res.seconds;
    }
    std::printf("%s: %zu checks in %.1fs\n",
                checks::all_passed(results) ? "ALL PASSED" : "FAILURES PRESENT", results.size(),
                total);
    return checks::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation criteria for x^r (1 + x^v + ... + x^{(k-1)v})^t over F_q"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "decide one parameter tuple");
    FieldArgs check_field;
    add_field_options(check, check_field);
    u64 r = 0, v = 0, k = 0, t = 0;
    check->add_option("--r", r, "exponent r")->required();
    check->add_option("--v", v, "exponent step v")->required();
    check->add_option("--k", k, "term count k")->required();
    check->add_option("--t", t, "outer exponent t")->required();
    bool check_oracle = false, check_json = false;
    check->add_flag("--oracle", check_oracle, "cross-check with the brute-force oracle")
        ->envname("PERMPOLY_ORACLE");
    check->add_flag("--json", check_json, "machine-readable output")->envname("PERMPOLY_JSON");

    auto* search = app.add_subcommand("search", "sweep a parameter grid");
    FieldArgs search_field;
    add_field_options(search, search_field);
    std::string r_text, v_text, k_text, t_text;
    search->add_option("--r", r_text, "r range (value or a..b; default 1..q-1)");
    search->add_option("--v", v_text, "v range (default 1..q-1)");
    search->add_option("--k", k_text, "k range (default 1..q)");
    search->add_option("--t", t_text, "t range (default 1..3)");
    bool search_oracle = false, search_all = false, search_json = false, search_csv = false;
    unsigned workers = 0;
    search->add_flag("--oracle", search_oracle, "verify every record with the oracle")
        ->envname("PERMPOLY_ORACLE");
    search->add_flag("--all", search_all, "emit every tuple, not just permutation polynomials");
    search->add_flag("--json", search_json, "JSON lines output")->envname("PERMPOLY_JSON");
    search->add_flag("--csv", search_csv, "CSV output (default)")->envname("PERMPOLY_CSV");
    search->add_option("--workers", workers, "worker thread count")->envname("PERMPOLY_WORKERS");

    auto* atlas = app.add_subcommand("theta-atlas", "enumerate valid theta-hat maps for odd prime d");
    u64 atlas_d = 0;
    bool atlas_json = false;
    unsigned atlas_workers = 0;
    atlas->add_option("--d", atlas_d, "odd prime d <= 31")->required();
    atlas->add_flag("--json", atlas_json, "JSON output")->envname("PERMPOLY_JSON");
    atlas->add_option("--workers", atlas_workers, "worker thread count")->envname("PERMPOLY_WORKERS");

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    bool quick = false, corrupt = false;
    unsigned verify_workers = 0;
    verify->add_flag("--quick", quick, "cap the oracle grid at q <= 128");
    verify->add_option("--workers", verify_workers, "worker thread count")
        ->envname("PERMPOLY_WORKERS");
    verify->add_flag("--corrupt-c-set", corrupt)->group("");  // dev-only mutation hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            if (!check_field.has_custom() && check_field.q_text.empty()) {
                std::cerr << "error: provide --q or --p/--n\n";
                return 2;
            }
            return cmd_check(check_field, r, v, k, t, check_oracle, check_json);
        }
        if (search->parsed()) {
            if (!search_field.has_custom() && search_field.q_text.empty()) {
                std::cerr << "error: provide --q or --p/--n\n";
                return 2;
            }
            return cmd_search(search_field, r_text, v_text, k_text, t_text, search_oracle,
                              search_all, search_json, search_csv, workers);
        }
        if (atlas->parsed()) {
            return cmd_theta_atlas(
                atlas_d, atlas_json,
                atlas_workers ? atlas_workers : std::max(1u, std::thread::hardware_concurrency()));
        }
        if (verify->parsed()) return cmd_verify_paper(quick, verify_workers, corrupt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
