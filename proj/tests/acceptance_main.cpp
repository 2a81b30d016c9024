// Acceptance suite: runs every reproduction check at full scale and prints
// one pass/fail line per check. Exits nonzero if anything fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "permpoly/paper_checks.hpp"

int main(int argc, char** argv) {
    permpoly::checks::PaperCheckOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            opts.quick = true;
        } else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
            opts.workers = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--quick] [--workers N]\n", argv[0]);
            return 2;
        }
    }
    const auto results = permpoly::checks::run_paper_checks(opts);
    double total = 0.0;
    for (const auto& res : results) {
        std::printf("[%s] %-62s %9.2fs  %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                    res.seconds, res.detail.c_str());
        total += res.seconds;
    }
    std::printf("%s: %zu checks in %.1fs\n",
                permpoly::checks::all_passed(results) ? "ALL PASSED" : "FAILURES PRESENT",
                results.size(), total);
    return permpoly::checks::all_passed(results) ? 0 : 1;
}
