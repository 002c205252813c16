#pragma once

#include <string>
#include <vector>

#include "hessencomb/csf.hpp"

namespace hessencomb {

// One verification suite run. Entries keep both sides of every identity so
// a failure is a diff, not just a flag. Wall time is measured for the
// human-readable rendering; the JSON form omits it so identical
// invocations stay byte-identical.
struct VerifyReport {
    std::string suite;
    int n_max = 0;
    std::vector<IdentityCheck> entries;
    double wall_seconds = 0.0;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
    int n_max = -1; // -1: per-suite default
    int jobs = 1;
};

// Known suites: counts, chow, sinks, brosnan-chow, lemmas, gkm, all.
VerifyReport run_suite(const std::string& name, const SuiteOptions& options = {});

std::string render_report_table(const VerifyReport& report, bool verbose);
std::string render_report_json(const VerifyReport& report);

} // namespace hessencomb
