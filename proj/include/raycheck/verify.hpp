#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raycheck {

enum class CheckStatus { Pass, Fail, MismatchFlagged };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string expected;
    std::string computed;
    double seconds = 0.0;   // reported on the progress stream, never serialized
};

struct VerifyOptions {
    std::string fixtures_dir = "data";
    int threads = 8;
    /// When set, the flagged label swap between the two printed opposite-pair
    /// tables counts as a failure instead of a flagged pass.
    bool strict_labels = false;
};

/// Run the complete verification pipeline.  Progress lines (with timings) go
/// to `progress` when non-null; the returned results are deterministic for
/// fixed options, independent of thread count.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          std::ostream* progress = nullptr);

bool all_passed(const std::vector<CheckResult>& results, bool strict_labels);

const char* status_name(CheckStatus s);

/// Stable serializations: no timing, byte-identical across runs.
std::string report_csv(const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace raycheck
