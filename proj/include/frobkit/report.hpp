#ifndef FROBKIT_REPORT_HPP
#define FROBKIT_REPORT_HPP

#include "frobkit/check.hpp"
#include "frobkit/json_io.hpp"

namespace frobkit {

struct SuiteResult {
    std::string suite;
    Checks checks;
    double millis = 0;
};

struct Report {
    json job;
    json info = json::object();
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool has_failure() const;
    [[nodiscard]] std::size_t count(Verdict v) const;
};

/// Everything except timing; deterministic for a fixed job.
json report_body(const Report& r);

/// Body plus a trailing "timing_ms" object when `timing` is set.
json report_json(const Report& r, bool timing);

std::string report_markdown(const Report& r, bool timing);

}  // namespace frobkit

#endif  // FROBKIT_REPORT_HPP
