#include "frobkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace frobkit {

bool Report::has_failure() const { return count(Verdict::Fail) > 0; }

std::size_t Report::count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& s : suites)
        for (const auto& c : s.checks) n += c.verdict == v;
    return n;
}

json report_body(const Report& r) {
    json checks = json::array();
    for (const auto& s : r.suites)
        for (const auto& c : s.checks)
            checks.push_back(json{{"name", s.suite + "/" + c.name},
                                  {"verdict", to_string(c.verdict)},
                                  {"detail", c.detail},
                                  {"witness", c.witness}});
    json summary;
    for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inconclusive, Verdict::NotApplicable})
        summary[to_string(v)] = r.count(v);
    return json{{"job", r.job}, {"info", r.info}, {"checks", checks}, {"summary", summary}};
}

json report_json(const Report& r, bool timing) {
    json out = report_body(r);
    if (timing) {
        json t = json::object();
        for (const auto& s : r.suites) t[s.suite] = std::round(s.millis * 1000.0) / 1000.0;
        out["timing_ms"] = t;
    }
    return out;
}

std::string report_markdown(const Report& r, bool timing) {
    auto esc = [](std::string s) {
        std::string out;
        for (char ch : s) {
            if (ch == '|') out += "\\|";
            else if (ch == '\n') out += ' ';
            else out += ch;
        }
        return out;
    };
    std::ostringstream os;
    os << "# frobkit report\n\n";
    for (const auto& [k, v] : r.job.items()) os << "- " << k << ": `" << (v.is_string() ? v.get<std::string>() : v.dump()) << "`\n";
    if (!r.info.empty()) {
        os << "\n## Invariants\n\n";
        for (const auto& [k, v] : r.info.items()) os << "- " << k << ": `" << v.dump() << "`\n";
    }
    os << "\n## Checks\n\n| check | verdict | detail | witness |\n|---|---|---|---|\n";
    for (const auto& s : r.suites)
        for (const auto& c : s.checks)
            os << "| " << esc(s.suite + "/" + c.name) << " | " << to_string(c.verdict) << " | " << esc(c.detail) << " | "
               << esc(c.witness) << " |\n";
    os << "\n## Summary\n\n";
    for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inconclusive, Verdict::NotApplicable})
        os << "- " << to_string(v) << ": " << r.count(v) << "\n";
    if (timing) {
        os << "\n## Timing\n\n";
        for (const auto& s : r.suites) os << "- " << s.suite << ": " << std::fixed << std::setprecision(1) << s.millis << " ms\n";
    }
    return os.str();
}

}  // namespace frobkit
