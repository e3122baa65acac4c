#ifndef FROBKIT_CHECK_HPP
#define FROBKIT_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

namespace frobkit {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

/// One verified statement. `witness` holds a counterexample or certificate,
/// printed verbatim in reports.
struct Check {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string detail;
    std::string witness;
};

using Checks = std::vector<Check>;

inline Check pass(std::string name, std::string detail = {}, std::string witness = {}) {
    return {std::move(name), Verdict::Pass, std::move(detail), std::move(witness)};
}
inline Check fail(std::string name, std::string detail, std::string witness = {}) {
    return {std::move(name), Verdict::Fail, std::move(detail), std::move(witness)};
}
inline Check verdict_of(bool ok, std::string name, std::string detail = {}, std::string witness = {}) {
    return {std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail), std::move(witness)};
}
inline Check not_applicable(std::string name, std::string detail) {
    return {std::move(name), Verdict::NotApplicable, std::move(detail), {}};
}

inline bool all_pass(const Checks& cs) {
    for (const auto& c : cs)
        if (c.verdict != Verdict::Pass) return false;
    return true;
}

inline bool any_fail(const Checks& cs) {
    for (const auto& c : cs)
        if (c.verdict == Verdict::Fail) return true;
    return false;
}

inline void append(Checks& into, const Checks& more) { into.insert(into.end(), more.begin(), more.end()); }

/// Three-valued truth used when a condition is only semi-decidable.
enum class Tri { False, True, Inconclusive };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "TRUE";
        case Tri::False: return "FALSE";
        case Tri::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Inconclusive;
}

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace frobkit

#endif  // FROBKIT_CHECK_HPP
