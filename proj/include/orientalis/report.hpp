#ifndef ORIENTALIS_REPORT_HPP
#define ORIENTALIS_REPORT_HPP

#include <string>
#include <vector>

namespace orientalis {

/// Accumulating check report: passes are implicit, failures carry witnesses.
struct ValidationReport {
    std::vector<std::string> failures;
    std::size_t checks_run = 0;

    bool ok() const { return failures.empty(); }
    void note(bool passed, const std::string& witness) {
        ++checks_run;
        if (!passed) failures.push_back(witness);
    }
    void fail(const std::string& witness) { note(false, witness); }
    void merge(const ValidationReport& other) {
        checks_run += other.checks_run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
    std::string summary() const {
        if (ok()) return "ok (" + std::to_string(checks_run) + " checks)";
        std::string out = std::to_string(failures.size()) + " failure(s):";
        for (const auto& f : failures) {
            out += "\n  - ";
            out += f;
        }
        return out;
    }
};

} // namespace orientalis

#endif
