#ifndef QSTIRLING_REPORT_HPP
#define QSTIRLING_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace qstirling {

/*
 * Result of one verification sweep. A suite passes iff `failures` is empty;
 * `notes` carries observations that are reported but not counted as
 * failures (e.g. behavior of a formula reading that is documented rather
 * than asserted).
 */
struct VerificationReport {
    struct Failure {
        std::string location;
        std::string expected;
        std::string actual;
    };

    std::string suite;
    std::map<std::string, long long> range;
    long long checks_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    // Count a check; record a failure when expected != actual.
    void check_eq(const std::string& location, const std::string& expected,
                  const std::string& actual) {
        ++checks_run;
        if (expected != actual) failures.push_back({location, expected, actual});
    }
};

} // namespace qstirling

#endif // QSTIRLING_REPORT_HPP
