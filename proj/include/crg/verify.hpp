#pragma once

// Structural verification battery: thirteen independent checks that re-derive
// group data along routes disjoint from the ones used to build it (orders
// against degree products, table rows against orthogonality, counts against
// each other) and report one pass/fail/not-applicable verdict each, with a
// witness string on anything other than a clean pass.

#include <cstdint>
#include <string>
#include <vector>

namespace crg {

enum class CheckStatus { pass, fail, not_applicable };

std::string status_name(CheckStatus s);
// Accepts exactly the strings produced by status_name; throws usage_error.
CheckStatus parse_status(const std::string& s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // empty on a clean pass
    long long millis = 0;

    bool operator==(const CheckResult& o) const {
        return id == o.id && status == o.status && witness == o.witness && millis == o.millis;
    }
};

struct VerifyOptions {
    unsigned max_l = 0;  // cap for the counting check; 0 means rank + 6
    bool inject_fault = false;
    std::uint64_t fault_seed = 0;
    std::size_t max_order = 1000000;
};

struct VerificationReport {
    std::string group;
    std::vector<CheckResult> checks;
    bool all_passed() const;

    bool operator==(const VerificationReport& o) const {
        return group == o.group && checks == o.checks;
    }
};

// Builds the group by catalog name and runs every check in fixed order.
// With inject_fault set, one table value (chosen by fault_seed) is bumped by
// one before the checks run; a working battery must then flag at least one
// failure.  Build problems (bad name, order cap) propagate as exceptions;
// check-level problems never do -- they become fail verdicts.
VerificationReport run_suite(const std::string& group_name,
                             const VerifyOptions& opts = VerifyOptions());

} // namespace crg
