#pragma once

// Serialization of count and verification reports: a JSON envelope with the
// tool version (counts travel as decimal strings so arbitrary precision
// survives the trip), a flat CSV rendering, and a human-oriented text one.
// The JSON writers and parsers are exact inverses of each other.

#include <string>
#include <vector>

#include "crg/rational.hpp"
#include "crg/verify.hpp"

namespace crg {

inline constexpr const char* kToolVersion = "1.0.0";

struct CountReport {
    std::string group;
    std::string method;  // one of the five route names, or "all"
    std::vector<Int> counts;  // counts[l] for l = 0..max_l

    bool operator==(const CountReport& o) const {
        return group == o.group && method == o.method && counts == o.counts;
    }
};

std::string to_json(const CountReport& r);
std::string to_csv(const CountReport& r);
std::string to_text(const CountReport& r);
// Throws usage_error on malformed input or an envelope for something else.
CountReport count_report_from_json(const std::string& text);

std::string to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_text(const VerificationReport& r);
VerificationReport verification_report_from_json(const std::string& text);

} // namespace crg
