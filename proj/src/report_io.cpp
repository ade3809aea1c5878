#include "crg/report_io.hpp"

#include <json.hpp>

#include "crg/errors.hpp"

namespace crg {

namespace {

using nlohmann::json;

json envelope(const std::string& group, const std::string& command, json payload) {
    return json{{"group", group},
                {"command", command},
                {"version", kToolVersion},
                {"payload", std::move(payload)}};
}

json parse_envelope(const std::string& text, const std::string& command) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw usage_error(std::string("malformed report: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group") || !j.contains("command") ||
        !j.contains("version") || !j.contains("payload"))
        throw usage_error("malformed report: missing envelope fields");
    if (j["command"] != command)
        throw usage_error("report envelope carries command '" +
                          j["command"].get<std::string>() + "', expected '" + command + "'");
    if (j["version"] != kToolVersion)
        throw usage_error("report envelope carries version '" +
                          j["version"].get<std::string>() + "', this tool reads " + kToolVersion);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_json(const CountReport& r) {
    json counts = json::array();
    for (const Int& c : r.counts) counts.push_back(c.get_str());
    return envelope(r.group, "count",
                    json{{"method", r.method},
                         {"max_l", r.counts.empty() ? 0 : r.counts.size() - 1},
                         {"counts", std::move(counts)}})
        .dump(2);
}

CountReport count_report_from_json(const std::string& text) {
    const json j = parse_envelope(text, "count");
    CountReport r;
    try {
        r.group = j["group"].get<std::string>();
        const json& p = j["payload"];
        r.method = p["method"].get<std::string>();
        for (const json& c : p["counts"]) r.counts.emplace_back(c.get<std::string>());
        if (p["max_l"].get<std::size_t>() + 1 != r.counts.size() &&
            !(r.counts.empty() && p["max_l"] == 0))
            throw usage_error("count report length disagrees with its max_l field");
    } catch (const json::exception& e) {
        throw usage_error(std::string("malformed count report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("malformed count report: ") + e.what());
    }
    return r;
}

std::string to_csv(const CountReport& r) {
    std::string out = "group,method,length,count\n";
    for (std::size_t l = 0; l < r.counts.size(); ++l)
        out += csv_field(r.group) + "," + r.method + "," + std::to_string(l) + "," +
               r.counts[l].get_str() + "\n";
    return out;
}

std::string to_text(const CountReport& r) {
    std::string out = "reflection factorization counts for " + r.group + " (method " + r.method +
                      ")\n";
    for (std::size_t l = 0; l < r.counts.size(); ++l)
        out += "  length " + std::to_string(l) + ": " + r.counts[l].get_str() + "\n";
    return out;
}

std::string to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(json{{"id", c.id},
                              {"status", status_name(c.status)},
                              {"witness", c.witness},
                              {"millis", c.millis}});
    return envelope(r.group, "verify",
                    json{{"all_passed", r.all_passed()}, {"checks", std::move(checks)}})
        .dump(2);
}

VerificationReport verification_report_from_json(const std::string& text) {
    const json j = parse_envelope(text, "verify");
    VerificationReport r;
    try {
        r.group = j["group"].get<std::string>();
        for (const json& c : j["payload"]["checks"]) {
            CheckResult check;
            check.id = c["id"].get<std::string>();
            check.status = parse_status(c["status"].get<std::string>());
            check.witness = c["witness"].get<std::string>();
            check.millis = c["millis"].get<long long>();
            r.checks.push_back(std::move(check));
        }
        if (j["payload"]["all_passed"].get<bool>() != r.all_passed())
            throw usage_error("verification report summary flag contradicts its checks");
    } catch (const json::exception& e) {
        throw usage_error(std::string("malformed verification report: ") + e.what());
    }
    return r;
}

std::string to_csv(const VerificationReport& r) {
    std::string out = "group,check,status,millis,witness\n";
    for (const CheckResult& c : r.checks)
        out += csv_field(r.group) + "," + c.id + "," + status_name(c.status) + "," +
               std::to_string(c.millis) + "," + csv_field(c.witness) + "\n";
    return out;
}

std::string to_text(const VerificationReport& r) {
    std::string out = "verification of " + r.group + "\n";
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const CheckResult& c : r.checks) {
        const char* tag = c.status == CheckStatus::pass   ? "pass"
                          : c.status == CheckStatus::fail ? "FAIL"
                                                          : " n/a";
        out += "  [" + std::string(tag) + "] " + c.id + " (" + std::to_string(c.millis) + " ms)";
        if (!c.witness.empty()) out += ": " + c.witness;
        out += "\n";
        (c.status == CheckStatus::pass   ? passed
         : c.status == CheckStatus::fail ? failed
                                         : skipped)++;
    }
    out += "result: " + std::to_string(passed) + " passed, " + std::to_string(failed) +
           " failed, " + std::to_string(skipped) + " not applicable\n";
    return out;
}

} // namespace crg
