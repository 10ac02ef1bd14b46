#pragma once

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace rvf {

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

/// One verification result: a named check at one prime, with re-checkable
/// witnesses in `details`. prime 0 marks prime-independent checks.
struct VerificationReport {
    std::string check;
    std::uint64_t prime = 0;
    Status status = Status::Fail;
    nlohmann::json details = nlohmann::json::object();
    double ms = 0.0;
};

inline std::string to_json_line(const VerificationReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["prime"] = r.prime;
    j["status"] = to_string(r.status);
    j["details"] = r.details;
    j["ms"] = r.ms;
    return j.dump();
}

inline std::string to_text_line(const VerificationReport& r) {
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.check;
    if (r.prime != 0) os << " p=" << r.prime;
    os << " (" << r.ms << " ms)";
    if (!r.details.empty()) os << " " << r.details.dump();
    return os.str();
}

}  // namespace rvf
