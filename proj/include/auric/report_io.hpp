#ifndef AURIC_REPORT_IO_HPP
#define AURIC_REPORT_IO_HPP

// Rendering of verification reports: versioned JSON (schema 1) and a
// compact text form.  Identical inputs render byte-identically apart from
// the elapsed_seconds field.

#include <string>
#include <vector>

#include "json.hpp"

#include "auric/identities.hpp"

namespace auric {

inline nlohmann::json report_to_json(const VerificationReport& r) {
    return nlohmann::json{
        {"schema", 1},
        {"identity", identity_name(r.identity)},
        {"point", r.point},
        {"digits_requested", r.digits_requested},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"matched", r.matched},
        {"terms_used", r.terms_used},
        {"elapsed_seconds", r.elapsed_seconds},
        {"pass", r.pass},
        {"reason", r.reason},
    };
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json items = nlohmann::json::array();
    for (const VerificationReport& r : reports) items.push_back(report_to_json(r));
    return nlohmann::json{{"schema", 1}, {"pass", all_pass(reports)}, {"reports", items}};
}

inline std::string report_to_text(const VerificationReport& r) {
    std::string out = r.pass ? "[PASS] " : "[FAIL] ";
    out += identity_name(r.identity);
    out += " x=" + r.point;
    out += " digits=" + std::to_string(r.digits_requested);
    out += " matched=" + std::to_string(r.matched);
    out += " terms=" + std::to_string(r.terms_used);
    out += "\n";
    if (!r.lhs.empty()) out += "  lhs = " + r.lhs + "\n";
    if (!r.rhs.empty()) out += "  rhs = " + r.rhs + "\n";
    if (!r.reason.empty()) out += "  reason: " + r.reason + "\n";
    return out;
}

inline std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    std::size_t passed = 0;
    for (const VerificationReport& r : reports) {
        out += report_to_text(r);
        if (r.pass) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(reports.size()) + " identities verified\n";
    return out;
}

} // namespace auric

#endif // AURIC_REPORT_IO_HPP
