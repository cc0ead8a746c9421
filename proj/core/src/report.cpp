#include "eccmat/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace eccmat {

std::string_view to_string(check_status s) {
    switch (s) {
        case check_status::verified: return "verified";
        case check_status::falsified: return "falsified";
        case check_status::skipped: return "skipped";
    }
    return "unknown";
}

namespace detail {

// All numeric output is pinned to 12 significant digits.
std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round12(double v) {
    return std::stod(format_number(v));
}

} // namespace detail

std::string verification_report::to_json_line() const {
    nlohmann::json j;
    j["check_id"] = check_id;
    auto params = nlohmann::json::object();
    for (const auto& [key, value] : parameters) params[key] = value;
    j["parameters"] = std::move(params);
    j["status"] = std::string(to_string(status));
    j["instances_checked"] = instances_checked;
    j["instances_skipped"] = instances_skipped;
    auto ws = nlohmann::json::array();
    for (const auto& w : witnesses) {
        nlohmann::json jw;
        jw["graph6"] = w.graph6;
        auto ev = nlohmann::json::array();
        for (double v : w.eigenvalues) ev.push_back(detail::round12(v));
        jw["eigenvalues"] = std::move(ev);
        jw["note"] = w.note;
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    j["tool_version"] = tool_version;
    return j.dump();
}

} // namespace eccmat
