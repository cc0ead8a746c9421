#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eccmat {

enum class check_status { verified, falsified, skipped };

std::string_view to_string(check_status s);

/// A tree (or matrix instance) that substantiates a verdict; falsified
/// reports must carry at least one witness reproducible from the graph6
/// string alone.
struct witness {
    std::string graph6;
    std::vector<double> eigenvalues;
    std::string note;
};

/// Machine-readable outcome of one theorem check. Serialized as one JSON
/// line; identical inputs produce byte-identical lines, so elapsed_seconds
/// stays out of the serialized form (it is reported in CLI summaries).
struct verification_report {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    check_status status = check_status::verified;
    std::vector<witness> witnesses;
    long long instances_checked = 0;
    long long instances_skipped = 0;
    double elapsed_seconds = 0.0;
    std::string tool_version;

    std::string to_json_line() const;
};

} // namespace eccmat
