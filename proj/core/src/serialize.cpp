#include "eccmat/serialize.hpp"

#include <json.hpp>

namespace eccmat {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

} // namespace

std::string graph6_encode(const graph& g) {
    const int n = g.order();
    if (n > 62)
        raise(errc::unsupported_order,
              "short graph6 form covers n <= 62, got n = " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));

    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    int bit = 5;
    unsigned char cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<unsigned char>(1u << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

graph graph6_decode(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) raise(errc::malformed_graph6, "empty input");
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        raise(errc::unsupported_order, "extended-order graph6 not supported");
    if (head < 63 || head > 125)
        raise(errc::malformed_graph6, "bad order byte");
    const int n = head - 63;
    if (n < 1) raise(errc::malformed_graph6, "order 0");

    const long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(text.size()) - 1 != bytes_needed)
        raise(errc::malformed_graph6,
              "expected " + std::to_string(bytes_needed) + " data bytes, got " +
                  std::to_string(text.size() - 1));

    std::vector<std::pair<int, int>> edges;
    long long pos = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) raise(errc::malformed_graph6, "byte out of range");
        unsigned char bits = c - 63;
        for (int b = 5; b >= 0 && pos < bits_needed; --b, ++pos) {
            if ((bits >> b) & 1u) {
                // invert column-order index -> (u,v)
                long long k = pos;
                int v = 1;
                while (k >= v) k -= v++;
                edges.emplace_back(static_cast<int>(k), v);
            }
        }
    }
    return graph(n, edges);
}

std::string graph_to_json(const graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

graph graph_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") ||
        !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        raise(errc::malformed_json, R"(expected {"n": int, "edges": [[u,v],...]})");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            raise(errc::malformed_json, "edge entries must be [u,v] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return graph(j["n"].get<int>(), edges);
}

} // namespace eccmat
