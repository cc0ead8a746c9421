#include "eccmat/families.hpp"

#include <charconv>

namespace eccmat {

graph path(int n) {
    if (n < 1) raise(errc::order_too_small, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return graph(n, edges);
}

graph star(int n) {
    if (n < 2) raise(errc::order_too_small, "star needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return graph(n, edges);
}

graph double_broom(int n, int d, int a, int b) {
    if (d < 2) raise(errc::order_too_small, "double broom needs spine d >= 2");
    if (a < 0 || b < 0 || a + b != n - d - 1)
        raise(errc::parameter_mismatch,
              "need a,b >= 0 with a+b = n-d-1; got n=" + std::to_string(n) +
                  " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                  " b=" + std::to_string(b));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < a; ++i) edges.emplace_back(1, d + 1 + i);
    for (int i = 0; i < b; ++i) edges.emplace_back(d - 1, d + 1 + a + i);
    return graph(n, edges);
}

graph spider_h(int p, int q) {
    if (p < 0 || q < 2)
        raise(errc::parameter_out_of_range,
              "spider needs p >= 0 and q >= 2; got p=" + std::to_string(p) +
                  " q=" + std::to_string(q));
    const int n = p + 2 * q + 1;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i <= p; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= q; ++i) {
        edges.emplace_back(0, p + i);
        edges.emplace_back(p + i, p + q + i);
    }
    return graph(n, edges);
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            raise(errc::malformed_family, "bad integer '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

family_spec parse_family(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        raise(errc::malformed_family, "expected kind:params in '" + std::string(text) + "'");
    std::string_view kind = text.substr(0, colon);
    auto params = parse_int_list(text.substr(colon + 1));

    family_spec spec;
    size_t want = 0;
    if (kind == "path") {
        spec.kind = family_spec::family::path;
        want = 1;
    } else if (kind == "star") {
        spec.kind = family_spec::family::star;
        want = 1;
    } else if (kind == "broom") {
        spec.kind = family_spec::family::broom;
        want = 4;
    } else if (kind == "spider") {
        spec.kind = family_spec::family::spider;
        want = 2;
    } else {
        raise(errc::malformed_family, "unknown family '" + std::string(kind) + "'");
    }
    if (params.size() != want)
        raise(errc::malformed_family,
              std::string(kind) + " takes " + std::to_string(want) + " parameters");
    spec.params = std::move(params);
    return spec;
}

std::string family_to_string(const family_spec& spec) {
    std::string out;
    switch (spec.kind) {
        case family_spec::family::path: out = "path:"; break;
        case family_spec::family::star: out = "star:"; break;
        case family_spec::family::broom: out = "broom:"; break;
        case family_spec::family::spider: out = "spider:"; break;
    }
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

graph build_family(const family_spec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case family_spec::family::path: return path(p[0]);
        case family_spec::family::star: return star(p[0]);
        case family_spec::family::broom: return double_broom(p[0], p[1], p[2], p[3]);
        case family_spec::family::spider: return spider_h(p[0], p[1]);
    }
    raise(errc::malformed_family, "unreachable family kind");
}

} // namespace eccmat
