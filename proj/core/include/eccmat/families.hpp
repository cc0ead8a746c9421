#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eccmat/graph.hpp"

namespace eccmat {

/// P_n indexed 0..n-1 along the path.
graph path(int n);

/// S_n with vertex 0 as center.
graph star(int n);

/// Double broom: spine v_0..v_d at indices 0..d, then a pendants u_1..u_a
/// attached to v_1 at indices d+1..d+a, then b pendants w_1..w_b attached
/// to v_{d-1} at indices d+a+1..n-1. Requires a+b = n-d-1 and d >= 2; the
/// result has diameter d.
graph double_broom(int n, int d, int a, int b);

/// Spider on p+2q+1 vertices: hub w at index 0, pendant neighbors
/// a_1..a_p at 1..p, stem vertices b_1..b_q at p+1..p+q, and tips
/// c_1..c_q at p+q+1..p+2q with c_i adjacent to b_i. Requires p >= 0 and
/// q >= 2; the result has diameter 4.
graph spider_h(int p, int q);

struct family_spec {
    enum class family { path, star, broom, spider };
    family kind;
    std::vector<int> params; // path/star: n; broom: n,d,a,b; spider: p,q
};

/// Text form "path:n", "star:n", "broom:n,d,a,b", "spider:p,q".
family_spec parse_family(std::string_view text);
std::string family_to_string(const family_spec& spec);
graph build_family(const family_spec& spec);

} // namespace eccmat
