#include <doctest.h>

#include <json.hpp>

#include "eccmat/ecc_matrix.hpp"
#include "eccmat/spectra.hpp"
#include "eccmat/verify.hpp"
#include "support/oracles.hpp"

using namespace eccmat;
using testsupport::check_error;

TEST_CASE("basic bounds sweep verifies and counts 199 trees for n_max 10") {
    auto r = verify_basic_bounds(10, 100);
    CHECK(r.status == check_status::verified);
    // free-tree counts for 3 <= n <= 10 sum to 199, plus the domination samples
    CHECK(r.instances_checked == 199 + 100);
    CHECK(r.check_id == "bounds");
}

TEST_CASE("diameter-3 maximum") {
    for (int n : {4, 6, 7, 10}) CHECK(verify_diam3_max(n).status == check_status::verified);
    check_error(errc::parameter_out_of_range, [] { verify_diam3_max(3); });
}

TEST_CASE("odd-diameter maximum") {
    CHECK(verify_odd_diam_max(8, 5).status == check_status::verified);
    CHECK(verify_odd_diam_max(6, 5).status == check_status::verified); // only P6
    CHECK(verify_odd_diam_max(12, 7).status == check_status::verified);
    check_error(errc::even_diameter, [] { verify_odd_diam_max(8, 4); });
    check_error(errc::parameter_out_of_range, [] { verify_odd_diam_max(8, 3); });
}

TEST_CASE("least-eigenvalue interval classification at n_max 9") {
    auto r = verify_least_interval(9);
    CHECK(r.status == check_status::verified);
    CHECK(r.instances_checked == 1 + 2 + 3 + 6 + 11 + 23 + 47); // orders 3..9
}

TEST_CASE("transform lemmas") {
    auto r = verify_transforms(8, 5);
    CHECK(r.status == check_status::verified);
    CHECK(r.instances_checked > 0);

    // d = 7 sweeps include branches below spine position, i.e. the strict case
    auto r7 = verify_transforms(10, 7);
    CHECK(r7.status == check_status::verified);
    CHECK(r7.instances_checked > 0);

    // T_{6,5} = {P6}: no admissible transform, the whole check is vacuous
    auto vac = verify_transforms(6, 5);
    CHECK(vac.status == check_status::skipped);
    CHECK(vac.instances_checked == 0);
    CHECK(vac.instances_skipped >= 1);

    check_error(errc::even_diameter, [] { verify_transforms(8, 4); });
    check_error(errc::parameter_out_of_range, [] { verify_transforms(13, 5); });
}

TEST_CASE("pendant-path transfer: direct equality and strict cases") {
    auto eps1 = [](const graph& g) {
        return eigenvalues_symmetric(eccentricity_matrix(g)).largest();
    };
    // spine v0..v5 with a depth-2 branch at v2 (vertices 6,7): the branch
    // depth equals the spine position, so the transfer preserves eps1
    graph t_eq(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}});
    graph t_eq_moved(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {1, 7}});
    CHECK(distances(t_eq).diameter == 5);
    CHECK(std::abs(eps1(t_eq) - eps1(t_eq_moved)) <= 1e-8);

    // spine v0..v7 with a depth-2 branch at v3 (depth 2 < position 3):
    // the transfer strictly increases eps1
    graph t_lt(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 8}, {8, 9}});
    graph t_lt_moved(10,
                     {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 8}, {1, 9}});
    CHECK(distances(t_lt).diameter == 7);
    CHECK(eps1(t_lt_moved) - eps1(t_lt) > 1e-6);
}

TEST_CASE("caterpillar pendant move strictly increases eps1") {
    auto eps1 = [](const graph& g) {
        return eigenvalues_symmetric(eccentricity_matrix(g)).largest();
    };
    // 9-vertex caterpillar, diametrical path v0..v5, three pendants at v2;
    // moving one pendant from v2 to v1 must strictly increase eps1
    graph t(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {2, 7}, {2, 8}});
    graph moved(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {2, 7}, {1, 8}});
    CHECK(distances(t).diameter == 5);
    CHECK(distances(moved).diameter == 5);
    CHECK(eps1(moved) - eps1(t) > 1e-9);
}

TEST_CASE("closed-form grids") {
    auto r = verify_closed_forms();
    CHECK(r.status == check_status::verified);
    // 81 quartic + 35 spider + 60 rho + 99 condition grid points
    CHECK(r.instances_checked == 81 + 35 + 60 + 99);
}

TEST_CASE("interlacing samples") {
    auto r = verify_interlacing(50);
    CHECK(r.status == check_status::verified);
    CHECK(r.instances_checked == 50);
    check_error(errc::parameter_out_of_range, [] { verify_interlacing(0); });
}

TEST_CASE("reports are deterministic across runs and worker counts") {
    verify_options one;
    one.jobs = 1;
    verify_options two;
    two.jobs = 2;
    CHECK(verify_least_interval(8, one).to_json_line() ==
          verify_least_interval(8, two).to_json_line());
    CHECK(verify_interlacing(25, one).to_json_line() ==
          verify_interlacing(25, one).to_json_line());
    CHECK(verify_basic_bounds(6, 20, one).to_json_line() ==
          verify_basic_bounds(6, 20, two).to_json_line());
}

TEST_CASE("report JSON shape") {
    auto r = verify_interlacing(5);
    auto j = nlohmann::json::parse(r.to_json_line());
    CHECK(j["check_id"] == "interlacing");
    CHECK(j["status"] == "verified");
    CHECK(j["instances_checked"] == 5);
    CHECK(j["parameters"].contains("seed"));
    CHECK(j["witnesses"].is_array());
    CHECK(j["tool_version"].is_string());
    // a falsified report must carry its witnesses
    verification_report f;
    f.check_id = "demo";
    f.status = check_status::falsified;
    f.witnesses.push_back({"Ch", {4.0, -4.0}, "demo witness"});
    auto jf = nlohmann::json::parse(f.to_json_line());
    CHECK(jf["status"] == "falsified");
    CHECK(jf["witnesses"].size() == 1);
    CHECK(jf["witnesses"][0]["graph6"] == "Ch");
}
