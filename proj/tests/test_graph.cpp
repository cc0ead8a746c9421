#include <doctest.h>

#include "eccmat/families.hpp"
#include "eccmat/graph.hpp"
#include "eccmat/tree_enum.hpp"
#include "support/oracles.hpp"

using namespace eccmat;
using testsupport::check_error;

TEST_CASE("graph construction and normalization") {
    graph k2 = graph_from_edges(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(distances(k2).diameter == 1); // the tree with diameter 1

    graph single = graph_from_edges(1, {});
    CHECK(single.order() == 1);
    CHECK(distances(single).diameter == 0);

    graph p4 = graph_from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(p4.neighbors(1).size() == 2);
    CHECK(p4.neighbors(1)[0] == 0);
    CHECK(p4.neighbors(1)[1] == 2);
    CHECK(p4.has_edge(2, 1));
    CHECK(!p4.has_edge(0, 3));
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("graph construction rejects invalid input") {
    check_error(errc::self_loop, [] { graph_from_edges(2, {{0, 0}, {0, 1}}); });
    check_error(errc::duplicate_edge, [] { graph_from_edges(2, {{0, 1}, {0, 1}}); });
    check_error(errc::duplicate_edge, [] { graph_from_edges(2, {{0, 1}, {1, 0}}); });
    check_error(errc::index_out_of_range, [] { graph_from_edges(2, {{0, 2}}); });
    check_error(errc::index_out_of_range, [] { graph_from_edges(2, {{-1, 1}}); });
    check_error(errc::disconnected_input, [] { graph_from_edges(4, {{0, 1}, {2, 3}}); });
    check_error(errc::disconnected_input, [] { graph_from_edges(2, {}); });
    check_error(errc::order_too_small, [] { graph_from_edges(0, {}); });
}

TEST_CASE("distance profiles of named graphs") {
    auto p4 = distances(path(4));
    CHECK(p4.ecc == std::vector<int>{3, 2, 2, 3});
    CHECK(p4.diameter == 3);
    CHECK(p4.radius == 2);

    auto s5 = distances(star(5));
    CHECK(s5.ecc == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(s5.diameter == 2);

    CHECK(distances(spider_h(0, 2)).diameter == 4); // H_{0,2} is P_5
}

TEST_CASE("distances agree with Floyd-Warshall for trees and cycles") {
    auto check_graph = [](const graph& g) {
        auto dp = distances(g);
        auto fw = testsupport::floyd_warshall(g);
        REQUIRE(dp.dist == fw);
        for (int u = 0; u < g.order(); ++u) {
            int m = 0;
            for (int v = 0; v < g.order(); ++v) m = std::max(m, dp.at(u, v));
            CHECK(dp.ecc[u] == m);
        }
        CHECK(dp.radius <= dp.diameter);
        CHECK(dp.diameter <= 2 * dp.radius);
    };
    for (int n = 2; n <= 8; ++n) {
        auto stream = free_trees(n);
        while (auto g = stream.next()) check_graph(*g);
    }
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::pair<int, int>> cyc;
        for (int i = 0; i < n; ++i) cyc.emplace_back(i, (i + 1) % n);
        check_graph(graph(n, cyc));
    }
}

TEST_CASE("triangle inequality holds exhaustively for small trees") {
    for (int n = 2; n <= 10; ++n) {
        auto stream = free_trees(n);
        while (auto g = stream.next()) {
            auto dp = distances(*g);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w)
                        CHECK(dp.at(u, w) <= dp.at(u, v) + dp.at(v, w));
        }
    }
}

TEST_CASE("tree predicates") {
    CHECK(is_tree(path(4)));
    CHECK(is_tree(spider_h(2, 2)));
    graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(!is_tree(c4));
}

TEST_CASE("diametrical endpoints of a tree are leaves and |E| = n-1") {
    for (int n = 2; n <= 9; ++n) {
        auto stream = free_trees(n);
        while (auto g = stream.next()) {
            CHECK(g->edge_count() == n - 1);
            auto dp = distances(*g);
            bool found = false;
            for (int u = 0; u < n && !found; ++u)
                for (int v = 0; v < n && !found; ++v)
                    if (dp.at(u, v) == dp.diameter) {
                        CHECK(g->degree(u) == 1);
                        CHECK(g->degree(v) == 1);
                        found = true;
                    }
            CHECK(found);
        }
    }
}
