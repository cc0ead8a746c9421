#include <doctest.h>

#include <set>

#include "eccmat/canonical.hpp"
#include "eccmat/families.hpp"
#include "eccmat/tree_enum.hpp"
#include "support/oracles.hpp"

using namespace eccmat;
using testsupport::check_error;

TEST_CASE("tree centers") {
    CHECK(tree_centers(path(4)) == std::vector<int>{1, 2});
    CHECK(tree_centers(path(5)) == std::vector<int>{2});
    CHECK(tree_centers(star(6)) == std::vector<int>{0});
    CHECK(tree_centers(path(1)) == std::vector<int>{0});
    CHECK(tree_centers(path(2)) == std::vector<int>{0, 1});
}

TEST_CASE("AHU codes separate and identify the expected trees") {
    graph p4_relabeled(4, {{3, 1}, {1, 0}, {0, 2}});
    CHECK(ahu_canonical(path(4)) == ahu_canonical(p4_relabeled));
    CHECK(ahu_canonical(path(4)) != ahu_canonical(star(4)));

    // distinguishable by degree sequence already
    graph b11 = double_broom(6, 3, 1, 1);
    graph b02 = double_broom(6, 3, 0, 2);
    CHECK(testsupport::degree_sequence_sorted(b11) != testsupport::degree_sequence_sorted(b02));
    CHECK(ahu_canonical(b11) != ahu_canonical(b02));
}

TEST_CASE("AHU is invariant under 100 random relabelings per tree") {
    testsupport::test_rng rng(7771);
    for (int n = 2; n <= 8; ++n) {
        auto stream = free_trees(n);
        while (auto g = stream.next()) {
            std::string code = ahu_canonical(*g);
            for (int k = 0; k < 100; ++k)
                CHECK(code == ahu_canonical(testsupport::relabel(*g, rng.permutation(n))));
        }
    }
}

TEST_CASE("AHU codes are pairwise distinct across isomorphism classes") {
    std::set<std::string> codes;
    int count = 0;
    auto stream = free_trees(7);
    while (auto g = stream.next()) {
        codes.insert(ahu_canonical(*g));
        ++count;
    }
    CHECK(count == 11);
    CHECK(static_cast<int>(codes.size()) == count);
}

TEST_CASE("AHU rejects non-trees") {
    graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    check_error(errc::not_a_tree, [&] { ahu_canonical(c4); });
}
