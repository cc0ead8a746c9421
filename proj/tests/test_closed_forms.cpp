#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "eccmat/closed_forms.hpp"
#include "eccmat/ecc_matrix.hpp"
#include "eccmat/families.hpp"
#include "eccmat/spectra.hpp"
#include "support/oracles.hpp"

using namespace eccmat;
using testsupport::check_error;

TEST_CASE("f_a coefficients frozen from substitution") {
    auto q40 = f_a_quartic(4, 0);
    CHECK(q40.c2 == -17.0);
    CHECK(q40.c0 == 16.0);
    auto q50 = f_a_quartic(5, 0);
    CHECK(q50.c2 == -30.0);
    CHECK(q50.c0 == 32.0);
    auto q60 = f_a_quartic(6, 0);
    CHECK(q60.c2 == -43.0);
    CHECK(q60.c0 == 48.0);
    auto q61 = f_a_quartic(6, 1);
    CHECK(q61.c2 == -52.0);
    CHECK(q61.c0 == 64.0);

    check_error(errc::parameter_out_of_range, [] { f_a_quartic(3, 0); });
    check_error(errc::parameter_out_of_range, [] { f_a_quartic(6, -1); });
    check_error(errc::parameter_out_of_range, [] { f_a_quartic(6, 3); });
}

TEST_CASE("quartic roots") {
    auto roots = quartic_roots(f_a_quartic(4, 0));
    CHECK(std::abs(roots[0] - 4.0) < 1e-12);
    CHECK(std::abs(roots[1] - 1.0) < 1e-12);
    CHECK(std::abs(roots[2] + 1.0) < 1e-12);
    CHECK(std::abs(roots[3] + 4.0) < 1e-12);

    // largest root of (n=5, a=0): sqrt(15 + sqrt(772)/2)
    double expected = std::sqrt(15.0 + std::sqrt(772.0) / 2.0);
    CHECK(std::abs(quartic_largest_root(f_a_quartic(5, 0)) - expected) < 1e-12);
    CHECK(std::abs(expected - 5.3752) < 5e-5);

    CHECK(quartic_largest_root(f_a_quartic(6, 1)) > quartic_largest_root(f_a_quartic(6, 0)));
}

TEST_CASE("stable quadratic solving avoids cancellation") {
    auto [hi, lo] = solve_monic_quadratic(-1e8, 1.0);
    CHECK(hi == doctest::Approx(1e8).epsilon(1e-12));
    CHECK(hi * lo == doctest::Approx(1.0).epsilon(1e-12));
    auto [h2, l2] = solve_monic_quadratic(4.0, -9.0);
    CHECK(h2 == doctest::Approx(-2.0 + std::sqrt(13.0)).epsilon(1e-14));
    CHECK(l2 == doctest::Approx(-2.0 - std::sqrt(13.0)).epsilon(1e-14));
}

TEST_CASE("Gamma(d) closed form equals the square sum") {
    CHECK(gamma_d(3) == 4);   // 2^2
    CHECK(gamma_d(5) == 25);  // 3^2 + 4^2
    CHECK(gamma_d(7) == 77);  // 4^2 + 5^2 + 6^2
    CHECK(gamma_d(9) == 174);
    for (int d : {3, 5, 7, 9, 11, 13}) {
        long long sum = 0;
        for (long long k = (d + 1) / 2; k <= d - 1; ++k) sum += k * k;
        CHECK(gamma_d(d) == sum);
    }
    check_error(errc::even_diameter, [] { gamma_d(4); });
    check_error(errc::parameter_out_of_range, [] { gamma_d(1); });
}

TEST_CASE("rho^2 data frozen for the small brooms") {
    auto p4 = rho_squared_broom(4, 3, 0, 0);
    CHECK(p4.gamma == 4);
    CHECK(p4.x == 1);
    CHECK(p4.base == 17);
    CHECK(p4.delta == 225);
    CHECK(p4.rho_squared == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(p4.rho() == doctest::Approx(4.0).epsilon(1e-14));

    auto chair = rho_squared_broom(5, 3, 0, 1);
    CHECK(chair.base == 30);
    CHECK(chair.delta == 772);
    CHECK(std::abs(chair.rho() - 5.3752) < 5e-5);

    check_error(errc::even_diameter, [] { rho_squared_broom(6, 4, 0, 1); });
    check_error(errc::parameter_mismatch, [] { rho_squared_broom(6, 3, 0, 1); });
}

TEST_CASE("rho data invariants over the broom grid") {
    for (int d : {3, 5, 7, 9}) {
        for (int n = d + 1; n <= d + 8; ++n) {
            for (int a = 0; a <= (n - d - 1) / 2; ++a) {
                auto data = rho_squared_broom(n, d, a, n - d - 1 - a);
                CHECK(data.delta >= 0);
                CHECK(data.rho_squared >= 0.5 * static_cast<double>(data.base));
                CHECK(data.x == static_cast<long long>(a + 1) * (n - d - a));
            }
        }
    }
}

TEST_CASE("rho formula matches the Perron value on sample brooms") {
    for (auto [n, d, a, b] : {std::tuple{8, 5, 1, 1}, {10, 5, 2, 2}, {12, 7, 2, 2}}) {
        double rho = rho_squared_broom(n, d, a, b).rho();
        double perron = perron_pair(eccentricity_matrix(double_broom(n, d, a, b))).value;
        CHECK(std::abs(rho - perron) <= 1e-7 * rho);
    }
}

TEST_CASE("argmax candidates bracket the exhaustive broom maximum") {
    auto single = broom_argmax_candidates(6, 5); // n = d+1: both endpoints at x = 1
    CHECK(single.rho_at_end == doctest::Approx(single.rho_at_balanced).epsilon(1e-14));

    for (auto [n, d] : {std::pair{10, 5}, {12, 7}}) {
        auto cand = broom_argmax_candidates(n, d);
        double best = 0.0;
        for (int a = 0; a <= (n - d - 1) / 2; ++a) {
            auto em = eccentricity_matrix(double_broom(n, d, a, n - d - 1 - a));
            best = std::max(best, eigenvalues_symmetric(em).largest());
        }
        CHECK(std::abs(best - std::max(cand.rho_at_end, cand.rho_at_balanced)) < 1e-7);
    }

    check_error(errc::even_diameter, [] { broom_argmax_candidates(8, 4); });
    check_error(errc::parameter_out_of_range, [] { broom_argmax_candidates(8, 3); });
}

TEST_CASE("spider polynomial frozen factorizations") {
    auto f02 = h_eps_poly(0, 2);
    CHECK(f02.zero_multiplicity == 1);
    CHECK(f02.repeated_quadratic == std::array<double, 3>{1.0, 4.0, -9.0});
    CHECK(f02.repeated_multiplicity == 1);
    CHECK(f02.main_quadratic == std::array<double, 3>{1.0, -4.0, -17.0});
    CHECK(f02.degree() == 5);

    CHECK(h_eps_poly(0, 3).main_quadratic == std::array<double, 3>{1.0, -8.0, -48.0});
    CHECK(h_eps_poly(2, 2).main_quadratic == std::array<double, 3>{1.0, -4.0, -53.0});

    auto roots03 = h_eps_poly(0, 3).roots();
    CHECK(std::abs(roots03.front() - 12.0) < 1e-12); // main quadratic (x-12)(x+4)
    CHECK(roots03.size() == 7);

    check_error(errc::parameter_out_of_range, [] { h_eps_poly(0, 1); });
    check_error(errc::parameter_out_of_range, [] { h_eps_poly(-1, 2); });
}

TEST_CASE("spider polynomial roots equal the eps spectrum as multisets") {
    for (auto [p, q] : {std::pair{0, 2}, {0, 3}, {2, 2}, {3, 4}}) {
        auto roots = h_eps_poly(p, q).roots();
        auto spec = eigenvalues_symmetric(eccentricity_matrix(spider_h(p, q)));
        REQUIRE(roots.size() == spec.values.size());
        for (size_t i = 0; i < roots.size(); ++i)
            CHECK(std::abs(roots[i] - spec.values[i]) <= 1e-7);
        // rank check: eigenvalue zero with multiplicity at least p+1
        int near_zero = 0;
        for (double v : spec.values)
            if (std::abs(v) < 1e-7) ++near_zero;
        CHECK(near_zero >= p + 1);
    }
}

TEST_CASE("least spider eigenvalue and the equality condition") {
    const double bottom = -2.0 - std::sqrt(13.0);
    CHECK(h_least_eigenvalue(0, 2) == doctest::Approx(bottom).epsilon(1e-14));
    CHECK(h_least_eigenvalue(2, 2) == doctest::Approx(bottom).epsilon(1e-14));
    CHECK(h_least_eigenvalue(3, 2) ==
          doctest::Approx(2.0 - std::sqrt(75.0)).epsilon(1e-14));
    CHECK(h_least_eigenvalue(3, 2) < bottom);

    // exactly six pairs on the p,q <= 10 grid
    std::set<std::pair<int, int>> expected{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 2}};
    for (int p = 0; p <= 10; ++p)
        for (int q = 2; q <= 10; ++q) {
            bool cond = h_equality_condition(p, q);
            CHECK(cond == static_cast<bool>(expected.count({p, q})));
            CHECK(cond == (std::abs(h_least_eigenvalue(p, q) - bottom) <= 1e-9));
        }
    CHECK(!h_equality_condition(0, 5));
    CHECK(!h_equality_condition(3, 2));
}
