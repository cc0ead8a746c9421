#include "eccmat/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eccmat/errors.hpp"

namespace eccmat {

quartic f_a_quartic(int n, int a) {
    if (n < 4 || a < 0 || a > n - 4)
        raise(errc::parameter_out_of_range,
              "need n >= 4 and 0 <= a <= n-4; got n=" + std::to_string(n) +
                  " a=" + std::to_string(a));
    quartic q;
    q.c2 = 9.0 * a * a + 36.0 * a - 9.0 * n * a - 13.0 * n + 35.0;
    q.c0 = -16.0 * a * a - 64.0 * a + 16.0 * n * a + 16.0 * n - 48.0;
    return q;
}

std::pair<double, double> solve_monic_quadratic(double b, double c) {
    double disc = b * b - 4.0 * c;
    if (disc < 0.0 && disc > -1e-9 * std::max(1.0, b * b)) disc = 0.0;
    double s = std::sqrt(disc);
    // larger-magnitude root first, mate from the product identity
    double big = (b >= 0.0) ? (-b - s) / 2.0 : (-b + s) / 2.0;
    double other = (big != 0.0) ? c / big : -b - big;
    if (big < other) std::swap(big, other);
    return {big, other};
}

std::array<double, 4> quartic_roots(const quartic& q) {
    auto [y_hi, y_lo] = solve_monic_quadratic(q.c2, q.c0);
    // y = lambda^2; clamp roundoff-negative values
    if (y_hi < 0.0) y_hi = 0.0;
    if (y_lo < 0.0) y_lo = 0.0;
    double r_hi = std::sqrt(y_hi), r_lo = std::sqrt(y_lo);
    return {r_hi, r_lo, -r_lo, -r_hi};
}

double quartic_largest_root(const quartic& q) {
    return quartic_roots(q)[0];
}

long long gamma_d(int d) {
    if (d % 2 == 0) raise(errc::even_diameter, "Gamma is defined for odd d");
    if (d < 3) raise(errc::parameter_out_of_range, "Gamma needs d >= 3");
    return static_cast<long long>(d) * (d - 1) * (7LL * d - 5) / 24;
}

double broom_spectral_data::rho() const {
    return std::sqrt(rho_squared);
}

namespace {

broom_spectral_data broom_data_for_x(int n, int d, long long x) {
    broom_spectral_data out;
    out.gamma = gamma_d(d);
    out.x = x;
    out.base = out.gamma * (n - d + 1) + x * static_cast<long long>(d) * d;
    out.delta = out.base * out.base - 4 * x * out.gamma * out.gamma;
    out.rho_squared =
        0.5 * static_cast<double>(out.base) + 0.5 * std::sqrt(static_cast<double>(out.delta));
    return out;
}

} // namespace

broom_spectral_data rho_squared_broom(int n, int d, int a, int b) {
    if (d % 2 == 0) raise(errc::even_diameter, "rho formula needs odd d");
    if (d < 3) raise(errc::parameter_out_of_range, "rho formula needs d >= 3");
    if (a < 0 || b < 0 || a + b != n - d - 1)
        raise(errc::parameter_mismatch,
              "need a,b >= 0 with a+b = n-d-1; got n=" + std::to_string(n) +
                  " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                  " b=" + std::to_string(b));
    return broom_data_for_x(n, d, static_cast<long long>(a + 1) * (b + 1));
}

broom_radius_candidates broom_argmax_candidates(int n, int d) {
    if (d % 2 == 0) raise(errc::even_diameter, "candidates need odd d");
    if (d < 5 || n < d + 1)
        raise(errc::parameter_out_of_range,
              "need odd d >= 5 and n >= d+1; got n=" + std::to_string(n) +
                  " d=" + std::to_string(d));
    const int r = n - d - 1; // pendant budget a+b
    broom_radius_candidates c;
    c.rho_at_end = broom_data_for_x(n, d, n - d).rho();
    c.rho_at_balanced =
        broom_data_for_x(n, d, static_cast<long long>(r / 2 + 1) * ((r + 1) / 2 + 1)).rho();
    return c;
}

int factored_poly::degree() const {
    return zero_multiplicity + 2 * repeated_multiplicity + 2;
}

std::vector<double> factored_poly::roots() const {
    std::vector<double> out;
    out.reserve(degree());
    for (int i = 0; i < zero_multiplicity; ++i) out.push_back(0.0);
    auto [r_hi, r_lo] = solve_monic_quadratic(repeated_quadratic[1], repeated_quadratic[2]);
    for (int i = 0; i < repeated_multiplicity; ++i) {
        out.push_back(r_hi);
        out.push_back(r_lo);
    }
    auto [m_hi, m_lo] = solve_monic_quadratic(main_quadratic[1], main_quadratic[2]);
    out.push_back(m_hi);
    out.push_back(m_lo);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

factored_poly h_eps_poly(int p, int q) {
    if (p < 0 || q < 2)
        raise(errc::parameter_out_of_range,
              "need p >= 0 and q >= 2; got p=" + std::to_string(p) +
                  " q=" + std::to_string(q));
    factored_poly f;
    f.zero_multiplicity = p + 1;
    f.repeated_quadratic = {1.0, 4.0, -9.0};
    f.repeated_multiplicity = q - 1;
    f.main_quadratic = {1.0, 4.0 - 4.0 * q,
                        -(9.0 * p * q + 9.0 * q * q + 9.0 - 14.0 * q)};
    return f;
}

double h_least_eigenvalue(int p, int q) {
    auto f = h_eps_poly(p, q);
    auto [hi, lo] = solve_monic_quadratic(f.main_quadratic[1], f.main_quadratic[2]);
    (void)hi;
    return std::min(-2.0 - std::sqrt(13.0), lo);
}

bool h_equality_condition(int p, int q) {
    if (p < 0 || q < 2)
        raise(errc::parameter_out_of_range,
              "need p >= 0 and q >= 2; got p=" + std::to_string(p) +
                  " q=" + std::to_string(q));
    return 9.0 * p + 9.0 * q - 4.0 * std::sqrt(13.0) - 22.0 <= 0.0;
}

} // namespace eccmat
