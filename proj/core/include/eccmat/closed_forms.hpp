#pragma once

#include <array>
#include <utility>
#include <vector>

namespace eccmat {

/// Even quartic lambda^4 + c2*lambda^2 + c0 (the leading coefficient is 1).
struct quartic {
    double c2 = 0.0;
    double c0 = 0.0;
};

/// Reduced characteristic polynomial of the diameter-3 double broom
/// D_{n,3}^{a,b} with b = n-4-a:
///   c2 = 9a^2 + 36a - 9na - 13n + 35
///   c0 = -16a^2 - 64a + 16na + 16n - 48
quartic f_a_quartic(int n, int a);

/// Roots of a monic quadratic y^2 + b*y + c, larger-magnitude root first
/// via the product identity (avoids cancellation). Returns (hi, lo) by value.
std::pair<double, double> solve_monic_quadratic(double b, double c);

/// The four real roots of an even quartic, descending.
std::array<double, 4> quartic_roots(const quartic& q);
double quartic_largest_root(const quartic& q);

/// Gamma(d) = d(d-1)(7d-5)/24 = ((d+1)/2)^2 + ... + (d-1)^2 for odd d >= 3.
long long gamma_d(int d);

struct broom_spectral_data {
    long long gamma = 0;       // Gamma(d)
    long long x = 0;           // (a+1)(b+1)
    long long base = 0;        // Gamma(d)*(n-d+1) + x*d^2
    long long delta = 0;       // base^2 - 4*x*Gamma(d)^2
    double rho_squared = 0.0;  // (base + sqrt(delta)) / 2

    double rho() const;
};

/// Squared eps-spectral radius of D_{n,d}^{a,b} for odd d (d = 3 admitted
/// as a cross-check extension of the d >= 5 statement).
broom_spectral_data rho_squared_broom(int n, int d, int a, int b);

struct broom_radius_candidates {
    double rho_at_end = 0.0;      // x = n-d, i.e. D_{n,d}^{0,n-d-1}
    double rho_at_balanced = 0.0; // x = (floor((n-d-1)/2)+1)*(ceil((n-d-1)/2)+1)
};

/// The two endpoint evaluations of the convex radius function in
/// x = (a+1)(b+1); the maximum eps-spectral radius over all D_{n,d}^{a,b}
/// equals the larger of the two. Requires odd d >= 5 and n >= d+1.
broom_radius_candidates broom_argmax_candidates(int n, int d);

/// Factored eps-polynomial of the spider H_{p,q}:
///   lambda^{p+1} (lambda^2+4lambda-9)^{q-1}
///   [lambda^2 + (4-4q) lambda - (9pq+9q^2+9-14q)]
struct factored_poly {
    int zero_multiplicity = 0;                      // p+1
    std::array<double, 3> repeated_quadratic{};     // {1, 4, -9}
    int repeated_multiplicity = 0;                  // q-1
    std::array<double, 3> main_quadratic{};         // {1, 4-4q, -(9pq+9q^2+9-14q)}

    int degree() const;
    std::vector<double> roots() const; // full multiset, descending
};

factored_poly h_eps_poly(int p, int q);

/// Least eps-eigenvalue of H_{p,q}:
/// min(-2-sqrt(13), smaller root of the main quadratic).
double h_least_eigenvalue(int p, int q);

/// True iff 9p + 9q - 4*sqrt(13) - 22 <= 0, equivalent to the least
/// eigenvalue being exactly -2-sqrt(13).
bool h_equality_condition(int p, int q);

} // namespace eccmat
