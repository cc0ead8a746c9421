#include "eccmat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "eccmat/canonical.hpp"
#include "eccmat/closed_forms.hpp"
#include "eccmat/ecc_matrix.hpp"
#include "eccmat/families.hpp"
#include "eccmat/serialize.hpp"
#include "eccmat/spectra.hpp"
#include "eccmat/tree_enum.hpp"
#include "eccmat/version.hpp"

namespace eccmat {

namespace detail {
bool support_connected(const std::vector<int>& m, int n); // ecc_matrix.cpp
}

namespace {

constexpr double kGuardBand = 1e-6; // equality verdicts inside (eq_tol, guard) are skipped
constexpr size_t kMaxWitnesses = 8;

// mt19937_64 is fully specified by the standard; bounded draws below avoid
// std distributions, whose output differs across standard libraries.
struct rng64 {
    std::mt19937_64 eng;
    explicit rng64(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

graph random_tree(rng64& rng, int n) {
    if (n == 2) return graph(2, {{0, 1}});
    std::vector<int> code(n - 2);
    for (auto& c : code) c = rng.uniform_int(0, n - 1);
    return graph(n, prufer_decode(code));
}

int resolved_jobs(const verify_options& opts) {
    if (opts.jobs > 0) return opts.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Ordered parallel map: results are indexed like items, so the outcome is
// independent of the worker count.
template <typename R, typename T, typename Fn>
std::vector<R> map_ordered(const std::vector<T>& items, int jobs, Fn fn) {
    std::vector<R> results(items.size());
    jobs = static_cast<int>(std::min<size_t>(jobs, items.size()));
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            while (true) {
                size_t i = cursor.fetch_add(1);
                if (i >= items.size()) break;
                results[i] = fn(items[i]);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

struct stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

verification_report make_report(std::string check_id) {
    verification_report r;
    r.check_id = std::move(check_id);
    r.tool_version = version_string;
    return r;
}

void add_param(verification_report& r, const std::string& key, long long value) {
    r.parameters.emplace_back(key, std::to_string(value));
}

void add_param(verification_report& r, const std::string& key, std::uint64_t value) {
    r.parameters.emplace_back(key, std::to_string(value));
}

void add_param(verification_report& r, const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    r.parameters.emplace_back(key, buf);
}

void add_witness(verification_report& r, const graph& g, const std::vector<double>& eigenvalues,
                 std::string note) {
    if (r.witnesses.size() >= kMaxWitnesses) return;
    r.witnesses.push_back({graph6_encode(g), eigenvalues, std::move(note)});
}

bool is_star_tree(const graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

bool is_caterpillar(const graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) continue;
        int spine_neighbors = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) >= 2) ++spine_neighbors;
        if (spine_neighbors > 2) return false;
    }
    return true;
}

// needles and hay sorted descending; every needle must consume a distinct
// hay element within tol
bool sub_multiset(const std::vector<double>& needles, const std::vector<double>& hay,
                  double tol) {
    size_t j = 0;
    for (double x : needles) {
        while (j < hay.size() && hay[j] > x + tol) ++j;
        if (j >= hay.size() || std::abs(hay[j] - x) > tol) return false;
        ++j;
    }
    return true;
}

double frobenius_norm(const ecc_matrix& em) {
    double s = 0.0;
    for (int v : em.m) s += static_cast<double>(v) * v;
    return std::sqrt(s);
}

} // namespace

verification_report verify_basic_bounds(int n_max, int domination_samples,
                                        const verify_options& opts) {
    if (n_max < 3 || n_max > 14)
        raise(errc::parameter_out_of_range, "bounds sweep covers 3 <= n_max <= 14");
    if (domination_samples < 0)
        raise(errc::parameter_out_of_range, "domination_samples must be >= 0");
    stopwatch clock;
    auto report = make_report("bounds");
    add_param(report, "n_max", static_cast<long long>(n_max));
    add_param(report, "domination_samples", static_cast<long long>(domination_samples));
    add_param(report, "seed", opts.seed);
    add_param(report, "tol", opts.eq_tol);
    const double tol = opts.eq_tol;

    struct outcome {
        std::vector<double> values;
        std::string failure; // empty when all sub-checks pass
    };

    for (int n = 3; n <= n_max; ++n) {
        auto trees = free_trees(n).collect();
        auto outcomes = map_ordered<outcome>(trees, resolved_jobs(opts), [&](const graph& t) {
            outcome o;
            auto dp = distances(t);
            auto em = eccentricity_matrix(t);
            auto sp = eigenvalues_symmetric(em);
            o.values = sp.values;
            const double eps1 = sp.largest(), epsn = sp.least();
            const int d = dp.diameter;
            if (eps1 < d - tol) o.failure = "eps1 < diameter";
            else if (epsn > -d + tol) o.failure = "epsn > -diameter";
            else if (is_star_tree(t) ? std::abs(epsn + 2.0) > tol : epsn > -2.0 - tol)
                o.failure = "star equality condition violated";
            else if (!support_is_connected(em)) o.failure = "eps(T) reducible";
            else {
                double fro = frobenius_norm(em);
                double trace = 0.0, sumsq = 0.0;
                for (double v : sp.values) { trace += v; sumsq += v * v; }
                if (std::abs(trace) > 1e-8 * std::max(1.0, fro)) o.failure = "trace != 0";
                else if (std::abs(sumsq - fro * fro) > 1e-8 * fro * fro)
                    o.failure = "Frobenius identity violated";
            }
            return o;
        });
        for (size_t i = 0; i < trees.size(); ++i) {
            ++report.instances_checked;
            if (!outcomes[i].failure.empty()) {
                report.status = check_status::falsified;
                add_witness(report, trees[i], outcomes[i].values, outcomes[i].failure);
            }
        }
    }

    // entrywise domination (rho(N) <= rho(M) for irreducible 0 <= N <= M)
    for (int s = 0; s < domination_samples; ++s) {
        rng64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(s)));
        graph t = random_tree(rng, rng.uniform_int(2, 12));
        auto em = eccentricity_matrix(t);
        const int n = em.n;
        std::vector<int> reduced = em.m;
        int modifications = rng.uniform_int(1, 3);
        for (int k = 0; k < modifications; ++k) {
            std::vector<std::pair<int, int>> nonzero;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (reduced[static_cast<size_t>(u) * n + v] > 0) nonzero.emplace_back(u, v);
            if (nonzero.empty()) break;
            auto [u, v] = nonzero[rng.uniform_int(0, static_cast<int>(nonzero.size()) - 1)];
            int old = reduced[static_cast<size_t>(u) * n + v];
            int next = rng.uniform_int(0, old);
            reduced[static_cast<size_t>(u) * n + v] = next;
            reduced[static_cast<size_t>(v) * n + u] = next;
            if (!detail::support_connected(reduced, n)) {
                reduced[static_cast<size_t>(u) * n + v] = old;
                reduced[static_cast<size_t>(v) * n + u] = old;
            }
        }
        std::vector<double> nd(reduced.begin(), reduced.end());
        std::vector<double> md(em.m.begin(), em.m.end());
        double rho_n = jacobi_eigenvalues(nd, n).largest();
        double rho_m = jacobi_eigenvalues(md, n).largest();
        ++report.instances_checked;
        if (rho_n > rho_m + tol) {
            report.status = check_status::falsified;
            add_witness(report, t, {rho_n, rho_m}, "domination violated (rho_N, rho_M)");
        }
    }

    report.elapsed_seconds = clock.seconds();
    return report;
}

verification_report verify_diam3_max(int n, const verify_options& opts) {
    if (n < 4 || n > 14)
        raise(errc::parameter_out_of_range, "diameter-3 maximum covers 4 <= n <= 14");
    stopwatch clock;
    auto report = make_report("diam3-max");
    add_param(report, "n", static_cast<long long>(n));

    auto trees = trees_with_diameter(n, 3).collect();
    auto values = map_ordered<double>(trees, resolved_jobs(opts), [](const graph& t) {
        return eigenvalues_symmetric(eccentricity_matrix(t)).largest();
    });
    report.instances_checked = static_cast<long long>(trees.size());

    size_t best = 0;
    for (size_t i = 1; i < trees.size(); ++i)
        if (values[i] > values[best]) best = i;

    const std::string balanced_code =
        ahu_canonical(double_broom(n, 3, (n - 4) / 2, (n - 4) - (n - 4) / 2));
    if (ahu_canonical(trees[best]) != balanced_code) {
        report.status = check_status::falsified;
        add_witness(report, trees[best], {values[best]}, "argmax is not the balanced broom");
    } else if (trees.size() >= 2) {
        double runner_up = -1.0;
        size_t runner_idx = 0;
        for (size_t i = 0; i < trees.size(); ++i)
            if (i != best && values[i] > runner_up) { runner_up = values[i]; runner_idx = i; }
        if (values[best] - runner_up <= 1e-9) {
            report.status = check_status::falsified;
            add_witness(report, trees[runner_idx], {runner_up, values[best]},
                        "runner-up within 1e-9 of the maximum");
        }
    }
    if (report.status == check_status::verified)
        add_witness(report, trees[best], {values[best]}, "unique argmax");

    report.elapsed_seconds = clock.seconds();
    return report;
}

verification_report verify_odd_diam_max(int n, int d, const verify_options& opts) {
    if (d % 2 == 0) raise(errc::even_diameter, "the theorem needs odd d");
    if (d < 5 || d > 9 || n < d + 1 || n > 14)
        raise(errc::parameter_out_of_range,
              "odd-diameter maximum covers 5 <= d <= 9, d+1 <= n <= 14");
    stopwatch clock;
    auto report = make_report("odd-diam-max");
    add_param(report, "n", static_cast<long long>(n));
    add_param(report, "d", static_cast<long long>(d));

    auto trees = trees_with_diameter(n, d).collect();
    auto values = map_ordered<double>(trees, resolved_jobs(opts), [](const graph& t) {
        return eigenvalues_symmetric(eccentricity_matrix(t)).largest();
    });
    report.instances_checked = static_cast<long long>(trees.size());

    const int r = n - d - 1;
    const std::string end_code = ahu_canonical(double_broom(n, d, 0, r));
    const std::string balanced_code = ahu_canonical(double_broom(n, d, r / 2, r - r / 2));
    auto candidates = broom_argmax_candidates(n, d);
    const double formula_max = std::max(candidates.rho_at_end, candidates.rho_at_balanced);

    double vmax = *std::max_element(values.begin(), values.end());
    for (size_t i = 0; i < trees.size(); ++i) {
        if (values[i] < vmax - 1e-9) continue;
        std::string code = ahu_canonical(trees[i]);
        if (code != end_code && code != balanced_code) {
            report.status = check_status::falsified;
            add_witness(report, trees[i], {values[i]}, "argmax is not one of the two brooms");
        }
    }
    if (std::abs(vmax - formula_max) > 1e-7) {
        report.status = check_status::falsified;
        add_witness(report, trees[0], {vmax, formula_max},
                    "exhaustive maximum disagrees with the closed-form candidates");
    }

    report.elapsed_seconds = clock.seconds();
    return report;
}

verification_report verify_least_interval(int n_max, const verify_options& opts) {
    if (n_max < 3 || n_max > 14)
        raise(errc::parameter_out_of_range, "classification sweep covers 3 <= n_max <= 14");
    stopwatch clock;
    auto report = make_report("least-interval");
    add_param(report, "n_max", static_cast<long long>(n_max));
    add_param(report, "tol", opts.eq_tol);
    const double tol = opts.eq_tol;
    const double left = -2.0 - std::sqrt(13.0);
    const double right = -2.0 * std::sqrt(2.0);

    // expected members (order <= n_max): P4, the 5-vertex chair, and the
    // six spiders of the equality condition
    std::vector<graph> expected_trees;
    expected_trees.push_back(path(4));
    expected_trees.push_back(double_broom(5, 3, 0, 1));
    for (auto [p, q] : {std::pair{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 2}})
        expected_trees.push_back(spider_h(p, q));
    std::set<std::string> expected;
    for (const auto& t : expected_trees)
        if (t.order() <= n_max) expected.insert(ahu_canonical(t));

    std::set<std::string> found;
    std::vector<std::pair<graph, std::vector<double>>> found_members;

    for (int n = 3; n <= n_max; ++n) {
        auto trees = free_trees(n).collect();
        auto specs = map_ordered<std::vector<double>>(trees, resolved_jobs(opts),
                                                      [](const graph& t) {
            return eigenvalues_symmetric(eccentricity_matrix(t)).values;
        });
        for (size_t i = 0; i < trees.size(); ++i) {
            ++report.instances_checked;
            double least = specs[i].back();
            // closed left boundary admits values within tol; the open right
            // boundary treats values within tol of it as outside
            bool in_interval = least >= left - tol && least < right - tol;
            if (in_interval) {
                found.insert(ahu_canonical(trees[i]));
                found_members.emplace_back(trees[i], specs[i]);
            }
        }
    }

    if (found != expected) {
        report.status = check_status::falsified;
        for (const auto& [t, values] : found_members)
            if (!expected.count(ahu_canonical(t)))
                add_witness(report, t, values, "unexpected member of the interval");
        for (const auto& t : expected_trees)
            if (t.order() <= n_max && !found.count(ahu_canonical(t)))
                add_witness(report, t,
                            eigenvalues_symmetric(eccentricity_matrix(t)).values,
                            "expected member missing from the interval");
    }

    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

struct transform_outcome {
    long long checked = 0;
    long long ambiguous = 0;
    bool vacuous = true;
    std::vector<std::pair<std::string, std::vector<double>>> failures; // graph6 + data
};

transform_outcome check_tree_transforms(const graph& t, int d, double tol) {
    transform_outcome out;
    const int n = t.order();
    auto dp = distances(t);
    const double eps1 = eigenvalues_symmetric(eccentricity_matrix(t)).largest();
    const bool caterpillar = is_caterpillar(t);
    const auto base_edges = t.edges();
    std::set<std::string> seen;

    auto evaluate = [&](const std::vector<std::pair<int, int>>& edges, char lemma,
                        bool expect_equality) {
        graph transformed(n, edges);
        std::string key = lemma + ahu_canonical(transformed) + (expect_equality ? '=' : '<');
        if (!seen.insert(key).second) return;
        out.vacuous = false;
        double eps1_new =
            eigenvalues_symmetric(eccentricity_matrix(transformed)).largest();
        double diff = eps1_new - eps1;
        std::string failure;
        if (diff < -1e-9) {
            failure = "eps1 decreased under the transform";
        } else if (lemma == 'B') {
            if (diff <= 1e-9) failure = "pendant move did not strictly increase eps1";
        } else if (expect_equality) {
            if (diff > kGuardBand) failure = "expected equality, found strict increase";
            else if (diff > tol) { ++out.ambiguous; return; }
        } else {
            if (diff <= tol) failure = "expected strict increase, found equality";
            else if (diff < kGuardBand) { ++out.ambiguous; return; }
        }
        ++out.checked;
        if (!failure.empty())
            out.failures.emplace_back(
                failure + " (" + graph6_encode(transformed) + ")",
                std::vector<double>{eps1, eps1_new});
    };

    // all ordered diametrical paths; outcomes dedup by canonical code
    for (int s = 0; s < n; ++s) {
        for (int e = 0; e < n; ++e) {
            if (s == e || dp.at(s, e) != d) continue;
            std::vector<int> pathv{s};
            int cur = s;
            while (cur != e) {
                for (int w : t.neighbors(cur))
                    if (dp.at(w, e) == dp.at(cur, e) - 1) { cur = w; break; }
                pathv.push_back(cur);
            }
            std::vector<char> on_path(n, 0);
            for (int v : pathv) on_path[v] = 1;

            for (int i = 2; i <= (d - 1) / 2; ++i) {
                const int anchor = pathv[i];
                // branch hanging at v_i: DFS avoiding path vertices
                std::vector<int> depth(n, -1), parent(n, -1);
                depth[anchor] = 0;
                std::vector<int> stack{anchor};
                int branch_ecc = 0;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : t.neighbors(u)) {
                        if (on_path[w] || depth[w] >= 0) continue;
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        branch_ecc = std::max(branch_ecc, depth[w]);
                        stack.push_back(w);
                    }
                }
                auto moved_edges = [&](int from_a, int from_b, int to) {
                    auto edges = base_edges;
                    std::pair<int, int> gone{std::min(from_a, from_b), std::max(from_a, from_b)};
                    std::erase(edges, gone);
                    edges.emplace_back(std::min(from_a, to), std::max(from_a, to));
                    return edges;
                };
                if (branch_ecc >= 2) {
                    for (int u1 = 0; u1 < n; ++u1) {
                        if (depth[u1] != branch_ecc) continue;
                        evaluate(moved_edges(u1, parent[u1], pathv[1]), 'A', branch_ecc == i);
                    }
                }
                if (caterpillar && t.degree(anchor) >= 3) {
                    for (int u : t.neighbors(anchor)) {
                        if (on_path[u]) continue;
                        evaluate(moved_edges(u, anchor, pathv[1]), 'B', false);
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

verification_report verify_transforms(int n, int d, const verify_options& opts) {
    if (d % 2 == 0) raise(errc::even_diameter, "the transform lemmas need odd d");
    if (d < 5 || d > 7 || n < d + 1 || n > 12)
        raise(errc::parameter_out_of_range,
              "transform sweep covers 5 <= d <= 7, d+1 <= n <= 12");
    stopwatch clock;
    auto report = make_report("transforms");
    add_param(report, "n", static_cast<long long>(n));
    add_param(report, "d", static_cast<long long>(d));
    add_param(report, "tol", opts.eq_tol);

    auto trees = trees_with_diameter(n, d).collect();
    auto outcomes = map_ordered<transform_outcome>(
        trees, resolved_jobs(opts),
        [&](const graph& t) { return check_tree_transforms(t, d, opts.eq_tol); });

    for (size_t i = 0; i < trees.size(); ++i) {
        const auto& o = outcomes[i];
        report.instances_checked += o.checked;
        report.instances_skipped += o.ambiguous + (o.vacuous ? 1 : 0);
        for (const auto& [note, values] : o.failures) {
            report.status = check_status::falsified;
            if (report.witnesses.size() < kMaxWitnesses)
                report.witnesses.push_back({graph6_encode(trees[i]), values, note});
        }
    }
    if (report.status == check_status::verified && report.instances_checked == 0)
        report.status = check_status::skipped;

    report.elapsed_seconds = clock.seconds();
    return report;
}

verification_report verify_closed_forms(const verify_options& opts) {
    stopwatch clock;
    auto report = make_report("closed-forms");
    (void)opts;

    // quartic grid: the four roots are a sub-multiset of the broom spectrum
    for (int n = 4; n <= 20; ++n) {
        for (int a = 0; a <= (n - 4) / 2; ++a) {
            const int b = n - 4 - a;
            graph t = double_broom(n, 3, a, b);
            auto spec = eigenvalues_symmetric(eccentricity_matrix(t));
            auto roots = quartic_roots(f_a_quartic(n, a));
            ++report.instances_checked;
            if (!sub_multiset({roots.begin(), roots.end()}, spec.values, 1e-7) ||
                std::abs(roots[0] - spec.largest()) > 1e-7) {
                report.status = check_status::falsified;
                add_witness(report, t, spec.values, "quartic/eigensolver disagreement");
            }
        }
    }

    // spider grid: factored polynomial roots equal the spectrum as multisets
    for (int p = 0; p <= 6; ++p) {
        for (int q = 2; q <= 6; ++q) {
            graph t = spider_h(p, q);
            auto spec = eigenvalues_symmetric(eccentricity_matrix(t));
            auto roots = h_eps_poly(p, q).roots();
            ++report.instances_checked;
            bool ok = roots.size() == spec.values.size();
            for (size_t i = 0; ok && i < roots.size(); ++i)
                ok = std::abs(roots[i] - spec.values[i]) <= 1e-7;
            double least = h_least_eigenvalue(p, q);
            ok = ok && std::abs(least - spec.least()) <= 1e-8;
            if (!ok) {
                report.status = check_status::falsified;
                add_witness(report, t, spec.values, "factored-poly/eigensolver disagreement");
            }
        }
    }

    // rho grid: closed-form radius against power iteration and Jacobi
    for (int d : {3, 5, 7}) {
        for (int n = d + 1; n <= d + 8; ++n) {
            for (int a = 0; a <= (n - d - 1) / 2; ++a) {
                const int b = n - d - 1 - a;
                graph t = double_broom(n, d, a, b);
                auto em = eccentricity_matrix(t);
                double rho = rho_squared_broom(n, d, a, b).rho();
                double by_power = perron_pair(em).value;
                double by_jacobi = jacobi_eigenvalues(
                                       std::vector<double>(em.m.begin(), em.m.end()), em.n)
                                       .largest();
                ++report.instances_checked;
                if (std::abs(rho - by_power) > 1e-7 * rho ||
                    std::abs(rho - by_jacobi) > 1e-7 * rho) {
                    report.status = check_status::falsified;
                    add_witness(report, t, {rho, by_power, by_jacobi},
                                "rho formula/eigensolver disagreement");
                }
            }
        }
    }

    // equality condition grid: condition <=> least eigenvalue == -2-sqrt(13)
    const double bottom = -2.0 - std::sqrt(13.0);
    for (int p = 0; p <= 10; ++p) {
        for (int q = 2; q <= 10; ++q) {
            ++report.instances_checked;
            bool cond = h_equality_condition(p, q);
            bool at_bottom = std::abs(h_least_eigenvalue(p, q) - bottom) <= 1e-9;
            if (cond != at_bottom) {
                report.status = check_status::falsified;
                add_witness(report, spider_h(p, q), {h_least_eigenvalue(p, q)},
                            "equality condition mismatch");
            }
        }
    }

    report.elapsed_seconds = clock.seconds();
    return report;
}

verification_report verify_interlacing(int samples, const verify_options& opts) {
    if (samples < 1) raise(errc::parameter_out_of_range, "need samples >= 1");
    stopwatch clock;
    auto report = make_report("interlacing");
    add_param(report, "samples", static_cast<long long>(samples));
    add_param(report, "seed", opts.seed);
    add_param(report, "tol", opts.eq_tol);
    const double tol = opts.eq_tol;

    for (int i = 0; i < samples; ++i) {
        rng64 rng(mix_seed(opts.seed, 0x1a5eULL + static_cast<std::uint64_t>(i)));
        graph t = random_tree(rng, rng.uniform_int(2, 12));
        const int s = t.order();
        auto em = eccentricity_matrix(t);
        auto full = eigenvalues_symmetric(em);

        int size = rng.uniform_int(1, s);
        std::vector<int> indices(s);
        for (int v = 0; v < s; ++v) indices[v] = v;
        for (int k = 0; k < size; ++k)
            std::swap(indices[k], indices[rng.uniform_int(k, s - 1)]);
        indices.resize(size);
        std::sort(indices.begin(), indices.end());

        std::vector<double> sub(static_cast<size_t>(size) * size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                sub[static_cast<size_t>(r) * size + c] = em.at(indices[r], indices[c]);
        auto mu = jacobi_eigenvalues(sub, size);

        bool ok = true;
        for (int k = 0; k < size; ++k) {
            double lambda_k = full.values[k];
            double lambda_tail = full.values[s - size + k];
            if (!(lambda_k >= mu.values[k] - tol && mu.values[k] >= lambda_tail - tol)) {
                ok = false;
                break;
            }
        }
        ++report.instances_checked;
        if (!ok) {
            report.status = check_status::falsified;
            add_witness(report, t, mu.values, "interlacing violated");
        }
    }

    report.elapsed_seconds = clock.seconds();
    return report;
}

} // namespace eccmat
