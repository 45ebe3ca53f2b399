#include <doctest.h>

#include <cmath>
#include <random>

#include <entropygraph/entropy.hpp>
#include <entropygraph/errors.hpp>

#include "test_util.hpp"

using namespace entropygraph;

namespace {

double direct_residual(const MaxEntropySolution& sol, const DegreeSequence& d) {
    double worst = 0;
    for (int i = 0; i < d.size(); ++i) {
        double s = 0;
        for (int j = 0; j < d.size(); ++j)
            if (j != i)
                s += sol.r[i] * sol.r[j] / (1 + sol.r[i] * sol.r[j]);
        worst = std::max(worst, std::abs(s - d[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("regular sequences give p = d/(n-1)") {
    auto sol = solve_max_entropy(DegreeSequence({2, 2, 2, 2}));
    CHECK(sol.converged);
    for (double r : sol.r)
        CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(sol.p(0, 3) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(sol.p(1, 1) == 0);

    for (int n : {5, 12, 40})
        for (int d : {1, 2, n / 2, n - 2}) {
            if ((n * d) % 2 != 0 || d < 1)
                continue;
            auto s = solve_max_entropy(DegreeSequence(std::vector<int>(n, d)));
            CHECK(s.p(0, n - 1) == doctest::Approx(double(d) / (n - 1)).epsilon(1e-9));
        }
}

TEST_CASE("boundary sequences are refused") {
    CHECK_THROWS_AS(solve_max_entropy(DegreeSequence({2, 2, 2})), BoundaryOptimum);
    CHECK_THROWS_AS(solve_max_entropy(DegreeSequence({1, 1})), BoundaryOptimum);
    CHECK_THROWS_AS(solve_max_entropy(DegreeSequence({1})), BoundaryOptimum);
    CHECK_THROWS_AS(solve_max_entropy(DegreeSequence({3, 3, 3, 3})), BoundaryOptimum);
}

TEST_CASE("budget exhaustion reports residuals") {
    SolverOptions opts;
    opts.max_iter = 1;
    try {
        solve_max_entropy(DegreeSequence({1, 1, 2, 3, 3, 4, 5, 5}), opts);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(e.residuals().size() == 8);
        CHECK(e.iterations() == 1);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("entropy of the regular model") {
    auto sol = solve_max_entropy(DegreeSequence({2, 2, 2, 2}));
    CHECK(entropy_h1(sol) == doctest::Approx(3.8190850097688767).epsilon(1e-10));
    CHECK(sol.h1 == doctest::Approx(entropy_h1(sol)).epsilon(1e-12));
    CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)));
    CHECK(binary_entropy(0) == 0);
    CHECK_THROWS_AS(binary_entropy(1.5), DomainError);
}

TEST_CASE("random strict sequences: residuals, monotone r, duality") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 30);
        const double p = 0.1 + 0.8 * (rng() % 1000) / 1000.0;
        const DegreeSequence d = testutil::random_strict_sequence(rng, n, p);
        const auto sol = solve_max_entropy(d);
        CHECK(direct_residual(sol, d) <= 1e-9);
        for (int i = 0; i + 1 < n; ++i)
            CHECK(sol.r[i] <= sol.r[i + 1]);
        auto rep = r_regularity_report(sol, d);
        CHECK(rep.all());

        auto dual = dual_objectives(d, sol.r);
        CHECK(dual.g.value == doctest::Approx(sol.h1).epsilon(1e-10));
        CHECK(dual.f.value == doctest::Approx(sol.h1).epsilon(1e-10));
        double gmax = 0;
        for (std::size_t i = 0; i < dual.f.gradient.size(); ++i)
            gmax = std::max(gmax, std::abs(dual.f.gradient[i]));
        CHECK(gmax <= 1e-9);

        const SimpleGraph witness = havel_hakimi(d);
        const double lp = log_prob_graph(sol, witness);
        CHECK(lp == doctest::Approx(-sol.h1).epsilon(1e-10));
        const double m = static_cast<double>(d.total());
        if (m <= n * (n - 1.0) / 2)
            CHECK(lp >= m * std::log(m / (n * (n - 1.0))));
    }
}

TEST_CASE("newton path agrees with the fixed point") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const DegreeSequence d = testutil::random_strict_sequence(rng, 12, 0.7);
        const auto a = solve_max_entropy(d);
        SolverOptions opts;
        opts.newton_only = true;
        const auto b = solve_max_entropy(d, opts);
        CHECK(b.used_newton);
        for (int i = 0; i < d.size(); ++i)
            CHECK(a.log_r[i] == doctest::Approx(b.log_r[i]).epsilon(1e-8));
    }
}

TEST_CASE("dual gradients at the solution and on the regular model") {
    DegreeSequence d({2, 2, 2, 2});
    auto sol = solve_max_entropy(d);
    auto dual = dual_objectives(d, sol.r);
    CHECK(dual.g.value == doctest::Approx(entropy_h1(sol)).epsilon(1e-8));
    for (double g : dual.g.gradient)
        CHECK(std::abs(g) <= 1e-9);
    const std::vector<double> bad{1, 0, 1, 1};
    CHECK_THROWS_AS(dual_g(d.degrees(), bad), DomainError);
}

TEST_CASE("dual gradients match central differences") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<int> deg(n);
        for (int& x : deg)
            x = 1 + static_cast<int>(rng() % n);
        std::vector<double> r(n), x(n);
        for (int i = 0; i < n; ++i) {
            r[i] = u(rng);
            x[i] = std::log(u(rng));
        }
        const auto g = dual_g(deg, r);
        const auto f = dual_f(deg, x);
        for (int i = 0; i < n; ++i) {
            auto probe = [&](auto fn, std::vector<double> at) {
                const double h = 1e-6 * (1 + std::abs(at[i]));
                auto up = at, dn = at;
                up[i] += h;
                dn[i] -= h;
                return (fn(deg, up).value - fn(deg, dn).value) / (2 * h);
            };
            const double fd_g = probe(dual_g, r);
            const double fd_f = probe(dual_f, x);
            CHECK(std::abs(fd_g - g.gradient[i]) <= 1e-5 * std::max(1.0, std::abs(g.gradient[i])));
            CHECK(std::abs(fd_f - f.gradient[i]) <= 1e-5 * std::max(1.0, std::abs(f.gradient[i])));
        }
    }
}

TEST_CASE("log-probability of specific graphs") {
    DegreeSequence d({2, 2, 2, 2});
    auto sol = solve_max_entropy(d);
    CHECK(log_prob_graph(sol, SimpleGraph(4)) == doctest::Approx(-6 * std::log(3.0)).epsilon(1e-12));
    SimpleGraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(log_prob_graph(sol, cycle) == doctest::Approx(-entropy_h1(sol)).epsilon(1e-12));
    CHECK_THROWS_AS(log_prob_graph(sol, SimpleGraph(5)), ValidationError);
}

TEST_CASE("bipartite solver") {
    auto half = solve_bipartite_max_entropy(DegreeSequence({1, 1}), DegreeSequence({1, 1}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(half.p(i, j) == 0.5);
    CHECK(half.h2 == doctest::Approx(4 * std::log(2.0)));

    CHECK_THROWS_AS(solve_bipartite_max_entropy(DegreeSequence({2}), DegreeSequence({1, 1})), NonConvergence);
    // Row 3 must fill both columns, so this optimum also lies on the boundary.
    CHECK_THROWS_AS(solve_bipartite_max_entropy(DegreeSequence({1, 1, 2}), DegreeSequence({2, 2})),
                    NonConvergence);
    CHECK_THROWS_AS(solve_bipartite_max_entropy(DegreeSequence({1, 2}), DegreeSequence({1, 1})), SumMismatch);

    CHECK(gale_ryser(DegreeSequence({1, 1, 2}), DegreeSequence({2, 2})));
    CHECK_FALSE(bipartite_interior(DegreeSequence({1, 1, 2}), DegreeSequence({2, 2})));
    CHECK_FALSE(gale_ryser(DegreeSequence({3}), DegreeSequence({1, 1})));
    CHECK(gale_ryser(DegreeSequence({3}), DegreeSequence({1, 1, 1})));
    CHECK_FALSE(bipartite_interior(DegreeSequence({3}), DegreeSequence({1, 1, 1})));
    CHECK_FALSE(gale_ryser(DegreeSequence({2, 2}), DegreeSequence({3, 1})));

    auto s = solve_bipartite_max_entropy(DegreeSequence({1, 1, 2}), DegreeSequence({1, 1, 1, 1}));
    CHECK(s.max_residual() <= 1e-10);
    for (int i = 0; i < 3; ++i) {
        double row = 0;
        for (int j = 0; j < 4; ++j)
            row += s.p(i, j);
        CHECK(row == doctest::Approx(i < 2 ? 1.0 : 2.0).epsilon(1e-10));
    }
}

TEST_CASE("bipartite marginals on random interior margins") {
    std::mt19937_64 rng(31);
    int solved = 0;
    while (solved < 20) {
        const int n1 = 2 + static_cast<int>(rng() % 10);
        const int n2 = 2 + static_cast<int>(rng() % 10);
        std::vector<int> rows(n1, 0), cols(n2, 0);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if (rng() % 2) {
                    ++rows[i];
                    ++cols[j];
                }
        if (*std::min_element(rows.begin(), rows.end()) < 1 || *std::min_element(cols.begin(), cols.end()) < 1)
            continue;
        DegreeSequence d1(rows), d2(cols);
        if (!bipartite_interior(d1, d2))
            continue;
        SolverOptions opts;
        opts.newton_only = solved % 2 == 1;
        auto s = solve_bipartite_max_entropy(d1, d2, opts);
        for (int i = 0; i < n1; ++i) {
            double row = 0;
            for (int j = 0; j < n2; ++j)
                row += s.p(i, j);
            CHECK(std::abs(row - d1[i]) <= 1e-9);
        }
        for (int j = 0; j < n2; ++j) {
            double col = 0;
            for (int i = 0; i < n1; ++i)
                col += s.p(i, j);
            CHECK(std::abs(col - d2[j]) <= 1e-9);
        }
        ++solved;
    }
}

TEST_CASE("q-model") {
    QModel q(DegreeSequence({1, 1, 1, 1}));
    CHECK(q.q(0, 1) == doctest::Approx(0.2));
    CHECK(q.q_degrees()[2] == doctest::Approx(0.6));
    CHECK(q.violations().empty());

    QModel two(DegreeSequence({1, 1}));
    CHECK(two.q(0, 1) == doctest::Approx(1.0 / 3));
    CHECK(two.q_degrees()[0] == doctest::Approx(1.0 / 3));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        std::vector<int> deg(n);
        for (int& x : deg)
            x = 1 + static_cast<int>(rng() % n);
        DegreeSequence d(deg);
        QModel m(d);
        CHECK(m.violations().empty());
        for (int i = 0; i < n; ++i)
            CHECK(m.q_degrees()[i] <= d[i]);
    }
}

TEST_CASE("regularity report and C quantities on the regular model") {
    DegreeSequence d({2, 2, 2, 2});
    auto sol = solve_max_entropy(d);
    auto rep = r_regularity_report(sol, d);
    CHECK(rep.all());
    CHECK(rep.r1_rn == doctest::Approx(2.0));
    CHECK(rep.max_ratio == doctest::Approx(1.0));

    CHECK(c1_of_d(d, sol, 0.75) == doctest::Approx(std::log(3.0) * 4 * std::pow(std::log(4.0), 40)).epsilon(1e-9));
    CHECK(c2_of_d(d, sol, 0.6) == doctest::Approx(2.1012293292093664).epsilon(1e-9));
    CHECK_THROWS_AS(c1_of_d(d, sol, 0.4), DomainError);
}

TEST_CASE("C2 stays below its type bound on type sequences") {
    for (int n : {64, 128}) {
        const int deg = static_cast<int>(std::ceil(std::pow(n, 0.6)));
        DegreeSequence d(std::vector<int>(n, deg + (n * deg) % 2));
        auto sol = solve_max_entropy(d);
        const auto type = classify_type(d, 0.2, 0.09);
        REQUIRE(type.type_epsilon_nu());
        CHECK(c2_of_d(d, sol, 0.7) <= c2_type_bound(d, 0.7, 0.09));
    }
}

TEST_CASE("Mckay estimate vs exhaustive counts") {
    CHECK(mckay_log_count(DegreeSequence({1, 1})) == doctest::Approx(0.0));
    CHECK(testutil::brute_force_count({1, 1}) == 1);
    CHECK(std::exp(mckay_log_count(DegreeSequence({1, 1, 1, 1}))) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(testutil::brute_force_count({1, 1, 1, 1}) == 3);
    const double tri = std::exp(mckay_log_count(DegreeSequence({2, 2, 2})));
    CHECK(tri == doctest::Approx(0.886).epsilon(1e-3));
    CHECK(testutil::brute_force_count({2, 2, 2}) == 1);
    CHECK(tri >= std::exp(-2.0 / 3));
    CHECK_THROWS_AS(mckay_log_count(DegreeSequence({1, 1, 1})), OddM);
}
