#include <doctest.h>

#include <cmath>

#include <entropygraph/errors.hpp>
#include <entropygraph/stats.hpp>

using namespace entropygraph;

namespace {

OrderedTree path3(int a, int b, int c) {
    return OrderedTree(LabeledTree(3, {{0, 1}, {1, 2}}), {a, b, c});
}

DegreeSequence regular(int n, int d) {
    return DegreeSequence(std::vector<int>(static_cast<std::size_t>(n), d));
}

} // namespace

TEST_CASE("injections and falling factorials") {
    int count = 0;
    for_each_injection(5, 3, [&](std::span<const int> s) {
        CHECK(s[0] != s[1]);
        CHECK(s[1] != s[2]);
        CHECK(s[0] != s[2]);
        ++count;
    });
    CHECK(count == 60);
    CHECK(falling_factorial(5, 3) == 60);
    count = 0;
    for_each_injection(2, 3, [&](std::span<const int>) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("exact tree probabilities") {
    auto sol = solve_max_entropy(regular(4, 2));
    auto model = BernoulliModel::from_solution(sol);
    auto e = exact_tree_prob_tilde(model, path3(0, 1, 2));
    CHECK(e.exact);
    CHECK(e.standard_error == 0);
    CHECK(e.value == doctest::Approx(4.0 / 9).epsilon(1e-10));
    OrderedTree edge(LabeledTree(2, {{0, 1}}), {3, 1});
    CHECK(exact_tree_prob_tilde(model, edge).value == doctest::Approx(sol.p(1, 3)));
    CHECK(exact_tree_prob_tilde(BernoulliModel::uniform(4, 0), edge).value == 0);

    CHECK(exact_tree_prob_uniform(regular(4, 2), path3(0, 1, 2)).value == doctest::Approx(1.0 / 3));
    CHECK(exact_tree_prob_uniform(regular(3, 2), OrderedTree(LabeledTree(2, {{0, 1}}), {0, 2})).value == 1);
}

TEST_CASE("estimated tree probabilities") {
    auto all = enumerate_gd(regular(4, 2));
    GraphDraw uniform = [&](Rng& rng) { return all[uniform_index(rng, all.size())]; };
    OrderedTree edge(LabeledTree(2, {{0, 1}}), {0, 1});
    Rng rng(3);
    auto e = estimate_tree_prob(uniform, edge, 30000, rng);
    CHECK_FALSE(e.exact);
    CHECK(std::abs(e.value - 2.0 / 3) <= 3 * std::sqrt(2.0 / 9 / 30000));

    GraphDraw fixed = [&](Rng&) { return all[0]; };
    const double truth = all[0].has_edge(0, 1) ? 1.0 : 0.0;
    CHECK(estimate_tree_prob(fixed, edge, 100, rng).value == truth);
    CHECK_THROWS_AS(estimate_tree_prob(fixed, edge, 99, rng), ValidationError);

    // relabelling the tree and the placement together leaves the placed edges unchanged
    auto ot = path3(2, 0, 3);
    std::vector<int> pi{2, 0, 1};
    std::vector<int> moved(3);
    for (int u = 0; u < 3; ++u)
        moved[pi[u]] = ot.s[u];
    OrderedTree relabelled(ot.tree.relabel(pi), moved);
    CHECK(relabelled.image_edges() == ot.image_edges());
    Rng r1(5), r2(5);
    CHECK(estimate_tree_prob(uniform, ot, 1000, r1).value == estimate_tree_prob(uniform, relabelled, 1000, r2).value);
}

TEST_CASE("exact L identities") {
    auto d = regular(4, 2);
    auto tilde = independent_law(BernoulliModel::from_solution(solve_max_entropy(d)));
    std::vector<int> deg{2, 2, 2, 2};
    for (int k = 2; k <= 4; ++k) {
        auto rep = l_statistic_exact(*tilde, *tilde, deg, k);
        CHECK(rep.value == 0);
        CHECK(rep.signed_total == 0);
    }
    auto lg = weighted_l_statistic(LStatistic::L_g, d, 2, LMode::exact_tiny);
    CHECK(lg.value <= 1e-12);
    CHECK(lg.m == 8);
    CHECK(lg.terms == 12);
    auto lm = weighted_l_statistic(LStatistic::L_g, regular(4, 1), 2, LMode::exact_tiny);
    CHECK(lm.value <= 1e-12);

    for (auto which : {LStatistic::L_g, LStatistic::L_a, LStatistic::L_q}) {
        auto rep = weighted_l_statistic(which, DegreeSequence({1, 2, 2, 2, 3}), 3, LMode::exact_tiny);
        CHECK(rep.value >= 0);
        CHECK(std::abs(rep.signed_total) <= rep.value + 1e-12);
        CHECK(rep.components.size() == 3);
    }
    auto lb = weighted_l_statistic_bipartite(DegreeSequence({1, 2, 2}), DegreeSequence({1, 2, 2}), 3,
                                             LMode::exact_tiny);
    CHECK(lb.which == LStatistic::L_b);
    CHECK(lb.value >= 0);
    CHECK(std::abs(lb.signed_total) <= lb.value + 1e-12);
    CHECK_THROWS_AS(weighted_l_statistic(LStatistic::L_g, regular(4, 2), 4, LMode::exact_tiny, LOptions{0.6, 10}),
                    SizeGuard);
}

TEST_CASE("Monte-Carlo L tracks the exact value") {
    DegreeSequence d({1, 2, 2, 2, 3, 2});
    auto exact = weighted_l_statistic(LStatistic::L_g, d, 3, LMode::exact_tiny);
    LOptions opts;
    opts.graphs = 4000;
    opts.placements_per_tree = 400;
    auto mc = weighted_l_statistic(LStatistic::L_g, d, 3, LMode::monte_carlo, opts);
    CHECK(mc.mode == LMode::monte_carlo);
    CHECK_FALSE(mc.note.empty());
    CHECK(mc.standard_error > 0);
    CHECK(std::abs(mc.value - exact.value) <= 4 * mc.standard_error + 0.05 * exact.value + 0.02);
    CHECK(std::abs(mc.signed_total - exact.signed_total) <= 0.2);
}

TEST_CASE("total sums") {
    auto all = enumerate_gd(regular(4, 2));
    auto two = total_sum_check(all, regular(4, 2), 2);
    CHECK(two.estimate == 1.0);
    CHECK(two.z_bar == 0);
    auto three = total_sum_check(all, regular(4, 2), 3);
    CHECK(three.target == 3);
    CHECK(three.within_upper());
    CHECK(three.within_band());

    auto tilde = independent_law(BernoulliModel::from_solution(solve_max_entropy(regular(4, 2))));
    std::vector<int> deg{2, 2, 2, 2};
    CHECK(exact_total_sum(*tilde, deg, 3) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(exact_total_sum(*tilde, deg, 2) == doctest::Approx(12 * (2.0 / 3) / 8).epsilon(1e-10));

    // graphs off the reference degrees pick up a positive discrepancy
    DegreeSequence ref({2, 2, 2, 2, 2, 2});
    auto box = sample_uniform_ga(ref, 0.7, SamplerConfig{4, SamplerMethod::toggle_mcmc, 0, 0}, 50);
    auto off = total_sum_check(box.graphs, ref, 3);
    CHECK(off.z_bar > 0);
    CHECK(off.within_band());
}

TEST_CASE("Janson parameters") {
    auto model = BernoulliModel::uniform(4, 0.5);
    ConcentrationFamily single;
    single.add({{0, 1}}, 1);
    single.add({{2, 3}}, 1);
    auto jp = janson_parameters(single, model);
    CHECK(jp.lambda == 1.0);
    CHECK(jp.delta1 == 1.0);
    CHECK(jp.delta2 == 0.0);

    ConcentrationFamily pair;
    pair.add({{0, 1}, {1, 2}}, 1);
    pair.add({{1, 2}, {2, 3}}, 1);
    auto jq = janson_parameters(pair, model);
    CHECK(jq.lambda == doctest::Approx(0.5));
    CHECK(jq.delta1 == doctest::Approx(1.0));
    CHECK(jq.delta2 == doctest::Approx(2.0 / 0.5 * 0.125));

    ConcentrationFamily scaled;
    scaled.add({{0, 1}, {1, 2}}, 3);
    scaled.add({{1, 2}, {2, 3}}, 3);
    auto js = janson_parameters(scaled, model);
    CHECK(js.lambda * js.delta1 == doctest::Approx(jq.lambda * jq.delta1 / 9));
    CHECK(js.lambda * js.delta2 == doctest::Approx(jq.lambda * jq.delta2 / 9));

    CHECK_THROWS_AS(janson_parameters(single, BernoulliModel::uniform(4, 0)), EmptyFamily);
    CHECK_THROWS_AS(single.add({}, 1), ValidationError);
    CHECK_THROWS_AS(single.add({{0, 2}}, 0), ValidationError);
    CHECK(family_statistic(pair, SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);
    CHECK(family_statistic(pair, SimpleGraph(4, {{0, 1}, {1, 2}})) == 1);
}

TEST_CASE("Janson bound") {
    CHECK(janson_bound(5, 1, 0, 0) == 1);
    CHECK(janson_bound(5, 1, 1, 1) == doctest::Approx(std::exp(-2.5)));
    CHECK(janson_bound(10, 0.5, 0.5, 0.5) == doctest::Approx(0.2157).epsilon(1e-3));
    double prev = 1;
    for (int i = 0; i <= 100; ++i) {
        const double b = janson_bound(3, 0.4, 0.6, i / 100.0);
        CHECK(b <= prev + 1e-15);
        prev = b;
    }
    CHECK_THROWS_AS(janson_bound(1, 1, 0, 1.5), DomainError);
    CHECK_THROWS_AS(janson_bound(0, 1, 0, 0.5), DomainError);
    CHECK_THROWS_AS(janson_bound(1, 0, 0, 0.5), DomainError);
}

TEST_CASE("empirical lower tails respect the bound") {
    auto edges = edge_count_family(20);
    auto uniform = BernoulliModel::uniform(20, 0.3);
    auto rep = empirical_lower_tail(edges, uniform, 0.3, 100000, 11);
    CHECK(rep.params.lambda == doctest::Approx(57));
    CHECK(rep.params.delta1 == doctest::Approx(1));
    CHECK(rep.params.delta2 == 0);
    CHECK(rep.pass());
    CHECK(empirical_lower_tail(edges, uniform, 0, 10000, 1).pass());
    CHECK_THROWS_AS(empirical_lower_tail(edges, uniform, 0.3, 9999, 1), ValidationError);

    auto d = regular(8, 3);
    std::vector<int> deg(8, 3);
    auto paths = tree_family(deg, 3);
    CHECK(paths.size() == 3 * 336);
    auto tilde = BernoulliModel::from_solution(solve_max_entropy(d));
    auto tail = empirical_lower_tail(paths, tilde, 0.25, 20000, 12);
    CHECK(tail.pass());
}

TEST_CASE("delta bounds on enumerable families") {
    auto d = regular(6, 2);
    auto sol = solve_max_entropy(d);
    auto two = delta_bounds_check(d, sol, 2);
    CHECK(two.delta1_ok);
    CHECK(two.params.delta1 == doctest::Approx(1.0 / 12));
    CHECK(two.delta2_ok);
    auto three = delta_bounds_check(d, sol, 3);
    CHECK(three.delta1_ok);
    CHECK(three.delta2_ok);
    CHECK(three.params.delta1 < 1.0 / 12);
    CHECK(wedge_constant(2) == 16);
    CHECK_THROWS_AS(delta_bounds_check(d, sol, 5), SizeGuard);

    // members on disjoint supports never overlap
    ConcentrationFamily disjoint;
    disjoint.add({{0, 1}}, 12);
    disjoint.add({{2, 3}}, 12);
    CHECK(janson_parameters(disjoint, BernoulliModel::from_solution(sol)).delta2 == 0);
}

TEST_CASE("Chernoff bound") {
    CHECK(chernoff_bound(3, 1) == doctest::Approx(std::exp(-1.0)));
    CHECK(chernoff_bound(0, 0.5) == 1);
    CHECK_THROWS_AS(chernoff_bound(-1, 1), DomainError);
    CHECK_THROWS_AS(chernoff_bound(1, 0), DomainError);

    Rng rng(21);
    const int reps = 100000;
    int upper = 0;
    for (int r = 0; r < reps; ++r) {
        int x = 0;
        for (int i = 0; i < 100; ++i)
            x += bernoulli(rng, 0.3);
        upper += x >= 45;
    }
    CHECK(double(upper) / reps <= chernoff_bound(30, 0.5));
}

TEST_CASE("lower-bound construction") {
    DegreeSequence d({2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5});
    PipelineOptions opts;
    opts.reps = 2000;
    opts.alpha = 0.01;
    auto none = lower_bound_pipeline(d, 0.8, opts);
    CHECK(none.set_a.empty());
    CHECK(none.crossing_edges == 0);
    CHECK(none.membership >= 0);
    CHECK(none.membership <= none.membership_slack);

    // the same frequency straight from the model
    auto model = BernoulliModel::from_solution(solve_max_entropy(d));
    Rng rng(9);
    int hits = 0;
    for (int r = 0; r < 20000; ++r)
        hits += membership_ga(sample_bernoulli(model, rng), d, 0.8);
    const double p = hits / 20000.0;
    CHECK(std::abs(none.membership - p) <= 3 * std::sqrt(p * (1 - p) / 2000) + 3 * std::sqrt(p * (1 - p) / 20000));

    opts.alpha = 1.5;
    auto some = lower_bound_pipeline(d, 0.8, opts);
    CHECK_FALSE(some.set_a.empty());
    CHECK(some.rounding_violations == 0);
    CHECK(some.e_below_bound == 0);

    auto deflt = lower_bound_pipeline(d, 0.8, PipelineOptions{200, 1, std::nullopt});
    CHECK(deflt.alpha == doctest::Approx(10 / 0.3));
    CHECK(static_cast<int>(deflt.set_a.size()) == d.size());
    CHECK_THROWS_AS(lower_bound_pipeline(d, 0.4), DomainError);
}
