#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include <entropygraph/errors.hpp>
#include <entropygraph/graphs.hpp>

#include "test_util.hpp"

using namespace entropygraph;

namespace {

// p-value threshold matching a two-sided 3 sigma normal tail
constexpr double kThreeSigma = 0.0027;

std::map<std::string, long> tally(const std::vector<SimpleGraph>& gs) {
    std::map<std::string, long> out;
    for (const auto& g : gs)
        ++out[graph_key(g)];
    return out;
}

} // namespace

TEST_CASE("Bernoulli sampling extremes and frequencies") {
    Rng rng(1);
    CHECK(sample_bernoulli(BernoulliModel::uniform(6, 0), rng).edge_count() == 0);
    CHECK(sample_bernoulli(BernoulliModel::uniform(6, 1), rng).edge_count() == 15);
    CHECK_THROWS_AS(BernoulliModel::uniform(3, 1.5), WeightOutOfRange);

    auto sol = solve_max_entropy(DegreeSequence({2, 2, 2, 2}));
    auto model = BernoulliModel::from_solution(sol);
    const int draws = 100000;
    long hits = 0;
    for (int s = 0; s < draws; ++s)
        hits += sample_bernoulli(model, rng).has_edge(0, 1);
    const double p = 2.0 / 3;
    CHECK(std::abs(hits / double(draws) - p) <= 3 * std::sqrt(p * (1 - p) / draws));

    BipartiteMaxEntropySolution b = solve_bipartite_max_entropy(DegreeSequence({1, 1}), DegreeSequence({1, 1}));
    auto bm = BernoulliModel::from_bipartite(b);
    CHECK(bm.bipartite());
    CHECK(bm.p(0, 1) == 0);
    CHECK(bm.p(0, 2) == 0.5);
    std::vector<std::vector<double>> full(3, std::vector<double>(3, 1.0));
    std::vector<int> part{0, 0, 1};
    auto kb = BernoulliModel(3, [](int, int) { return 1.0; }, part);
    auto g = sample_bernoulli(kb, rng);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(sample_bernoulli(BernoulliModel::from_matrix(full), rng).edge_count() == 3);
}

TEST_CASE("exact enumeration of G^D") {
    CHECK(enumerate_gd(DegreeSequence({2, 2, 2, 2})).size() == 3);
    CHECK(enumerate_gd(DegreeSequence({2, 2, 2})).size() == 1);
    CHECK(enumerate_gd(DegreeSequence({1, 1, 1, 1})).size() == 3);
    CHECK(enumerate_gd(DegreeSequence({3, 1, 1})).empty());
    for (const auto& d : {std::vector<int>{1, 1, 2, 2}, {1, 2, 2, 3, 3, 3}, {2, 2, 2, 2, 2}, {1, 1, 1, 1, 2, 2}}) {
        auto all = enumerate_gd(DegreeSequence(d));
        DegreeSequence ds(d);
        CHECK(static_cast<long>(all.size()) ==
              testutil::brute_force_count(std::vector<int>(ds.degrees().begin(), ds.degrees().end())));
        std::set<std::string> keys;
        for (const auto& g : all)
            keys.insert(graph_key(g));
        CHECK(keys.size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_gd(DegreeSequence(std::vector<int>(11, 2))), SizeGuard);
    CHECK_THROWS_AS(enumerate_gd(DegreeSequence(std::vector<int>(10, 4)), 100), SizeGuard);
}

TEST_CASE("exact_enum and switch chain are uniform on D=(2,2,2,2)") {
    DegreeSequence d({2, 2, 2, 2});
    SamplerConfig exact{7, SamplerMethod::exact_enum, 0, 0};
    auto a = sample_uniform_gd(d, exact, 30000);
    auto ta = tally(a.graphs);
    CHECK(ta.size() == 3);
    CHECK(testutil::uniform_chi2_pvalue(ta, 3) > kThreeSigma);

    SamplerConfig chain{9, SamplerMethod::switch_mcmc, 1000, 50};
    auto b = sample_uniform_gd(d, chain, 30000);
    auto tb = tally(b.graphs);
    CHECK(tb.size() == 3);
    CHECK(testutil::uniform_chi2_pvalue(tb, 3) > kThreeSigma);
    for (const auto& g : b.graphs)
        CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2});
    CHECK(b.stats.proposed == 1000 + 50ull * 29999);
}

TEST_CASE("switch chain on a larger sequence keeps degrees and is deterministic") {
    DegreeSequence d({1, 1, 2, 2, 2, 3, 3, 4, 4, 5, 5});
    SamplerConfig cfg{3, SamplerMethod::switch_mcmc, 0, 0};
    auto a = sample_uniform_gd(d, cfg, 20);
    auto b = sample_uniform_gd(d, cfg, 20);
    CHECK(a.burn_in == 10 * 11 * 11);
    CHECK(a.thinning == 121);
    for (std::size_t i = 0; i < a.graphs.size(); ++i) {
        CHECK(a.graphs[i] == b.graphs[i]);
        auto deg = a.graphs[i].degrees();
        CHECK(std::equal(deg.begin(), deg.end(), d.degrees().begin()));
    }
    CHECK(sample_uniform_gd(DegreeSequence({1, 1}), cfg, 5).graphs.back().has_edge(0, 1));
    CHECK_THROWS_AS(sample_uniform_gd(DegreeSequence({3, 1, 1}), cfg, 1), Infeasible);
}

TEST_CASE("membership in the almost-given family") {
    DegreeSequence d({4, 4, 4, 4, 4, 4});
    auto box = ga_box(d, 0.6);
    CHECK(box.lower[0] == 2);
    CHECK(box.upper[0] == 5); // 6 is out of range on 6 vertices
    auto witness = havel_hakimi(d);
    CHECK(membership_ga(witness, d, 0.6));
    CHECK_THROWS_AS(membership_ga(witness, d, 0.4), DomainError);

    DegreeSequence big(std::vector<int>(10, 4));
    auto bb = ga_box(big, 0.6);
    CHECK(bb.lower[0] == 2);
    CHECK(bb.upper[0] == 6);
    SimpleGraph empty(10);
    CHECK_FALSE(membership_ga(empty, big, 0.6));

    auto ones = ga_box(DegreeSequence({1, 1, 1, 1}), 0.7);
    CHECK(ones.lower == ones.upper);
}

TEST_CASE("toggle chain matches the exact almost-given law on D=(2,2,2,2)") {
    DegreeSequence d({2, 2, 2, 2});
    const double a = 0.6;
    auto box = ga_box(d, a);
    auto all = enumerate_degree_box(box.lower, box.upper);
    for (const auto& g : all)
        CHECK(membership_ga(g, d, a));

    SamplerConfig rej{5, SamplerMethod::rejection, 0, 0};
    auto exact = sample_uniform_ga(d, a, rej, 30000);
    CHECK(testutil::uniform_chi2_pvalue(tally(exact.graphs), static_cast<long>(all.size())) > kThreeSigma);

    SamplerConfig chain{6, SamplerMethod::toggle_mcmc, 1000, 20};
    auto mc = sample_uniform_ga(d, a, chain, 30000);
    for (const auto& g : mc.graphs)
        CHECK(membership_ga(g, d, a));
    CHECK(testutil::uniform_chi2_pvalue(tally(mc.graphs), static_cast<long>(all.size())) > kThreeSigma);

    SamplerConfig rw{8, SamplerMethod::reweighted_rejection, 0, 0};
    auto cross = sample_uniform_ga(d, a, rw, 20000);
    CHECK(testutil::uniform_chi2_pvalue(tally(cross.graphs), static_cast<long>(all.size())) > kThreeSigma);
}

TEST_CASE("toggle chain on sequences with zero-slack vertices") {
    DegreeSequence d({1, 1, 2, 2, 3, 3});
    const double a = 0.7;
    auto box = ga_box(d, a);
    auto all = enumerate_degree_box(box.lower, box.upper);
    SamplerConfig chain{12, SamplerMethod::toggle_mcmc, 2000, 30};
    auto mc = sample_uniform_ga(d, a, chain, 40000);
    CHECK_FALSE(mc.warnings.empty());
    auto t = tally(mc.graphs);
    CHECK(t.size() == all.size());
    CHECK(testutil::uniform_chi2_pvalue(t, static_cast<long>(all.size())) > kThreeSigma);
}

TEST_CASE("bipartite sampling") {
    SamplerConfig chain{4, SamplerMethod::switch_mcmc, 100, 10};
    auto a = sample_bipartite_uniform(DegreeSequence({1, 1}), DegreeSequence({1, 1}), chain, 20000);
    auto ta = tally(a.graphs);
    CHECK(ta.size() == 2);
    CHECK(testutil::uniform_chi2_pvalue(ta, 2) > kThreeSigma);

    auto b = sample_bipartite_uniform(DegreeSequence({2}), DegreeSequence({1, 1}), chain, 50);
    CHECK(tally(b.graphs).size() == 1);
    CHECK(b.graphs[0].edge_count() == 2);

    SamplerConfig exact{4, SamplerMethod::exact_enum, 0, 0};
    auto c = sample_bipartite_uniform(DegreeSequence({2, 1}), DegreeSequence({2, 1}), exact, 20000);
    auto tc = tally(c.graphs);
    auto d = sample_bipartite_uniform(DegreeSequence({2, 1}), DegreeSequence({2, 1}), chain, 20000);
    auto td = tally(d.graphs);
    CHECK(tc.size() == 1);
    CHECK(td == tc);

    auto e1 = sample_bipartite_uniform(DegreeSequence({1, 1, 2}), DegreeSequence({1, 1, 2}), exact, 20000);
    auto te1 = tally(e1.graphs);
    auto e2 = sample_bipartite_uniform(DegreeSequence({1, 1, 2}), DegreeSequence({1, 1, 2}), chain, 20000);
    auto te2 = tally(e2.graphs);
    CHECK(te1.size() > 2);
    CHECK(te2.size() == te1.size());
    CHECK(testutil::uniform_chi2_pvalue(te2, static_cast<long>(te1.size())) > kThreeSigma);

    CHECK_THROWS_AS(sample_bipartite_uniform(DegreeSequence({1, 2}), DegreeSequence({1, 1}), chain, 1), SumMismatch);
    CHECK_THROWS_AS(sample_bipartite_uniform(DegreeSequence({3}), DegreeSequence({1, 2}), chain, 1), Infeasible);

    // a larger instance keeps its margins
    DegreeSequence rows({1, 2, 2, 3, 4}), cols({2, 2, 2, 3, 3});
    auto big = sample_bipartite_uniform(rows, cols, SamplerConfig{2, SamplerMethod::switch_mcmc, 0, 0}, 10);
    for (const auto& g : big.graphs) {
        for (int i = 0; i < 5; ++i) {
            CHECK(g.degree(i) == rows[i]);
            CHECK(g.degree(5 + i) == cols[i]);
            for (int j = i + 1; j < 5; ++j) {
                CHECK_FALSE(g.has_edge(i, j));
                CHECK_FALSE(g.has_edge(5 + i, 5 + j));
            }
        }
    }
}

TEST_CASE("conditional probability identity on tiny sequences") {
    for (const auto& d : {DegreeSequence({2, 2, 2, 2}), DegreeSequence({1, 1, 1, 1})}) {
        auto rep = conditional_probability_identity_check(d, 100000, 99);
        CHECK(rep.family_size == 3);
        CHECK(rep.predicted == doctest::Approx(3 * 16.0 / 729).epsilon(1e-9));
        CHECK(rep.within(3));
    }
}

TEST_CASE("sampler method names round-trip") {
    for (auto m : {SamplerMethod::exact_enum, SamplerMethod::switch_mcmc, SamplerMethod::toggle_mcmc,
                   SamplerMethod::rejection, SamplerMethod::reweighted_rejection})
        CHECK(parse_sampler_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_sampler_method("gibbs"), ValidationError);
}
