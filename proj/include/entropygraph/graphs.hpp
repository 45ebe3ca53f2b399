#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <entropygraph/degseq.hpp>
#include <entropygraph/entropy.hpp>
#include <entropygraph/graph.hpp>
#include <entropygraph/rng.hpp>

namespace entropygraph {

/// Independent-edge random graph model.  With a part map, only pairs in
/// different parts may carry an edge.
class BernoulliModel {
public:
    using ProbabilityFn = std::function<double(int, int)>;

    BernoulliModel(int n, ProbabilityFn p, std::vector<int> part_of = {});

    static BernoulliModel from_solution(const MaxEntropySolution& sol);
    static BernoulliModel from_qmodel(const QModel& q);
    /// Rows are vertices 0..n1-1, columns n1..n1+n2-1.
    static BernoulliModel from_bipartite(const BipartiteMaxEntropySolution& sol);
    /// Symmetric matrix with entries in [0,1]; the diagonal is ignored.
    static BernoulliModel from_matrix(const std::vector<std::vector<double>>& p);
    static BernoulliModel uniform(int n, double p);

    int size() const noexcept { return n_; }
    bool bipartite() const noexcept { return !part_of_.empty(); }
    bool supported(int i, int j) const;
    double p(int i, int j) const;

private:
    int n_ = 0;
    ProbabilityFn fn_;
    std::vector<int> part_of_;
    std::vector<double> cache_; // upper triangle, row-major, when n is small enough
};

SimpleGraph sample_bernoulli(const BernoulliModel& model, Rng& rng);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// Every graph on n vertices with lower[i] <= deg(i) <= upper[i].
/// Throws SizeGuard when n > 10 or the search visits more than budget nodes.
std::vector<SimpleGraph> enumerate_degree_box(std::span<const int> lower, std::span<const int> upper,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Every graph whose degree sequence is exactly d (vertex i has degree d[i]).
std::vector<SimpleGraph> enumerate_gd(const DegreeSequence& d, std::uint64_t budget = kDefaultEnumerationBudget);

enum class SamplerMethod { exact_enum, switch_mcmc, toggle_mcmc, rejection, reweighted_rejection };

std::string to_string(SamplerMethod m);
/// Throws ValidationError for unknown names.
SamplerMethod parse_sampler_method(const std::string& name);

struct SamplerConfig {
    std::uint64_t seed = 1;
    SamplerMethod method = SamplerMethod::switch_mcmc;
    std::int64_t burn_in = 0;  // 0 selects 10 n^2
    std::int64_t thinning = 0; // 0 selects n^2
};

struct ChainStats {
    std::uint64_t proposed = 0;
    std::uint64_t accepted = 0;
    double acceptance_rate() const { return proposed ? double(accepted) / double(proposed) : 0.0; }
};

struct SampleBatch {
    std::vector<SimpleGraph> graphs;
    ChainStats stats;
    std::int64_t burn_in = 0;
    std::int64_t thinning = 0;
    std::vector<std::string> warnings;
};

/// Uniform samples from the graphs with degree sequence d (exact_enum or switch_mcmc).
/// Throws Infeasible for non-graphical d.
SampleBatch sample_uniform_gd(const DegreeSequence& d, const SamplerConfig& cfg, std::int64_t count);

/// |d_i(G) - d_i| < d_i^a for every i.  Throws DomainError unless 1/2 < a < 1.
bool membership_ga(const SimpleGraph& g, const DegreeSequence& d, double a);

/// Inclusive per-vertex degree range of the almost-given box.
struct DegreeBox {
    std::vector<int> lower;
    std::vector<int> upper;
};
DegreeBox ga_box(const DegreeSequence& d, double a);

/// Uniform samples from the almost-given family (toggle_mcmc, rejection, reweighted_rejection).
SampleBatch sample_uniform_ga(const DegreeSequence& d, double a, const SamplerConfig& cfg, std::int64_t count);

/// Greedy 0-1 realisation of bipartite margins; rows are vertices 0..n1-1.
SimpleGraph bipartite_realisation(const DegreeSequence& rows, const DegreeSequence& cols);

/// Every bipartite graph with the given margins.  Throws SizeGuard when n1*n2 > 30.
std::vector<SimpleGraph> enumerate_bipartite(const DegreeSequence& rows, const DegreeSequence& cols);

/// Uniform samples from bipartite graphs with row degrees D1 and column degrees D2
/// (exact_enum for tiny sizes, otherwise the 2x2 swap chain).
SampleBatch sample_bipartite_uniform(const DegreeSequence& rows, const DegreeSequence& cols,
                                     const SamplerConfig& cfg, std::int64_t count);

struct ConditionalProbabilityReport {
    std::int64_t family_size = 0; // |G^D|
    double h1 = 0;
    double predicted = 0;         // |G^D| e^{-H1}
    double empirical = 0;
    double standard_error = 0;    // binomial standard error at the predicted value
    std::int64_t draws = 0;
    std::int64_t hits = 0;
    double z() const { return standard_error > 0 ? (empirical - predicted) / standard_error : 0.0; }
    bool within(double sigmas) const { return std::abs(empirical - predicted) <= sigmas * standard_error; }
};

/// Compares |G^D| e^{-H1} with the frequency of {tilde G in G^D} over n_samples draws.
ConditionalProbabilityReport conditional_probability_identity_check(const DegreeSequence& d,
                                                                    std::int64_t n_samples,
                                                                    std::uint64_t seed);

/// Canonical string key of a graph's edge set, for frequency tables.
std::string graph_key(const SimpleGraph& g);

} // namespace entropygraph
