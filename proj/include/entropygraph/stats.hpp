#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <entropygraph/degseq.hpp>
#include <entropygraph/entropy.hpp>
#include <entropygraph/graph.hpp>
#include <entropygraph/graphs.hpp>
#include <entropygraph/rng.hpp>
#include <entropygraph/trees.hpp>

namespace entropygraph {

// ---- tree probabilities ----

struct TreeProbEstimate {
    double value = 0;
    double standard_error = 0;
    std::int64_t n_samples = 0;
    bool exact = false;
};

/// Probability that every listed edge is present.
class TreeLaw {
public:
    virtual ~TreeLaw() = default;
    virtual int size() const = 0;
    virtual double prob(std::span<const Edge> edges) const = 0;
};

/// Independent edges: the product of p over the listed edges.
std::shared_ptr<const TreeLaw> independent_law(BernoulliModel model);
/// Uniform over a finite list of graphs on at most 11 vertices.
std::shared_ptr<const TreeLaw> enumerated_law(const std::vector<SimpleGraph>& graphs);

/// Product over tree edges of p(s(u1), s(u2)).
TreeProbEstimate exact_tree_prob_tilde(const BernoulliModel& model, const OrderedTree& ot);

using GraphDraw = std::function<SimpleGraph(Rng&)>;

/// Fraction of n_samples draws containing every placed edge.  n_samples >= 100.
TreeProbEstimate estimate_tree_prob(const GraphDraw& draw, const OrderedTree& ot, std::int64_t n_samples, Rng& rng);

/// Fraction of G^D containing every placed edge, by enumeration.
TreeProbEstimate exact_tree_prob_uniform(const DegreeSequence& d, const OrderedTree& ot);

// ---- weighted L statistics ----

enum class LStatistic { L_a, L_g, L_q, L_b };
enum class LMode { exact_tiny, monte_carlo };

std::string to_string(LStatistic s);
std::string to_string(LMode m);
LStatistic parse_l_statistic(const std::string& name);
LMode parse_l_mode(const std::string& name);

struct LOptions {
    double a = 0.6;                                     // L_a only
    std::uint64_t budget = 20'000'000;                  // exact mode: (s,T) terms
    std::uint64_t seed = 1;
    std::int64_t graphs = 2000;                         // monte_carlo: sampled graphs
    std::int64_t placements_per_tree = 200;             // monte_carlo: sampled placements
};

struct LReport {
    LStatistic which = LStatistic::L_g;
    LMode mode = LMode::exact_tiny;
    int k = 0;
    int n = 0;
    std::int64_t m = 0;
    double value = 0;
    double signed_total = 0; // same sum without absolute values
    double standard_error = 0;
    std::vector<double> components; // per tree, in Prüfer order
    std::uint64_t terms = 0;
    std::string note;
};

/// (1/M) sum over placed trees of |p1 - p2| / psi.  Only placements whose edges
/// all cross the parts count when part_of is non-empty.
LReport l_statistic_exact(const TreeLaw& p1, const TreeLaw& p2, std::span<const int> degrees, int k,
                          std::span<const int> part_of = {}, std::uint64_t budget = 20'000'000);

/// L_a, L_g or L_q of d against its max-entropy model.
LReport weighted_l_statistic(LStatistic which, const DegreeSequence& d, int k, LMode mode,
                             const LOptions& opts = {});

/// L_b of the bipartite margins (rows, cols) against the bipartite max-entropy model.
LReport weighted_l_statistic_bipartite(const DegreeSequence& rows, const DegreeSequence& cols, int k,
                                       LMode mode, const LOptions& opts = {});

// ---- total sums ----

struct TotalSumReport {
    int k = 0;
    double target = 0; // k^{k-2}
    double estimate = 0;
    double standard_error = 0;
    double z_bar = 0;  // mean over graphs of sum_T Z(T,G)
    double band_lower = 0;
    double band_upper = 0;
    std::int64_t graphs = 0;
    double deviation() const { return std::abs(estimate - target); }
    bool within_upper() const { return estimate <= band_upper + 1e-9; }
    bool within_band() const { return estimate >= band_lower - 1e-9 && within_upper(); }
};

/// Mean over graphs of (1/M) sum_T F(T,G) with psi from the reference degrees.
TotalSumReport total_sum_check(const std::vector<SimpleGraph>& graphs, const DegreeSequence& d, int k,
                               std::uint64_t budget = kDefaultEmbeddingBudget);

/// (1/M) sum over placed trees of p(s,T)/psi for an exactly known law.
double exact_total_sum(const TreeLaw& law, std::span<const int> degrees, int k,
                       std::uint64_t budget = 20'000'000);

// ---- concentration ----

/// Weighted members over a common set of independent edge indicators.
class ConcentrationFamily {
public:
    /// Throws ValidationError on an empty member or a non-positive weight.
    void add(std::vector<Edge> edges, double omega);
    std::size_t size() const noexcept { return omega_.size(); }
    const std::vector<std::vector<int>>& members() const noexcept { return members_; } // edge ids
    const std::vector<double>& omega() const noexcept { return omega_; }
    const std::vector<Edge>& ground() const noexcept { return ground_; }

private:
    std::vector<Edge> ground_; // in order of first appearance
    std::map<Edge, int> index_;
    std::vector<std::vector<int>> members_;
    std::vector<double> omega_;
};

/// Every edge of K_n as a member with weight 1.
ConcentrationFamily edge_count_family(int n);
/// Every placed k-tree with weight M * psi(s,T,D).  Throws SizeGuard past budget members.
ConcentrationFamily tree_family(std::span<const int> degrees, int k, std::uint64_t budget = 5'000'000);

struct JansonParameters {
    double lambda = 0;
    double delta1 = 0;
    double delta2 = 0;
};

/// Throws EmptyFamily when lambda = 0.
JansonParameters janson_parameters(const ConcentrationFamily& fam, const BernoulliModel& model);

/// exp(-(lambda/(delta1+delta2)) (eps + (1-eps) log(1-eps))).
double janson_bound(const JansonParameters& jp, double epsilon);
double janson_bound(double lambda, double delta1, double delta2, double epsilon);

/// S for one graph.
double family_statistic(const ConcentrationFamily& fam, const SimpleGraph& g);

struct LowerTailReport {
    JansonParameters params;
    double epsilon = 0;
    double bound = 0;
    double frequency = 0;
    double sigma = 0; // binomial standard error at the bound
    std::int64_t reps = 0;
    bool pass() const { return frequency <= bound + 3 * sigma; }
};

/// Empirical P(S <= (1-eps) lambda) over reps >= 10^4 draws from the model.
LowerTailReport empirical_lower_tail(const ConcentrationFamily& fam, const BernoulliModel& model, double epsilon,
                                     std::int64_t reps, std::uint64_t seed);

struct DeltaBoundsReport {
    int k = 0;
    std::int64_t m = 0;
    std::size_t members = 0;
    JansonParameters params;
    double c_k = 0;
    bool delta1_ok = false; // delta1 <= 1/M
    bool delta2_ok = false; // delta2 <= C_k/M
};

/// 2^{2(k-1)(2k-3)} ((2k-2)!)^2 (k-1).
double wedge_constant(int k);

/// Full tree family on the tilde model; 2 <= k <= 4.
DeltaBoundsReport delta_bounds_check(const DegreeSequence& d, const MaxEntropySolution& sol, int k);

/// exp(-mu delta^2 / (2 + delta)).
double chernoff_bound(double mu, double delta);

// ---- lower-bound construction ----

struct PipelineOptions {
    std::int64_t reps = 1000;
    std::uint64_t seed = 1;
    std::optional<double> alpha; // default 10 / (a - 1/2)
};

struct PipelineReport {
    int n = 0;
    double a = 0;
    double alpha = 0;
    std::vector<int> set_a; // sorted positions
    int crossing_edges = 0;
    int rounding_violations = 0;
    std::int64_t reps = 0;
    double membership = 0;       // |d_i(G) - d_i| < d_i^a for all i
    double membership_slack = 0; // |d_i(G) - d_i| <= 2 d_i^a for all i
    double all_events = 0;       // intersection of E_j (j in J) and F_j (j in B \ J)
    int j_size = 0;
    int e_checked = 0;
    int e_below_bound = 0;       // E_j frequency under 1 - 2exp(-D(j,B)^{2a1}/3) - 3 sigma
    double min_f_frequency = 1;
    double max_d_j_a = 0;        // max over j in A of D(j,A)
    int d_j_a_below_quarter = 0; // count of j in A with D(j,A) < 1/4
};

/// Builds empty(A) + T + sampled G_B and reports membership and event frequencies.
PipelineReport lower_bound_pipeline(const DegreeSequence& d, double a, const PipelineOptions& opts = {});

// ---- helpers ----

/// Calls fn(s) for every injective s: [k] -> [n] in lexicographic order.
void for_each_injection(int n, int k, const std::function<void(std::span<const int>)>& fn);

/// n!/(n-k)!
double falling_factorial(int n, int k);

/// Upper-tail p-value of Pearson's statistic for equally likely categories;
/// unseen categories count as zero.
double uniform_chi_square_pvalue(std::span<const std::int64_t> counts, std::int64_t categories);

} // namespace entropygraph
