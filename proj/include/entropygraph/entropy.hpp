#pragma once

#include <span>
#include <vector>

#include <entropygraph/degseq.hpp>
#include <entropygraph/graph.hpp>

namespace entropygraph {

struct SolverOptions {
    double tol = 1e-10;  // max absolute degree residual
    int max_iter = 10000; // fixed-point sweeps plus Newton steps
    bool newton_only = false; // skip the fixed-point phase
};

/// Binary entropy H(x) = -x ln x - (1-x) ln(1-x) in nats.
double binary_entropy(double x);

/// Maximum-entropy edge model for a degree sequence.
///
/// Edge probabilities are p_ij = r_i r_j / (1 + r_i r_j).  They are evaluated
/// on demand from the stored weights; no n x n matrix is kept.
struct MaxEntropySolution {
    std::vector<double> r;
    std::vector<double> log_r;
    std::vector<double> degree_residuals; // sum_{j != i} p_ij - d_i
    double h1 = 0;                        // nats
    bool converged = false;
    int iterations = 0;
    bool used_newton = false;

    int size() const { return static_cast<int>(r.size()); }
    double p(int i, int j) const;
    double q(int i, int j) const { return 1.0 - p(i, j); }
    double max_residual() const;
};

/// Fixed-point iteration r_i <- d_i / sum_{j != i} r_j / (1 + r_i r_j) from
/// r_i = d_i / sqrt(M); falls back to damped Newton on the convex dual when the
/// residual stalls.  Vertices with equal degree share one unknown.
///
/// Throws BoundaryOptimum if the strict Erdős–Gallai conditions fail and
/// NonConvergence (with the final residuals) when the budget is exhausted.
MaxEntropySolution solve_max_entropy(const DegreeSequence& d, const SolverOptions& opts = {});

/// sum_{i<j} H(p_ij), streamed over all pairs.
double entropy_h1(const MaxEntropySolution& sol);

struct DualValue {
    double value = 0;
    std::vector<double> gradient;
};

/// F(x) = -sum d_i x_i + sum_{i<j} log(1 + e^{x_i + x_j}); minimised at x = log r.
DualValue dual_f(std::span<const int> degrees, std::span<const double> x);

/// G(r) = -sum d_i log r_i + sum_{i<j} log(1 + r_i r_j).  Throws DomainError for r_i <= 0.
DualValue dual_g(std::span<const int> degrees, std::span<const double> r);

struct DualObjectives {
    DualValue f; // evaluated at x = log r
    DualValue g; // evaluated at r
};

DualObjectives dual_objectives(const DegreeSequence& d, std::span<const double> r);

/// log P(G~ = G) = sum_i d_i(G) log r_i - sum_{i<j} log(1 + r_i r_j).
double log_prob_graph(const MaxEntropySolution& sol, const SimpleGraph& g);

struct BipartiteMaxEntropySolution {
    std::vector<double> r1;
    std::vector<double> r2;
    std::vector<double> row_residuals;
    std::vector<double> col_residuals;
    double h2 = 0;
    bool converged = false;
    int iterations = 0;

    double p(int i, int j) const; // row i, column j
    double max_residual() const;
};

/// Gale–Ryser feasibility of (D1, D2) as row/column sums of a 0-1 matrix.
bool gale_ryser(const DegreeSequence& rows, const DegreeSequence& cols);

/// True iff the fractional polytope with these margins has nonempty interior
/// (every non-forced cut inequality is strict).
bool bipartite_interior(const DegreeSequence& rows, const DegreeSequence& cols);

/// Alternating fixed point for the bipartite entropy H2.  Throws SumMismatch when
/// the totals differ and NonConvergence when no interior optimum exists or the
/// iteration budget runs out.
BipartiteMaxEntropySolution solve_bipartite_max_entropy(const DegreeSequence& rows,
                                                        const DegreeSequence& cols,
                                                        const SolverOptions& opts = {});

struct QBoundViolation {
    int vertex = 0;
    double lower_global = 0; // d_i (1 - 2 d_n^2 / M)
    double lower_local = 0;  // d_i (1 - 2 d_i d_n / M)
    double q_degree = 0;
    double degree = 0;
};

/// Sparse surrogate q_ij = d_i d_j / (M + d_i d_j).
class QModel {
public:
    explicit QModel(const DegreeSequence& d);

    int size() const { return static_cast<int>(degrees_.size()); }
    double q(int i, int j) const;
    const std::vector<double>& q_degrees() const { return q_degrees_; }
    /// Vertices where the sandwich d_i(1 - 2d_n^2/M) <= d_i(1 - 2 d_i d_n/M) <= d_q(i) <= d_i fails.
    const std::vector<QBoundViolation>& violations() const { return violations_; }

private:
    std::vector<double> degrees_;
    double total_ = 0;
    std::vector<double> q_degrees_;
    std::vector<QBoundViolation> violations_;
};

struct RegularityReport {
    bool monotone = false;        // (a) r non-decreasing
    bool product_bound = false;   // (b) r_1 r_n > 1/n
    bool ratio_bound = true;      // (c) r_k >= 1 => r_{k+1}/r_k < n^4
    bool tail_sum_bound = true;   // (d) r_k > n^2 => sum_{i <= n-d_k-1} d_i <= M/2
    int monotone_witness = -1;    // first k with r_{k+1} < r_k
    int ratio_witness = -1;
    int tail_witness = -1;
    double r1_rn = 0;
    double max_ratio = 0;         // max r_{k+1}/r_k over k with r_k >= 1
    double max_abs_log_r_over_log_n = 0;

    bool all() const { return monotone && product_bound && ratio_bound && tail_sum_bound; }
};

RegularityReport r_regularity_report(const MaxEntropySolution& sol, const DegreeSequence& d);

/// |log delta| n log^{10/(a-1/2)} n with delta = min_{i != j} min(p_ij, 1 - p_ij).
double c1_of_d(const DegreeSequence& d, const MaxEntropySolution& sol, double a);
/// sum_i d_i^a |log r_i|
double c2_of_d(const DegreeSequence& d, const MaxEntropySolution& sol, double a);
/// 4 log(n) n^{-nu} M (M/n)^{a-1/2}: the upper bound for C2 on type-(eps,nu) sequences.
double c2_type_bound(const DegreeSequence& d, double a, double nu);

/// log of M! exp(-lambda - lambda^2) / ((M/2)! 2^{M/2} prod d_i!), lambda = (1/M) sum C(d_i, 2).
/// Throws OddM when M is odd.
double mckay_log_count(const DegreeSequence& d);

} // namespace entropygraph
