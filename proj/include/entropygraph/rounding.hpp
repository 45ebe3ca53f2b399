#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <entropygraph/entropy.hpp>
#include <entropygraph/graph.hpp>

namespace entropygraph {

/// Weights within this distance of 0 or 1 are snapped and the edge is dead.
inline constexpr double kDeathTolerance = 1e-9;

/// Bipartite graph with edge weights in [0,1].  Vertices carry a part label
/// (0 or 1); only pairs across the parts may carry weight.
class WeightedBipartiteGraph {
public:
    WeightedBipartiteGraph() = default;
    /// Part A is 0..n1-1, part B is n1..n1+n2-1.
    WeightedBipartiteGraph(int n1, int n2);
    explicit WeightedBipartiteGraph(std::vector<int> part_of);

    int vertex_count() const noexcept { return static_cast<int>(part_of_.size()); }
    const std::vector<int>& part_of() const noexcept { return part_of_; }

    /// Throws WeightOutOfRange outside [0,1] and ValidationError for same-part pairs.
    void set_weight(int u, int v, double w);
    double weight(int u, int v) const;

    /// Pairs with non-zero weight, u < v, in lexicographic order.
    std::vector<std::pair<Edge, double>> support() const;
    /// D(v) = sum of incident weights.
    std::vector<double> fractional_degrees() const;

private:
    std::vector<int> part_of_;
    std::map<Edge, double> w_;
};

struct Augmentation {
    enum class Kind { cycle, path };
    Kind kind = Kind::cycle;
    std::vector<int> walk; // vertices in order; a cycle does not repeat its start
    double c = 0;
    std::vector<Edge> killed;
};

std::string to_string(Augmentation::Kind k);

struct RoundingResult {
    SimpleGraph graph;
    std::vector<Augmentation> trace;
    std::vector<double> initial_degrees;
    std::size_t support_size = 0;
};

/// Cycle cancelling followed by maximal-path augmentation.  Each output degree
/// lies in {floor D(v), floor D(v) + 1} for the initial fractional degree D(v).
RoundingResult round_to_integral(const WeightedBipartiteGraph& w);

/// floor with a snap to the nearest integer when within kDeathTolerance.
int snapped_floor(double x);

/// Vertices whose output degree leaves {floor D, floor D + 1}.
std::vector<int> rounding_violations(const RoundingResult& r);

/// Rounds the crossing probabilities p(i,j), i in A and j outside A.  Indices are
/// positions in the solution; the result lives on all n vertices.
RoundingResult build_crossing_tree(const MaxEntropySolution& sol, std::span<const int> a);

} // namespace entropygraph
