#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <entropygraph/graph.hpp>

namespace entropygraph {

/// Positive degrees d_1 <= ... <= d_n with total M.
///
/// Input may be given in any order; the sequence is stored sorted and the
/// permutation back to the caller's order is retained.  Vertex i of every
/// graph built from a DegreeSequence is the i-th smallest degree.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Throws ValidationError if any degree is < 1.
    explicit DegreeSequence(std::vector<int> degrees);

    int size() const noexcept { return static_cast<int>(degrees_.size()); }
    std::int64_t total() const noexcept { return total_; }
    std::span<const int> degrees() const noexcept { return degrees_; }
    int operator[](int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
    int min() const { return degrees_.front(); }
    int max() const { return degrees_.back(); }

    /// original_index()[i] is the caller's index of sorted vertex i.
    const std::vector<int>& original_index() const noexcept { return original_; }

    /// Reorders a per-vertex vector (sorted order) into the caller's original order.
    template <class T>
    std::vector<T> to_original_order(std::span<const T> values) const {
        std::vector<T> out(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            out[static_cast<std::size_t>(original_[i])] = values[i];
        return out;
    }

    bool operator==(const DegreeSequence& o) const { return degrees_ == o.degrees_; }

private:
    std::vector<int> degrees_;
    std::vector<int> original_;
    std::int64_t total_ = 0;
};

struct EGMargin {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct EGReport {
    bool strict_pass = false;
    bool nonstrict_pass = false;
    std::vector<EGMargin> margins; // index k-1 holds the k-th inequality
};

/// Erdős–Gallai margins for k = 1..n: lhs = sum of the k largest degrees,
/// rhs = k(k-1) + sum_{i <= n-k} min(k, d_i).  Parity of M is not part of the verdict.
EGReport check_erdos_gallai(const DegreeSequence& d);

/// Graphical = non-strict Erdős–Gallai plus even total.  Accepts any order and zeros.
bool is_graphical(std::span<const int> degrees);

/// Sum of the d_k largest entries (k is 1-based; the count is clamped to n).
std::int64_t s_k(const DegreeSequence& d, int k);

/// Largest 1-based k with S_k <= M/2.  Throws NoFeasibleK when no such k exists.
int ell(const DegreeSequence& d);

struct TypeClassification {
    double epsilon = 0;
    double nu = 0;
    bool is_strict_graphic = false;
    bool m_even = false;
    bool m_large_enough = false; // n^{1+eps} <= M
    bool nu_condition = false;   // sqrt(n/M)(d_n - d_ell + 1) < n^{-nu}
    int ell = 0;                 // 0 when no k has S_k <= M/2

    bool type_epsilon() const { return is_strict_graphic && m_even && m_large_enough; }
    bool type_epsilon_nu() const { return type_epsilon() && nu_condition; }
};

TypeClassification classify_type(const DegreeSequence& d, double epsilon, double nu);

struct DenseEGResult {
    bool degree_bounds = false; // c2(n-1) <= d_i <= c1(n-1)
    bool gap_condition = false; // infimum >= c3
    double infimum = 0;         // (1/n^2) min over admissible B
    int minimizing_size = 0;    // |B| attaining the infimum
    bool pass() const { return degree_bounds && gap_condition; }
};

/// Dense Erdős–Gallai test.  The infimum over |B| >= c2 n is taken over the
/// top-b degree sets only, which suffices because the sequence is sorted.
DenseEGResult check_dense_eg(const DegreeSequence& d, double c1, double c2, double c3);

/// Value inside the dense infimum for an explicit vertex subset; exposed for oracle tests.
double dense_eg_objective(const DegreeSequence& d, std::span<const int> subset);

/// Vertices (sorted positions) with d_i <= ln(n)^alpha.
std::vector<int> small_degree_set(const DegreeSequence& d, double alpha);

/// Havel–Hakimi realisation.  Throws Infeasible for non-graphical input.
SimpleGraph havel_hakimi(const DegreeSequence& d);
SimpleGraph havel_hakimi(std::span<const int> degrees);

} // namespace entropygraph
