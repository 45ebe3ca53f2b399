#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <entropygraph/errors.hpp>
#include <entropygraph/graph.hpp>

namespace entropygraph {

/// Tree on vertices 0..k-1.  Edges are stored normalised (u < v) and sorted.
class LabeledTree {
public:
    LabeledTree() = default;
    /// Throws ValidationError unless the edges form a spanning tree of [k].
    LabeledTree(int k, std::vector<Edge> edges);

    int size() const noexcept { return k_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// b_u: degree of tree vertex u.
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    const std::vector<int>& neighbors(int u) const { return adj_.at(static_cast<std::size_t>(u)); }

    /// Tree with vertex u renamed to pi[u].
    LabeledTree relabel(std::span<const int> pi) const;

    bool operator==(const LabeledTree& o) const { return k_ == o.k_ && edges_ == o.edges_; }

private:
    int k_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

/// A tree together with an injective placement s: [k] -> [n].
struct OrderedTree {
    LabeledTree tree;
    std::vector<int> s;

    /// Throws ValidationError if s is not injective, has the wrong length, or leaves [0, n).
    OrderedTree(LabeledTree t, std::vector<int> placement, int n);
    OrderedTree(LabeledTree t, std::vector<int> placement);

    /// Images s(u)s(v) of the tree edges, normalised and sorted.
    std::vector<Edge> image_edges() const;
    /// Image vertices in ascending order.
    std::vector<int> image_vertices() const;
};

/// Prüfer code with 0-based entries (k-2 of them).
std::vector<int> pruefer_encode(const LabeledTree& t);
/// Inverse of pruefer_encode; the tree has code.size() + 2 vertices.
LabeledTree pruefer_decode(std::span<const int> code);

/// All k^{k-2} labelled trees on [k], in lexicographic order of their Prüfer codes.
/// Throws SizeGuard for k > 9 and ValidationError for k < 2.
std::vector<LabeledTree> enumerate_trees(int k);

/// log psi = sum_u (b_u - 1) log d_{s(u)}; degrees are indexed by ambient vertex.
double log_psi(const OrderedTree& ot, std::span<const int> degrees);
/// prod_u d_{s(u)}^{b_u - 1}, switching to log space when k log d_max > 500.
double psi(const OrderedTree& ot, std::span<const int> degrees);

/// Checks psi(s o pi^{-1}, pi(T)) == psi(s, T) exactly.
bool psi_invariance_check(const OrderedTree& ot, std::span<const int> pi, std::span<const int> degrees);

/// Merges two ordered trees whose images share an edge into one ordered tree on the
/// union of their image vertices.  The result's placement lists those vertices in
/// ascending order.  Throws DisjointImages when no edge is shared.
OrderedTree wedge_sum(const OrderedTree& a, const OrderedTree& b);

inline constexpr std::uint64_t kDefaultEmbeddingBudget = 100'000'000;

/// Calls fn(s) for every injective s with s(u)s(v) in E(G) for all tree edges.
/// Tree vertices are placed in BFS order from vertex 0.  Each partial extension
/// counts against the budget; exceeding it throws SizeGuard.
template <class Fn>
void for_each_embedding(const LabeledTree& t, const SimpleGraph& g, Fn&& fn,
                        std::uint64_t budget = kDefaultEmbeddingBudget);

/// F(T,G) = sum over embeddings s of 1/psi(s, T, degrees).
double weighted_embedding_sum(const LabeledTree& t, const SimpleGraph& g, std::span<const int> degrees,
                              std::uint64_t budget = kDefaultEmbeddingBudget);

/// Z = sum over embeddings of |prod d_ref^{-(b_u-1)} - prod d_G^{-(b_u-1)}|.
double z_discrepancy(const LabeledTree& t, const SimpleGraph& g, std::span<const int> reference,
                     std::uint64_t budget = kDefaultEmbeddingBudget);

/// (1/M) sum_{T in trees(k)} F(T,G) with psi from the degrees of G; 2 <= k <= 6.
double normalized_tree_total(const SimpleGraph& g, int k, std::uint64_t budget = kDefaultEmbeddingBudget);

/// True iff every placed edge joins vertices with different part labels.
bool bipartite_admissible(const OrderedTree& ot, std::span<const int> part_of);

// ---- implementation ----

namespace detail {

struct EmbeddingPlan {
    std::vector<int> order;  // BFS order of tree vertices
    std::vector<int> parent; // parent[u] in the BFS tree, -1 for the root
};

EmbeddingPlan plan_embedding(const LabeledTree& t);

} // namespace detail

template <class Fn>
void for_each_embedding(const LabeledTree& t, const SimpleGraph& g, Fn&& fn, std::uint64_t budget) {
    const int k = t.size();
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        return;
    const detail::EmbeddingPlan plan = detail::plan_embedding(t);
    std::vector<int> s(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::uint64_t extensions = 0;

    auto charge = [&] {
        if (++extensions > budget)
            throw SizeGuard("embedding enumeration exceeded " + std::to_string(budget) + " extensions");
    };

    // Explicit stack: cursor[t] is the next candidate index for depth t.
    std::vector<std::size_t> cursor(static_cast<std::size_t>(k), 0);
    for (int root = 0; root < n; ++root) {
        charge();
        s[plan.order[0]] = root;
        used[root] = 1;
        int depth = 1;
        if (k > 1)
            cursor[1] = 0;
        while (depth >= 1) {
            if (depth == k) {
                fn(std::span<const int>(s));
                --depth;
                continue;
            }
            const int u = plan.order[depth];
            const auto& cand = g.neighbors(s[plan.parent[u]]);
            if (s[u] >= 0) {
                used[s[u]] = 0;
                s[u] = -1;
            }
            std::size_t& c = cursor[depth];
            while (c < cand.size() && used[cand[c]])
                ++c;
            if (c == cand.size()) {
                --depth;
                continue;
            }
            charge();
            s[u] = cand[c++];
            used[s[u]] = 1;
            ++depth;
            if (depth < k) {
                cursor[depth] = 0;
                s[plan.order[depth]] = -1;
            }
        }
        used[root] = 0;
        s[plan.order[0]] = -1;
    }
}

} // namespace entropygraph
