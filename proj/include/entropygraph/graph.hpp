#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace entropygraph {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Undirected simple graph on vertices 0..n-1 stored as sorted neighbour lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<Edge>& edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Throws ValidationError on loops, duplicates or out-of-range endpoints.
    void add_edge(int u, int v);
    /// Returns false when the edge was absent.
    bool remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    std::vector<int> degrees() const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    /// All edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

} // namespace entropygraph
