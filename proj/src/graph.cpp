#include <entropygraph/graph.hpp>

#include <algorithm>
#include <string>

#include <entropygraph/errors.hpp>

namespace entropygraph {

SimpleGraph::SimpleGraph(int n) {
    if (n < 0)
        throw ValidationError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void SimpleGraph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw ValidationError("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw ValidationError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool SimpleGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v))
        return false;
    auto& nu = adj_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
    return true;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i)
        d[i] = static_cast<int>(adj_[i].size());
    return d;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

} // namespace entropygraph
