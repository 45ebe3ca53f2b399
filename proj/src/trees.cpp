#include <entropygraph/trees.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace entropygraph {

LabeledTree::LabeledTree(int k, std::vector<Edge> edges) : k_(k) {
    if (k < 1)
        throw ValidationError("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != k - 1)
        throw ValidationError("tree on " + std::to_string(k) + " vertices needs " + std::to_string(k - 1) +
                              " edges");
    for (auto& e : edges) {
        if (e.first < 0 || e.second < 0 || e.first >= k || e.second >= k || e.first == e.second)
            throw ValidationError("invalid tree edge");
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ValidationError("duplicate tree edge");

    adj_.resize(static_cast<std::size_t>(k));
    degrees_.assign(static_cast<std::size_t>(k), 0);
    for (auto [u, v] : edges) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++degrees_[u];
        ++degrees_[v];
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());

    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != k)
        throw ValidationError("tree edges are not connected");
    edges_ = std::move(edges);
}

LabeledTree LabeledTree::relabel(std::span<const int> pi) const {
    if (static_cast<int>(pi.size()) != k_)
        throw ValidationError("relabelling has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(k_), 0);
    for (int x : pi) {
        if (x < 0 || x >= k_ || hit[x])
            throw ValidationError("relabelling is not a permutation");
        hit[x] = 1;
    }
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (auto [u, v] : edges_)
        e.emplace_back(pi[u], pi[v]);
    return LabeledTree(k_, std::move(e));
}

OrderedTree::OrderedTree(LabeledTree t, std::vector<int> placement, int n)
    : tree(std::move(t)), s(std::move(placement)) {
    if (static_cast<int>(s.size()) != tree.size())
        throw ValidationError("placement length differs from tree size");
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("placement is not injective");
    if (!sorted.empty() && (sorted.front() < 0 || (n >= 0 && sorted.back() >= n)))
        throw ValidationError("placement leaves the ambient vertex range");
}

OrderedTree::OrderedTree(LabeledTree t, std::vector<int> placement)
    : OrderedTree(std::move(t), std::move(placement), -1) {}

std::vector<Edge> OrderedTree::image_edges() const {
    std::vector<Edge> out;
    out.reserve(tree.edges().size());
    for (auto [u, v] : tree.edges())
        out.push_back(make_edge(s[u], s[v]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> OrderedTree::image_vertices() const {
    std::vector<int> out(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> pruefer_encode(const LabeledTree& t) {
    const int k = t.size();
    if (k < 2)
        throw ValidationError("Prüfer codes need k >= 2");
    std::vector<int> deg = t.degrees();
    std::vector<char> removed(static_cast<std::size_t>(k), 0);
    std::set<int> leaves;
    for (int u = 0; u < k; ++u)
        if (deg[u] == 1)
            leaves.insert(u);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(k - 2));
    for (int step = 0; step < k - 2; ++step) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        removed[leaf] = 1;
        for (int v : t.neighbors(leaf)) {
            if (removed[v])
                continue;
            code.push_back(v);
            if (--deg[v] == 1)
                leaves.insert(v);
        }
    }
    return code;
}

LabeledTree pruefer_decode(std::span<const int> code) {
    const int k = static_cast<int>(code.size()) + 2;
    std::vector<int> deg(static_cast<std::size_t>(k), 1);
    for (int c : code) {
        if (c < 0 || c >= k)
            throw ValidationError("Prüfer entry " + std::to_string(c) + " outside [0, " + std::to_string(k) + ")");
        ++deg[c];
    }
    std::set<int> leaves;
    for (int u = 0; u < k; ++u)
        if (deg[u] == 1)
            leaves.insert(u);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k - 1));
    for (int c : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, c));
        if (--deg[c] == 1)
            leaves.insert(c);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return LabeledTree(k, std::move(edges));
}

std::vector<LabeledTree> enumerate_trees(int k) {
    if (k < 2)
        throw ValidationError("enumerate_trees needs k >= 2");
    if (k > 9)
        throw SizeGuard("enumerate_trees is limited to k <= 9 (k^{k-2} trees)");
    std::vector<int> code(static_cast<std::size_t>(k - 2), 0);
    std::vector<LabeledTree> out;
    while (true) {
        out.push_back(pruefer_decode(code));
        int pos = k - 3;
        while (pos >= 0 && code[pos] == k - 1)
            code[pos--] = 0;
        if (pos < 0)
            break;
        ++code[pos];
    }
    return out;
}

double log_psi(const OrderedTree& ot, std::span<const int> degrees) {
    double out = 0;
    const auto& b = ot.tree.degrees();
    for (int u = 0; u < ot.tree.size(); ++u) {
        if (b[u] == 1)
            continue;
        const int v = ot.s[u];
        if (v < 0 || v >= static_cast<int>(degrees.size()))
            throw ValidationError("placement outside the degree vector");
        out += (b[u] - 1) * std::log(static_cast<double>(degrees[v]));
    }
    return out;
}

double psi(const OrderedTree& ot, std::span<const int> degrees) {
    int dmax = 1;
    for (int v : ot.s) {
        if (v < 0 || v >= static_cast<int>(degrees.size()))
            throw ValidationError("placement outside the degree vector");
        dmax = std::max(dmax, degrees[v]);
    }
    if (ot.tree.size() * std::log(static_cast<double>(dmax)) > 500)
        return std::exp(log_psi(ot, degrees));
    double out = 1;
    const auto& b = ot.tree.degrees();
    for (int u = 0; u < ot.tree.size(); ++u)
        for (int e = 1; e < b[u]; ++e)
            out *= degrees[ot.s[u]];
    return out;
}

bool psi_invariance_check(const OrderedTree& ot, std::span<const int> pi, std::span<const int> degrees) {
    const int k = ot.tree.size();
    LabeledTree moved = ot.tree.relabel(pi);
    // (s o pi^{-1})(pi(u)) = s(u)
    std::vector<int> s2(static_cast<std::size_t>(k));
    for (int u = 0; u < k; ++u)
        s2[pi[u]] = ot.s[u];
    const OrderedTree other(std::move(moved), std::move(s2));
    return psi(other, degrees) == psi(ot, degrees);
}

namespace {

// First edge on the path from `from` to the nearest endpoint of target within a tree image.
Edge first_edge_toward(const std::vector<Edge>& edges, int from, Edge target) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::map<int, int> prev;
    std::queue<int> q;
    q.push(target.first);
    q.push(target.second);
    prev[target.first] = target.first;
    prev[target.second] = target.second;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!prev.count(v)) {
                prev[v] = u;
                q.push(v);
            }
    }
    return make_edge(from, prev.at(from));
}

bool connected_without(const std::set<Edge>& edges, const std::vector<int>& vertices, Edge skip) {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : edges) {
        if (e == skip)
            continue;
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::set<int> seen{vertices.front()};
    std::vector<int> stack{vertices.front()};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (seen.insert(v).second)
                stack.push_back(v);
    }
    return seen.size() == vertices.size();
}

} // namespace

OrderedTree wedge_sum(const OrderedTree& a, const OrderedTree& b) {
    const std::vector<Edge> e1 = a.image_edges();
    const std::vector<Edge> e2 = b.image_edges();
    std::vector<Edge> common;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
    if (common.empty())
        throw DisjointImages("ordered trees share no image edge");
    const Edge e = common.front();

    const std::vector<int> v1 = a.image_vertices();
    const std::vector<int> v2 = b.image_vertices();
    std::vector<int> shared, all;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
    std::set_union(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(all));

    std::set<int> on_common;
    for (auto [u, v] : common) {
        on_common.insert(u);
        on_common.insert(v);
    }
    std::set<Edge> h(e1.begin(), e1.end());
    h.insert(e2.begin(), e2.end());

    // Detach shared vertices that do not touch a common edge from their second-tree path to e.
    for (int w : shared)
        if (!on_common.count(w))
            h.erase(first_edge_toward(e2, w, e));

    std::set<Edge> only_second;
    std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                        std::inserter(only_second, only_second.begin()));
    while (h.size() + 1 > all.size()) {
        bool removed = false;
        for (const Edge& cand : only_second)
            if (h.count(cand) && connected_without(h, all, cand)) {
                h.erase(cand);
                removed = true;
                break;
            }
        if (!removed)
            throw Error("wedge sum: no removable edge on a remaining cycle");
    }

    std::map<int, int> index;
    for (std::size_t i = 0; i < all.size(); ++i)
        index[all[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : h)
        edges.emplace_back(index[u], index[v]);
    return OrderedTree(LabeledTree(static_cast<int>(all.size()), std::move(edges)), all);
}

namespace detail {

EmbeddingPlan plan_embedding(const LabeledTree& t) {
    EmbeddingPlan plan;
    const int k = t.size();
    plan.parent.assign(static_cast<std::size_t>(k), -1);
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        plan.order.push_back(u);
        for (int v : t.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                plan.parent[v] = u;
                q.push(v);
            }
    }
    return plan;
}

} // namespace detail

namespace {

// 1 / prod_u d_{s(u)}^{b_u - 1}
double inverse_psi(const std::vector<int>& b, std::span<const int> s, std::span<const int> degrees) {
    double out = 1;
    for (std::size_t u = 0; u < b.size(); ++u)
        for (int e = 1; e < b[u]; ++e)
            out /= degrees[s[u]];
    return out;
}

void check_degree_vector(const SimpleGraph& g, std::span<const int> degrees) {
    if (static_cast<int>(degrees.size()) != g.vertex_count())
        throw ValidationError("degree vector length differs from the graph's vertex count");
}

} // namespace

double weighted_embedding_sum(const LabeledTree& t, const SimpleGraph& g, std::span<const int> degrees,
                              std::uint64_t budget) {
    check_degree_vector(g, degrees);
    if (t.size() < 2)
        throw ValidationError("F(T,G) needs k >= 2");
    const auto& b = t.degrees();
    double total = 0;
    for_each_embedding(
        t, g, [&](std::span<const int> s) { total += inverse_psi(b, s, degrees); }, budget);
    return total;
}

double z_discrepancy(const LabeledTree& t, const SimpleGraph& g, std::span<const int> reference,
                     std::uint64_t budget) {
    check_degree_vector(g, reference);
    const std::vector<int> own = g.degrees();
    const auto& b = t.degrees();
    double total = 0;
    for_each_embedding(
        t, g,
        [&](std::span<const int> s) {
            total += std::abs(inverse_psi(b, s, reference) - inverse_psi(b, s, own));
        },
        budget);
    return total;
}

double normalized_tree_total(const SimpleGraph& g, int k, std::uint64_t budget) {
    if (k < 2 || k > 6)
        throw SizeGuard("normalized_tree_total supports 2 <= k <= 6");
    const std::vector<int> degrees = g.degrees();
    const double m = 2.0 * static_cast<double>(g.edge_count());
    if (m == 0)
        throw ValidationError("graph has no edges");
    double total = 0;
    for (const LabeledTree& t : enumerate_trees(k))
        total += weighted_embedding_sum(t, g, degrees, budget);
    return total / m;
}

bool bipartite_admissible(const OrderedTree& ot, std::span<const int> part_of) {
    for (auto [u, v] : ot.tree.edges()) {
        const int a = ot.s[u];
        const int b = ot.s[v];
        if (a < 0 || b < 0 || a >= static_cast<int>(part_of.size()) || b >= static_cast<int>(part_of.size()))
            throw ValidationError("placement outside the partition map");
        if (part_of[a] == part_of[b])
            return false;
    }
    return true;
}

} // namespace entropygraph
