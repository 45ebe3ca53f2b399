#include <entropygraph/rounding.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <entropygraph/errors.hpp>

namespace entropygraph {

WeightedBipartiteGraph::WeightedBipartiteGraph(int n1, int n2) {
    if (n1 < 0 || n2 < 0)
        throw ValidationError("part sizes must be non-negative");
    part_of_.assign(static_cast<std::size_t>(n1), 0);
    part_of_.resize(static_cast<std::size_t>(n1 + n2), 1);
}

WeightedBipartiteGraph::WeightedBipartiteGraph(std::vector<int> part_of) : part_of_(std::move(part_of)) {
    for (int p : part_of_)
        if (p != 0 && p != 1)
            throw ValidationError("part labels must be 0 or 1");
}

void WeightedBipartiteGraph::set_weight(int u, int v, double w) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("vertex out of range");
    if (part_of_[u] == part_of_[v])
        throw ValidationError("weighted edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " lies inside one part");
    if (!(w >= 0.0 && w <= 1.0))
        throw WeightOutOfRange("weight " + std::to_string(w) + " outside [0,1]");
    if (w == 0.0)
        w_.erase(make_edge(u, v));
    else
        w_[make_edge(u, v)] = w;
}

double WeightedBipartiteGraph::weight(int u, int v) const {
    auto it = w_.find(make_edge(u, v));
    return it == w_.end() ? 0.0 : it->second;
}

std::vector<std::pair<Edge, double>> WeightedBipartiteGraph::support() const {
    return {w_.begin(), w_.end()};
}

std::vector<double> WeightedBipartiteGraph::fractional_degrees() const {
    std::vector<double> d(part_of_.size(), 0.0);
    for (const auto& [e, w] : w_) {
        d[e.first] += w;
        d[e.second] += w;
    }
    return d;
}

std::string to_string(Augmentation::Kind k) {
    return k == Augmentation::Kind::cycle ? "cycle" : "path";
}

int snapped_floor(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= kDeathTolerance)
        return static_cast<int>(r);
    return static_cast<int>(std::floor(x));
}

namespace {

struct LiveEdge {
    int u, v;
    double w;
    bool live;
};

class Rounder {
public:
    explicit Rounder(const WeightedBipartiteGraph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_)) {
        for (const auto& [e, w] : g.support()) {
            edges_.push_back({e.first, e.second, w, true});
            snap(edges_.back());
        }
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            adj_[edges_[id].u].push_back(static_cast<int>(id));
            adj_[edges_[id].v].push_back(static_cast<int>(id));
        }
        for (int v = 0; v < n_; ++v)
            std::sort(adj_[v].begin(), adj_[v].end(), [&](int a, int b) { return other(a, v) < other(b, v); });
    }

    RoundingResult run() {
        RoundingResult out;
        while (auto cyc = find_cycle())
            out.trace.push_back(augment(Augmentation::Kind::cycle, *cyc));
        while (auto path = find_path())
            out.trace.push_back(augment(Augmentation::Kind::path, *path));
        out.graph = SimpleGraph(n_);
        for (const auto& e : edges_)
            if (e.w == 1.0)
                out.graph.add_edge(e.u, e.v);
        return out;
    }

private:
    int other(int id, int v) const { return edges_[id].u == v ? edges_[id].v : edges_[id].u; }

    static void snap(LiveEdge& e) {
        if (e.w <= kDeathTolerance) {
            e.w = 0.0;
            e.live = false;
        } else if (e.w >= 1.0 - kDeathTolerance) {
            e.w = 1.0;
            e.live = false;
        }
    }

    struct Walk {
        std::vector<int> vertices;
        std::vector<int> edge_ids;
    };

    std::optional<Walk> find_cycle() const {
        std::vector<int> state(static_cast<std::size_t>(n_), 0); // 0 new, 1 on stack, 2 done
        std::vector<int> parent_edge(static_cast<std::size_t>(n_), -1);
        std::vector<std::size_t> cursor(static_cast<std::size_t>(n_), 0);
        for (int root = 0; root < n_; ++root) {
            if (state[root])
                continue;
            std::vector<int> stack{root};
            state[root] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                if (cursor[v] == adj_[v].size()) {
                    state[v] = 2;
                    stack.pop_back();
                    continue;
                }
                const int id = adj_[v][cursor[v]++];
                if (!edges_[id].live || id == parent_edge[v])
                    continue;
                const int u = other(id, v);
                if (state[u] == 1) {
                    Walk cyc;
                    auto pos = std::find(stack.begin(), stack.end(), u);
                    cyc.vertices.assign(pos, stack.end());
                    for (auto it = pos + 1; it != stack.end(); ++it)
                        cyc.edge_ids.push_back(parent_edge[*it]);
                    cyc.edge_ids.push_back(id);
                    return cyc;
                }
                if (state[u] == 0) {
                    state[u] = 1;
                    parent_edge[u] = id;
                    stack.push_back(u);
                }
            }
        }
        return std::nullopt;
    }

    int live_degree(int v) const {
        int c = 0;
        for (int id : adj_[v])
            c += edges_[id].live;
        return c;
    }

    // Maximal live path from the smallest leaf; the live subgraph is a forest here.
    std::optional<Walk> find_path() const {
        int start = -1;
        for (int v = 0; v < n_ && start < 0; ++v)
            if (live_degree(v) == 1)
                start = v;
        if (start < 0)
            return std::nullopt;
        Walk p;
        p.vertices.push_back(start);
        int prev_edge = -1;
        int v = start;
        for (;;) {
            int next = -1;
            for (int id : adj_[v])
                if (edges_[id].live && id != prev_edge) {
                    next = id;
                    break;
                }
            if (next < 0)
                break;
            p.edge_ids.push_back(next);
            v = other(next, v);
            p.vertices.push_back(v);
            prev_edge = next;
        }
        return p;
    }

    Augmentation augment(Augmentation::Kind kind, const Walk& walk) {
        double c = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < walk.edge_ids.size(); ++t) {
            const double w = edges_[walk.edge_ids[t]].w;
            c = std::min(c, t % 2 == 0 ? 1.0 - w : w);
        }
        Augmentation a;
        a.kind = kind;
        a.walk = walk.vertices;
        a.c = c;
        for (std::size_t t = 0; t < walk.edge_ids.size(); ++t) {
            LiveEdge& e = edges_[walk.edge_ids[t]];
            e.w += t % 2 == 0 ? c : -c;
            snap(e);
            if (!e.live)
                a.killed.push_back({e.u, e.v});
        }
        if (a.killed.empty())
            throw Error("rounding step killed no edge");
        return a;
    }

    int n_;
    std::vector<LiveEdge> edges_;
    std::vector<std::vector<int>> adj_;
};

} // namespace

RoundingResult round_to_integral(const WeightedBipartiteGraph& w) {
    Rounder r(w);
    RoundingResult out = r.run();
    out.initial_degrees = w.fractional_degrees();
    out.support_size = w.support().size();
    return out;
}

std::vector<int> rounding_violations(const RoundingResult& r) {
    std::vector<int> bad;
    for (int v = 0; v < r.graph.vertex_count(); ++v) {
        const int f = snapped_floor(r.initial_degrees[v]);
        const int b = r.graph.degree(v);
        if (b != f && b != f + 1)
            bad.push_back(v);
    }
    return bad;
}

RoundingResult build_crossing_tree(const MaxEntropySolution& sol, std::span<const int> a) {
    const int n = sol.size();
    std::vector<int> part(static_cast<std::size_t>(n), 1);
    for (int i : a) {
        if (i < 0 || i >= n)
            throw ValidationError("vertex " + std::to_string(i) + " out of range");
        part[i] = 0;
    }
    WeightedBipartiteGraph w(part);
    for (int i : a)
        for (int j = 0; j < n; ++j)
            if (part[j] == 1)
                w.set_weight(i, j, sol.p(i, j));
    return round_to_integral(w);
}

} // namespace entropygraph
