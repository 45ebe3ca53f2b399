#include <entropygraph/graphs.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>

#include <entropygraph/errors.hpp>
#include <entropygraph/parallel.hpp>

namespace entropygraph {

// ---- Bernoulli models ----

namespace {

constexpr int kCacheLimit = 4096;

std::size_t tri_index(int n, int i, int j) {
    // (i < j) position in the row-major strict upper triangle
    const auto ii = static_cast<std::size_t>(i);
    return ii * static_cast<std::size_t>(n) - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

} // namespace

BernoulliModel::BernoulliModel(int n, ProbabilityFn p, std::vector<int> part_of)
    : n_(n), fn_(std::move(p)), part_of_(std::move(part_of)) {
    if (n < 0)
        throw ValidationError("negative vertex count");
    if (!part_of_.empty() && static_cast<int>(part_of_.size()) != n)
        throw ValidationError("part map length differs from vertex count");
    if (n <= kCacheLimit) {
        cache_.resize(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double v = supported(i, j) ? fn_(i, j) : 0.0;
                if (!(v >= 0 && v <= 1))
                    throw WeightOutOfRange("edge probability outside [0,1] at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
                cache_[tri_index(n, i, j)] = v;
            }
    }
}

bool BernoulliModel::supported(int i, int j) const {
    if (i == j)
        return false;
    return part_of_.empty() || part_of_[i] != part_of_[j];
}

double BernoulliModel::p(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw ValidationError("vertex out of range");
    if (!supported(i, j))
        return 0;
    if (i > j)
        std::swap(i, j);
    if (n_ <= kCacheLimit)
        return cache_[tri_index(n_, i, j)];
    return fn_(i, j);
}

BernoulliModel BernoulliModel::from_solution(const MaxEntropySolution& sol) {
    auto held = std::make_shared<const MaxEntropySolution>(sol);
    return BernoulliModel(sol.size(), [held](int i, int j) { return held->p(i, j); });
}

BernoulliModel BernoulliModel::from_qmodel(const QModel& q) {
    auto held = std::make_shared<const QModel>(q);
    return BernoulliModel(q.size(), [held](int i, int j) { return held->q(i, j); });
}

BernoulliModel BernoulliModel::from_bipartite(const BipartiteMaxEntropySolution& sol) {
    const int n1 = static_cast<int>(sol.r1.size());
    const int n = n1 + static_cast<int>(sol.r2.size());
    std::vector<int> part(static_cast<std::size_t>(n), 1);
    std::fill(part.begin(), part.begin() + n1, 0);
    auto held = std::make_shared<const BipartiteMaxEntropySolution>(sol);
    return BernoulliModel(
        n,
        [held, n1](int i, int j) {
            if (i > j)
                std::swap(i, j);
            return held->p(i, j - n1);
        },
        std::move(part));
}

BernoulliModel BernoulliModel::from_matrix(const std::vector<std::vector<double>>& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(p[i].size()) != n)
            throw ValidationError("probability matrix is not square");
        for (int j = 0; j < i; ++j)
            if (p[i][j] != p[j][i])
                throw ValidationError("probability matrix is not symmetric");
    }
    auto copy = p;
    return BernoulliModel(n, [m = std::move(copy)](int i, int j) { return m[i][j]; });
}

BernoulliModel BernoulliModel::uniform(int n, double p) {
    if (!(p >= 0 && p <= 1))
        throw WeightOutOfRange("p outside [0,1]");
    return BernoulliModel(n, [p](int, int) { return p; });
}

SimpleGraph sample_bernoulli(const BernoulliModel& model, Rng& rng) {
    const int n = model.size();
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (model.supported(i, j) && bernoulli(rng, model.p(i, j)))
                g.add_edge(i, j);
    return g;
}

// ---- exact enumeration ----

std::vector<SimpleGraph> enumerate_degree_box(std::span<const int> lower, std::span<const int> upper,
                                              std::uint64_t budget) {
    const int n = static_cast<int>(lower.size());
    if (static_cast<int>(upper.size()) != n)
        throw ValidationError("degree box bounds differ in length");
    if (n > 10)
        throw SizeGuard("exact enumeration is limited to n <= 10");
    for (int i = 0; i < n; ++i)
        if (lower[i] > upper[i])
            return {};

    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> rem(static_cast<std::size_t>(n), n - 1);
    std::vector<char> chosen(pairs.size(), 0);
    std::vector<SimpleGraph> out;
    std::uint64_t nodes = 0;

    for (int i = 0; i < n; ++i)
        if (rem[i] < lower[i])
            return {};

    auto emit = [&] {
        SimpleGraph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (chosen[e])
                g.add_edge(pairs[e].first, pairs[e].second);
        out.push_back(std::move(g));
    };

    // Iterative DFS; state[t] = 0 untried, 1 tried "edge", 2 tried both.
    std::vector<char> state(pairs.size() + 1, 0);
    std::size_t t = 0;
    while (true) {
        if (t == pairs.size()) {
            emit();
            if (t == 0)
                break;
            --t;
            continue;
        }
        auto [u, v] = pairs[t];
        if (state[t] == 0) {
            // first: leave (u,v) in place as an edge
            if (++nodes > budget)
                throw SizeGuard("degree-box enumeration exceeded its budget");
            state[t] = 1;
            --rem[u];
            --rem[v];
            ++deg[u];
            ++deg[v];
            chosen[t] = 1;
            if (deg[u] <= upper[u] && deg[v] <= upper[v]) {
                ++t;
                state[t] = 0;
            }
            continue;
        }
        if (state[t] == 1) {
            if (++nodes > budget)
                throw SizeGuard("degree-box enumeration exceeded its budget");
            state[t] = 2;
            --deg[u];
            --deg[v];
            chosen[t] = 0;
            if (deg[u] + rem[u] >= lower[u] && deg[v] + rem[v] >= lower[v]) {
                ++t;
                state[t] = 0;
            }
            continue;
        }
        // both branches done: restore and go up
        ++rem[u];
        ++rem[v];
        state[t] = 0;
        if (t == 0)
            break;
        --t;
    }
    return out;
}

std::vector<SimpleGraph> enumerate_gd(const DegreeSequence& d, std::uint64_t budget) {
    return enumerate_degree_box(d.degrees(), d.degrees(), budget);
}

// ---- chains ----

std::string to_string(SamplerMethod m) {
    switch (m) {
    case SamplerMethod::exact_enum:
        return "exact_enum";
    case SamplerMethod::switch_mcmc:
        return "switch_mcmc";
    case SamplerMethod::toggle_mcmc:
        return "toggle_mcmc";
    case SamplerMethod::rejection:
        return "rejection";
    case SamplerMethod::reweighted_rejection:
        return "reweighted_rejection";
    }
    return "unknown";
}

SamplerMethod parse_sampler_method(const std::string& name) {
    for (auto m : {SamplerMethod::exact_enum, SamplerMethod::switch_mcmc, SamplerMethod::toggle_mcmc,
                   SamplerMethod::rejection, SamplerMethod::reweighted_rejection})
        if (to_string(m) == name)
            return m;
    throw ValidationError("unknown sampler method '" + name + "'");
}

namespace {

// Edge list plus a position index for O(1) membership, insertion and removal.
class ChainGraph {
public:
    explicit ChainGraph(const SimpleGraph& g) : n_(g.vertex_count()) {
        if (n_ > 20000)
            throw SizeGuard("chain state limited to 20000 vertices");
        pos_.assign(static_cast<std::size_t>(n_) * n_, -1);
        deg_ = g.degrees();
        for (auto e : g.edges())
            insert(e.first, e.second);
    }

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    int degree(int v) const { return deg_[v]; }
    bool has(int u, int v) const { return pos_[slot(u, v)] >= 0; }

    void insert(int u, int v) {
        pos_[slot(u, v)] = static_cast<int>(edges_.size());
        edges_.push_back(make_edge(u, v));
    }
    void add(int u, int v) {
        insert(u, v);
        ++deg_[u];
        ++deg_[v];
    }
    void remove(int u, int v) {
        const int idx = pos_[slot(u, v)];
        const Edge last = edges_.back();
        edges_[idx] = last;
        pos_[slot(last.first, last.second)] = idx;
        edges_.pop_back();
        pos_[slot(u, v)] = -1;
        --deg_[u];
        --deg_[v];
    }
    void replace(std::size_t idx, Edge e) {
        pos_[slot(edges_[idx].first, edges_[idx].second)] = -1;
        edges_[idx] = make_edge(e.first, e.second);
        pos_[slot(e.first, e.second)] = static_cast<int>(idx);
    }

    SimpleGraph snapshot() const {
        std::vector<Edge> e(edges_);
        std::sort(e.begin(), e.end());
        return SimpleGraph(n_, e);
    }

private:
    std::size_t slot(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        return static_cast<std::size_t>(u) * n_ + v;
    }
    int n_;
    std::vector<int> pos_;
    std::vector<Edge> edges_;
    std::vector<int> deg_;
};

// Degree-preserving double-edge swap.  Returns true when the move was applied.
bool switch_move(ChainGraph& g, Rng& rng) {
    const std::size_t m = g.m();
    if (m < 2)
        return false;
    const std::size_t i = uniform_index(rng, m);
    std::size_t j = uniform_index(rng, m - 1);
    if (j >= i)
        ++j;
    const auto [a, b] = g.edge(i);
    const auto [c, d] = g.edge(j);
    const bool flip = bernoulli(rng, 0.5);
    if (a == c || a == d || b == c || b == d)
        return false;
    const Edge e1 = flip ? Edge{a, c} : Edge{a, d};
    const Edge e2 = flip ? Edge{b, d} : Edge{c, b};
    if (g.has(e1.first, e1.second) || g.has(e2.first, e2.second))
        return false;
    g.replace(i, e1);
    g.replace(j, e2);
    return true;
}

std::int64_t default_burn_in(const SamplerConfig& cfg, int n) {
    if (cfg.burn_in < 0)
        throw ValidationError("burn_in must be >= 0");
    return cfg.burn_in > 0 ? cfg.burn_in : std::max<std::int64_t>(1, 10LL * n * n);
}

std::int64_t default_thinning(const SamplerConfig& cfg, int n) {
    if (cfg.thinning < 0)
        throw ValidationError("thinning must be >= 0");
    return cfg.thinning > 0 ? cfg.thinning : std::max<std::int64_t>(1, 1LL * n * n);
}

template <class Step>
void run_chain(SampleBatch& batch, ChainGraph& state, std::int64_t count, Step&& step) {
    for (std::int64_t s = 0; s < batch.burn_in; ++s) {
        ++batch.stats.proposed;
        batch.stats.accepted += step() ? 1 : 0;
    }
    for (std::int64_t c = 0; c < count; ++c) {
        if (c > 0)
            for (std::int64_t s = 0; s < batch.thinning; ++s) {
                ++batch.stats.proposed;
                batch.stats.accepted += step() ? 1 : 0;
            }
        batch.graphs.push_back(state.snapshot());
    }
}

void check_count(std::int64_t count) {
    if (count < 0)
        throw ValidationError("sample count must be >= 0");
}

} // namespace

SampleBatch sample_uniform_gd(const DegreeSequence& d, const SamplerConfig& cfg, std::int64_t count) {
    check_count(count);
    if (!is_graphical(d.degrees()))
        throw Infeasible("degree sequence is not graphical");
    Rng rng(cfg.seed);
    SampleBatch batch;
    const int n = d.size();
    if (cfg.method == SamplerMethod::exact_enum) {
        const auto all = enumerate_gd(d);
        for (std::int64_t c = 0; c < count; ++c)
            batch.graphs.push_back(all[uniform_index(rng, all.size())]);
        return batch;
    }
    if (cfg.method != SamplerMethod::switch_mcmc)
        throw ValidationError("method " + to_string(cfg.method) + " does not sample G^D");
    batch.burn_in = default_burn_in(cfg, n);
    batch.thinning = default_thinning(cfg, n);
    ChainGraph state(havel_hakimi(d));
    run_chain(batch, state, count, [&] { return switch_move(state, rng); });
    return batch;
}

DegreeBox ga_box(const DegreeSequence& d, double a) {
    if (!(a > 0.5 && a < 1))
        throw DomainError("a must lie in (1/2, 1)");
    DegreeBox box;
    const int n = d.size();
    for (int i = 0; i < n; ++i) {
        const double slack = std::pow(static_cast<double>(d[i]), a);
        // largest integer strictly below d_i^a
        int delta = static_cast<int>(std::ceil(slack)) - 1;
        if (delta < 0)
            delta = 0;
        box.lower.push_back(std::max(0, d[i] - delta));
        box.upper.push_back(std::min(n - 1, d[i] + delta));
    }
    return box;
}

bool membership_ga(const SimpleGraph& g, const DegreeSequence& d, double a) {
    if (!(a > 0.5 && a < 1))
        throw DomainError("a must lie in (1/2, 1)");
    if (g.vertex_count() != d.size())
        throw ValidationError("graph and degree sequence differ in size");
    for (int i = 0; i < d.size(); ++i)
        if (!(std::abs(g.degree(i) - d[i]) < std::pow(static_cast<double>(d[i]), a)))
            return false;
    return true;
}

SampleBatch sample_uniform_ga(const DegreeSequence& d, double a, const SamplerConfig& cfg, std::int64_t count) {
    check_count(count);
    const DegreeBox box = ga_box(d, a);
    if (!is_graphical(d.degrees()))
        throw Infeasible("degree sequence is not graphical; no witness to start from");
    Rng rng(cfg.seed);
    SampleBatch batch;
    const int n = d.size();

    if (cfg.method == SamplerMethod::rejection) {
        const auto all = enumerate_degree_box(box.lower, box.upper);
        if (all.empty())
            throw EmptyFamily("almost-given family is empty");
        for (std::int64_t c = 0; c < count; ++c)
            batch.graphs.push_back(all[uniform_index(rng, all.size())]);
        return batch;
    }

    if (cfg.method == SamplerMethod::reweighted_rejection) {
        if (n > 12)
            throw SizeGuard("reweighted rejection is a cross-check for n <= 12");
        const MaxEntropySolution sol = solve_max_entropy(d);
        const BernoulliModel model = BernoulliModel::from_solution(sol);
        // P(tilde G = G) is proportional to prod r_i^{d_i(G)}; reweighting by
        // prod r_i^{d_i - d_i(G)} over its per-coordinate maximum makes the accepted law uniform.
        double log_norm = 0;
        for (int i = 0; i < n; ++i)
            log_norm += std::max((d[i] - box.lower[i]) * sol.log_r[i], (d[i] - box.upper[i]) * sol.log_r[i]);
        const std::uint64_t cap = 100'000'000;
        for (std::int64_t c = 0; c < count; ++c) {
            while (true) {
                if (++batch.stats.proposed > cap)
                    throw SizeGuard("reweighted rejection exceeded its proposal budget");
                SimpleGraph g = sample_bernoulli(model, rng);
                if (!membership_ga(g, d, a))
                    continue;
                double log_w = -log_norm;
                for (int i = 0; i < n; ++i)
                    log_w += (d[i] - g.degree(i)) * sol.log_r[i];
                if (uniform01(rng) < std::exp(log_w)) {
                    ++batch.stats.accepted;
                    batch.graphs.push_back(std::move(g));
                    break;
                }
            }
        }
        return batch;
    }

    if (cfg.method != SamplerMethod::toggle_mcmc)
        throw ValidationError("method " + to_string(cfg.method) + " does not sample the almost-given family");

    int frozen = 0;
    for (int i = 0; i < n; ++i)
        if (box.lower[i] == d[i] && box.upper[i] == d[i])
            ++frozen;
    if (frozen > 0)
        batch.warnings.push_back(std::to_string(frozen) +
                                 " vertices have zero degree slack; their degrees move only via switch moves");

    batch.burn_in = default_burn_in(cfg, n);
    batch.thinning = default_thinning(cfg, n);
    ChainGraph state(havel_hakimi(d));
    auto in_box = [&](int v, int delta) {
        const int x = state.degree(v) + delta;
        return x >= box.lower[v] && x <= box.upper[v];
    };
    // Half the steps toggle one pair, half propose a switch; both proposals are symmetric.
    auto step = [&] {
        if (n < 2)
            return false;
        if (bernoulli(rng, 0.5))
            return switch_move(state, rng);
        const int u = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n - 1)));
        if (v >= u)
            ++v;
        if (state.has(u, v)) {
            if (!in_box(u, -1) || !in_box(v, -1))
                return false;
            state.remove(u, v);
        } else {
            if (!in_box(u, 1) || !in_box(v, 1))
                return false;
            state.add(u, v);
        }
        return true;
    };
    run_chain(batch, state, count, step);
    return batch;
}

// ---- bipartite ----

SimpleGraph bipartite_realisation(const DegreeSequence& rows, const DegreeSequence& cols) {
    if (rows.total() != cols.total())
        throw SumMismatch("row total " + std::to_string(rows.total()) + " != column total " +
                          std::to_string(cols.total()));
    if (!gale_ryser(rows, cols))
        throw Infeasible("margins fail the Gale–Ryser test");
    const int n1 = rows.size();
    const int n2 = cols.size();
    SimpleGraph g(n1 + n2);
    std::vector<int> remaining(cols.degrees().begin(), cols.degrees().end());
    std::vector<int> order(static_cast<std::size_t>(n2));
    for (int i = n1 - 1; i >= 0; --i) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return remaining[a] > remaining[b]; });
        for (int t = 0; t < rows[i]; ++t) {
            const int j = order[t];
            if (remaining[j] == 0)
                throw Infeasible("greedy realisation failed");
            --remaining[j];
            g.add_edge(i, n1 + j);
        }
    }
    return g;
}

std::vector<SimpleGraph> enumerate_bipartite(const DegreeSequence& rows, const DegreeSequence& cols) {
    const int n1 = rows.size();
    const int n2 = cols.size();
    if (n1 * n2 > 30)
        throw SizeGuard("exact bipartite enumeration is limited to n1*n2 <= 30");
    std::vector<SimpleGraph> out;
    std::vector<int> rdeg(static_cast<std::size_t>(n1), 0), cdeg(static_cast<std::size_t>(n2), 0);
    std::vector<char> cell(static_cast<std::size_t>(n1 * n2), 0);
    // Recursive over cells in row-major order with margin pruning.
    std::function<void(int)> rec = [&](int c) {
        if (c == n1 * n2) {
            SimpleGraph g(n1 + n2);
            for (int k = 0; k < n1 * n2; ++k)
                if (cell[k])
                    g.add_edge(k / n2, n1 + k % n2);
            out.push_back(std::move(g));
            return;
        }
        const int i = c / n2;
        const int j = c % n2;
        const int row_left = n2 - j - 1;
        const int col_left = n1 - i - 1;
        for (int v : {1, 0}) {
            rdeg[i] += v;
            cdeg[j] += v;
            cell[c] = static_cast<char>(v);
            const bool ok = rdeg[i] <= rows[i] && cdeg[j] <= cols[j] && rdeg[i] + row_left >= rows[i] &&
                            cdeg[j] + col_left >= cols[j];
            if (ok)
                rec(c + 1);
            rdeg[i] -= v;
            cdeg[j] -= v;
            cell[c] = 0;
        }
    };
    rec(0);
    return out;
}

SampleBatch sample_bipartite_uniform(const DegreeSequence& rows, const DegreeSequence& cols,
                                     const SamplerConfig& cfg, std::int64_t count) {
    check_count(count);
    const SimpleGraph start = bipartite_realisation(rows, cols);
    Rng rng(cfg.seed);
    SampleBatch batch;
    const int n1 = rows.size();
    const int n2 = cols.size();

    if (cfg.method == SamplerMethod::exact_enum) {
        const auto all = enumerate_bipartite(rows, cols);
        for (std::int64_t c = 0; c < count; ++c)
            batch.graphs.push_back(all[uniform_index(rng, all.size())]);
        return batch;
    }
    if (cfg.method != SamplerMethod::switch_mcmc)
        throw ValidationError("bipartite sampling supports exact_enum and switch_mcmc");

    batch.burn_in = default_burn_in(cfg, n1 + n2);
    batch.thinning = default_thinning(cfg, n1 + n2);
    ChainGraph state(start);
    auto step = [&] {
        // lazy half step: the swap graph of a 2x2 block is bipartite, so the
        // plain chain can be periodic
        if (n1 < 2 || n2 < 2 || bernoulli(rng, 0.5))
            return false;
        const int i = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n1)));
        int i2 = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n1 - 1)));
        if (i2 >= i)
            ++i2;
        const int j = n1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n2)));
        int j2 = n1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n2 - 1)));
        if (j2 >= j)
            ++j2;
        const bool a = state.has(i, j), b = state.has(i2, j2), c = state.has(i, j2), d = state.has(i2, j);
        if (a && b && !c && !d) {
            state.remove(i, j);
            state.remove(i2, j2);
            state.add(i, j2);
            state.add(i2, j);
            return true;
        }
        if (!a && !b && c && d) {
            state.remove(i, j2);
            state.remove(i2, j);
            state.add(i, j);
            state.add(i2, j2);
            return true;
        }
        return false;
    };
    run_chain(batch, state, count, step);
    return batch;
}

// ---- conditional probability identity ----

ConditionalProbabilityReport conditional_probability_identity_check(const DegreeSequence& d,
                                                                    std::int64_t n_samples,
                                                                    std::uint64_t seed) {
    if (n_samples < 1)
        throw ValidationError("need at least one draw");
    ConditionalProbabilityReport rep;
    rep.family_size = static_cast<std::int64_t>(enumerate_gd(d).size());
    const MaxEntropySolution sol = solve_max_entropy(d);
    rep.h1 = sol.h1;
    rep.predicted = static_cast<double>(rep.family_size) * std::exp(-sol.h1);
    const BernoulliModel model = BernoulliModel::from_solution(sol);

    constexpr std::int64_t chunk = 10000;
    const std::int64_t chunks = (n_samples + chunk - 1) / chunk;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(chunks), 0);
    const std::vector<int> target(d.degrees().begin(), d.degrees().end());
    parallel_for_chunks(chunks, [&](std::int64_t c) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
        const std::int64_t draws = std::min(chunk, n_samples - c * chunk);
        std::int64_t h = 0;
        for (std::int64_t s = 0; s < draws; ++s)
            if (sample_bernoulli(model, rng).degrees() == target)
                ++h;
        hits[c] = h;
    });
    rep.draws = n_samples;
    rep.hits = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
    rep.empirical = static_cast<double>(rep.hits) / static_cast<double>(n_samples);
    rep.standard_error = std::sqrt(rep.predicted * (1 - rep.predicted) / static_cast<double>(n_samples));
    return rep;
}

std::string graph_key(const SimpleGraph& g) {
    std::string key;
    for (auto [u, v] : g.edges()) {
        key += std::to_string(u);
        key += '-';
        key += std::to_string(v);
        key += ',';
    }
    return key;
}

} // namespace entropygraph
