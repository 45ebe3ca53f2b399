#include <entropygraph/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include <entropygraph/errors.hpp>
#include <entropygraph/parallel.hpp>
#include <entropygraph/rounding.hpp>

namespace entropygraph {

// ---- helpers ----

void for_each_injection(int n, int k, const std::function<void(std::span<const int>)>& fn) {
    if (k < 0 || k > n)
        return;
    std::vector<int> s(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    if (k == 0) {
        fn(s);
        return;
    }
    int depth = 0;
    while (depth >= 0) {
        if (s[depth] >= 0)
            used[s[depth]] = 0;
        int next = s[depth] + 1;
        while (next < n && used[next])
            ++next;
        if (next == n) {
            s[depth] = -1;
            --depth;
            continue;
        }
        s[depth] = next;
        used[next] = 1;
        if (depth + 1 == k) {
            fn(s);
        } else {
            ++depth;
        }
    }
}

double falling_factorial(int n, int k) {
    double out = 1;
    for (int i = 0; i < k; ++i)
        out *= static_cast<double>(n - i);
    return out;
}

double uniform_chi_square_pvalue(std::span<const std::int64_t> counts, std::int64_t categories) {
    if (categories < 2 || static_cast<std::int64_t>(counts.size()) > categories)
        throw ValidationError("chi-square needs at least two categories covering the counts");
    const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
    if (total <= 0)
        throw ValidationError("chi-square needs observations");
    const double expected = total / static_cast<double>(categories);
    double stat = static_cast<double>(categories - static_cast<std::int64_t>(counts.size())) * expected;
    for (std::int64_t c : counts)
        stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    boost::math::chi_squared dist(static_cast<double>(categories - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

namespace {

double inverse_psi(const std::vector<int>& b, std::span<const int> s, std::span<const int> degrees) {
    double log_v = 0;
    for (std::size_t u = 0; u < b.size(); ++u)
        if (b[u] != 1)
            log_v -= (b[u] - 1) * std::log(static_cast<double>(degrees[s[u]]));
    return std::exp(log_v);
}

void placed_edges(const LabeledTree& t, std::span<const int> s, std::vector<Edge>& out) {
    out.clear();
    for (auto [u, v] : t.edges())
        out.push_back(make_edge(s[u], s[v]));
}

bool admissible(std::span<const Edge> edges, std::span<const int> part_of) {
    if (part_of.empty())
        return true;
    for (auto [u, v] : edges)
        if (part_of[u] == part_of[v])
            return false;
    return true;
}

std::int64_t degree_total(std::span<const int> degrees) {
    return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

void check_k(int k, int n) {
    if (k < 2)
        throw ValidationError("tree size k must be at least 2");
    if (k > n)
        throw ValidationError("tree size k exceeds the vertex count");
}

class IndependentLaw final : public TreeLaw {
public:
    explicit IndependentLaw(BernoulliModel m) : model_(std::move(m)) {}
    int size() const override { return model_.size(); }
    double prob(std::span<const Edge> edges) const override {
        double p = 1;
        for (auto [u, v] : edges)
            p *= model_.p(u, v);
        return p;
    }

private:
    BernoulliModel model_;
};

class EnumeratedLaw final : public TreeLaw {
public:
    explicit EnumeratedLaw(const std::vector<SimpleGraph>& graphs) {
        if (graphs.empty())
            throw EmptyFamily("enumerated law over no graphs");
        n_ = graphs.front().vertex_count();
        if (n_ > 11)
            throw SizeGuard("enumerated laws are limited to 11 vertices");
        for (const auto& g : graphs) {
            if (g.vertex_count() != n_)
                throw ValidationError("graphs differ in vertex count");
            std::uint64_t mask = 0;
            for (auto [u, v] : g.edges())
                mask |= bit(u, v);
            masks_.push_back(mask);
        }
    }
    int size() const override { return n_; }
    double prob(std::span<const Edge> edges) const override {
        std::uint64_t want = 0;
        for (auto [u, v] : edges)
            want |= bit(u, v);
        auto it = cache_.find(want);
        if (it != cache_.end())
            return it->second;
        std::int64_t hits = 0;
        for (std::uint64_t m : masks_)
            hits += (m & want) == want;
        const double p = static_cast<double>(hits) / static_cast<double>(masks_.size());
        cache_.emplace(want, p);
        return p;
    }

private:
    std::uint64_t bit(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        return std::uint64_t{1} << (u * n_ - u * (u + 1) / 2 + (v - u - 1));
    }

    int n_ = 0;
    std::vector<std::uint64_t> masks_;
    mutable std::unordered_map<std::uint64_t, double> cache_;
};

} // namespace

std::shared_ptr<const TreeLaw> independent_law(BernoulliModel model) {
    return std::make_shared<IndependentLaw>(std::move(model));
}

std::shared_ptr<const TreeLaw> enumerated_law(const std::vector<SimpleGraph>& graphs) {
    return std::make_shared<EnumeratedLaw>(graphs);
}

// ---- tree probabilities ----

TreeProbEstimate exact_tree_prob_tilde(const BernoulliModel& model, const OrderedTree& ot) {
    TreeProbEstimate e;
    e.exact = true;
    e.value = 1;
    for (auto [u, v] : ot.image_edges())
        e.value *= model.p(u, v);
    return e;
}

TreeProbEstimate estimate_tree_prob(const GraphDraw& draw, const OrderedTree& ot, std::int64_t n_samples, Rng& rng) {
    if (n_samples < 100)
        throw ValidationError("estimate_tree_prob needs at least 100 samples");
    const auto edges = ot.image_edges();
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < n_samples; ++t) {
        const SimpleGraph g = draw(rng);
        bool all = true;
        for (auto [u, v] : edges)
            if (!g.has_edge(u, v)) {
                all = false;
                break;
            }
        hits += all;
    }
    TreeProbEstimate e;
    e.n_samples = n_samples;
    e.value = static_cast<double>(hits) / static_cast<double>(n_samples);
    e.standard_error = std::sqrt(e.value * (1 - e.value) / static_cast<double>(n_samples));
    return e;
}

TreeProbEstimate exact_tree_prob_uniform(const DegreeSequence& d, const OrderedTree& ot) {
    const auto all = enumerate_gd(d);
    if (all.empty())
        throw Infeasible("degree sequence has no realisation");
    const auto edges = ot.image_edges();
    std::int64_t hits = 0;
    for (const auto& g : all)
        hits += std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return g.has_edge(e.first, e.second); });
    TreeProbEstimate e;
    e.exact = true;
    e.n_samples = static_cast<std::int64_t>(all.size());
    e.value = static_cast<double>(hits) / static_cast<double>(all.size());
    return e;
}

// ---- L statistics ----

std::string to_string(LStatistic s) {
    switch (s) {
    case LStatistic::L_a:
        return "L_a";
    case LStatistic::L_g:
        return "L_g";
    case LStatistic::L_q:
        return "L_q";
    case LStatistic::L_b:
        return "L_b";
    }
    return "?";
}

std::string to_string(LMode m) {
    return m == LMode::exact_tiny ? "exact_tiny" : "monte_carlo";
}

LStatistic parse_l_statistic(const std::string& name) {
    for (auto s : {LStatistic::L_a, LStatistic::L_g, LStatistic::L_q, LStatistic::L_b})
        if (to_string(s) == name)
            return s;
    throw ValidationError("unknown statistic '" + name + "'");
}

LMode parse_l_mode(const std::string& name) {
    if (name == "exact_tiny")
        return LMode::exact_tiny;
    if (name == "monte_carlo")
        return LMode::monte_carlo;
    throw ValidationError("unknown mode '" + name + "'");
}

namespace {

void check_term_budget(int n, int k, std::uint64_t budget) {
    const double terms = falling_factorial(n, k) * std::pow(double(k), double(k - 2));
    if (terms > static_cast<double>(budget))
        throw SizeGuard("exact sum needs " + std::to_string(terms) + " terms, budget " + std::to_string(budget));
}

} // namespace

LReport l_statistic_exact(const TreeLaw& p1, const TreeLaw& p2, std::span<const int> degrees, int k,
                          std::span<const int> part_of, std::uint64_t budget) {
    const int n = static_cast<int>(degrees.size());
    if (p1.size() != n || p2.size() != n)
        throw ValidationError("laws and degree vector differ in size");
    if (!part_of.empty() && static_cast<int>(part_of.size()) != n)
        throw ValidationError("part map length differs from vertex count");
    check_k(k, n);
    check_term_budget(n, k, budget);
    LReport rep;
    rep.mode = LMode::exact_tiny;
    rep.k = k;
    rep.n = n;
    rep.m = degree_total(degrees);
    const double m = static_cast<double>(rep.m);
    std::vector<Edge> edges;
    double signed_total = 0;
    for (const LabeledTree& t : enumerate_trees(k)) {
        double comp = 0;
        for_each_injection(n, k, [&](std::span<const int> s) {
            placed_edges(t, s, edges);
            if (!admissible(edges, part_of))
                return;
            ++rep.terms;
            const double w = inverse_psi(t.degrees(), s, degrees);
            const double diff = p1.prob(edges) - p2.prob(edges);
            comp += w * std::abs(diff);
            signed_total += w * diff;
        });
        rep.components.push_back(comp / m);
    }
    rep.value = std::accumulate(rep.components.begin(), rep.components.end(), 0.0);
    rep.signed_total = signed_total / m;
    return rep;
}

double exact_total_sum(const TreeLaw& law, std::span<const int> degrees, int k, std::uint64_t budget) {
    const int n = static_cast<int>(degrees.size());
    if (law.size() != n)
        throw ValidationError("law and degree vector differ in size");
    check_k(k, n);
    check_term_budget(n, k, budget);
    std::vector<Edge> edges;
    double total = 0;
    for (const LabeledTree& t : enumerate_trees(k))
        for_each_injection(n, k, [&](std::span<const int> s) {
            placed_edges(t, s, edges);
            total += inverse_psi(t.degrees(), s, degrees) * law.prob(edges);
        });
    return total / static_cast<double>(degree_total(degrees));
}

namespace {

// Horvitz-Thompson estimate over sampled placements; p1 from sampled graphs, p2 exact.
LReport l_statistic_monte_carlo(const std::vector<SimpleGraph>& graphs, const TreeLaw& p2,
                                std::span<const int> degrees, int k, std::span<const int> part_of,
                                const LOptions& opts) {
    const int n = static_cast<int>(degrees.size());
    check_k(k, n);
    if (opts.placements_per_tree < 2)
        throw ValidationError("need at least two placements per tree");
    LReport rep;
    rep.mode = LMode::monte_carlo;
    rep.k = k;
    rep.n = n;
    rep.m = degree_total(degrees);
    const double m = static_cast<double>(rep.m);
    const double population = falling_factorial(n, k);
    const auto trees = enumerate_trees(k);
    Rng rng(derive_seed(opts.seed, 0x4c));
    std::vector<Edge> edges;
    std::vector<int> pool(static_cast<std::size_t>(n));
    double variance = 0;
    double tilde_part = 0;
    for (const LabeledTree& t : trees) {
        std::vector<double> terms;
        double tilde_sum = 0;
        for (std::int64_t r = 0; r < opts.placements_per_tree; ++r) {
            std::iota(pool.begin(), pool.end(), 0);
            for (int u = 0; u < k; ++u)
                std::swap(pool[u], pool[u + static_cast<int>(uniform_index(rng, std::uint64_t(n - u)))]);
            std::span<const int> s(pool.data(), static_cast<std::size_t>(k));
            placed_edges(t, s, edges);
            if (!admissible(edges, part_of)) {
                terms.push_back(0);
                continue;
            }
            std::int64_t hits = 0;
            for (const auto& g : graphs)
                hits += std::all_of(edges.begin(), edges.end(),
                                    [&](const Edge& e) { return g.has_edge(e.first, e.second); });
            const double w = inverse_psi(t.degrees(), s, degrees);
            const double q = p2.prob(edges);
            terms.push_back(w * std::abs(static_cast<double>(hits) / static_cast<double>(graphs.size()) - q));
            tilde_sum += w * q;
        }
        const double mean = std::accumulate(terms.begin(), terms.end(), 0.0) / static_cast<double>(terms.size());
        double ss = 0;
        for (double x : terms)
            ss += (x - mean) * (x - mean);
        const double var_mean = ss / static_cast<double>(terms.size() - 1) / static_cast<double>(terms.size());
        rep.components.push_back(population * mean / m);
        variance += population * population * var_mean / (m * m);
        tilde_part += population * tilde_sum / static_cast<double>(opts.placements_per_tree) / m;
        rep.terms += static_cast<std::uint64_t>(opts.placements_per_tree);
    }
    rep.value = std::accumulate(rep.components.begin(), rep.components.end(), 0.0);
    rep.standard_error = std::sqrt(variance);

    // first half of the signed total from the tree sums of (at most 100) sampled graphs
    const std::size_t used = std::min<std::size_t>(graphs.size(), 100);
    double graph_part = 0;
    for (std::size_t g = 0; g < used; ++g)
        for (const LabeledTree& t : trees)
            graph_part += weighted_embedding_sum(t, graphs[g], degrees);
    rep.signed_total = graph_part / static_cast<double>(used) / m - tilde_part;
    rep.note = "Monte-Carlo |p1 - p2| is biased upward by sampling noise in p1";
    return rep;
}

} // namespace

LReport weighted_l_statistic(LStatistic which, const DegreeSequence& d, int k, LMode mode, const LOptions& opts) {
    if (which == LStatistic::L_b)
        throw ValidationError("L_b needs two margin sequences");
    const MaxEntropySolution sol = solve_max_entropy(d);
    const auto tilde = independent_law(BernoulliModel::from_solution(sol));
    const std::vector<int> degrees(d.degrees().begin(), d.degrees().end());
    LReport rep;
    if (mode == LMode::exact_tiny) {
        std::shared_ptr<const TreeLaw> law;
        if (which == LStatistic::L_g) {
            law = enumerated_law(enumerate_gd(d));
        } else if (which == LStatistic::L_a) {
            const DegreeBox box = ga_box(d, opts.a);
            auto all = enumerate_degree_box(box.lower, box.upper);
            std::erase_if(all, [&](const SimpleGraph& g) { return !membership_ga(g, d, opts.a); });
            law = enumerated_law(all);
        } else {
            law = independent_law(BernoulliModel::from_qmodel(QModel(d)));
        }
        rep = l_statistic_exact(*law, *tilde, degrees, k, {}, opts.budget);
    } else {
        std::vector<SimpleGraph> graphs;
        if (which == LStatistic::L_g) {
            graphs = sample_uniform_gd(d, SamplerConfig{opts.seed, SamplerMethod::switch_mcmc, 0, 0}, opts.graphs)
                         .graphs;
        } else if (which == LStatistic::L_a) {
            graphs = sample_uniform_ga(d, opts.a, SamplerConfig{opts.seed, SamplerMethod::toggle_mcmc, 0, 0},
                                       opts.graphs)
                         .graphs;
        } else {
            const BernoulliModel q = BernoulliModel::from_qmodel(QModel(d));
            Rng rng(opts.seed);
            for (std::int64_t t = 0; t < opts.graphs; ++t)
                graphs.push_back(sample_bernoulli(q, rng));
        }
        rep = l_statistic_monte_carlo(graphs, *tilde, degrees, k, {}, opts);
    }
    rep.which = which;
    return rep;
}

LReport weighted_l_statistic_bipartite(const DegreeSequence& rows, const DegreeSequence& cols, int k, LMode mode,
                                       const LOptions& opts) {
    const auto sol = solve_bipartite_max_entropy(rows, cols);
    const auto tilde = independent_law(BernoulliModel::from_bipartite(sol));
    std::vector<int> degrees(rows.degrees().begin(), rows.degrees().end());
    degrees.insert(degrees.end(), cols.degrees().begin(), cols.degrees().end());
    std::vector<int> part(static_cast<std::size_t>(rows.size()), 0);
    part.resize(degrees.size(), 1);
    LReport rep;
    if (mode == LMode::exact_tiny) {
        const auto law = enumerated_law(enumerate_bipartite(rows, cols));
        rep = l_statistic_exact(*law, *tilde, degrees, k, part, opts.budget);
    } else {
        const auto graphs =
            sample_bipartite_uniform(rows, cols, SamplerConfig{opts.seed, SamplerMethod::switch_mcmc, 0, 0},
                                     opts.graphs)
                .graphs;
        rep = l_statistic_monte_carlo(graphs, *tilde, degrees, k, part, opts);
    }
    rep.which = LStatistic::L_b;
    return rep;
}

// ---- total sums ----

TotalSumReport total_sum_check(const std::vector<SimpleGraph>& graphs, const DegreeSequence& d, int k,
                               std::uint64_t budget) {
    if (k < 2 || k > 6)
        throw SizeGuard("total_sum_check supports 2 <= k <= 6");
    if (graphs.empty())
        throw ValidationError("total_sum_check needs graphs");
    const std::vector<int> degrees(d.degrees().begin(), d.degrees().end());
    const int n = d.size();
    const double m = static_cast<double>(d.total());
    const auto trees = enumerate_trees(k);
    TotalSumReport rep;
    rep.k = k;
    rep.target = std::pow(double(k), double(k - 2));
    rep.graphs = static_cast<std::int64_t>(graphs.size());
    double sum = 0, sum_sq = 0, lower = 0, upper = 0, z_total = 0;
    const double slack = n * k * (k - 1) / 2.0;
    for (const auto& g : graphs) {
        double f = 0, z = 0;
        for (const LabeledTree& t : trees) {
            f += weighted_embedding_sum(t, g, degrees, budget);
            z += z_discrepancy(t, g, degrees, budget);
        }
        const double own_m = 2.0 * static_cast<double>(g.edge_count());
        const double x = f / m;
        sum += x;
        sum_sq += x * x;
        z_total += z;
        lower += rep.target * (own_m - slack) / m - z / m;
        upper += rep.target * own_m / m + z / m;
    }
    const double cnt = static_cast<double>(graphs.size());
    rep.estimate = sum / cnt;
    rep.standard_error = cnt > 1 ? std::sqrt(std::max(0.0, sum_sq / cnt - rep.estimate * rep.estimate) / (cnt - 1)) : 0;
    rep.z_bar = z_total / cnt;
    rep.band_lower = lower / cnt;
    rep.band_upper = upper / cnt;
    return rep;
}

// ---- concentration ----

void ConcentrationFamily::add(std::vector<Edge> edges, double omega) {
    if (edges.empty())
        throw ValidationError("family member without edges");
    if (!(omega > 0) || !std::isfinite(omega))
        throw ValidationError("family weights must be positive");
    std::vector<int> ids;
    for (auto e : edges) {
        e = make_edge(e.first, e.second);
        auto [it, fresh] = index_.try_emplace(e, static_cast<int>(ground_.size()));
        if (fresh)
            ground_.push_back(e);
        ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    members_.push_back(std::move(ids));
    omega_.push_back(omega);
}

ConcentrationFamily edge_count_family(int n) {
    ConcentrationFamily fam;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            fam.add({{i, j}}, 1.0);
    return fam;
}

ConcentrationFamily tree_family(std::span<const int> degrees, int k, std::uint64_t budget) {
    const int n = static_cast<int>(degrees.size());
    check_k(k, n);
    check_term_budget(n, k, budget);
    const double m = static_cast<double>(degree_total(degrees));
    ConcentrationFamily fam;
    std::vector<Edge> edges;
    for (const LabeledTree& t : enumerate_trees(k))
        for_each_injection(n, k, [&](std::span<const int> s) {
            placed_edges(t, s, edges);
            fam.add(edges, m / inverse_psi(t.degrees(), s, degrees));
        });
    return fam;
}

JansonParameters janson_parameters(const ConcentrationFamily& fam, const BernoulliModel& model) {
    const auto& ground = fam.ground();
    std::vector<double> pe(ground.size());
    for (std::size_t e = 0; e < ground.size(); ++e)
        pe[e] = model.p(ground[e].first, ground[e].second);
    const auto& mem = fam.members();
    const auto& w = fam.omega();
    const std::size_t count = mem.size();
    std::vector<double> pa(count, 1.0);
    JansonParameters jp;
    double d1 = 0;
    for (std::size_t a = 0; a < count; ++a) {
        for (int e : mem[a])
            pa[a] *= pe[e];
        jp.lambda += pa[a] / w[a];
        d1 += pa[a] / (w[a] * w[a]);
    }
    if (!(jp.lambda > 0))
        throw EmptyFamily("lambda is zero for this family and model");
    jp.delta1 = d1 / jp.lambda;

    std::vector<std::vector<int>> by_edge(ground.size());
    for (std::size_t a = 0; a < count; ++a)
        for (int e : mem[a])
            by_edge[e].push_back(static_cast<int>(a));
    std::vector<std::size_t> stamp(count, static_cast<std::size_t>(-1));
    std::vector<char> in_alpha(ground.size(), 0);
    double d2 = 0;
    for (std::size_t a = 0; a < count; ++a) {
        if (pa[a] == 0)
            continue;
        for (int e : mem[a])
            in_alpha[e] = 1;
        for (int e : mem[a])
            for (int b : by_edge[e]) {
                if (static_cast<std::size_t>(b) == a || stamp[b] == a)
                    continue;
                stamp[b] = a;
                double joint = pa[a];
                for (int f : mem[b])
                    if (!in_alpha[f])
                        joint *= pe[f];
                d2 += joint / (w[a] * w[b]);
            }
        for (int e : mem[a])
            in_alpha[e] = 0;
    }
    jp.delta2 = d2 / jp.lambda;
    return jp;
}

double janson_bound(double lambda, double delta1, double delta2, double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1))
        throw DomainError("epsilon must lie in [0,1]");
    if (!(lambda > 0))
        throw DomainError("lambda must be positive");
    if (!(delta1 + delta2 > 0))
        throw DomainError("delta1 + delta2 must be positive");
    const double phi = epsilon == 1 ? 1.0 : epsilon + (1 - epsilon) * std::log1p(-epsilon);
    return std::exp(-lambda / (delta1 + delta2) * phi);
}

double janson_bound(const JansonParameters& jp, double epsilon) {
    return janson_bound(jp.lambda, jp.delta1, jp.delta2, epsilon);
}

double family_statistic(const ConcentrationFamily& fam, const SimpleGraph& g) {
    const auto& ground = fam.ground();
    std::vector<char> present(ground.size());
    for (std::size_t e = 0; e < ground.size(); ++e)
        present[e] = ground[e].second < g.vertex_count() && g.has_edge(ground[e].first, ground[e].second);
    double s = 0;
    for (std::size_t a = 0; a < fam.size(); ++a)
        if (std::all_of(fam.members()[a].begin(), fam.members()[a].end(), [&](int e) { return present[e]; }))
            s += 1.0 / fam.omega()[a];
    return s;
}

LowerTailReport empirical_lower_tail(const ConcentrationFamily& fam, const BernoulliModel& model, double epsilon,
                                     std::int64_t reps, std::uint64_t seed) {
    if (reps < 10000)
        throw ValidationError("empirical_lower_tail needs at least 10^4 repetitions");
    LowerTailReport rep;
    rep.params = janson_parameters(fam, model);
    rep.epsilon = epsilon;
    rep.bound = janson_bound(rep.params, epsilon);
    rep.reps = reps;
    const double threshold = (1 - epsilon) * rep.params.lambda;

    const auto& ground = fam.ground();
    std::vector<double> pe(ground.size());
    for (std::size_t e = 0; e < ground.size(); ++e)
        pe[e] = model.p(ground[e].first, ground[e].second);
    std::vector<double> inv_w(fam.size());
    for (std::size_t a = 0; a < fam.size(); ++a)
        inv_w[a] = 1.0 / fam.omega()[a];

    constexpr std::int64_t chunk = 10000;
    const std::int64_t chunks = (reps + chunk - 1) / chunk;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(chunks), 0);
    parallel_for_chunks(chunks, [&](std::int64_t c) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
        std::vector<char> present(ground.size());
        const std::int64_t draws = std::min(chunk, reps - c * chunk);
        std::int64_t h = 0;
        for (std::int64_t t = 0; t < draws; ++t) {
            for (std::size_t e = 0; e < ground.size(); ++e)
                present[e] = bernoulli(rng, pe[e]);
            double s = 0;
            for (std::size_t a = 0; a < fam.size(); ++a) {
                bool all = true;
                for (int e : fam.members()[a])
                    if (!present[e]) {
                        all = false;
                        break;
                    }
                if (all)
                    s += inv_w[a];
            }
            h += s <= threshold;
        }
        hits[c] = h;
    });
    const std::int64_t total = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
    rep.frequency = static_cast<double>(total) / static_cast<double>(reps);
    rep.sigma = std::sqrt(rep.bound * (1 - rep.bound) / static_cast<double>(reps));
    return rep;
}

double wedge_constant(int k) {
    if (k < 2)
        throw DomainError("wedge constant needs k >= 2");
    double fact = 1;
    for (int i = 2; i <= 2 * k - 2; ++i)
        fact *= i;
    return std::ldexp(1.0, 2 * (k - 1) * (2 * k - 3)) * fact * fact * (k - 1);
}

DeltaBoundsReport delta_bounds_check(const DegreeSequence& d, const MaxEntropySolution& sol, int k) {
    if (k < 2 || k > 4)
        throw SizeGuard("delta_bounds_check supports 2 <= k <= 4");
    if (sol.size() != d.size())
        throw ValidationError("solution and sequence differ in size");
    const std::vector<int> degrees(d.degrees().begin(), d.degrees().end());
    const auto fam = tree_family(degrees, k);
    DeltaBoundsReport rep;
    rep.k = k;
    rep.m = d.total();
    rep.members = fam.size();
    rep.params = janson_parameters(fam, BernoulliModel::from_solution(sol));
    rep.c_k = wedge_constant(k);
    const double m = static_cast<double>(rep.m);
    // delta1 <= 1/M holds with equality when every psi is 1; allow rounding in the ratio
    rep.delta1_ok = rep.params.delta1 <= (1.0 / m) * (1 + 1e-12);
    rep.delta2_ok = rep.params.delta2 <= rep.c_k / m;
    return rep;
}

double chernoff_bound(double mu, double delta) {
    if (!(mu >= 0))
        throw DomainError("mu must be non-negative");
    if (!(delta > 0))
        throw DomainError("delta must be positive");
    return std::exp(-mu * delta * delta / (2 + delta));
}

// ---- lower-bound construction ----

PipelineReport lower_bound_pipeline(const DegreeSequence& d, double a, const PipelineOptions& opts) {
    if (!(a > 0.5 && a < 1))
        throw DomainError("a must lie in (1/2, 1)");
    if (opts.reps < 1)
        throw ValidationError("pipeline needs at least one repetition");
    const int n = d.size();
    const double a1 = a - 0.5;
    const double log_n = std::log(static_cast<double>(n));
    PipelineReport rep;
    rep.n = n;
    rep.a = a;
    rep.alpha = opts.alpha.value_or(10.0 / a1);
    rep.reps = opts.reps;

    const MaxEntropySolution sol = solve_max_entropy(d);
    rep.set_a = small_degree_set(d, rep.alpha);
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (int i : rep.set_a)
        in_a[i] = 1;
    std::vector<int> set_b;
    for (int i = 0; i < n; ++i)
        if (!in_a[i])
            set_b.push_back(i);

    const RoundingResult t = build_crossing_tree(sol, rep.set_a);
    rep.crossing_edges = static_cast<int>(t.graph.edge_count());
    rep.rounding_violations = static_cast<int>(rounding_violations(t).size());

    for (int j : rep.set_a) {
        double s = 0;
        for (int i : rep.set_a)
            if (i != j)
                s += sol.p(i, j);
        rep.max_d_j_a = std::max(rep.max_d_j_a, s);
        rep.d_j_a_below_quarter += s < 0.25;
    }

    const std::size_t nb = set_b.size();
    std::vector<double> d_jb(nb, 0.0);
    std::vector<double> pb(nb * nb, 0.0);
    for (std::size_t x = 0; x < nb; ++x)
        for (std::size_t y = 0; y < nb; ++y)
            if (x != y) {
                pb[x * nb + y] = sol.p(set_b[x], set_b[y]);
                d_jb[x] += pb[x * nb + y];
            }
    const double j_threshold = std::pow(log_n, 1.0 / a1);
    std::vector<char> in_j(nb, 0);
    for (std::size_t x = 0; x < nb; ++x) {
        in_j[x] = d_jb[x] >= j_threshold;
        rep.j_size += in_j[x];
    }
    const double f_factor = 2 * log_n * log_n + 1;

    struct Tally {
        std::int64_t member = 0, slack = 0, events = 0;
        std::vector<std::int64_t> e_hits, f_hits;
    };
    constexpr std::int64_t chunk = 1000;
    const std::int64_t chunks = (opts.reps + chunk - 1) / chunk;
    std::vector<Tally> tallies(static_cast<std::size_t>(chunks));
    const std::vector<int> t_deg = t.graph.degrees();
    parallel_for_chunks(chunks, [&](std::int64_t c) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(c)));
        Tally& tl = tallies[c];
        tl.e_hits.assign(nb, 0);
        tl.f_hits.assign(nb, 0);
        std::vector<int> deg_b(nb);
        const std::int64_t draws = std::min(chunk, opts.reps - c * chunk);
        for (std::int64_t r = 0; r < draws; ++r) {
            std::fill(deg_b.begin(), deg_b.end(), 0);
            for (std::size_t x = 0; x < nb; ++x)
                for (std::size_t y = x + 1; y < nb; ++y)
                    if (bernoulli(rng, pb[x * nb + y])) {
                        ++deg_b[x];
                        ++deg_b[y];
                    }
            bool member = true, slack = true, events = true;
            for (int i = 0; i < n; ++i) {
                const double gap = std::abs(static_cast<double>(t_deg[i]) - d[i]);
                if (in_a[i]) {
                    member = member && gap < std::pow(d[i], a);
                    slack = slack && gap <= 2 * std::pow(d[i], a);
                }
            }
            for (std::size_t x = 0; x < nb; ++x) {
                const int v = set_b[x];
                const double gap = std::abs(static_cast<double>(t_deg[v] + deg_b[x]) - d[v]);
                member = member && gap < std::pow(d[v], a);
                slack = slack && gap <= 2 * std::pow(d[v], a);
                const bool e_ok = std::abs(deg_b[x] - d_jb[x]) <= std::pow(d_jb[x], a);
                const bool f_ok = deg_b[x] <= f_factor * d_jb[x];
                tl.e_hits[x] += e_ok;
                tl.f_hits[x] += f_ok;
                events = events && (in_j[x] ? e_ok : f_ok);
            }
            tl.member += member;
            tl.slack += slack;
            tl.events += events;
        }
    });
    std::vector<std::int64_t> e_hits(nb, 0), f_hits(nb, 0);
    std::int64_t member = 0, slack = 0, events = 0;
    for (const Tally& tl : tallies) {
        member += tl.member;
        slack += tl.slack;
        events += tl.events;
        for (std::size_t x = 0; x < nb; ++x) {
            e_hits[x] += tl.e_hits[x];
            f_hits[x] += tl.f_hits[x];
        }
    }
    const double reps = static_cast<double>(opts.reps);
    rep.membership = static_cast<double>(member) / reps;
    rep.membership_slack = static_cast<double>(slack) / reps;
    rep.all_events = static_cast<double>(events) / reps;
    for (std::size_t x = 0; x < nb; ++x) {
        if (in_j[x]) {
            ++rep.e_checked;
            const double freq = static_cast<double>(e_hits[x]) / reps;
            const double bound = 1 - 2 * std::exp(-std::pow(d_jb[x], 2 * a1) / 3);
            const double sigma = std::sqrt(std::max(bound, 0.0) * (1 - std::max(bound, 0.0)) / reps);
            rep.e_below_bound += freq < bound - 3 * sigma;
        } else {
            rep.min_f_frequency = std::min(rep.min_f_frequency, static_cast<double>(f_hits[x]) / reps);
        }
    }
    return rep;
}

} // namespace entropygraph
