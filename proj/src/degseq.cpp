#include <entropygraph/degseq.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <entropygraph/errors.hpp>

namespace entropygraph {

DegreeSequence::DegreeSequence(std::vector<int> degrees) {
    if (degrees.empty())
        throw ValidationError("degree sequence is empty");
    for (int d : degrees)
        if (d < 1)
            throw ValidationError("degrees must be positive, got " + std::to_string(d));

    original_.resize(degrees.size());
    std::iota(original_.begin(), original_.end(), 0);
    std::stable_sort(original_.begin(), original_.end(),
                     [&](int a, int b) { return degrees[a] < degrees[b]; });
    degrees_.resize(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i)
        degrees_[i] = degrees[static_cast<std::size_t>(original_[i])];
    total_ = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

namespace {

// Margins for an ascending sequence.
std::vector<EGMargin> eg_margins(std::span<const int> asc) {
    const int n = static_cast<int>(asc.size());
    std::vector<std::int64_t> prefix(asc.size() + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + asc[i];

    std::vector<EGMargin> margins(asc.size());
    for (int k = 1; k <= n; ++k) {
        const int rest = n - k;
        const auto below = std::lower_bound(asc.begin(), asc.begin() + rest, k) - asc.begin();
        EGMargin m;
        m.lhs = prefix[n] - prefix[rest];
        m.rhs = std::int64_t{k} * (k - 1) + prefix[below] + std::int64_t{k} * (rest - below);
        margins[k - 1] = m;
    }
    return margins;
}

} // namespace

EGReport check_erdos_gallai(const DegreeSequence& d) {
    EGReport r;
    r.margins = eg_margins(d.degrees());
    r.strict_pass = std::all_of(r.margins.begin(), r.margins.end(),
                                [](const EGMargin& m) { return m.lhs < m.rhs; });
    r.nonstrict_pass = std::all_of(r.margins.begin(), r.margins.end(),
                                   [](const EGMargin& m) { return m.lhs <= m.rhs; });
    return r;
}

bool is_graphical(std::span<const int> degrees) {
    std::vector<int> asc(degrees.begin(), degrees.end());
    std::int64_t total = 0;
    for (int x : asc) {
        if (x < 0 || x > static_cast<int>(asc.size()) - 1)
            return false;
        total += x;
    }
    if (total % 2 != 0)
        return false;
    std::sort(asc.begin(), asc.end());
    for (const auto& m : eg_margins(asc))
        if (m.lhs > m.rhs)
            return false;
    return true;
}

std::int64_t s_k(const DegreeSequence& d, int k) {
    const int n = d.size();
    if (k < 1 || k > n)
        throw ValidationError("s_k index out of range: " + std::to_string(k));
    const int count = std::min(d[k - 1], n);
    std::int64_t sum = 0;
    for (int i = n - count; i < n; ++i)
        sum += d[i];
    return sum;
}

int ell(const DegreeSequence& d) {
    for (int k = d.size(); k >= 1; --k)
        if (2 * s_k(d, k) <= d.total())
            return k;
    throw NoFeasibleK("no k with S_k <= M/2");
}

TypeClassification classify_type(const DegreeSequence& d, double epsilon, double nu) {
    if (!(epsilon > 0) || !(nu > 0))
        throw ValidationError("epsilon and nu must be positive");
    TypeClassification c;
    c.epsilon = epsilon;
    c.nu = nu;
    const double n = d.size();
    const double m = static_cast<double>(d.total());
    c.is_strict_graphic = check_erdos_gallai(d).strict_pass;
    c.m_even = d.total() % 2 == 0;
    c.m_large_enough = std::pow(n, 1.0 + epsilon) <= m;
    try {
        c.ell = ell(d);
    } catch (const NoFeasibleK&) {
        // No admissible k: the gap condition cannot be evaluated and is reported as failing.
        c.ell = 0;
        c.nu_condition = false;
        return c;
    }
    const double gap = d.max() - d[c.ell - 1] + 1;
    c.nu_condition = std::sqrt(n / m) * gap < std::pow(n, -nu);
    return c;
}

double dense_eg_objective(const DegreeSequence& d, std::span<const int> subset) {
    const int n = d.size();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : subset)
        in.at(static_cast<std::size_t>(v)) = 1;
    const std::int64_t b = static_cast<std::int64_t>(subset.size());
    std::int64_t value = b * (b - 1);
    for (int j = 0; j < n; ++j) {
        if (in[j])
            value -= d[j];
        else
            value += std::min<std::int64_t>(d[j], b);
    }
    return static_cast<double>(value) / (static_cast<double>(n) * n);
}

DenseEGResult check_dense_eg(const DegreeSequence& d, double c1, double c2, double c3) {
    if (!(c2 > 0 && c2 <= c1 && c1 < 1 && c3 > 0))
        throw ValidationError("dense EG constants must satisfy 0 < c2 <= c1 < 1, c3 > 0");
    const int n = d.size();
    DenseEGResult r;
    r.degree_bounds = true;
    for (int i = 0; i < n; ++i)
        if (d[i] < c2 * (n - 1) || d[i] > c1 * (n - 1))
            r.degree_bounds = false;

    std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + d[i];

    const int min_b = std::max(1, static_cast<int>(std::ceil(c2 * n - 1e-12)));
    r.infimum = std::numeric_limits<double>::infinity();
    for (int b = min_b; b <= n; ++b) {
        // B = the b largest degrees; the complement is the prefix [0, n-b).
        const int rest = n - b;
        std::int64_t outside = 0;
        for (int j = 0; j < rest; ++j)
            outside += std::min(d[j], b);
        const std::int64_t value = outside + std::int64_t{b} * (b - 1) - (prefix[n] - prefix[rest]);
        const double scaled = static_cast<double>(value) / (static_cast<double>(n) * n);
        if (scaled < r.infimum) {
            r.infimum = scaled;
            r.minimizing_size = b;
        }
    }
    r.gap_condition = r.infimum >= c3;
    return r;
}

std::vector<int> small_degree_set(const DegreeSequence& d, double alpha) {
    if (!(alpha > 0) || d.size() < 2)
        throw ValidationError("small_degree_set needs alpha > 0 and n >= 2");
    const double threshold = std::pow(std::log(static_cast<double>(d.size())), alpha);
    std::vector<int> out;
    for (int i = 0; i < d.size(); ++i)
        if (d[i] <= threshold)
            out.push_back(i);
    return out;
}

SimpleGraph havel_hakimi(std::span<const int> degrees) {
    const int n = static_cast<int>(degrees.size());
    SimpleGraph g(n);
    std::vector<int> remaining(degrees.begin(), degrees.end());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int x : remaining)
        if (x < 0)
            throw Infeasible("negative degree");

    while (true) {
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return remaining[a] > remaining[b]; });
        const int v = order[0];
        const int need = remaining[v];
        if (need == 0)
            break;
        if (need > n - 1)
            throw Infeasible("degree sequence is not graphical");
        for (int t = 1; t <= need; ++t) {
            const int u = order[t];
            if (remaining[u] == 0)
                throw Infeasible("degree sequence is not graphical");
            g.add_edge(v, u);
            --remaining[u];
        }
        remaining[v] = 0;
    }
    return g;
}

SimpleGraph havel_hakimi(const DegreeSequence& d) {
    return havel_hakimi(d.degrees());
}

} // namespace entropygraph
