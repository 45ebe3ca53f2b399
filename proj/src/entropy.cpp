#include <entropygraph/entropy.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include <entropygraph/errors.hpp>
#include "numeric.hpp"

namespace entropygraph {

using detail::sigmoid;
using detail::softplus;

double binary_entropy(double x) {
    if (x < 0 || x > 1)
        throw DomainError("binary entropy argument outside [0, 1]");
    if (x == 0 || x == 1)
        return 0;
    return -x * std::log(x) - (1 - x) * std::log1p(-x);
}

namespace {

// H(p) for p = sigmoid(s), without forming p near 0 or 1.
double entropy_of_logit(double s) {
    return softplus(s) - sigmoid(s) * s;
}

// Distinct values of a sorted sequence with multiplicities.
struct Classes {
    std::vector<double> value;
    std::vector<double> count;
    std::vector<int> of_vertex;

    explicit Classes(std::span<const int> sorted) {
        of_vertex.reserve(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i == 0 || sorted[i] != sorted[i - 1]) {
                value.push_back(sorted[i]);
                count.push_back(0);
            }
            count.back() += 1;
            of_vertex.push_back(static_cast<int>(value.size()) - 1);
        }
    }
    int size() const { return static_cast<int>(value.size()); }
};

// Expected class degrees e_c = sum_{j != i} p_ij for a vertex i in class c.
std::vector<double> class_expected(const Classes& cl, const std::vector<double>& x) {
    const int k = cl.size();
    std::vector<double> e(static_cast<std::size_t>(k), 0.0);
    for (int c = 0; c < k; ++c) {
        double s = 0;
        for (int c2 = 0; c2 < k; ++c2) {
            const double m = c2 == c ? cl.count[c2] - 1 : cl.count[c2];
            if (m > 0)
                s += m * sigmoid(x[c] + x[c2]);
        }
        e[c] = s;
    }
    return e;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

// Dual objective restricted to class-constant points.
double class_dual(const Classes& cl, const std::vector<double>& x) {
    const int k = cl.size();
    double f = 0;
    for (int c = 0; c < k; ++c) {
        f -= cl.count[c] * cl.value[c] * x[c];
        f += 0.5 * cl.count[c] * (cl.count[c] - 1) * softplus(2 * x[c]);
        for (int c2 = c + 1; c2 < k; ++c2)
            f += cl.count[c] * cl.count[c2] * softplus(x[c] + x[c2]);
    }
    return f;
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double t) { return std::isfinite(t); });
}

std::vector<double> expand(const Classes& cl, const std::vector<double>& per_class) {
    std::vector<double> out(cl.of_vertex.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = per_class[static_cast<std::size_t>(cl.of_vertex[i])];
    return out;
}

} // namespace

double MaxEntropySolution::p(int i, int j) const {
    if (i == j)
        return 0;
    return sigmoid(log_r.at(static_cast<std::size_t>(i)) + log_r.at(static_cast<std::size_t>(j)));
}

double MaxEntropySolution::max_residual() const {
    double out = 0;
    for (double x : degree_residuals)
        out = std::max(out, std::abs(x));
    return out;
}

MaxEntropySolution solve_max_entropy(const DegreeSequence& d, const SolverOptions& opts) {
    if (d.size() < 2)
        throw BoundaryOptimum("need at least two vertices");
    if (!check_erdos_gallai(d).strict_pass)
        throw BoundaryOptimum("strict Erdős–Gallai fails; the entropy maximiser is on the boundary");
    if (!(opts.tol > 0) || opts.max_iter < 1)
        throw ValidationError("solver needs tol > 0 and max_iter >= 1");

    const Classes cl(d.degrees());
    const int k = cl.size();
    const double sqrt_m = std::sqrt(static_cast<double>(d.total()));

    std::vector<double> x(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
        x[c] = std::log(cl.value[c] / sqrt_m);

    std::vector<double> e = class_expected(cl, x);
    double residual = max_abs_diff(e, cl.value);
    int iter = 0;
    int stalled = 0;
    bool newton = false;

    // Fixed point, written in log coordinates: x_c += log(d_c / e_c).
    while (!opts.newton_only && residual > opts.tol && iter < opts.max_iter && stalled < 10) {
        for (int c = 0; c < k; ++c)
            x[c] += std::log(cl.value[c] / e[c]);
        ++iter;
        if (!all_finite(x))
            break;
        e = class_expected(cl, x);
        const double next = max_abs_diff(e, cl.value);
        stalled = next < residual ? 0 : stalled + 1;
        residual = next;
    }

    Eigen::VectorXd grad(k);
    Eigen::MatrixXd hess(k, k);
    std::vector<double> trial(x.size());
    // One damped Newton step on the dual.  In polish mode only a strict residual
    // decrease is accepted, since F no longer resolves progress there.
    auto newton_step = [&](bool polish) {
        hess.setZero();
        for (int c = 0; c < k; ++c) {
            grad[c] = cl.count[c] * (e[c] - cl.value[c]);
            for (int c2 = 0; c2 < k; ++c2) {
                const double p = sigmoid(x[c] + x[c2]);
                const double w = p * (1 - p);
                if (c2 == c) {
                    hess(c, c) += 2 * cl.count[c] * (cl.count[c] - 1) * w;
                } else {
                    hess(c, c2) = cl.count[c] * cl.count[c2] * w;
                    hess(c, c) += cl.count[c] * cl.count[c2] * w;
                }
            }
        }
        const Eigen::VectorXd step = -hess.ldlt().solve(grad);
        if (!step.allFinite())
            return false;
        const double f = class_dual(cl, x);
        const double slope = grad.dot(step);
        double t = 1;
        for (int half = 0; half < (polish ? 1 : 60); ++half, t *= 0.5) {
            for (int c = 0; c < k; ++c)
                trial[c] = x[c] + t * step[c];
            const double ft = class_dual(cl, trial);
            std::vector<double> et = class_expected(cl, trial);
            const double rt = max_abs_diff(et, cl.value);
            const bool armijo = !polish && ft <= f + 1e-4 * t * slope;
            if (std::isfinite(ft) && (armijo || rt < residual)) {
                x = trial;
                e = std::move(et);
                residual = rt;
                return true;
            }
        }
        return false;
    };

    if (!(residual <= opts.tol) || !all_finite(x)) {
        newton = true;
        if (!all_finite(x) || !std::isfinite(residual)) {
            for (int c = 0; c < k; ++c)
                x[c] = std::log(cl.value[c] / sqrt_m);
            e = class_expected(cl, x);
            residual = max_abs_diff(e, cl.value);
        }
        while (residual > opts.tol && iter < opts.max_iter) {
            ++iter;
            if (!newton_step(false))
                break;
        }
    }
    if (residual <= opts.tol)
        for (int extra = 0; extra < 3 && residual > 0 && newton_step(true); ++extra) {
        }

    MaxEntropySolution sol;
    sol.log_r = expand(cl, x);
    sol.r.resize(sol.log_r.size());
    std::transform(sol.log_r.begin(), sol.log_r.end(), sol.r.begin(), [](double t) { return std::exp(t); });
    std::vector<double> res(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
        res[c] = e[c] - cl.value[c];
    sol.degree_residuals = expand(cl, res);
    sol.iterations = iter;
    sol.used_newton = newton;
    sol.converged = residual <= opts.tol;
    if (!sol.converged)
        throw NonConvergence("max-entropy solver did not reach tol " + std::to_string(opts.tol) +
                                 " (residual " + std::to_string(residual) + ")",
                             sol.degree_residuals, iter);

    double h = 0;
    for (int c = 0; c < k; ++c) {
        h += 0.5 * cl.count[c] * (cl.count[c] - 1) * entropy_of_logit(2 * x[c]);
        for (int c2 = c + 1; c2 < k; ++c2)
            h += cl.count[c] * cl.count[c2] * entropy_of_logit(x[c] + x[c2]);
    }
    sol.h1 = h;
    return sol;
}

double entropy_h1(const MaxEntropySolution& sol) {
    const int n = sol.size();
    double h = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            h += entropy_of_logit(sol.log_r[i] + sol.log_r[j]);
    return h;
}

DualValue dual_f(std::span<const int> degrees, std::span<const double> x) {
    if (degrees.size() != x.size())
        throw ValidationError("dual_f: length mismatch");
    const std::size_t n = x.size();
    DualValue out;
    out.gradient.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out.value -= degrees[i] * x[i];
        out.gradient[i] -= degrees[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = x[i] + x[j];
            out.value += softplus(s);
            const double p = sigmoid(s);
            out.gradient[i] += p;
            out.gradient[j] += p;
        }
    }
    return out;
}

DualValue dual_g(std::span<const int> degrees, std::span<const double> r) {
    if (degrees.size() != r.size())
        throw ValidationError("dual_g: length mismatch");
    for (double v : r)
        if (!(v > 0))
            throw DomainError("G is defined for positive r only");
    const std::size_t n = r.size();
    DualValue out;
    out.gradient.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out.value -= degrees[i] * std::log(r[i]);
        out.gradient[i] -= degrees[i] / r[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double prod = r[i] * r[j];
            out.value += std::log1p(prod);
            out.gradient[i] += r[j] / (1 + prod);
            out.gradient[j] += r[i] / (1 + prod);
        }
    }
    return out;
}

DualObjectives dual_objectives(const DegreeSequence& d, std::span<const double> r) {
    if (static_cast<int>(r.size()) != d.size())
        throw ValidationError("dual_objectives: length mismatch");
    DualObjectives out;
    out.g = dual_g(d.degrees(), r);
    std::vector<double> x(r.size());
    std::transform(r.begin(), r.end(), x.begin(), [](double v) { return std::log(v); });
    out.f = dual_f(d.degrees(), x);
    return out;
}

double log_prob_graph(const MaxEntropySolution& sol, const SimpleGraph& g) {
    const int n = sol.size();
    if (g.vertex_count() != n)
        throw ValidationError("graph has " + std::to_string(g.vertex_count()) + " vertices, model has " +
                              std::to_string(n));
    double out = 0;
    for (int i = 0; i < n; ++i) {
        out += g.degree(i) * sol.log_r[i];
        for (int j = i + 1; j < n; ++j)
            out -= softplus(sol.log_r[i] + sol.log_r[j]);
    }
    return out;
}

// ---- bipartite ----

double BipartiteMaxEntropySolution::p(int i, int j) const {
    return sigmoid(std::log(r1.at(static_cast<std::size_t>(i))) + std::log(r2.at(static_cast<std::size_t>(j))));
}

double BipartiteMaxEntropySolution::max_residual() const {
    double out = 0;
    for (double x : row_residuals)
        out = std::max(out, std::abs(x));
    for (double x : col_residuals)
        out = std::max(out, std::abs(x));
    return out;
}

namespace {

// Largest-first row sums against sum_j min(col_j, k), k = 1..n1.
template <class Cmp>
bool gale_ryser_impl(const DegreeSequence& rows, const DegreeSequence& cols, Cmp ok_inner, bool strict_last) {
    if (rows.total() != cols.total())
        return false;
    const int n1 = rows.size();
    std::int64_t top = 0;
    for (int k = 1; k <= n1; ++k) {
        top += rows[n1 - k];
        std::int64_t rhs = 0;
        for (int c : cols.degrees())
            rhs += std::min(c, k);
        if (k < n1 && !ok_inner(top, rhs))
            return false;
        if (k == n1) {
            if (top > rhs)
                return false;
            if (strict_last && cols.max() >= n1)
                return false;
        }
    }
    return true;
}

} // namespace

bool gale_ryser(const DegreeSequence& rows, const DegreeSequence& cols) {
    return gale_ryser_impl(rows, cols, [](std::int64_t a, std::int64_t b) { return a <= b; }, false);
}

bool bipartite_interior(const DegreeSequence& rows, const DegreeSequence& cols) {
    return gale_ryser_impl(rows, cols, [](std::int64_t a, std::int64_t b) { return a < b; }, true);
}

BipartiteMaxEntropySolution solve_bipartite_max_entropy(const DegreeSequence& rows, const DegreeSequence& cols,
                                                        const SolverOptions& opts) {
    if (rows.total() != cols.total())
        throw SumMismatch("row total " + std::to_string(rows.total()) + " != column total " +
                          std::to_string(cols.total()));
    if (!(opts.tol > 0) || opts.max_iter < 1)
        throw ValidationError("solver needs tol > 0 and max_iter >= 1");
    if (!bipartite_interior(rows, cols))
        throw NonConvergence("bipartite margins have no interior point; the optimum is on the boundary",
                             {}, 0);

    const Classes rc(rows.degrees());
    const Classes cc(cols.degrees());
    const int ka = rc.size();
    const int kb = cc.size();
    const double sqrt_m = std::sqrt(static_cast<double>(rows.total()));

    std::vector<double> x(static_cast<std::size_t>(ka));
    std::vector<double> y(static_cast<std::size_t>(kb));
    for (int a = 0; a < ka; ++a)
        x[a] = std::log(rc.value[a] / sqrt_m);
    for (int b = 0; b < kb; ++b)
        y[b] = std::log(cc.value[b] / sqrt_m);

    auto row_sums = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        std::vector<double> e(xs.size(), 0.0);
        for (int a = 0; a < ka; ++a)
            for (int b = 0; b < kb; ++b)
                e[a] += cc.count[b] * sigmoid(xs[a] + ys[b]);
        return e;
    };
    auto col_sums = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        std::vector<double> f(ys.size(), 0.0);
        for (int b = 0; b < kb; ++b)
            for (int a = 0; a < ka; ++a)
                f[b] += rc.count[a] * sigmoid(xs[a] + ys[b]);
        return f;
    };
    auto residual_of = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        return std::max(max_abs_diff(row_sums(xs, ys), rc.value), max_abs_diff(col_sums(xs, ys), cc.value));
    };

    double residual = residual_of(x, y);
    int iter = 0;
    int stalled = 0;
    while (!opts.newton_only && residual > opts.tol && iter < opts.max_iter && stalled < 10) {
        const std::vector<double> e = row_sums(x, y);
        for (int a = 0; a < ka; ++a)
            x[a] += std::log(rc.value[a] / e[a]);
        const std::vector<double> f = col_sums(x, y);
        for (int b = 0; b < kb; ++b)
            y[b] += std::log(cc.value[b] / f[b]);
        ++iter;
        if (!all_finite(x) || !all_finite(y))
            break;
        const double next = residual_of(x, y);
        stalled = next < residual ? 0 : stalled + 1;
        residual = next;
    }

    auto dual = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        double v = 0;
        for (int a = 0; a < ka; ++a)
            v -= rc.count[a] * rc.value[a] * xs[a];
        for (int b = 0; b < kb; ++b)
            v -= cc.count[b] * cc.value[b] * ys[b];
        for (int a = 0; a < ka; ++a)
            for (int b = 0; b < kb; ++b)
                v += rc.count[a] * cc.count[b] * softplus(xs[a] + ys[b]);
        return v;
    };
    const int dim = ka + kb;
    Eigen::VectorXd grad(dim);
    Eigen::MatrixXd hess(dim, dim);
    std::vector<double> tx(x.size()), ty(y.size());
    auto newton_step = [&](bool polish) {
        const std::vector<double> e = row_sums(x, y);
        const std::vector<double> f = col_sums(x, y);
        hess.setZero();
        for (int a = 0; a < ka; ++a)
            grad[a] = rc.count[a] * (e[a] - rc.value[a]);
        for (int b = 0; b < kb; ++b)
            grad[ka + b] = cc.count[b] * (f[b] - cc.value[b]);
        for (int a = 0; a < ka; ++a)
            for (int b = 0; b < kb; ++b) {
                const double p = sigmoid(x[a] + y[b]);
                const double w = rc.count[a] * cc.count[b] * p * (1 - p);
                hess(a, a) += w;
                hess(ka + b, ka + b) += w;
                hess(a, ka + b) = w;
                hess(ka + b, a) = w;
            }
        // x + c, y - c leaves every p unchanged; a small ridge removes that null direction.
        hess.diagonal().array() += 1e-12 * hess.diagonal().maxCoeff();
        const Eigen::VectorXd step = -hess.ldlt().solve(grad);
        if (!step.allFinite())
            return false;
        const double fval = dual(x, y);
        const double slope = grad.dot(step);
        double t = 1;
        for (int half = 0; half < (polish ? 1 : 60); ++half, t *= 0.5) {
            for (int a = 0; a < ka; ++a)
                tx[a] = x[a] + t * step[a];
            for (int b = 0; b < kb; ++b)
                ty[b] = y[b] + t * step[ka + b];
            const double ft = dual(tx, ty);
            const double rt = residual_of(tx, ty);
            const bool armijo = !polish && ft <= fval + 1e-4 * t * slope;
            if (std::isfinite(ft) && (armijo || rt < residual)) {
                x = tx;
                y = ty;
                residual = rt;
                return true;
            }
        }
        return false;
    };

    if (!(residual <= opts.tol)) {
        if (!all_finite(x) || !all_finite(y)) {
            for (int a = 0; a < ka; ++a)
                x[a] = std::log(rc.value[a] / sqrt_m);
            for (int b = 0; b < kb; ++b)
                y[b] = std::log(cc.value[b] / sqrt_m);
            residual = residual_of(x, y);
        }
        while (residual > opts.tol && iter < opts.max_iter) {
            ++iter;
            if (!newton_step(false))
                break;
        }
    }
    if (residual <= opts.tol)
        for (int extra = 0; extra < 3 && residual > 0 && newton_step(true); ++extra) {
        }

    BipartiteMaxEntropySolution sol;
    const std::vector<double> lx = expand(rc, x);
    const std::vector<double> ly = expand(cc, y);
    sol.r1.resize(lx.size());
    sol.r2.resize(ly.size());
    std::transform(lx.begin(), lx.end(), sol.r1.begin(), [](double t) { return std::exp(t); });
    std::transform(ly.begin(), ly.end(), sol.r2.begin(), [](double t) { return std::exp(t); });
    std::vector<double> e = row_sums(x, y);
    std::vector<double> f = col_sums(x, y);
    for (int a = 0; a < ka; ++a)
        e[a] -= rc.value[a];
    for (int b = 0; b < kb; ++b)
        f[b] -= cc.value[b];
    sol.row_residuals = expand(rc, e);
    sol.col_residuals = expand(cc, f);
    sol.iterations = iter;
    sol.converged = residual <= opts.tol;
    if (!sol.converged) {
        std::vector<double> all = sol.row_residuals;
        all.insert(all.end(), sol.col_residuals.begin(), sol.col_residuals.end());
        throw NonConvergence("bipartite solver did not reach tol (residual " + std::to_string(residual) + ")",
                             std::move(all), iter);
    }
    for (int a = 0; a < ka; ++a)
        for (int b = 0; b < kb; ++b)
            sol.h2 += rc.count[a] * cc.count[b] * entropy_of_logit(x[a] + y[b]);
    return sol;
}

// ---- q-model ----

QModel::QModel(const DegreeSequence& d) : total_(static_cast<double>(d.total())) {
    degrees_.assign(d.degrees().begin(), d.degrees().end());
    const Classes cl(d.degrees());
    const int k = cl.size();
    std::vector<double> per_class(static_cast<std::size_t>(k), 0.0);
    for (int c = 0; c < k; ++c)
        for (int c2 = 0; c2 < k; ++c2) {
            const double m = c2 == c ? cl.count[c2] - 1 : cl.count[c2];
            const double prod = cl.value[c] * cl.value[c2];
            per_class[c] += m * prod / (total_ + prod);
        }
    q_degrees_ = expand(cl, per_class);

    const double dn = degrees_.back();
    for (int i = 0; i < size(); ++i) {
        const double di = degrees_[i];
        QBoundViolation v;
        v.vertex = i;
        v.degree = di;
        v.q_degree = q_degrees_[i];
        v.lower_global = di * (1 - 2 * dn * dn / total_);
        v.lower_local = di * (1 - 2 * di * dn / total_);
        const double slack = 1e-12 * std::max(1.0, di);
        if (v.lower_global > v.lower_local + slack || v.lower_local > v.q_degree + slack ||
            v.q_degree > di + slack)
            violations_.push_back(v);
    }
}

double QModel::q(int i, int j) const {
    if (i == j)
        return 0;
    const double prod = degrees_.at(static_cast<std::size_t>(i)) * degrees_.at(static_cast<std::size_t>(j));
    return prod / (total_ + prod);
}

// ---- diagnostics ----

RegularityReport r_regularity_report(const MaxEntropySolution& sol, const DegreeSequence& d) {
    const int n = sol.size();
    if (n != d.size())
        throw ValidationError("solution and degree sequence differ in length");
    RegularityReport rep;
    const double dn = n;
    rep.monotone = true;
    for (int k = 0; k + 1 < n; ++k)
        if (sol.r[k + 1] < sol.r[k]) {
            rep.monotone = false;
            rep.monotone_witness = k;
            break;
        }
    rep.r1_rn = sol.r.front() * sol.r.back();
    rep.product_bound = rep.r1_rn > 1 / dn;

    const double n4 = std::pow(dn, 4);
    for (int k = 0; k + 1 < n; ++k) {
        if (sol.r[k] < 1)
            continue;
        const double ratio = sol.r[k + 1] / sol.r[k];
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        if (!(ratio < n4) && rep.ratio_bound) {
            rep.ratio_bound = false;
            rep.ratio_witness = k;
        }
    }

    const double n2 = dn * dn;
    const double half_m = static_cast<double>(d.total()) / 2;
    for (int k = 0; k < n; ++k) {
        if (!(sol.r[k] > n2))
            continue;
        const int upto = n - d[k] - 1; // 1-based inclusive bound
        std::int64_t sum = 0;
        for (int i = 0; i < upto; ++i)
            sum += d[i];
        if (static_cast<double>(sum) > half_m && rep.tail_sum_bound) {
            rep.tail_sum_bound = false;
            rep.tail_witness = k;
        }
    }

    const double logn = std::log(dn);
    if (n > 1)
        for (double lr : sol.log_r)
            rep.max_abs_log_r_over_log_n = std::max(rep.max_abs_log_r_over_log_n, std::abs(lr) / logn);
    return rep;
}

double c1_of_d(const DegreeSequence& d, const MaxEntropySolution& sol, double a) {
    if (!(a > 0.5 && a < 1))
        throw DomainError("c1 needs 1/2 < a < 1");
    const int n = sol.size();
    if (n < 2 || n != d.size())
        throw ValidationError("c1 needs a solved instance with n >= 2");
    std::vector<double> lr(sol.log_r);
    std::sort(lr.begin(), lr.end());
    // p is increasing in log r_i + log r_j: extremes sit at the two smallest and two largest.
    const double p_min = sigmoid(lr[0] + lr[1]);
    const double one_minus_max = sigmoid(-(lr[n - 1] + lr[n - 2]));
    const double delta = std::min(p_min, one_minus_max);
    const double a1 = a - 0.5;
    const double logn = std::log(static_cast<double>(n));
    return std::abs(std::log(delta)) * n * std::pow(logn, 10 / a1);
}

double c2_of_d(const DegreeSequence& d, const MaxEntropySolution& sol, double a) {
    if (sol.size() != d.size())
        throw ValidationError("solution and degree sequence differ in length");
    double out = 0;
    for (int i = 0; i < d.size(); ++i)
        out += std::pow(static_cast<double>(d[i]), a) * std::abs(sol.log_r[i]);
    return out;
}

double c2_type_bound(const DegreeSequence& d, double a, double nu) {
    const double n = d.size();
    const double m = static_cast<double>(d.total());
    return 4 * std::log(n) * std::pow(n, -nu) * m * std::pow(m / n, a - 0.5);
}

double mckay_log_count(const DegreeSequence& d) {
    const std::int64_t m = d.total();
    if (m % 2 != 0)
        throw OddM("total degree " + std::to_string(m) + " is odd");
    const double md = static_cast<double>(m);
    double lambda = 0;
    double log_fact = 0;
    for (int x : d.degrees()) {
        lambda += 0.5 * x * (x - 1.0);
        log_fact += std::lgamma(x + 1.0);
    }
    lambda /= md;
    return std::lgamma(md + 1) - lambda - lambda * lambda - std::lgamma(md / 2 + 1) - (md / 2) * std::log(2.0) -
           log_fact;
}

} // namespace entropygraph
