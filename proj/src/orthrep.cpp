#include "upbforge/orthrep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "upbforge/parallel.hpp"

namespace upbforge {

void SolverConfig::validate() const {
    if (dimension < 1) throw std::invalid_argument("solver dimension must be >= 1");
    if (restarts < 1) throw std::invalid_argument("solver restarts must be >= 1");
    if (max_iterations < 0) throw std::invalid_argument("solver max_iterations must be >= 0");
    if (!(objective_tolerance > 0.0)) throw std::invalid_argument("objective tolerance must be > 0");
    if (genericity_penalty_weight < 0.0) throw std::invalid_argument("genericity weight must be >= 0");
    if (!(genericity_threshold > 0.0) || genericity_threshold > 1.0) {
        throw std::invalid_argument("genericity threshold must lie in (0, 1]");
    }
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kGenericSubset = 5;

struct Ratio {
    double value;          // 3 lambda_min / tr
    Eigen::Vector3cd v;    // eigenvector of lambda_min
    double lambda;
    double trace;
};

Ratio spanning_ratio(std::span<const FloatVector* const> rows) {
    Eigen::Matrix3cd gram = Eigen::Matrix3cd::Zero();
    double trace = 0.0;
    for (const FloatVector* phi : rows) {
        for (int a = 0; a < 3; ++a) {
            trace += std::norm((*phi)[static_cast<std::size_t>(a)]);
            for (int b = 0; b < 3; ++b) {
                gram(a, b) += std::conj((*phi)[static_cast<std::size_t>(a)]) * (*phi)[static_cast<std::size_t>(b)];
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(gram);
    const double lambda = std::max(0.0, eig.eigenvalues()(0));
    return {trace > 0.0 ? 3.0 * lambda / trace : 0.0, eig.eigenvectors().col(0), lambda, trace};
}

std::vector<std::array<int, kGenericSubset>> five_subsets(int k) {
    std::vector<std::array<int, kGenericSubset>> out;
    std::array<int, kGenericSubset> s{0, 1, 2, 3, 4};
    if (k < kGenericSubset) return out;
    while (true) {
        out.push_back(s);
        int i = kGenericSubset - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == k - kGenericSubset + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < kGenericSubset; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Residuals and Jacobian of the least-squares problem for one graph.
class Problem {
public:
    Problem(const Graph& g, const SolverConfig& cfg)
        : edges_(g.edges()),
          d_(cfg.dimension),
          k_(g.vertex_count()),
          per_vertex_(2 * (cfg.dimension - 1)),
          sqrt_weight_(std::sqrt(cfg.genericity_penalty_weight)),
          threshold_(cfg.genericity_threshold) {
        if (cfg.genericity_penalty_weight > 0.0) subsets_ = five_subsets(k_);
    }

    int variables() const { return k_ * per_vertex_; }
    int residuals() const { return 2 * static_cast<int>(edges_.size()) + static_cast<int>(subsets_.size()); }
    bool penalized() const { return !subsets_.empty(); }

    std::vector<FloatVector> vectors(const VectorXd& x) const {
        std::vector<FloatVector> out(static_cast<std::size_t>(k_), FloatVector(static_cast<std::size_t>(d_)));
        for (int i = 0; i < k_; ++i) {
            auto& phi = out[static_cast<std::size_t>(i)];
            phi[0] = 1.0;
            for (int c = 1; c < d_; ++c) {
                const int col = column(i, c);
                phi[static_cast<std::size_t>(c)] = {x(col), x(col + 1)};
            }
        }
        return out;
    }

    // Fills r (and J when non-null). Returns the number of active hinge terms.
    int evaluate(const VectorXd& x, VectorXd& r, MatrixXd* jac) const {
        const auto phi = vectors(x);
        r.setZero(residuals());
        if (jac) jac->setZero(residuals(), variables());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const int a = edges_[e].first - 1, b = edges_[e].second - 1;
            const auto& pa = phi[static_cast<std::size_t>(a)];
            const auto& pb = phi[static_cast<std::size_t>(b)];
            const FComplex s = inner_product(pa, pb);
            const int row = 2 * static_cast<int>(e);
            r(row) = s.real();
            r(row + 1) = s.imag();
            if (!jac) continue;
            for (int c = 1; c < d_; ++c) {
                // s is linear in phi_b and conjugate-linear in phi_a.
                const FComplex db = std::conj(pa[static_cast<std::size_t>(c)]);
                set_pair(*jac, row, column(b, c), db, FComplex(0, 1) * db);
                const FComplex da = pb[static_cast<std::size_t>(c)];
                set_pair(*jac, row, column(a, c), da, FComplex(0, -1) * da);
            }
        }
        int active = 0;
        const int base = 2 * static_cast<int>(edges_.size());
        for (std::size_t s = 0; s < subsets_.size(); ++s) {
            std::array<const FloatVector*, kGenericSubset> rows{};
            for (int t = 0; t < kGenericSubset; ++t) rows[static_cast<std::size_t>(t)] = &phi[static_cast<std::size_t>(subsets_[s][static_cast<std::size_t>(t)])];
            const Ratio q = spanning_ratio(rows);
            if (q.value >= threshold_) continue;
            ++active;
            const int row = base + static_cast<int>(s);
            r(row) = sqrt_weight_ * (threshold_ - q.value);
            if (!jac || q.trace <= 0.0) continue;
            for (int t = 0; t < kGenericSubset; ++t) {
                const int i = subsets_[s][static_cast<std::size_t>(t)];
                const auto& p = *rows[static_cast<std::size_t>(t)];
                FComplex u = 0.0;
                for (int a = 0; a < 3; ++a) u += p[static_cast<std::size_t>(a)] * q.v(a);
                for (int a = 1; a < 3; ++a) {
                    const FComplex w = std::conj(u) * q.v(a);
                    const double dl_dx = 2.0 * w.real(), dl_dy = -2.0 * w.imag();
                    const double dt_dx = 2.0 * p[static_cast<std::size_t>(a)].real();
                    const double dt_dy = 2.0 * p[static_cast<std::size_t>(a)].imag();
                    const double scale = -sqrt_weight_ * 3.0 / (q.trace * q.trace);
                    const int col = column(i, a);
                    (*jac)(row, col) = scale * (dl_dx * q.trace - q.lambda * dt_dx);
                    (*jac)(row, col + 1) = scale * (dl_dy * q.trace - q.lambda * dt_dy);
                }
            }
        }
        return active;
    }

private:
    int column(int vertex, int component) const { return vertex * per_vertex_ + 2 * (component - 1); }

    // d(Re s, Im s) / d(x, y) for a complex unknown z = x + iy.
    static void set_pair(MatrixXd& jac, int row, int col, FComplex ds_dx, FComplex ds_dy) {
        jac(row, col) += ds_dx.real();
        jac(row + 1, col) += ds_dx.imag();
        jac(row, col + 1) += ds_dy.real();
        jac(row + 1, col + 1) += ds_dy.imag();
    }

    std::vector<Edge> edges_;
    int d_;
    int k_;
    int per_vertex_;
    double sqrt_weight_;
    double threshold_;
    std::vector<std::array<int, kGenericSubset>> subsets_;
};

struct RestartOutcome {
    VectorXd x;
    double total = std::numeric_limits<double>::infinity();  // smoothed + penalty
    double edge_abs = std::numeric_limits<double>::infinity();
    bool success = false;
    int iterations = 0;
    bool ran = false;
};

RestartOutcome run_restart(const Problem& problem, const Graph& g, const SolverConfig& cfg, int restart) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const int n = problem.variables();
    VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = normal(rng);

    auto edge_abs = [&](const VectorXd& xv) {
        const auto phi = problem.vectors(xv);
        return edge_objective(std::span<const FloatVector>(phi), g);
    };

    RestartOutcome out;
    out.ran = true;
    VectorXd r;
    MatrixXd jac;
    int active = problem.evaluate(x, r, &jac);
    double f = r.squaredNorm();
    double abs_obj = edge_abs(x);
    auto done = [&] { return abs_obj <= cfg.objective_tolerance && active == 0; };

    if (n > 0 && !done()) {
        MatrixXd normal_matrix = jac.transpose() * jac;
        VectorXd grad = jac.transpose() * r;
        double mu = cfg.step.initial_damping * std::max(normal_matrix.diagonal().maxCoeff(), 1e-12);
        double nu = 2.0;
        VectorXd r_new;
        for (; out.iterations < cfg.max_iterations; ++out.iterations) {
            if (grad.lpNorm<Eigen::Infinity>() <= cfg.step.gradient_tolerance) break;
            MatrixXd damped = normal_matrix;
            damped.diagonal().array() += mu;
            const VectorXd step = damped.ldlt().solve(-grad);
            if (step.norm() <= cfg.step.step_tolerance * (x.norm() + cfg.step.step_tolerance)) break;
            const VectorXd x_new = x + step;
            problem.evaluate(x_new, r_new, nullptr);
            const double f_new = r_new.squaredNorm();
            const double predicted = step.dot(mu * step - grad);
            if (f_new < f && predicted > 0.0) {
                const double rho = (f - f_new) / predicted;
                x = x_new;
                active = problem.evaluate(x, r, &jac);
                f = r.squaredNorm();
                abs_obj = edge_abs(x);
                if (done()) {
                    ++out.iterations;
                    break;
                }
                normal_matrix = jac.transpose() * jac;
                grad = jac.transpose() * r;
                mu *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
                nu = 2.0;
            } else {
                mu *= nu;
                nu *= 2.0;
                if (mu > cfg.step.max_damping) break;
            }
        }
    }
    out.x = std::move(x);
    out.total = f;
    out.edge_abs = abs_obj;
    out.success = done();
    return out;
}

OrthRepResult run(const Graph& g, const SolverConfig& cfg) {
    cfg.validate();
    const Problem problem(g, cfg);
    const int restarts = cfg.restarts;
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> first_success{restarts};
    parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t idx) {
        const int i = static_cast<int>(idx);
        if (i > first_success.load()) return;
        outcomes[idx] = run_restart(problem, g, cfg, i);
        if (outcomes[idx].success) {
            int cur = first_success.load();
            while (i < cur && !first_success.compare_exchange_weak(cur, i)) {
            }
        }
    });

    // Lowest successful restart if any (every lower index ran and failed),
    // otherwise the smallest objective, ties to the lowest index.
    int best = -1;
    if (first_success.load() < restarts) {
        best = first_success.load();
    } else {
        for (int i = 0; i < restarts; ++i) {
            const auto& o = outcomes[static_cast<std::size_t>(i)];
            if (best < 0 || o.total < outcomes[static_cast<std::size_t>(best)].total) best = i;
        }
    }
    const auto& chosen = outcomes[static_cast<std::size_t>(best)];

    OrthRepResult res;
    res.vectors = problem.vectors(chosen.x);
    const std::span<const FloatVector> vs(res.vectors);
    res.objective = edge_objective(vs, g);
    res.smoothed_objective = smoothed_objective(vs, g);
    res.converged = res.objective <= cfg.objective_tolerance;
    res.restart_index = best;
    res.iterations = chosen.iterations;
    // Restarts past the first success may or may not have run depending on
    // scheduling; report the deterministic count.
    res.restarts_run = first_success.load() < restarts ? best + 1 : restarts;
    res.faithfulness = faithfulness_report(vs, g);
    if (problem.penalized()) {
        res.genericity = genericity_diagnostics(vs, cfg.genericity_penalty_weight, cfg.genericity_threshold);
    }
    return res;
}

}  // namespace

OrthRepResult solve(const Graph& g, const SolverConfig& config) {
    SolverConfig cfg = config;
    cfg.genericity_penalty_weight = 0.0;
    return run(g, cfg);
}

OrthRepResult solve_with_genericity(const Graph& g, const SolverConfig& config) {
    if (config.genericity_penalty_weight > 0.0 &&
        (config.dimension != 3 || g.vertex_count() < kGenericSubset)) {
        throw std::invalid_argument("genericity penalty needs dimension 3 and at least 5 vertices");
    }
    return run(g, config);
}

template <Scalar T>
double edge_objective(std::span<const Vector<T>> vectors, const Graph& g) {
    if (vectors.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("need one vector per vertex");
    }
    double total = 0.0;
    for (const auto& [i, j] : g.edges()) {
        const T s = inner_product(vectors[static_cast<std::size_t>(i - 1)], vectors[static_cast<std::size_t>(j - 1)]);
        if constexpr (scalar_traits<T>::mode == Mode::exact) {
            total += std::abs(s.to_complex());
        } else {
            total += std::abs(s);
        }
    }
    return total;
}

double smoothed_objective(std::span<const FloatVector> vectors, const Graph& g) {
    if (vectors.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("need one vector per vertex");
    }
    double total = 0.0;
    for (const auto& [i, j] : g.edges()) {
        total += std::norm(inner_product(vectors[static_cast<std::size_t>(i - 1)], vectors[static_cast<std::size_t>(j - 1)]));
    }
    return total;
}

template <Scalar T>
std::vector<Edge> faithfulness_report(std::span<const Vector<T>> vectors, const Graph& g) {
    if (vectors.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("need one vector per vertex");
    }
    std::vector<Edge> out;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        for (int j = i + 1; j <= g.vertex_count(); ++j) {
            if (!g.has_edge(i, j) &&
                is_orthogonal(vectors[static_cast<std::size_t>(i - 1)], vectors[static_cast<std::size_t>(j - 1)])) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

GenericityDiagnostics genericity_diagnostics(std::span<const FloatVector> vectors, double weight,
                                             double threshold) {
    for (const auto& v : vectors) {
        if (v.dim() != 3) throw std::invalid_argument("genericity diagnostics need vectors in C^3");
    }
    GenericityDiagnostics d;
    d.min_ratio = 1.0;
    for (const auto& s : five_subsets(static_cast<int>(vectors.size()))) {
        std::array<const FloatVector*, kGenericSubset> rows{};
        std::vector<FloatVector> members;
        for (int t = 0; t < kGenericSubset; ++t) {
            rows[static_cast<std::size_t>(t)] = &vectors[static_cast<std::size_t>(s[static_cast<std::size_t>(t)])];
            members.push_back(*rows[static_cast<std::size_t>(t)]);
        }
        const Ratio q = spanning_ratio(rows);
        ++d.subsets;
        d.min_ratio = std::min(d.min_ratio, q.value);
        if (q.value < threshold) {
            ++d.below_threshold;
            d.penalty += weight * (threshold - q.value) * (threshold - q.value);
        }
        if (rank(std::span<const FloatVector>(members)) < 3) ++d.rank_deficient;
    }
    return d;
}

double genericity_penalty(std::span<const FloatVector> vectors, double weight, double threshold) {
    return genericity_diagnostics(vectors, weight, threshold).penalty;
}

std::optional<std::vector<ExactVector>> rationalize(std::span<const FloatVector> vectors,
                                                    const Graph& g, long max_denominator) {
    std::vector<ExactVector> out;
    for (const auto& v : vectors) {
        auto e = round_to_exact(v, max_denominator);
        if (!e || e->is_zero()) return std::nullopt;
        out.push_back(std::move(*e));
    }
    for (const auto& [i, j] : g.edges()) {
        if (!inner_product(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(j - 1)]).is_zero()) {
            return std::nullopt;
        }
    }
    return out;
}

template double edge_objective<QComplex>(std::span<const ExactVector>, const Graph&);
template double edge_objective<FComplex>(std::span<const FloatVector>, const Graph&);
template std::vector<Edge> faithfulness_report<QComplex>(std::span<const ExactVector>, const Graph&);
template std::vector<Edge> faithfulness_report<FComplex>(std::span<const FloatVector>, const Graph&);

}  // namespace upbforge
