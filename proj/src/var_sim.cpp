#include "predictkit/var_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "predictkit/error.hpp"
#include "predictkit/ols.hpp"

namespace predictkit {
namespace {

constexpr int kBurnIn = 100;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Slope of v on [1, x].
double simple_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    Eigen::MatrixXd X(x.size(), 2);
    X.col(0).setOnes();
    X.col(1) = x;
    return ols(v, X).slopes(0);
}

/// Lower-triangular factor L with L L' = cov, valid for PSD (including singular) input.
Eigen::Matrix2d psd_factor(const Eigen::Matrix2d& cov) {
    const double a = std::max(cov(0, 0), 0.0);
    Eigen::Matrix2d L = Eigen::Matrix2d::Zero();
    if (a > 0.0) {
        L(0, 0) = std::sqrt(a);
        L(1, 0) = cov(1, 0) / L(0, 0);
        L(1, 1) = std::sqrt(std::max(cov(1, 1) - L(1, 0) * L(1, 0), 0.0));
    } else {
        L(1, 1) = std::sqrt(std::max(cov(1, 1), 0.0));
    }
    return L;
}

struct Replication {
    double phi = 0.0;
    double b_d = 0.0;
    double b_r = 0.0;
    double identity_residual = 0.0;
};

}  // namespace

std::vector<VarRow> pooled_var_rows(std::span<const DerivedSeries> cells, bool demean) {
    std::vector<VarRow> pooled;
    for (const auto& cell : cells) {
        std::vector<VarRow> rows;
        for (const auto& [year, dp] : cell.payout_price) {
            const auto dp_next = value_at(cell.payout_price, year + 1);
            const auto growth = value_at(cell.payout_growth, year + 1);
            const auto ret = value_at(cell.excess_return, year + 1);
            if (dp_next && growth && ret) rows.push_back({dp, *dp_next, *growth, *ret});
        }
        if (demean && !rows.empty()) {
            VarRow mean;
            for (const auto& r : rows) {
                mean.dp += r.dp;
                mean.dp_next += r.dp_next;
                mean.growth_next += r.growth_next;
                mean.return_next += r.return_next;
            }
            const double n = static_cast<double>(rows.size());
            for (auto& r : rows) {
                r.dp -= mean.dp / n;
                r.dp_next -= mean.dp_next / n;
                r.growth_next -= mean.growth_next / n;
                r.return_next -= mean.return_next / n;
            }
        }
        pooled.insert(pooled.end(), rows.begin(), rows.end());
    }
    return pooled;
}

double linearization_rho(std::span<const double> dp) {
    if (dp.empty()) throw DomainError("linearization_rho: empty sample");
    const double mean = std::accumulate(dp.begin(), dp.end(), 0.0) / static_cast<double>(dp.size());
    return 1.0 / (1.0 + std::exp(mean));
}

VarParams estimate_var_params(std::span<const VarRow> rows) {
    if (rows.size() < 30) throw SampleSizeError("estimate_var_params: need at least 30 pooled rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd dp_next(n), growth(n), ret(n);
    std::vector<double> dp(rows.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        const VarRow& r = rows[static_cast<std::size_t>(i)];
        X(i, 0) = 1.0;
        X(i, 1) = r.dp;
        dp_next(i) = r.dp_next;
        growth(i) = r.growth_next;
        ret(i) = r.return_next;
        dp[static_cast<std::size_t>(i)] = r.dp;
    }

    const auto fit_dp = ols(dp_next, X);
    const auto fit_d = ols(growth, X);
    const auto fit_r = ols(ret, X);

    VarParams p;
    p.rho = linearization_rho(dp);
    p.dp_mean = X.col(1).mean();
    p.phi = fit_dp.slopes(0);
    p.b_d = fit_d.slopes(0);
    p.b_r = fit_r.slopes(0);
    p.n_obs = n;
    p.shock_residuals.resize(n, 2);
    p.shock_residuals.col(0) = fit_dp.residuals;
    p.shock_residuals.col(1) = fit_d.residuals;
    p.shock_cov = p.shock_residuals.transpose() * p.shock_residuals / static_cast<double>(n - 2);
    return p;
}

NullParams null_params(const VarParams& params) {
    return {params.phi, params.rho * params.phi - 1.0, 0.0};
}

double upper_tail_p(const Eigen::VectorXd& samples, double observed) {
    if (samples.size() == 0) return 0.0;
    return static_cast<double>((samples.array() >= observed).count()) / static_cast<double>(samples.size());
}

double lower_tail_p(const Eigen::VectorXd& samples, double observed) {
    if (samples.size() == 0) return 0.0;
    return static_cast<double>((samples.array() <= observed).count()) / static_cast<double>(samples.size());
}

SimOutcome simulate_null(const VarParams& params, const SimSettings& settings) {
    if (settings.sample_length < 30) throw SampleSizeError("simulate_null: sample length must be at least 30");
    if (settings.reps < 1) throw DomainError("simulate_null: reps must be positive");
    if (!(params.rho > 0.0 && params.rho < 1.0)) throw DomainError("simulate_null: rho must lie in (0, 1)");
    if (settings.shocks == ShockMode::bootstrap && params.shock_residuals.rows() == 0) {
        throw DomainError("simulate_null: bootstrap shocks need estimated residuals");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(params.shock_cov);
    if (eig.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, eig.eigenvalues().maxCoeff())) {
        throw DomainError("simulate_null: shock covariance is not positive semi-definite");
    }

    SimOutcome out;
    out.null = null_params(params);
    out.seed = settings.seed;
    out.reps = settings.reps;
    out.sample_length = settings.sample_length;

    const NullParams np = out.null;
    const double rho = params.rho;
    const Eigen::Matrix2d L = psd_factor(params.shock_cov);
    const bool stationary = std::abs(np.phi) < 1.0;
    out.nonstationary_start = !stationary;
    const double stationary_var = stationary ? params.shock_cov(0, 0) / (1.0 - np.phi * np.phi) : 0.0;
    const int T = settings.sample_length;
    const Eigen::Index n_resid = params.shock_residuals.rows();

    auto run_one = [&](int rep) {
        std::mt19937_64 rng(splitmix64(settings.seed ^ splitmix64(static_cast<std::uint64_t>(rep))));
        std::normal_distribution<double> normal;
        std::uniform_int_distribution<Eigen::Index> pick(0, std::max<Eigen::Index>(n_resid - 1, 0));
        auto shock = [&]() -> Eigen::Vector2d {
            if (settings.shocks == ShockMode::bootstrap) {
                return params.shock_residuals.row(pick(rng)).transpose();
            }
            const Eigen::Vector2d u(normal(rng), normal(rng));
            return L * u;
        };

        // Deviations from the mean; slopes are invariant to the level.
        double dp = 0.0;
        if (stationary && stationary_var > 0.0) {
            dp = std::sqrt(stationary_var) * normal(rng);
        } else if (stationary) {
            dp = 1.0;  // noiseless recursion: a deterministic decay keeps the regressor informative
        } else {
            for (int b = 0; b < kBurnIn; ++b) dp = np.phi * dp + shock()(0);
        }

        Eigen::VectorXd x(T), dp_next(T), growth(T), ret(T);
        for (int t = 0; t < T; ++t) {
            const Eigen::Vector2d e = shock();
            const double next = np.phi * dp + e(0);
            const double g = np.b_d * dp + e(1);
            x(t) = params.dp_mean + dp;
            dp_next(t) = params.dp_mean + next;
            growth(t) = g;
            // Return from the identity r_{t+1} = growth_{t+1} - rho dp_{t+1} + dp_t.
            ret(t) = g - rho * next + dp;
            dp = next;
        }

        Replication r;
        r.phi = simple_slope(x, dp_next);
        r.b_d = simple_slope(x, growth);
        r.b_r = simple_slope(x, ret);
        r.identity_residual = r.b_r - r.b_d - (1.0 - rho * r.phi);
        return r;
    };

    std::vector<Replication> reps(static_cast<std::size_t>(settings.reps));
    unsigned workers = settings.workers != 0 ? settings.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(settings.reps));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int rep = static_cast<int>(w); rep < settings.reps; rep += static_cast<int>(workers)) {
                    reps[static_cast<std::size_t>(rep)] = run_one(rep);
                }
            });
        }
    }

    out.phi_sim.resize(settings.reps);
    out.b_d_sim.resize(settings.reps);
    out.b_r_sim.resize(settings.reps);
    for (int i = 0; i < settings.reps; ++i) {
        const Replication& r = reps[static_cast<std::size_t>(i)];
        out.phi_sim(i) = r.phi;
        out.b_d_sim(i) = r.b_d;
        out.b_r_sim(i) = r.b_r;
        out.max_identity_residual = std::max(out.max_identity_residual, std::abs(r.identity_residual));
    }
    out.p_br = upper_tail_p(out.b_r_sim, params.b_r);
    out.p_bd = lower_tail_p(out.b_d_sim, params.b_d);
    return out;
}

Histogram histogram(std::span<const double> samples, int bins) {
    if (bins < 1) throw DomainError("histogram: bins must be positive");
    Histogram h;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    if (samples.empty()) {
        h.edges.assign(static_cast<std::size_t>(bins) + 1, 0.0);
        return h;
    }
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;
    for (int i = 0; i <= bins; ++i) h.edges.push_back(lo + width * i);
    h.edges.back() = hi;
    for (double s : samples) {
        auto idx = static_cast<std::size_t>((s - lo) / width);
        idx = std::min(idx, static_cast<std::size_t>(bins - 1));
        ++h.counts[idx];
    }
    return h;
}

}  // namespace predictkit
