#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

#include "predictkit/derive.hpp"

namespace predictkit {

/// One pooled observation: dp_t together with (dp, payout growth, return) at t+1.
struct VarRow {
    double dp = 0.0;
    double dp_next = 0.0;
    double growth_next = 0.0;
    double return_next = 0.0;
};

/// Stacks every complete row across the cells. With `demean` each country's variables
/// are centred before stacking.
std::vector<VarRow> pooled_var_rows(std::span<const DerivedSeries> cells, bool demean = false);

/// rho = 1 / (1 + exp(mean dp)).
double linearization_rho(std::span<const double> dp);

struct VarParams {
    double rho = 0.0;
    double phi = 0.0;
    double b_d = 0.0;
    double b_r = 0.0;
    double dp_mean = 0.0;
    Eigen::Matrix2d shock_cov = Eigen::Matrix2d::Zero();  // (eps_dp, eps_d)
    Eigen::Index n_obs = 0;
    /// Residual pairs (eps_dp, eps_d), used by the bootstrap shock mode.
    Eigen::MatrixX2d shock_residuals;

    /// b_r - b_d - (1 - rho phi).
    double identity_residual() const { return b_r - b_d - (1.0 - rho * phi); }
};

/// Pooled OLS slopes of dp_{t+1}, growth_{t+1}, and r_{t+1} on dp_t (intercepts included).
VarParams estimate_var_params(std::span<const VarRow> rows);

struct NullParams {
    double phi = 0.0;
    double b_d = 0.0;
    double b_r = 0.0;
};

/// phi0 = phi, b_d0 = rho phi - 1, b_r0 = 0.
NullParams null_params(const VarParams& params);

enum class ShockMode { gaussian, bootstrap };

struct SimSettings {
    int sample_length = 140;
    int reps = 10000;
    std::uint64_t seed = 0;
    ShockMode shocks = ShockMode::gaussian;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct SimOutcome {
    NullParams null;
    Eigen::VectorXd phi_sim;
    Eigen::VectorXd b_d_sim;
    Eigen::VectorXd b_r_sim;
    double p_br = 0.0;  // P(b_r,sim >= b_r,obs)
    double p_bd = 0.0;  // P(b_d,sim <= b_d,obs)
    std::uint64_t seed = 0;
    int reps = 0;
    int sample_length = 0;
    bool nonstationary_start = false;
    double max_identity_residual = 0.0;
};

/// Monte Carlo of the no-return-predictability null. Each replication draws its own
/// substream from the seed, so results do not depend on the worker count.
SimOutcome simulate_null(const VarParams& params, const SimSettings& settings);

/// Fraction of samples >= observed.
double upper_tail_p(const Eigen::VectorXd& samples, double observed);
/// Fraction of samples <= observed.
double lower_tail_p(const Eigen::VectorXd& samples, double observed);

struct Histogram {
    std::vector<double> edges;  // bins + 1 edges
    std::vector<std::size_t> counts;
};

Histogram histogram(std::span<const double> samples, int bins);

}  // namespace predictkit
