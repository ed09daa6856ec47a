#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

namespace sws {

struct CmaConfig {
    int lambda = 0;            // 0 -> default 4 + floor(3 ln n)
    int max_evaluations = 10000;
    double f_tolerance = 1e-12;  // stop when the population f-spread falls below this
    std::uint64_t seed = 0;
};

struct CmaResult {
    Eigen::VectorXd x_best;
    double f_best = 0.0;
    int evaluations = 0;
};

/// (mu/mu_w, lambda) CMA-ES with rank-one and rank-mu covariance updates.
/// Deterministic under a fixed seed. Throws ValidationError if the objective
/// is non-finite at x0.
CmaResult cma_es_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                          const Eigen::VectorXd& x0, double sigma0, const CmaConfig& cfg);

}  // namespace sws
