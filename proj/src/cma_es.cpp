#include "sws/cma_es.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sws/errors.hpp"
#include "sws/rng.hpp"

namespace sws {

CmaResult cma_es_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                          const Eigen::VectorXd& x0, double sigma0, const CmaConfig& cfg) {
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw ValidationError("dimension must be >= 1");
    if (!(sigma0 > 0.0)) throw ValidationError("sigma0 must be positive");

    double f0 = objective(x0);
    if (!std::isfinite(f0)) throw ValidationError("objective is non-finite at x0");

    const int lambda = cfg.lambda > 0 ? cfg.lambda
                                      : 4 + static_cast<int>(std::floor(3.0 * std::log(n)));
    const int mu = lambda / 2;

    Eigen::VectorXd weights(mu);
    for (int i = 0; i < mu; ++i) weights(i) = std::log(mu + 0.5) - std::log(i + 1.0);
    weights /= weights.sum();
    const double mu_eff = 1.0 / weights.squaredNorm();

    const double c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
    const double d_sigma =
        1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) + c_sigma;
    const double c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
    const double c_1 = 2.0 / (std::pow(n + 1.3, 2) + mu_eff);
    const double c_mu = std::min(1.0 - c_1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) /
                                                (std::pow(n + 2.0, 2) + mu_eff));
    const double chi_n = std::sqrt(static_cast<double>(n)) *
                         (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

    Eigen::VectorXd mean = x0;
    double sigma = sigma0;
    Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd p_sigma = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd p_c = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd D = Eigen::VectorXd::Ones(n);

    Rng rng(derive_seed(cfg.seed, "cma-es"));
    std::normal_distribution<double> gauss(0.0, 1.0);

    CmaResult result;
    result.x_best = x0;
    result.f_best = f0;
    result.evaluations = 1;

    std::vector<Eigen::VectorXd> ys(lambda);
    std::vector<double> fs(lambda);
    std::vector<int> order(lambda);

    while (result.evaluations + lambda <= cfg.max_evaluations) {
        for (int k = 0; k < lambda; ++k) {
            Eigen::VectorXd z(n);
            for (int i = 0; i < n; ++i) z(i) = gauss(rng);
            ys[k] = B * (D.asDiagonal() * z);
            Eigen::VectorXd x = mean + sigma * ys[k];
            fs[k] = objective(x);
            ++result.evaluations;
            if (std::isfinite(fs[k]) && fs[k] < result.f_best) {
                result.f_best = fs[k];
                result.x_best = x;
            }
        }

        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });

        Eigen::VectorXd y_w = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < mu; ++i) y_w += weights(i) * ys[order[i]];
        mean += sigma * y_w;

        // C^{-1/2} y_w via the eigendecomposition already at hand
        Eigen::VectorXd c_inv_sqrt_yw = B * (D.cwiseInverse().asDiagonal() * (B.transpose() * y_w));
        p_sigma = (1.0 - c_sigma) * p_sigma +
                  std::sqrt(c_sigma * (2.0 - c_sigma) * mu_eff) * c_inv_sqrt_yw;

        const int gen = result.evaluations / lambda;
        const bool h_sig = p_sigma.norm() /
                               std::sqrt(1.0 - std::pow(1.0 - c_sigma, 2.0 * (gen + 1))) <
                           (1.4 + 2.0 / (n + 1.0)) * chi_n;
        p_c = (1.0 - c_c) * p_c +
              (h_sig ? std::sqrt(c_c * (2.0 - c_c) * mu_eff) : 0.0) * y_w;

        Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < mu; ++i) {
            rank_mu += weights(i) * ys[order[i]] * ys[order[i]].transpose();
        }
        const double delta_hsig = (1.0 - (h_sig ? 1.0 : 0.0)) * c_c * (2.0 - c_c);
        C = (1.0 - c_1 - c_mu) * C +
            c_1 * (p_c * p_c.transpose() + delta_hsig * C) + c_mu * rank_mu;

        sigma *= std::exp((c_sigma / d_sigma) * (p_sigma.norm() / chi_n - 1.0));

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            (C + C.transpose()) / 2.0);  // enforce symmetry before decomposition
        D = eig.eigenvalues().cwiseMax(1e-20).cwiseSqrt();
        B = eig.eigenvectors();

        double f_spread = fs[order[lambda - 1]] - fs[order[0]];
        if (std::isfinite(f_spread) && f_spread < cfg.f_tolerance) break;
        if (sigma * D.maxCoeff() < 1e-14) break;
    }
    return result;
}

}  // namespace sws
