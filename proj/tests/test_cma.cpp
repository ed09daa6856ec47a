#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "sws/cma_es.hpp"
#include "sws/errors.hpp"

using namespace sws;

namespace {

double sphere(const Eigen::VectorXd& x) { return x.squaredNorm(); }

double rosenbrock2(const Eigen::VectorXd& x) {
    double a = 1.0 - x(0);
    double b = x(1) - x(0) * x(0);
    return a * a + 100.0 * b * b;
}

}  // namespace

TEST_CASE("sphere converges to the origin") {
    Eigen::VectorXd x0 = Eigen::VectorXd::Ones(5);
    CmaConfig cfg;
    cfg.max_evaluations = 5000;
    auto res = cma_es_minimize(sphere, x0, 0.5, cfg);
    CHECK(res.x_best.norm() <= 1e-6);
    CHECK(res.evaluations <= 5000);
}

TEST_CASE("translated sphere converges to the translation") {
    Eigen::VectorXd c(4);
    c << 1.5, -2.0, 0.25, 3.0;
    auto objective = [&](const Eigen::VectorXd& x) { return (x - c).squaredNorm(); };
    CmaConfig cfg;
    cfg.max_evaluations = 8000;
    auto res = cma_es_minimize(objective, Eigen::VectorXd::Zero(4), 1.0, cfg);
    CHECK((res.x_best - c).norm() <= 1e-6);
}

TEST_CASE("rosenbrock reaches the valley floor") {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(2);
    CmaConfig cfg;
    cfg.max_evaluations = 20000;
    auto res = cma_es_minimize(rosenbrock2, x0, 0.3, cfg);
    CHECK(std::abs(res.x_best(0) - 1.0) <= 1e-3);
    CHECK(std::abs(res.x_best(1) - 1.0) <= 1e-3);
}

TEST_CASE("fixed seed reproduces the run exactly") {
    Eigen::VectorXd x0 = Eigen::VectorXd::Ones(3);
    CmaConfig cfg;
    cfg.max_evaluations = 2000;
    cfg.seed = 99;
    auto a = cma_es_minimize(sphere, x0, 0.5, cfg);
    auto b = cma_es_minimize(sphere, x0, 0.5, cfg);
    CHECK(a.f_best == b.f_best);
    CHECK(a.x_best == b.x_best);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("rotational invariance on the sphere") {
    // minimizing f(x) and f(Rx) from a correspondingly rotated start gives
    // the same best value
    Eigen::Matrix3d rot =
        Eigen::AngleAxisd(0.7, Eigen::Vector3d(1, 2, 3).normalized()).toRotationMatrix();
    Eigen::VectorXd x0 = Eigen::VectorXd::Ones(3);
    Eigen::VectorXd x0_rot = rot.transpose() * x0;

    CmaConfig cfg;
    cfg.max_evaluations = 4000;
    auto plain = cma_es_minimize(sphere, x0, 0.5, cfg);
    auto rotated = cma_es_minimize(
        [&](const Eigen::VectorXd& x) { return (rot * x).squaredNorm(); }, x0_rot, 0.5, cfg);
    CHECK(std::abs(plain.f_best - rotated.f_best) <= 1e-6);
}

TEST_CASE("non-finite objective at x0 rejected") {
    auto bad = [](const Eigen::VectorXd&) { return std::nan(""); };
    CHECK_THROWS_AS(cma_es_minimize(bad, Eigen::VectorXd::Ones(2), 0.5, {}), ValidationError);
    CHECK_THROWS_AS(cma_es_minimize(sphere, Eigen::VectorXd::Ones(2), 0.0, {}), ValidationError);
}
