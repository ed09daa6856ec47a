#include "sws/reachability.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "sws/cma_es.hpp"
#include "sws/errors.hpp"

namespace sws {

Eigen::Isometry3d BasePose::transform() const {
    Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
    t.translate(Eigen::Vector3d(x, y, 0.0));
    t.rotate(Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitZ()));
    return t;
}

void RobotModel::validate() const {
    if (is_mobile()) {
        const auto& m = std::get<MobileManipulator>(model);
        if (!(m.lift_lo < m.lift_hi)) throw ValidationError("lift range must be non-empty");
        if (!(m.ext_lo < m.ext_hi)) throw ValidationError("extension range must be non-empty");
    } else {
        const auto& f = std::get<FixedDualArm>(model);
        for (const SerialChain* chain : {&f.right_arm, &f.left_arm}) {
            if (chain->joints.size() < 6) {
                throw ValidationError("each arm chain needs at least 6 joints");
            }
            for (const auto& j : chain->joints) {
                if (!(j.limit_lo < j.limit_hi)) {
                    throw ValidationError("joint limits must be a non-empty interval");
                }
            }
        }
    }
}

RobotModel default_mobile_manipulator() {
    return RobotModel{MobileManipulator{}};
}

namespace {

SerialChain make_arm(double lateral_offset) {
    // 7R anthropomorphic chain, ~1.17 m reach, shoulder at 1.0 m height.
    SerialChain chain;
    chain.mount = Eigen::Isometry3d::Identity();
    chain.mount.translate(Eigen::Vector3d(0.0, lateral_offset, 1.0));
    chain.joints = {
        {Vec3::UnitZ(), Vec3(0.0, 0.0, 0.0), -1.7, 1.7},    // shoulder yaw
        {Vec3::UnitY(), Vec3(0.06, 0.0, 0.0), -2.1, 1.0},   // shoulder pitch
        {Vec3::UnitX(), Vec3(0.10, 0.0, 0.0), -3.0, 3.0},   // upper-arm roll
        {Vec3::UnitY(), Vec3(0.27, 0.0, 0.0), -0.05, 2.6},  // elbow
        {Vec3::UnitX(), Vec3(0.10, 0.0, 0.0), -3.0, 3.0},   // forearm roll
        {Vec3::UnitY(), Vec3(0.26, 0.0, 0.0), -1.6, 2.1},   // wrist pitch
        {Vec3::UnitX(), Vec3(0.10, 0.0, 0.0), -3.0, 3.0},   // wrist roll
    };
    chain.ee_offset = Vec3(0.28, 0.0, 0.0);
    return chain;
}

double max_reach(const SerialChain& chain) {
    double r = chain.ee_offset.norm();
    for (std::size_t i = 1; i < chain.joints.size(); ++i) r += chain.joints[i].offset.norm();
    return r;
}

// Frames of every joint plus the end effector, for FK and the Jacobian.
struct ChainFrames {
    std::vector<Vec3> origins;  // world position of each joint origin
    std::vector<Vec3> axes;     // world joint axes
    Vec3 ee;
};

ChainFrames compute_frames(const SerialChain& chain, const Eigen::VectorXd& q,
                           const Eigen::Isometry3d& world_from_base) {
    ChainFrames frames;
    Eigen::Isometry3d t = world_from_base * chain.mount;
    for (std::size_t i = 0; i < chain.joints.size(); ++i) {
        const auto& j = chain.joints[i];
        t.translate(j.offset);
        frames.origins.push_back(t.translation());
        frames.axes.push_back(t.rotation() * j.axis);
        t.rotate(Eigen::AngleAxisd(q(static_cast<int>(i)), j.axis));
    }
    frames.ee = t * chain.ee_offset;
    return frames;
}

}  // namespace

RobotModel default_fixed_dual_arm(const BasePose& base) {
    FixedDualArm robot;
    robot.right_arm = make_arm(-0.26);
    robot.left_arm = make_arm(0.26);
    robot.base = base;
    return RobotModel{robot};
}

Vec3 forward_kinematics(const SerialChain& chain, const Eigen::VectorXd& joint_values,
                        const Eigen::Isometry3d& world_from_base) {
    if (joint_values.size() != static_cast<Eigen::Index>(chain.joints.size())) {
        throw ValidationError("joint vector length does not match the chain");
    }
    for (std::size_t i = 0; i < chain.joints.size(); ++i) {
        double q = joint_values(static_cast<int>(i));
        if (q < chain.joints[i].limit_lo || q > chain.joints[i].limit_hi) {
            throw ValidationError("joint " + std::to_string(i) + " value out of limits");
        }
    }
    return compute_frames(chain, joint_values, world_from_base).ee;
}

std::optional<Eigen::VectorXd> solve_position_ik(const SerialChain& chain,
                                                 const Eigen::Isometry3d& world_from_base,
                                                 const Vec3& target,
                                                 const ReachabilityConfig& cfg, Rng& rng) {
    const int n = static_cast<int>(chain.joints.size());
    const double lambda_sq = 0.01;  // DLS damping^2

    // quick reject: target outside the sphere the arm can sweep at all
    Vec3 shoulder = (world_from_base * chain.mount).translation() + chain.joints[0].offset;
    if ((target - shoulder).norm() > max_reach(chain) + cfg.tolerance_m) return std::nullopt;

    for (int restart = 0; restart < cfg.ik_restarts; ++restart) {
        Eigen::VectorXd q(n);
        for (int i = 0; i < n; ++i) {
            const auto& j = chain.joints[i];
            if (restart == 0) {
                q(i) = std::clamp(0.5 * (j.limit_lo + j.limit_hi), j.limit_lo, j.limit_hi);
            } else {
                q(i) = std::uniform_real_distribution<double>(j.limit_lo, j.limit_hi)(rng);
            }
        }

        for (int iter = 0; iter < cfg.ik_iterations; ++iter) {
            ChainFrames frames = compute_frames(chain, q, world_from_base);
            Vec3 error = target - frames.ee;
            if (error.norm() <= cfg.tolerance_m) return q;

            Eigen::MatrixXd jac(3, n);
            for (int i = 0; i < n; ++i) {
                jac.col(i) = frames.axes[i].cross(frames.ee - frames.origins[i]);
            }
            Eigen::Matrix3d jjt = jac * jac.transpose() +
                                  lambda_sq * Eigen::Matrix3d::Identity();
            Eigen::VectorXd dq = jac.transpose() * jjt.ldlt().solve(error);
            double step = dq.norm();
            if (step > 0.5) dq *= 0.5 / step;  // cap per-iteration joint motion
            q += dq;
            for (int i = 0; i < n; ++i) {
                q(i) = std::clamp(q(i), chain.joints[i].limit_lo, chain.joints[i].limit_hi);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Best position error achievable by either arm (for the smoothed objective).
double best_ik_error(const FixedDualArm& robot, const Vec3& target,
                     const ReachabilityConfig& cfg, Rng& rng) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Isometry3d world = robot.base.transform();
    for (const SerialChain* chain : {&robot.right_arm, &robot.left_arm}) {
        Vec3 shoulder = (world * chain->mount).translation() + chain->joints[0].offset;
        double lower_bound = std::max(0.0, (target - shoulder).norm() - max_reach(*chain));
        if (lower_bound > best) continue;
        if (auto q = solve_position_ik(*chain, world, target, cfg, rng)) {
            best = std::min(best, (forward_kinematics(*chain, *q, world) - target).norm());
        } else {
            best = std::min(best, std::max(lower_bound, cfg.tolerance_m * 1.5));
        }
    }
    return best;
}

}  // namespace

bool is_reachable(const RobotModel& robot, const Vec3& target, const ReachabilityConfig& cfg) {
    if (!target.allFinite()) throw ValidationError("target must be finite");
    robot.validate();
    if (robot.is_mobile()) {
        const auto& m = std::get<MobileManipulator>(robot.model);
        double z = target.z() - m.tool_z_offset;
        return z >= m.lift_lo - cfg.tolerance_m && z <= m.lift_hi + cfg.tolerance_m;
    }
    const auto& f = std::get<FixedDualArm>(robot.model);
    Eigen::Isometry3d world = f.base.transform();
    Rng rng(derive_seed(cfg.seed, "ik"));
    for (const SerialChain* chain : {&f.right_arm, &f.left_arm}) {
        if (solve_position_ik(*chain, world, target, cfg, rng)) return true;
    }
    return false;
}

ReachabilityReport coverage(const RobotModel& robot, const std::vector<Vec3>& targets,
                            const ReachabilityConfig& cfg) {
    if (targets.empty()) throw ValidationError("target list must be non-empty");
    ReachabilityReport report;
    report.total = static_cast<int>(targets.size());
    report.flags.reserve(targets.size());
    Vec3 centroid = Vec3::Zero();
    for (const auto& t : targets) {
        bool ok = is_reachable(robot, t, cfg);
        report.flags.push_back(ok);
        if (ok) ++report.reachable;
        centroid += t;
    }
    centroid /= static_cast<double>(targets.size());
    report.fraction = static_cast<double>(report.reachable) / report.total;
    if (!robot.is_mobile()) {
        const auto& f = std::get<FixedDualArm>(robot.model);
        report.base_pose = f.base;
        report.base_to_centroid_m =
            (Vec3(f.base.x, f.base.y, centroid.z()) - centroid).norm();
    }
    return report;
}

std::pair<BasePose, ReachabilityReport> optimize_base(const RobotModel& robot,
                                                      const std::vector<Vec3>& targets,
                                                      const ReachabilityConfig& cfg,
                                                      const BaseOptimizationConfig& opt) {
    if (targets.empty()) throw ValidationError("target list must be non-empty");
    if (robot.is_mobile()) {
        throw ValidationError("base optimization applies to the fixed dual-arm robot");
    }
    const auto& fixed = std::get<FixedDualArm>(robot.model);

    // Smoothed objective: a hard reachable-count is piecewise constant and
    // stalls the strategy. Final reporting uses the exact predicate.
    auto objective = [&](const Eigen::VectorXd& v) {
        FixedDualArm candidate = fixed;
        candidate.base = {v(0), v(1), v(2)};
        Rng rng(derive_seed(cfg.seed, "base-objective"));
        ReachabilityConfig fast = cfg;
        fast.ik_restarts = std::max(1, cfg.ik_restarts / 2);
        double score = 0.0;
        for (const auto& t : targets) {
            double err = best_ik_error(candidate, t, fast, rng);
            score += 1.0 / (1.0 + std::exp((err - cfg.tolerance_m) / (0.5 * cfg.tolerance_m)));
        }
        return -score;
    };

    Eigen::VectorXd x0(3);
    x0 << fixed.base.x, fixed.base.y, fixed.base.theta;
    CmaConfig cma;
    cma.max_evaluations = opt.max_evaluations;
    cma.seed = opt.seed;
    CmaResult res = cma_es_minimize(objective, x0, opt.sigma0, cma);

    BasePose best_pose{res.x_best(0), res.x_best(1), res.x_best(2)};
    RobotModel optimized = robot;
    std::get<FixedDualArm>(optimized.model).base = best_pose;
    ReachabilityReport optimized_report = coverage(optimized, targets, cfg);
    ReachabilityReport initial_report = coverage(robot, targets, cfg);
    if (initial_report.reachable > optimized_report.reachable) {
        return {fixed.base, initial_report};  // the initial pose stays in the comparison set
    }
    return {best_pose, optimized_report};
}

std::vector<Vec3> targets_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,z", 0) != 0) {
        throw ValidationError("targets CSV must start with header 'x,y,z'");
    }
    std::vector<Vec3> targets;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string sx, sy, sz;
        if (!std::getline(row, sx, ',') || !std::getline(row, sy, ',') ||
            !std::getline(row, sz)) {
            throw ValidationError("malformed targets CSV row at line " + std::to_string(line_no));
        }
        try {
            targets.emplace_back(std::stod(sx), std::stod(sy), std::stod(sz));
        } catch (const std::exception&) {
            throw ValidationError("malformed targets CSV row at line " + std::to_string(line_no));
        }
    }
    return targets;
}

}  // namespace sws
