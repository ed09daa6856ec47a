#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sws/body.hpp"
#include "sws/rng.hpp"

namespace sws {

/// Revolute joint: translate by `offset` from the previous frame, then
/// rotate about `axis` by the joint value.
struct JointDescriptor {
    Vec3 axis = Vec3::UnitZ();
    Vec3 offset = Vec3::Zero();
    double limit_lo = -M_PI;
    double limit_hi = M_PI;
};

struct SerialChain {
    std::vector<JointDescriptor> joints;
    Vec3 ee_offset = Vec3::Zero();         // from the last joint frame
    Eigen::Isometry3d mount = Eigen::Isometry3d::Identity();  // robot base -> chain base
};

struct BasePose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Eigen::Isometry3d transform() const;
};

/// Mobile base + lift + telescoping arm. The free planar base makes x/y
/// always satisfiable; reachability reduces to the vertical span.
struct MobileManipulator {
    double lift_lo = 0.1;
    double lift_hi = 1.8;
    double ext_lo = 0.0;
    double ext_hi = 0.52;
    double tool_z_offset = 0.0;
};

struct FixedDualArm {
    SerialChain right_arm;
    SerialChain left_arm;
    BasePose base;
};

struct RobotModel {
    std::variant<MobileManipulator, FixedDualArm> model;

    bool is_mobile() const { return std::holds_alternative<MobileManipulator>(model); }
    void validate() const;
};

RobotModel default_mobile_manipulator();
/// Two 7-joint arms approximating a Baxter-class torso: shoulders offset
/// +-0.26 m laterally at 1.0 m height, ~1.2 m max reach each.
RobotModel default_fixed_dual_arm(const BasePose& base = {});

struct ReachabilityConfig {
    double tolerance_m = 0.02;
    int ik_restarts = 8;
    int ik_iterations = 60;
    std::uint64_t seed = 0;
};

struct ReachabilityReport {
    int total = 0;
    int reachable = 0;
    double fraction = 0.0;
    std::vector<bool> flags;
    BasePose base_pose;
    double base_to_centroid_m = 0.0;  // flags infeasible "inside the cluster" optima
};

/// End-effector position for the chain at the given joint values, composed
/// through world_from_base * mount. Out-of-limit joints are a validation
/// error.
Vec3 forward_kinematics(const SerialChain& chain, const Eigen::VectorXd& joint_values,
                        const Eigen::Isometry3d& world_from_base = Eigen::Isometry3d::Identity());

/// Damped-least-squares position IK with seeded random restarts. Returns the
/// joint solution when the end effector gets within tolerance of the target.
std::optional<Eigen::VectorXd> solve_position_ik(const SerialChain& chain,
                                                 const Eigen::Isometry3d& world_from_base,
                                                 const Vec3& target,
                                                 const ReachabilityConfig& cfg, Rng& rng);

bool is_reachable(const RobotModel& robot, const Vec3& target, const ReachabilityConfig& cfg);

ReachabilityReport coverage(const RobotModel& robot, const std::vector<Vec3>& targets,
                            const ReachabilityConfig& cfg);

struct BaseOptimizationConfig {
    int max_evaluations = 80;
    double sigma0 = 0.5;
    std::uint64_t seed = 0;
};

/// CMA-ES over (x, y, theta) maximizing the reachable count. The objective
/// fed to the optimizer is smoothed with a sigmoid of (tolerance - IK error);
/// the returned report always uses the exact predicate, and is never worse
/// than coverage at the robot's initial base pose.
std::pair<BasePose, ReachabilityReport> optimize_base(const RobotModel& robot,
                                                      const std::vector<Vec3>& targets,
                                                      const ReachabilityConfig& cfg,
                                                      const BaseOptimizationConfig& opt);

/// CSV with header `x,y,z`, meters. Malformed rows throw ValidationError
/// naming the line number.
std::vector<Vec3> targets_from_csv(const std::string& csv_text);

}  // namespace sws
