#pragma once

#include <Eigen/Core>
#include <string>

namespace sws {

using Vec3 = Eigen::Vector3d;

/// Per-person segment lengths and widths, meters. All targets derived from
/// these are expressed in the hip frame: origin between the hips, X forward,
/// Z vertically up, Y to the user's left (right-handed).
struct BodyDimensions {
    double upper_leg_length = 0.45;
    double lower_leg_length = 0.45;
    double hip_width = 0.35;
    double upper_arm_length = 0.30;
    double forearm_length = 0.28;
    double shoulder_width = 0.40;
    double seated_shoulder_height = 0.60;
    double standing_shoulder_height = 1.40;
    double standing_hip_height = 0.95;

    /// Throws ValidationError if any field is outside [0.05, 2.0] m or the
    /// hip/shoulder sanity bound fails.
    void validate() const;
};

/// Parse from a JSON document with snake_case keys, values in meters.
/// Unknown keys are rejected. Validates before returning.
BodyDimensions body_from_json(const std::string& json_text);

std::string body_to_json(const BodyDimensions& b);

enum class Side { Right, Left };

inline const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

/// Reflect across the X-Z plane of the hip frame: [x, -y, z].
inline Vec3 mirror_point(const Vec3& p) { return Vec3(p.x(), -p.y(), p.z()); }

}  // namespace sws
