#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sws/body.hpp"

namespace sws {

enum class Posture { Seated, Standing };
enum class ContactBodyPart { Hand, Foot, Knee };

/// Repetitions-per-minute thresholds separating the three score brackets.
struct PerformanceBrackets {
    double excellent_min_rpm = 20.0;
    double good_min_rpm = 10.0;

    void validate() const;
};

/// One exercise: where its 50%-difficulty target sits as a function of the
/// body, and the direction/extent the target moves as difficulty increases.
struct ExerciseModel {
    std::string id;
    std::string name;
    Posture posture = Posture::Seated;
    ContactBodyPart contact = ContactBodyPart::Hand;
    double knee_extension_angle = 0.0;  // radians, kick-style exercises only
    std::function<Vec3(const BodyDimensions&)> anchor_fn;
    Vec3 difficulty_vector = Vec3::Zero();
    PerformanceBrackets brackets;
    std::optional<std::string> cognitive_category;
    bool is_timed_up_and_go = false;
};

/// The three points of a personalized target: easiest, anchor, hardest, and
/// the difficulty-interpolated target actually presented to the user.
struct TargetSet {
    Vec3 x_min;
    Vec3 x_0;
    Vec3 x_max;
    Vec3 x_target;
    double f_diff = 0.5;
    Side side = Side::Right;
};

/// Right-side anchor point X_0 in the hip frame. Validates the body first.
Vec3 anchor_point(const ExerciseModel& model, const BodyDimensions& body);

/// Target set at the given difficulty. f_diff outside [0,1] is a range
/// error. Left-side sets are the mirror of the right-side computation.
TargetSet target_set(const ExerciseModel& model, const BodyDimensions& body,
                     double f_diff, Side side);

/// The nine modeled exercises plus Timed Up and Go. Stable ids.
const std::vector<ExerciseModel>& catalog();

/// The seated forward kick at a specific knee extension angle (radians,
/// measured from 90 degrees of flexion). The catalog entry uses 30 degrees.
ExerciseModel kick_model(double knee_extension_angle);

/// Lookup by id; throws ValidationError when absent.
const ExerciseModel& find_exercise(const std::string& id);

bool has_exercise(const std::string& id);

}  // namespace sws
