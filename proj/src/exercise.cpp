#include "sws/exercise.hpp"

#include <cmath>

#include "sws/errors.hpp"

namespace sws {

void PerformanceBrackets::validate() const {
    if (!(excellent_min_rpm > good_min_rpm && good_min_rpm > 0)) {
        throw ValidationError("bracket thresholds must satisfy excellent_min_rpm > "
                              "good_min_rpm > 0");
    }
}

Vec3 anchor_point(const ExerciseModel& model, const BodyDimensions& body) {
    body.validate();
    Vec3 x0 = model.anchor_fn(body);
    if (!x0.allFinite()) {
        throw ValidationError("anchor point for '" + model.id + "' is not finite");
    }
    return x0;
}

TargetSet target_set(const ExerciseModel& model, const BodyDimensions& body,
                     double f_diff, Side side) {
    if (!(f_diff >= 0.0 && f_diff <= 1.0)) {
        throw ValidationError("f_diff must lie in [0, 1]");
    }
    TargetSet ts;
    ts.x_0 = anchor_point(model, body);
    ts.x_min = ts.x_0 - 0.5 * model.difficulty_vector;
    ts.x_max = ts.x_0 + 0.5 * model.difficulty_vector;
    ts.x_target = ts.x_min + f_diff * model.difficulty_vector;
    ts.f_diff = f_diff;
    ts.side = side;
    if (side == Side::Left) {
        ts.x_0 = mirror_point(ts.x_0);
        ts.x_min = mirror_point(ts.x_min);
        ts.x_max = mirror_point(ts.x_max);
        ts.x_target = mirror_point(ts.x_target);
    }
    return ts;
}

namespace {

constexpr double kDefaultKneeAngle = 30.0 * M_PI / 180.0;

double arm_length(const BodyDimensions& b) { return b.upper_arm_length + b.forearm_length; }

// The nine modeled exercises. Only the forward kick's anchor and difficulty
// vector are fixed constants of the method; the remaining entries are linear
// or trigonometric functions of the body dimensions chosen to match the
// intended motion of each stretch. Anchors are for the right side; left-side
// targets are mirrored across the X-Z plane.
std::vector<ExerciseModel> build_catalog() {
    std::vector<ExerciseModel> models;

    {
        ExerciseModel m;
        m.id = "seated_reach_forward";
        m.name = "Seated Reach Forward";
        m.posture = Posture::Seated;
        m.contact = ContactBodyPart::Hand;
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.9 * arm_length(b), 0.5 * b.shoulder_width, b.seated_shoulder_height);
        };
        m.difficulty_vector = Vec3(0.20, 0.0, 0.10);
        models.push_back(m);
    }
    models.push_back(kick_model(kDefaultKneeAngle));
    {
        ExerciseModel m;
        m.id = "seated_calf_raises";
        m.name = "Seated Calf Raises";
        m.posture = Posture::Seated;
        m.contact = ContactBodyPart::Knee;
        m.cognitive_category = "us_states";
        // Knee rises as the heel lifts; target sits just above the knee.
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(b.upper_leg_length, 0.5 * b.hip_width, 0.3 * b.lower_leg_length);
        };
        m.difficulty_vector = Vec3(0.0, 0.0, 0.10);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "standing_reach_across";
        m.name = "Standing Reach Across";
        m.posture = Posture::Standing;
        m.contact = ContactBodyPart::Hand;
        m.cognitive_category = "animals";
        // Right hand crosses the midline toward the left side.
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.3 * arm_length(b), 0.6 * arm_length(b),
                        b.standing_shoulder_height - b.standing_hip_height);
        };
        m.difficulty_vector = Vec3(0.0, 0.25, 0.05);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "seated_windmills";
        m.name = "Seated Windmills";
        m.posture = Posture::Seated;
        m.contact = ContactBodyPart::Hand;
        // Arm extended laterally on the exercising side.
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.0, 0.5 * b.shoulder_width + 0.8 * arm_length(b),
                        b.seated_shoulder_height);
        };
        m.difficulty_vector = Vec3(0.0, 0.15, 0.25);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "seated_high_knees";
        m.name = "Seated High Knees";
        m.posture = Posture::Seated;
        m.contact = ContactBodyPart::Knee;
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.7 * b.upper_leg_length, 0.5 * b.hip_width, 0.5 * b.lower_leg_length);
        };
        m.difficulty_vector = Vec3(0.0, 0.0, 0.25);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "standing_high_knees";
        m.name = "Standing High Knees";
        m.posture = Posture::Standing;
        m.contact = ContactBodyPart::Knee;
        // Thigh approaches horizontal; the knee ends up near hip height.
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.8 * b.upper_leg_length, 0.5 * b.hip_width, -0.2 * b.upper_leg_length);
        };
        m.difficulty_vector = Vec3(0.0, 0.0, 0.30);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "standing_reach_down";
        m.name = "Standing Reach Down";
        m.posture = Posture::Standing;
        m.contact = ContactBodyPart::Hand;
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.3 * arm_length(b), 0.5 * b.shoulder_width,
                        -0.5 * b.standing_hip_height);
        };
        m.difficulty_vector = Vec3(0.05, 0.0, -0.30);
        models.push_back(m);
    }
    {
        ExerciseModel m;
        m.id = "standing_calf_raises";
        m.name = "Standing Calf Raises";
        m.posture = Posture::Standing;
        m.contact = ContactBodyPart::Knee;
        // The whole body rises on the toes; the knee tracks the lift.
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(0.25 * b.upper_leg_length, 0.5 * b.hip_width,
                        b.lower_leg_length - b.standing_hip_height + 0.04);
        };
        m.difficulty_vector = Vec3(0.0, 0.0, 0.08);
        models.push_back(m);
    }
    {
        // Timed Up and Go: no parametric target; the robot retreats and the
        // session engine times the approach.
        ExerciseModel m;
        m.id = "timed_up_and_go";
        m.name = "Timed Up and Go";
        m.posture = Posture::Standing;
        m.contact = ContactBodyPart::Hand;
        m.is_timed_up_and_go = true;
        m.anchor_fn = [](const BodyDimensions& b) {
            return Vec3(3.0, 0.0, b.standing_shoulder_height - b.standing_hip_height);
        };
        m.difficulty_vector = Vec3(1.0, 0.0, 0.0);
        models.push_back(m);
    }

    return models;
}

}  // namespace

ExerciseModel kick_model(double knee_extension_angle) {
    ExerciseModel m;
    m.id = "seated_forward_kick";
    m.name = "Seated Forward Kick";
    m.posture = Posture::Seated;
    m.contact = ContactBodyPart::Foot;
    m.knee_extension_angle = knee_extension_angle;
    m.anchor_fn = [knee_extension_angle](const BodyDimensions& b) {
        return Vec3(b.upper_leg_length + b.lower_leg_length * std::sin(knee_extension_angle),
                    0.5 * b.hip_width,
                    b.lower_leg_length * std::cos(knee_extension_angle));
    };
    m.difficulty_vector = Vec3(0.15, 0.0, 0.50);
    return m;
}

const std::vector<ExerciseModel>& catalog() {
    static const std::vector<ExerciseModel> models = build_catalog();
    return models;
}

const ExerciseModel& find_exercise(const std::string& id) {
    for (const auto& m : catalog()) {
        if (m.id == id) return m;
    }
    throw ValidationError("unknown exercise id '" + id + "'");
}

bool has_exercise(const std::string& id) {
    for (const auto& m : catalog()) {
        if (m.id == id) return true;
    }
    return false;
}

}  // namespace sws
