#include "sws/sim_user.hpp"

#include <nlohmann/json.hpp>
#include <cmath>

#include "sws/errors.hpp"

namespace sws {

void SimulatedUser::validate() const {
    body.validate();
    for (const auto& [key, reach] : true_reach) {
        if (!(reach >= 0.0 && reach <= 1.0)) {
            throw ValidationError("true_reach for '" + key.first + "' must lie in [0, 1]");
        }
    }
    if (!(default_reach >= 0.0 && default_reach <= 1.0)) {
        throw ValidationError("default_reach must lie in [0, 1]");
    }
    if (!(max_rpm > 0.0)) throw ValidationError("max_rpm must be positive");
    if (!(rpm_slope >= 0.0)) throw ValidationError("rpm_slope must be non-negative");
    if (!(reach_noise >= 0.0)) throw ValidationError("reach_noise must be non-negative");
    if (!(walk_speed > 0.0)) throw ValidationError("walk_speed must be positive");
}

double SimulatedUser::reach_for(const std::string& exercise_id, Side side) const {
    auto it = true_reach.find({exercise_id, side});
    return it != true_reach.end() ? it->second : default_reach;
}

SimulatedUser user_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("user JSON parse error: ") + e.what());
    }
    SimulatedUser user;
    if (doc.contains("body")) user.body = body_from_json(doc["body"].dump());
    if (doc.contains("true_reach")) {
        for (const auto& [key, value] : doc["true_reach"].items()) {
            auto slash = key.find('/');
            if (slash == std::string::npos) {
                throw ValidationError("true_reach key '" + key + "' must be 'exercise_id/side'");
            }
            std::string id = key.substr(0, slash);
            std::string side_str = key.substr(slash + 1);
            Side side;
            if (side_str == "right") side = Side::Right;
            else if (side_str == "left") side = Side::Left;
            else throw ValidationError("true_reach side must be 'right' or 'left' in '" + key + "'");
            user.true_reach[{id, side}] = value.get<double>();
        }
    }
    if (doc.contains("default_reach")) user.default_reach = doc["default_reach"].get<double>();
    if (doc.contains("max_rpm")) user.max_rpm = doc["max_rpm"].get<double>();
    if (doc.contains("rpm_slope")) user.rpm_slope = doc["rpm_slope"].get<double>();
    if (doc.contains("reach_noise")) user.reach_noise = doc["reach_noise"].get<double>();
    if (doc.contains("walk_speed")) user.walk_speed = doc["walk_speed"].get<double>();
    if (doc.contains("stand_up_latency_s"))
        user.stand_up_latency_s = doc["stand_up_latency_s"].get<double>();
    if (doc.contains("touch_latency_s"))
        user.touch_latency_s = doc["touch_latency_s"].get<double>();
    if (doc.contains("rng_seed")) user.rng_seed = doc["rng_seed"].get<std::uint64_t>();
    user.validate();
    return user;
}

std::optional<double> attempt_touch(const SimulatedUser& user, const ExerciseModel& model,
                                    Side side, double f_diff, Rng& rng) {
    if (!(f_diff >= 0.0 && f_diff <= 1.0)) throw ValidationError("f_diff must lie in [0, 1]");

    // Both draws happen on every attempt so the stream stays aligned
    // regardless of the outcome.
    double noise = 0.0;
    if (user.reach_noise > 0.0) {
        noise = std::normal_distribution<double>(0.0, user.reach_noise)(rng);
    }
    double latency = std::uniform_real_distribution<double>(0.3, 1.5)(rng);

    double reach = user.reach_for(model.id, side);
    if (f_diff <= reach + noise) return latency;
    return std::nullopt;
}

int set_rep_count(const SimulatedUser& user, const std::string& exercise_id, Side side,
                  double f_diff, double set_duration_s, Rng& rng) {
    if (!(f_diff >= 0.0 && f_diff <= 1.0)) throw ValidationError("f_diff must lie in [0, 1]");
    if (!(set_duration_s > 0.0)) throw ValidationError("set duration must be positive");

    double jitter = 0.0;
    if (user.reach_noise > 0.0) {
        jitter = std::normal_distribution<double>(0.0, 4.0 * user.reach_noise)(rng);
    }

    double reach = user.reach_for(exercise_id, side);
    if (f_diff > reach + user.reach_noise) return 0;

    double expected = std::max(0.0, user.max_rpm * (1.0 - user.rpm_slope * f_diff)) *
                      set_duration_s / 60.0;
    return static_cast<int>(std::max(0.0, std::llround(expected + jitter) * 1.0));
}

PressureTrace synth_trace(const std::vector<std::pair<double, double>>& events,
                          double duration_s, double baseline_pa, double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0)) throw ValidationError("sample rate must be positive");
    constexpr double kBumpWidth = 0.3;
    for (const auto& [onset, amplitude] : events) {
        if (onset < 0.0 || onset > duration_s) {
            throw ValidationError("bump onset outside [0, duration]");
        }
        (void)amplitude;
    }

    PressureTrace trace;
    trace.sample_rate_hz = sample_rate_hz;
    trace.baseline_pa = baseline_pa;
    auto n = static_cast<std::size_t>(std::ceil(duration_s * sample_rate_hz)) + 1;
    trace.samples_pa.assign(n, baseline_pa);
    for (const auto& [onset, amplitude] : events) {
        for (std::size_t i = 0; i < n; ++i) {
            double t = static_cast<double>(i) / sample_rate_hz;
            if (t >= onset && t <= onset + kBumpWidth) {
                double phase = (t - onset) / kBumpWidth;
                trace.samples_pa[i] += 0.5 * amplitude * (1.0 - std::cos(2.0 * M_PI * phase));
            }
        }
    }
    return trace;
}

}  // namespace sws
