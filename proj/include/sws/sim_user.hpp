#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sws/body.hpp"
#include "sws/contact.hpp"
#include "sws/exercise.hpp"
#include "sws/rng.hpp"

namespace sws {

/// Synthetic stand-in for the human side of the loop. true_reach gives, per
/// exercise and side, the largest difficulty fraction the user can touch.
struct SimulatedUser {
    BodyDimensions body;
    std::map<std::pair<std::string, Side>, double> true_reach;
    double default_reach = 0.7;       // used when an (exercise, side) key is absent
    double max_rpm = 24.0;            // repetition rate at f_diff = 0
    double rpm_slope = 0.5;           // rpm loss per unit f_diff
    double reach_noise = 0.0;         // sigma of per-attempt reach jitter
    double walk_speed = 1.0;          // m/s, Timed Up and Go
    double stand_up_latency_s = 0.0;  // Timed Up and Go
    double touch_latency_s = 0.0;     // Timed Up and Go, after arriving
    std::uint64_t rng_seed = 0;

    void validate() const;
    double reach_for(const std::string& exercise_id, Side side) const;
};

/// Parse a user profile from JSON (schema mirrors the field names; true_reach
/// is a map of "exercise_id/side" -> fraction).
SimulatedUser user_from_json(const std::string& json_text);

/// Whether and when the user touches a target at difficulty f_diff. Success
/// iff f_diff <= true_reach + noise(sigma); latency is drawn from rng so a
/// fixed generator state reproduces the outcome exactly.
std::optional<double> attempt_touch(const SimulatedUser& user, const ExerciseModel& model,
                                    Side side, double f_diff, Rng& rng);

/// Repetitions completed over one set: expected max(0, max_rpm * (1 - k*f))
/// * duration/60, with seeded integer noise; zero whenever the target is
/// beyond reach.
int set_rep_count(const SimulatedUser& user, const std::string& exercise_id, Side side,
                  double f_diff, double set_duration_s, Rng& rng);

/// Baseline plus one raised-cosine bump (0.3 s wide) per (onset, amplitude)
/// event. Overlapping bumps sum.
PressureTrace synth_trace(const std::vector<std::pair<double, double>>& events,
                          double duration_s, double baseline_pa, double sample_rate_hz);

}  // namespace sws
