#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sws/calibration.hpp"
#include "sws/contact.hpp"
#include "sws/difficulty.hpp"
#include "sws/sim_user.hpp"
#include "sws/words.hpp"

namespace sws {

struct PlannedExercise {
    std::string exercise_id;
    int sets_per_side = 2;
    double set_duration_s = 30.0;
    std::optional<std::string> cognitive_category;
    std::optional<PerformanceBrackets> bracket_override;
};

struct SessionPlan {
    std::vector<PlannedExercise> exercises;
    std::uint64_t seed = 0;
    double delta = 0.2;
    CalibrationConfig calibration;
    DetectorConfig detector;
    double tug_distance_m = 3.0;
    std::map<std::string, std::string> word_list_files;  // category -> path

    /// Unknown exercise ids or invalid sub-configs throw before any event
    /// is emitted.
    void validate() const;
};

struct SessionEvent {
    double time_s = 0.0;
    std::string kind;
    nlohmann::ordered_json payload;

    bool operator==(const SessionEvent& other) const = default;
};

/// Per-set summary row backing the CSV output.
struct SetSummary {
    std::string exercise_id;
    Side side;
    int set_index;
    int reps;
    double rpm;
    ScoreBracket bracket;
    double f_diff_before;
    double f_diff_after;
};

struct SessionResult {
    std::vector<SessionEvent> events;
    std::vector<SetSummary> summaries;
};

/// Run the whole adaptive-difficulty protocol: per exercise, calibrate right
/// then left, then for each side run the planned sets, scoring each set and
/// shifting the difficulty for the next one. Deterministic for a fixed
/// (plan, user) pair.
SessionResult run_session(const SessionPlan& plan, const SimulatedUser& user);

/// Mobility test: the robot retreats `distance` meters and times the user's
/// approach and touch: stand_up_latency + distance / walk_speed + touch latency.
double timed_up_and_go(const SimulatedUser& user, double distance_m);

/// One JSON object per line, keys time_s/kind/payload in that order.
std::string serialize_log(const std::vector<SessionEvent>& events);
std::vector<SessionEvent> parse_log(const std::string& jsonl);

/// `exercise,side,set,reps,rpm,bracket,f_diff_before,f_diff_after`
std::string summaries_to_csv(const std::vector<SetSummary>& summaries);

/// Session config document (JSON). Schema: {"exercises": [{"id", "sets_per_side",
/// "set_duration_s", "cognitive", "brackets": {"excellent_min_rpm", "good_min_rpm"}}],
/// "seed", "delta", "calibration": {...}, "detector": {...}, "word_lists": {...}}.
/// Relative word-list paths resolve against base_dir (usually the config
/// file's directory).
SessionPlan plan_from_json(const std::string& json_text, const std::string& base_dir = "");

}  // namespace sws
