#pragma once

#include <cstdint>
#include <vector>

#include "sws/exercise.hpp"

namespace sws {

enum class ScoreBracket { Excellent, Good, Poor };

const char* bracket_name(ScoreBracket b);

/// rpm = reps * 60 / duration, then: Excellent iff rpm >= excellent_min_rpm,
/// Good iff good_min_rpm <= rpm < excellent_min_rpm, else Poor. A rate
/// exactly at a threshold earns the higher bracket.
ScoreBracket bracket_score(int reps, double set_duration_s,
                           const PerformanceBrackets& brackets);

/// Excellent -> +delta, Good -> 0, Poor -> -delta.
double delta_for(ScoreBracket bracket, double delta);

struct DifficultyStep {
    int set_index;
    ScoreBracket bracket;
    double f_diff_after;
};

struct DifficultyState {
    double f_diff = 0.5;
    double delta = 0.2;
    std::vector<DifficultyStep> history;
};

/// Between-set update: f' = clamp(f + delta_for(bracket), 0, 1), history
/// appended. Pure; returns the new state.
DifficultyState update_difficulty(const DifficultyState& state, ScoreBracket bracket);

}  // namespace sws
