#include "sws/difficulty.hpp"

#include <algorithm>

#include "sws/errors.hpp"

namespace sws {

const char* bracket_name(ScoreBracket b) {
    switch (b) {
        case ScoreBracket::Excellent: return "excellent";
        case ScoreBracket::Good: return "good";
        case ScoreBracket::Poor: return "poor";
    }
    return "?";
}

ScoreBracket bracket_score(int reps, double set_duration_s,
                           const PerformanceBrackets& brackets) {
    if (!(set_duration_s > 0.0)) throw ValidationError("set duration must be positive");
    if (reps < 0) throw ValidationError("rep count must be non-negative");
    brackets.validate();
    double rpm = reps * 60.0 / set_duration_s;
    if (rpm >= brackets.excellent_min_rpm) return ScoreBracket::Excellent;
    if (rpm >= brackets.good_min_rpm) return ScoreBracket::Good;
    return ScoreBracket::Poor;
}

double delta_for(ScoreBracket bracket, double delta) {
    switch (bracket) {
        case ScoreBracket::Excellent: return delta;
        case ScoreBracket::Good: return 0.0;
        case ScoreBracket::Poor: return -delta;
    }
    return 0.0;
}

DifficultyState update_difficulty(const DifficultyState& state, ScoreBracket bracket) {
    DifficultyState next = state;
    next.f_diff = std::clamp(state.f_diff + delta_for(bracket, state.delta), 0.0, 1.0);
    next.history.push_back({static_cast<int>(state.history.size()), bracket, next.f_diff});
    return next;
}

}  // namespace sws
