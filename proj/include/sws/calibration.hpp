#pragma once

#include <vector>

#include "sws/exercise.hpp"
#include "sws/sim_user.hpp"

namespace sws {

struct CalibrationConfig {
    double step = 0.1;           // sweep granularity, fraction of the difficulty vector
    double dwell_timeout_s = 3.0;
    double safety_margin = 0.1;  // subtracted from the farthest touched fraction

    void validate() const;
};

struct CalibrationSample {
    double fraction;
    bool touched;
    double time_to_touch_s;  // dwell_timeout when not touched
};

struct CalibrationResult {
    double f_diff_start = 0.0;         // clamp(max_reached_fraction - margin, 0, 1)
    double max_reached_fraction = 0.0; // largest touched fraction, 0 if none
    std::vector<CalibrationSample> samples;
};

/// Haptic range-of-motion sweep: the target starts at the easiest fraction
/// and steps toward 1 by cfg.step; the sweep ends at the first fraction the
/// user fails to touch within the dwell timeout, or at 1.
CalibrationResult run_calibration(const ExerciseModel& model, const BodyDimensions& body,
                                  Side side, const SimulatedUser& user,
                                  const CalibrationConfig& cfg, Rng& rng);

}  // namespace sws
