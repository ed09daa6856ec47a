#include "sws/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "sws/errors.hpp"

namespace sws {

void CalibrationConfig::validate() const {
    if (!(step > 0.0 && step <= 0.25)) {
        throw ValidationError("calibration step must lie in (0, 0.25]");
    }
    if (!(safety_margin >= 0.0 && safety_margin < 1.0)) {
        throw ValidationError("calibration safety margin must lie in [0, 1)");
    }
    if (!(dwell_timeout_s > 0.0)) throw ValidationError("dwell timeout must be positive");
}

CalibrationResult run_calibration(const ExerciseModel& model, const BodyDimensions& body,
                                  Side side, const SimulatedUser& user,
                                  const CalibrationConfig& cfg, Rng& rng) {
    cfg.validate();
    body.validate();

    CalibrationResult result;
    // Easy to hard, starting at the minimum-difficulty end. The sweep ends at
    // the first fraction the user misses; a miss is not retried.
    for (int i = 0;; ++i) {
        // snap accumulated step multiples so e.g. 6 * 0.1 compares equal to 0.6
        double fraction = std::min(1.0, std::round(i * cfg.step * 1e12) / 1e12);
        auto touch = attempt_touch(user, model, side, fraction, rng);
        bool touched = touch.has_value() && *touch <= cfg.dwell_timeout_s;
        double t = touched ? *touch : cfg.dwell_timeout_s;
        result.samples.push_back({fraction, touched, t});
        if (!touched) break;
        result.max_reached_fraction = fraction;
        if (fraction >= 1.0) break;
    }
    result.f_diff_start =
        std::clamp(result.max_reached_fraction - cfg.safety_margin, 0.0, 1.0);
    return result;
}

}  // namespace sws
