#pragma once

#include <string>
#include <vector>

namespace sws {

/// Sampled bubble pressure. The baseline is captured at startup and carried
/// explicitly; detection is relative to it, never re-estimated from data.
struct PressureTrace {
    double sample_rate_hz = 100.0;
    double baseline_pa = 101325.0;
    std::vector<double> samples_pa;
};

struct ContactEvent {
    double onset_time_s = 0.0;
    double peak_pressure_delta_pa = 0.0;
    bool too_hard = false;
};

struct DetectorConfig {
    double rise_threshold_pa = 250.0;     // delta above baseline that fires
    double release_threshold_pa = 125.0;  // hysteresis re-arm level
    double debounce_s = 0.2;
    double too_hard_threshold_pa = 1500.0;

    void validate() const;
};

/// Threshold-crossing detector with hysteresis and debounce. One event per
/// excursion above baseline + rise_threshold; the detector re-arms only once
/// the signal is back below baseline + release_threshold and debounce seconds
/// have passed since onset. Non-finite samples are a validation error.
std::vector<ContactEvent> detect_contacts(const PressureTrace& trace,
                                          const DetectorConfig& cfg);

/// CSV with header `time_s,pressure_pa`, monotone time column. Sample rate is
/// inferred from the time column; baseline is the first sample.
PressureTrace trace_from_csv(const std::string& csv_text);

}  // namespace sws
