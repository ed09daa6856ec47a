#include "sws/contact.hpp"

#include <cmath>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

void DetectorConfig::validate() const {
    if (!(0.0 < release_threshold_pa && release_threshold_pa < rise_threshold_pa &&
          rise_threshold_pa < too_hard_threshold_pa)) {
        throw ValidationError("detector thresholds must satisfy 0 < release < rise < too_hard");
    }
    if (!(debounce_s >= 0.0)) throw ValidationError("debounce must be non-negative");
}

std::vector<ContactEvent> detect_contacts(const PressureTrace& trace,
                                          const DetectorConfig& cfg) {
    cfg.validate();
    if (!(trace.sample_rate_hz > 0.0)) throw ValidationError("sample rate must be positive");

    std::vector<ContactEvent> events;
    const double dt = 1.0 / trace.sample_rate_hz;
    bool armed = true;
    ContactEvent current;

    for (std::size_t i = 0; i < trace.samples_pa.size(); ++i) {
        double sample = trace.samples_pa[i];
        if (!std::isfinite(sample)) {
            throw ValidationError("non-finite pressure sample at index " + std::to_string(i));
        }
        double delta = sample - trace.baseline_pa;
        double t = static_cast<double>(i) * dt;

        if (armed) {
            if (delta >= cfg.rise_threshold_pa) {
                current = ContactEvent{t, delta, false};
                armed = false;
            }
        } else {
            current.peak_pressure_delta_pa = std::max(current.peak_pressure_delta_pa, delta);
            bool released = delta < cfg.release_threshold_pa;
            bool debounced = (t - current.onset_time_s) >= cfg.debounce_s;
            if (released && debounced) {
                current.too_hard = current.peak_pressure_delta_pa >= cfg.too_hard_threshold_pa;
                events.push_back(current);
                armed = true;
            }
        }
    }
    if (!armed) {
        // excursion still open at end of trace
        current.too_hard = current.peak_pressure_delta_pa >= cfg.too_hard_threshold_pa;
        events.push_back(current);
    }
    return events;
}

PressureTrace trace_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("time_s,pressure_pa", 0) != 0) {
        throw ValidationError("pressure CSV must start with header 'time_s,pressure_pa'");
    }

    std::vector<double> times;
    PressureTrace trace;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string t_str, p_str;
        if (!std::getline(row, t_str, ',') || !std::getline(row, p_str)) {
            throw ValidationError("malformed pressure CSV row at line " + std::to_string(line_no));
        }
        double t, p;
        try {
            t = std::stod(t_str);
            p = std::stod(p_str);
        } catch (const std::exception&) {
            throw ValidationError("malformed pressure CSV row at line " + std::to_string(line_no));
        }
        if (!times.empty() && t <= times.back()) {
            throw ValidationError("pressure CSV time column must be strictly increasing (line " +
                                  std::to_string(line_no) + ")");
        }
        times.push_back(t);
        trace.samples_pa.push_back(p);
    }
    if (times.size() >= 2) {
        trace.sample_rate_hz = (times.size() - 1) / (times.back() - times.front());
    }
    if (!trace.samples_pa.empty()) trace.baseline_pa = trace.samples_pa.front();
    return trace;
}

}  // namespace sws
