// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion checks the implementation against an independent
// oracle or a frozen analytic expectation at a fixed tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "sws/calibration.hpp"
#include "sws/cma_es.hpp"
#include "sws/contact.hpp"
#include "sws/difficulty.hpp"
#include "sws/errors.hpp"
#include "sws/exercise.hpp"
#include "sws/reachability.hpp"
#include "sws/session.hpp"
#include "sws/sim_user.hpp"
#include "sws/words.hpp"

using namespace sws;

namespace {

// ---------------------------------------------------------------- criterion 1

bool equation_fidelity() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> leg(0.3, 0.6), hip(0.25, 0.45),
        angle(0.0, M_PI / 2), frac(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        BodyDimensions b;
        b.upper_leg_length = leg(rng);
        b.lower_leg_length = leg(rng);
        b.hip_width = hip(rng);
        double theta = angle(rng);
        double f = frac(rng);

        // independent hand evaluation of the kick equations
        double x0x = b.upper_leg_length + b.lower_leg_length * std::sin(theta);
        double x0y = 0.5 * b.hip_width;
        double x0z = b.lower_leg_length * std::cos(theta);
        double dbar[3] = {0.15, 0.0, 0.50};
        double want_min[3] = {x0x - 0.5 * dbar[0], x0y - 0.5 * dbar[1], x0z - 0.5 * dbar[2]};
        double want_tgt[3] = {want_min[0] + f * dbar[0], want_min[1] + f * dbar[1],
                              want_min[2] + f * dbar[2]};

        auto model = kick_model(theta);
        Vec3 x0 = anchor_point(model, b);
        TargetSet ts = target_set(model, b, f, Side::Right);
        double err = std::max({std::abs(x0.x() - x0x), std::abs(x0.y() - x0y),
                               std::abs(x0.z() - x0z), std::abs(ts.x_min.x() - want_min[0]),
                               std::abs(ts.x_min.z() - want_min[2]),
                               std::abs(ts.x_target.x() - want_tgt[0]),
                               std::abs(ts.x_target.y() - want_tgt[1]),
                               std::abs(ts.x_target.z() - want_tgt[2])});
        if (err > 1e-9) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 2

bool difficulty_dynamics() {
    const ScoreBracket all[3] = {ScoreBracket::Excellent, ScoreBracket::Good, ScoreBracket::Poor};
    for (int code = 0; code < 729; ++code) {
        int c = code;
        DifficultyState state;
        state.f_diff = 0.5;
        double oracle_f = 0.5;
        for (int step = 0; step < 6; ++step) {
            ScoreBracket b = all[c % 3];
            c /= 3;
            state = update_difficulty(state, b);
            // brute-force oracle
            double d = b == ScoreBracket::Excellent ? 0.2 : b == ScoreBracket::Poor ? -0.2 : 0.0;
            oracle_f += d;
            if (oracle_f < 0.0) oracle_f = 0.0;
            if (oracle_f > 1.0) oracle_f = 1.0;
            if (state.f_diff != oracle_f) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 3

bool session_protocol() {
    SessionPlan plan;
    for (const char* id : {"seated_reach_forward", "seated_forward_kick", "seated_calf_raises",
                           "standing_reach_across", "seated_windmills", "seated_high_knees"}) {
        plan.exercises.push_back({id, 2, 30.0, std::nullopt, std::nullopt});
    }
    plan.seed = 42;
    plan.word_list_files["animals"] = std::string(SWS_DATA_DIR) + "/animals.txt";
    SimulatedUser user;

    auto r1 = run_session(plan, user);
    auto r2 = run_session(plan, user);
    if (serialize_log(r1.events) != serialize_log(r2.events)) return false;

    int calibrations = 0, sets = 0;
    for (const auto& e : r1.events) {
        if (e.kind == "calibration_done") ++calibrations;
        if (e.kind == "set_complete") ++sets;
        if (e.kind == "difficulty_changed") {
            double before = e.payload.at("old_f_diff").get<double>();
            double after = e.payload.at("new_f_diff").get<double>();
            double diff = after - before;
            bool nominal =
                std::abs(diff) < 1e-12 || std::abs(std::abs(diff) - 0.2) < 1e-12;
            bool clamped = (after == 0.0 && diff < 0.0) || (after == 1.0 && diff > 0.0);
            if (!nominal && !clamped) return false;
        }
    }
    return calibrations == 12 && sets == 24;
}

// ---------------------------------------------------------------- criterion 4

bool calibration_recovery() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> reach_dist(0.0, 1.0);
    const auto& model = find_exercise("seated_forward_kick");
    CalibrationConfig cfg;

    for (int i = 0; i < 50; ++i) {
        double reach = reach_dist(rng);
        SimulatedUser user;
        user.default_reach = reach;

        // hand-simulated sweep oracle: the farthest 0.1-multiple not above reach
        double max_reached = 0.0;
        for (int k = 0;; ++k) {
            double frac = std::min(1.0, std::round(k * 0.1 * 1e12) / 1e12);
            if (frac > reach) break;
            max_reached = frac;
            if (frac >= 1.0) break;
        }
        double want = std::clamp(max_reached - 0.1, 0.0, 1.0);

        Rng cal_rng(55);
        auto res = run_calibration(model, user.body, Side::Right, user, cfg, cal_rng);
        if (std::abs(res.f_diff_start - want) > 1e-12) return false;
        if (std::abs(res.max_reached_fraction - max_reached) > 1e-12) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5

std::vector<ContactEvent> oracle_detect(const PressureTrace& trace, const DetectorConfig& cfg) {
    std::vector<ContactEvent> events;
    const double dt = 1.0 / trace.sample_rate_hz;
    bool armed = true;
    double onset = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < trace.samples_pa.size(); ++i) {
        double delta = trace.samples_pa[i] - trace.baseline_pa;
        double t = i * dt;
        if (armed) {
            if (delta >= cfg.rise_threshold_pa) {
                armed = false;
                onset = t;
                peak = delta;
            }
        } else {
            peak = std::max(peak, delta);
            if (delta < cfg.release_threshold_pa && t - onset >= cfg.debounce_s) {
                events.push_back({onset, peak, peak >= cfg.too_hard_threshold_pa});
                armed = true;
            }
        }
    }
    if (!armed) events.push_back({onset, peak, peak >= cfg.too_hard_threshold_pa});
    return events;
}

bool contact_detection() {
    DetectorConfig cfg;
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> amp(50.0, 2000.0);
    std::uniform_real_distribution<double> gap(0.05, 2.0);

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<double, double>> schedule;
        double t = 0.2;
        while (t < 9.2) {
            schedule.emplace_back(t, amp(rng));
            t += gap(rng);
        }
        auto trace = synth_trace(schedule, 10.0, 101000.0, 100.0);
        auto got = detect_contacts(trace, cfg);
        auto want = oracle_detect(trace, cfg);
        if (got.size() != want.size()) return false;
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (std::abs(got[i].onset_time_s - want[i].onset_time_s) > 1e-9) return false;
            if (got[i].too_hard != want[i].too_hard) return false;
            if (i > 0 && got[i].onset_time_s <= got[i - 1].onset_time_s) return false;
        }
    }

    // noise robustness at the stated margin
    const double margin = 0.5 * (cfg.rise_threshold_pa - cfg.release_threshold_pa);
    auto clean = synth_trace({{0.5, 400.0}, {1.8, 900.0}, {3.4, 600.0}}, 5.0, 101000.0, 100.0);
    auto clean_count = detect_contacts(clean, cfg).size();
    std::uniform_real_distribution<double> noise(-margin * 0.99, margin * 0.99);
    for (int trial = 0; trial < 30; ++trial) {
        PressureTrace noisy = clean;
        for (auto& s : noisy.samples_pa) s += noise(rng);
        if (detect_contacts(noisy, cfg).size() != clean_count) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 6

bool closed_loop() {
    SessionPlan plan;
    plan.exercises.push_back({"seated_forward_kick", 8, 30.0, std::nullopt, std::nullopt});
    plan.seed = 7;
    SimulatedUser user;
    user.max_rpm = 30.0;
    user.rpm_slope = 1.0;
    user.default_reach = 1.0;

    auto result = run_session(plan, user);
    std::vector<ScoreBracket> right_brackets;
    for (const auto& s : result.summaries) {
        if (s.side == Side::Right) right_brackets.push_back(s.bracket);
    }
    if (right_brackets.size() != 8) return false;
    bool non_excellent = false, non_poor = false;
    for (std::size_t i = 4; i < 8; ++i) {
        if (right_brackets[i] != ScoreBracket::Excellent) non_excellent = true;
        if (right_brackets[i] != ScoreBracket::Poor) non_poor = true;
    }
    return non_excellent && non_poor;
}

// ---------------------------------------------------------------- criterion 7

std::vector<Vec3> exercise_cloud(const BodyDimensions& body) {
    std::vector<Vec3> cloud;
    const double chair_hip_height = 0.5;
    for (const auto& m : catalog()) {
        if (m.is_timed_up_and_go) continue;
        double hip_z = m.posture == Posture::Seated ? chair_hip_height : body.standing_hip_height;
        for (double f : {0.0, 0.5, 1.0}) {
            for (Side side : {Side::Right, Side::Left}) {
                Vec3 p = target_set(m, body, f, side).x_target;
                cloud.emplace_back(p.x(), p.y(), p.z() + hip_z);
            }
        }
    }
    return cloud;
}

bool reachability_direction() {
    std::mt19937_64 rng(707);
    auto u = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };

    ReachabilityConfig cfg;
    cfg.ik_restarts = 8;
    RobotModel mobile = default_mobile_manipulator();

    for (int trial = 0; trial < 10; ++trial) {
        BodyDimensions body;
        body.upper_leg_length = u(0.38, 0.50);
        body.lower_leg_length = u(0.36, 0.48);
        body.hip_width = u(0.30, 0.40);
        body.upper_arm_length = u(0.26, 0.34);
        body.forearm_length = u(0.24, 0.30);
        body.shoulder_width = u(0.36, 0.44);
        body.seated_shoulder_height = u(0.55, 0.65);
        body.standing_shoulder_height = u(1.30, 1.50);
        body.standing_hip_height = u(0.85, 1.00);
        auto cloud = exercise_cloud(body);

        if (coverage(mobile, cloud, cfg).fraction != 1.0) return false;

        RobotModel fixed = default_fixed_dual_arm(BasePose{1.2, 0.0, M_PI});
        auto fixed_report = coverage(fixed, cloud, cfg);
        if (!(fixed_report.fraction < 1.0)) return false;

        BaseOptimizationConfig opt;
        opt.max_evaluations = 40;
        opt.sigma0 = 0.4;
        opt.seed = 7;
        auto [pose, optimized] = optimize_base(fixed, cloud, cfg, opt);
        if (optimized.reachable < fixed_report.reachable) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8

bool ik_soundness() {
    RobotModel robot = default_fixed_dual_arm();
    const auto& fixed = std::get<FixedDualArm>(robot.model);
    ReachabilityConfig cfg;
    Rng rng(808);
    std::uniform_real_distribution<double> dx(-1.0, 1.0), dy(-1.2, 1.2), dz(0.3, 1.7);

    int verdicts = 0;
    while (verdicts < 1000) {
        Vec3 target(dx(rng), dy(rng), dz(rng));
        for (const SerialChain* chain : {&fixed.right_arm, &fixed.left_arm}) {
            auto q = solve_position_ik(*chain, fixed.base.transform(), target, cfg, rng);
            ++verdicts;
            if (!q) continue;
            Vec3 p = forward_kinematics(*chain, *q, fixed.base.transform());
            if ((p - target).norm() > 0.02) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 9

bool cma_correctness() {
    auto sphere = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
    CmaConfig cfg;
    cfg.max_evaluations = 5000;
    cfg.seed = 1;
    auto s1 = cma_es_minimize(sphere, Eigen::VectorXd::Ones(5), 0.5, cfg);
    auto s2 = cma_es_minimize(sphere, Eigen::VectorXd::Ones(5), 0.5, cfg);
    if (s1.x_best.norm() > 1e-6 || s1.evaluations > 5000) return false;
    if (s1.f_best != s2.f_best || s1.x_best != s2.x_best) return false;

    auto rosen = [](const Eigen::VectorXd& x) {
        double a = 1.0 - x(0), b = x(1) - x(0) * x(0);
        return a * a + 100.0 * b * b;
    };
    CmaConfig rcfg;
    rcfg.max_evaluations = 20000;
    rcfg.seed = 2;
    auto r = cma_es_minimize(rosen, Eigen::VectorXd::Zero(2), 0.3, rcfg);
    return std::abs(r.x_best(0) - 1.0) <= 1e-3 && std::abs(r.x_best(1) - 1.0) <= 1e-3 &&
           r.evaluations <= 20000;
}

// --------------------------------------------------------------- criterion 10

bool cognitive_validation() {
    WordLists lists;
    const auto& states = lists.category("us_states");
    if (states.size() != 50) return false;

    std::set<std::string> used;
    for (const auto& state : states) {
        if (validate_cognitive_word(state, "us_states", used, lists) != WordVerdict::Valid) {
            return false;
        }
        used.insert(normalize_word(state));
    }
    for (const auto& state : states) {
        std::string shouty = "  " + state + "  ";
        std::transform(shouty.begin(), shouty.end(), shouty.begin(), ::toupper);
        if (validate_cognitive_word(shouty, "us_states", used, lists) != WordVerdict::Duplicate) {
            return false;
        }
    }
    const char* outsiders[20] = {"atlanta", "toronto", "london", "paris", "canada",
                                 "mexico", "europe", "springfield", "dallas", "chicago",
                                 "denverish", "columbia", "guam", "puerto rico", "ontario",
                                 "quebec", "houston", "miami", "seattle", "boston"};
    for (const char* w : outsiders) {
        if (validate_cognitive_word(w, "us_states", used, lists) != WordVerdict::OutOfCategory) {
            return false;
        }
    }
    return true;
}

struct Criterion {
    const char* name;
    bool (*fn)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1 equation fidelity", equation_fidelity},
        {"2 difficulty dynamics", difficulty_dynamics},
        {"3 session protocol", session_protocol},
        {"4 calibration recovery", calibration_recovery},
        {"5 contact detection", contact_detection},
        {"6 closed-loop behavior", closed_loop},
        {"7 reachability direction", reachability_direction},
        {"8 ik soundness", ik_soundness},
        {"9 cma-es correctness", cma_correctness},
        {"10 cognitive validation", cognitive_validation},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::printf("criterion %-26s EXCEPTION: %s\n", c.name, e.what());
            ++failures;
            continue;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("criterion %-26s %s  (%.2fs)\n", c.name, ok ? "PASS" : "FAIL", secs);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
