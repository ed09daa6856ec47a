// Command-line front end: personalized target computation, session
// simulation, range-of-motion calibration, and reachability studies.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sws/body.hpp"
#include "sws/calibration.hpp"
#include "sws/errors.hpp"
#include "sws/exercise.hpp"
#include "sws/reachability.hpp"
#include "sws/session.hpp"
#include "sws/sim_user.hpp"

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sws::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Outputs land atomically: written to a sibling temp file, renamed on success.
void write_file(const std::string& path, const std::string& content) {
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write to '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, target);
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string vec_json(const sws::Vec3& v) {
    return "[" + fmt6(v.x()) + ", " + fmt6(v.y()) + ", " + fmt6(v.z()) + "]";
}

sws::Side parse_side(const std::string& s) {
    if (s == "right") return sws::Side::Right;
    if (s == "left") return sws::Side::Left;
    throw sws::ValidationError("side must be 'right' or 'left'");
}

std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& pairs) {
    std::map<std::string, std::string> out;
    for (const auto& p : pairs) {
        auto eq = p.find('=');
        if (eq == std::string::npos) {
            throw sws::ValidationError("--set expects key=value, got '" + p + "'");
        }
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

double to_double(const std::string& key, const std::string& value) {
    try {
        return std::stod(value);
    } catch (const std::exception&) {
        throw sws::ValidationError("override '" + key + "' needs a numeric value");
    }
}

int run_targets(const std::string& body_path, const std::string& exercise_id, double f_diff,
                const std::string& side_str, const std::string& out_path) {
    sws::BodyDimensions body = sws::body_from_json(read_file(body_path));
    const auto& model = sws::find_exercise(exercise_id);
    sws::TargetSet ts = sws::target_set(model, body, f_diff, parse_side(side_str));

    std::ostringstream out;
    out << "{\n"
        << "  \"exercise\": \"" << model.id << "\",\n"
        << "  \"side\": \"" << side_name(ts.side) << "\",\n"
        << "  \"f_diff\": " << fmt6(ts.f_diff) << ",\n"
        << "  \"x_min\": " << vec_json(ts.x_min) << ",\n"
        << "  \"x_0\": " << vec_json(ts.x_0) << ",\n"
        << "  \"x_max\": " << vec_json(ts.x_max) << ",\n"
        << "  \"x_target\": " << vec_json(ts.x_target) << "\n"
        << "}\n";
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        write_file(out_path, out.str());
    }
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& user_path,
                 std::optional<std::uint64_t> seed, const std::string& out_prefix,
                 const std::map<std::string, std::string>& overrides) {
    sws::SessionPlan plan = sws::plan_from_json(
        read_file(config_path), fs::path(config_path).parent_path().string());
    sws::SimulatedUser user =
        user_path.empty() ? sws::SimulatedUser{} : sws::user_from_json(read_file(user_path));
    if (seed) plan.seed = *seed;
    for (const auto& [key, value] : overrides) {
        if (key == "delta") plan.delta = to_double(key, value);
        else if (key == "calibration.step") plan.calibration.step = to_double(key, value);
        else if (key == "calibration.safety_margin")
            plan.calibration.safety_margin = to_double(key, value);
        else if (key == "detector.rise_threshold_pa")
            plan.detector.rise_threshold_pa = to_double(key, value);
        else if (key == "detector.debounce_s") plan.detector.debounce_s = to_double(key, value);
        else throw sws::ValidationError("unknown override key '" + key + "'");
    }
    plan.validate();

    sws::SessionResult result = sws::run_session(plan, user);
    if (!out_prefix.empty()) {
        write_file(out_prefix + ".jsonl", sws::serialize_log(result.events));
        write_file(out_prefix + ".csv", sws::summaries_to_csv(result.summaries));
    }

    // final difficulty per (exercise, side)
    std::map<std::pair<std::string, std::string>, double> final_f;
    for (const auto& s : result.summaries) {
        final_f[{s.exercise_id, side_name(s.side)}] = s.f_diff_after;
    }
    std::cout << "exercise,side,final_f_diff\n";
    for (const auto& [key, f] : final_f) {
        std::cout << key.first << "," << key.second << "," << fmt6(f) << "\n";
    }
    return 0;
}

int run_calibrate(const std::string& user_path, const std::string& exercise_id,
                  const std::string& side_str,
                  const std::map<std::string, std::string>& overrides) {
    sws::SimulatedUser user =
        user_path.empty() ? sws::SimulatedUser{} : sws::user_from_json(read_file(user_path));
    const auto& model = sws::find_exercise(exercise_id);
    sws::CalibrationConfig cfg;
    for (const auto& [key, value] : overrides) {
        if (key == "step") cfg.step = to_double(key, value);
        else if (key == "safety_margin") cfg.safety_margin = to_double(key, value);
        else if (key == "dwell_timeout_s") cfg.dwell_timeout_s = to_double(key, value);
        else throw sws::ValidationError("unknown override key '" + key + "'");
    }
    sws::Rng rng(user.rng_seed);
    sws::CalibrationResult res =
        sws::run_calibration(model, user.body, parse_side(side_str), user, cfg, rng);
    std::cout << "{\n"
              << "  \"exercise\": \"" << model.id << "\",\n"
              << "  \"side\": \"" << side_str << "\",\n"
              << "  \"max_reached_fraction\": " << fmt6(res.max_reached_fraction) << ",\n"
              << "  \"f_diff_start\": " << fmt6(res.f_diff_start) << ",\n"
              << "  \"samples\": " << res.samples.size() << "\n"
              << "}\n";
    return 0;
}

int run_reachability(const std::string& targets_path, const std::string& robot_name,
                     bool optimize, std::uint64_t seed, const std::string& out_prefix,
                     const std::map<std::string, std::string>& overrides) {
    auto targets = sws::targets_from_csv(read_file(targets_path));
    if (targets.empty()) throw sws::ValidationError("targets CSV contains no rows");

    sws::ReachabilityConfig cfg;
    cfg.seed = seed;
    sws::BaseOptimizationConfig opt;
    opt.seed = seed;
    for (const auto& [key, value] : overrides) {
        if (key == "tolerance_m") cfg.tolerance_m = to_double(key, value);
        else if (key == "ik_restarts") cfg.ik_restarts = static_cast<int>(to_double(key, value));
        else if (key == "ik_iterations")
            cfg.ik_iterations = static_cast<int>(to_double(key, value));
        else if (key == "base.max_evaluations")
            opt.max_evaluations = static_cast<int>(to_double(key, value));
        else throw sws::ValidationError("unknown override key '" + key + "'");
    }

    sws::RobotModel robot = robot_name == "sws" ? sws::default_mobile_manipulator()
                                                : sws::default_fixed_dual_arm();
    sws::ReachabilityReport report = sws::coverage(robot, targets, cfg);

    std::ostringstream json;
    json << "{\n"
         << "  \"robot\": \"" << robot_name << "\",\n"
         << "  \"total\": " << report.total << ",\n"
         << "  \"reachable\": " << report.reachable << ",\n"
         << "  \"fraction\": " << fmt6(report.fraction);
    const sws::ReachabilityReport* final_report = &report;
    sws::ReachabilityReport optimized_report;
    if (optimize) {
        if (robot_name == "sws") {
            throw sws::ValidationError("--optimize-base applies to the fixed_dual_arm robot");
        }
        auto [pose, rep] = sws::optimize_base(robot, targets, cfg, opt);
        optimized_report = rep;
        final_report = &optimized_report;
        json << ",\n  \"optimized\": {\n"
             << "    \"base_pose\": [" << fmt6(pose.x) << ", " << fmt6(pose.y) << ", "
             << fmt6(pose.theta) << "],\n"
             << "    \"reachable\": " << rep.reachable << ",\n"
             << "    \"fraction\": " << fmt6(rep.fraction) << ",\n"
             << "    \"base_to_centroid_m\": " << fmt6(rep.base_to_centroid_m) << "\n"
             << "  }";
    }
    json << "\n}\n";

    std::ostringstream csv;
    csv << "x,y,z,reachable\n";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        csv << fmt6(targets[i].x()) << "," << fmt6(targets[i].y()) << ","
            << fmt6(targets[i].z()) << "," << (final_report->flags[i] ? 1 : 0) << "\n";
    }

    if (out_prefix.empty()) {
        std::cout << json.str();
    } else {
        write_file(out_prefix + ".json", json.str());
        write_file(out_prefix + ".csv", csv.str());
        std::cout << json.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Personalized stretching-session engine and reachability analysis"};
    app.require_subcommand(1);

    std::string body_path, config_path, user_path, targets_path, out_path;
    std::string exercise_id, side = "right", robot = "fixed_dual_arm";
    double f_diff = 0.5;
    std::uint64_t seed = 0;
    bool seed_given = false, optimize = false;
    std::vector<std::string> set_pairs;

    auto* targets_cmd = app.add_subcommand("targets", "Compute a personalized target set");
    targets_cmd->add_option("--body", body_path, "Body dimensions JSON")->required();
    targets_cmd->add_option("--exercise", exercise_id, "Exercise id")->required();
    targets_cmd->add_option("--f-diff", f_diff, "Difficulty factor in [0,1]");
    targets_cmd->add_option("--side", side, "right|left");
    targets_cmd->add_option("--out", out_path, "Output path (stdout when omitted)");

    auto* sim_cmd = app.add_subcommand("simulate", "Run a full session simulation");
    sim_cmd->add_option("--config", config_path, "Session config JSON")->required();
    sim_cmd->add_option("--user", user_path, "Simulated user profile JSON");
    sim_cmd->add_option("--seed", seed, "Session seed override")
        ->each([&](const std::string&) { seed_given = true; });
    sim_cmd->add_option("--out", out_path, "Output prefix for .jsonl and .csv");
    sim_cmd->add_option("--set", set_pairs, "key=value config overrides");

    auto* cal_cmd = app.add_subcommand("calibrate", "Run one range-of-motion calibration");
    cal_cmd->add_option("--user", user_path, "Simulated user profile JSON");
    cal_cmd->add_option("--exercise", exercise_id, "Exercise id")->required();
    cal_cmd->add_option("--side", side, "right|left");
    cal_cmd->add_option("--set", set_pairs, "key=value calibration overrides");

    auto* reach_cmd = app.add_subcommand("reachability", "Coverage over a target cloud");
    reach_cmd->add_option("--targets", targets_path, "Targets CSV (x,y,z)")->required();
    reach_cmd->add_option("--robot", robot, "sws|fixed_dual_arm")
        ->check(CLI::IsMember({"sws", "fixed_dual_arm"}));
    reach_cmd->add_flag("--optimize-base", optimize, "Also optimize the fixed base pose");
    reach_cmd->add_option("--seed", seed, "RNG seed");
    reach_cmd->add_option("--out", out_path, "Output prefix for .json and .csv");
    reach_cmd->add_option("--set", set_pairs, "key=value overrides");

    CLI11_PARSE(app, argc, argv);

    try {
        auto overrides = parse_overrides(set_pairs);
        if (targets_cmd->parsed()) {
            return run_targets(body_path, exercise_id, f_diff, side, out_path);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(config_path, user_path,
                                seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt,
                                out_path, overrides);
        }
        if (cal_cmd->parsed()) {
            return run_calibrate(user_path, exercise_id, side, overrides);
        }
        if (reach_cmd->parsed()) {
            return run_reachability(targets_path, robot, optimize, seed, out_path, overrides);
        }
    } catch (const sws::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sws::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
