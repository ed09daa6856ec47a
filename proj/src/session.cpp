#include "sws/session.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

namespace {

constexpr double kTick = 0.01;           // simulation clock granularity, seconds
constexpr double kRepAmplitudePa = 400;  // synthetic contact bump height
constexpr double kTraceRateHz = 100.0;

double quantize(double t) { return std::round(t / kTick) * kTick; }

class SessionRun {
  public:
    SessionRun(const SessionPlan& plan, const SimulatedUser& user)
        : plan_(plan), user_(user),
          stream_base_(plan.seed ^ (user.rng_seed * 0x9e3779b97f4a7c15ull)) {
        words_ = WordLists{};
        for (const auto& [category, path] : plan.word_list_files) {
            words_.register_category_file(category, path);
        }
    }

    SessionResult run() {
        emit(0.0, "session_start", {{"seed", plan_.seed}, {"exercises", plan_.exercises.size()}});
        for (const auto& planned : plan_.exercises) {
            const ExerciseModel& model = find_exercise(planned.exercise_id);
            if (model.is_timed_up_and_go) {
                run_tug(planned);
            } else {
                run_exercise(planned, model);
            }
            emit(clock_, "exercise_complete", {{"exercise", planned.exercise_id}});
        }
        emit(clock_, "session_end", {{"duration_s", clock_}});
        return std::move(result_);
    }

  private:
    void emit(double t, std::string kind, nlohmann::ordered_json payload) {
        result_.events.push_back({quantize(t), std::move(kind), std::move(payload)});
    }

    Rng stream(const std::string& name) { return Rng(derive_seed(stream_base_, name)); }

    void run_tug(const PlannedExercise& planned) {
        emit(clock_, "tug_start", {{"distance_m", plan_.tug_distance_m}});
        double elapsed = timed_up_and_go(user_, plan_.tug_distance_m);
        clock_ = quantize(clock_ + elapsed);
        emit(clock_, "tug_complete", {{"elapsed_s", elapsed}});
    }

    void run_exercise(const PlannedExercise& planned, const ExerciseModel& model) {
        PerformanceBrackets brackets = planned.bracket_override.value_or(model.brackets);
        auto cognitive = planned.cognitive_category.has_value() ? planned.cognitive_category
                                                                : model.cognitive_category;

        double f_start[2];
        for (Side side : {Side::Right, Side::Left}) {
            f_start[side == Side::Right ? 0 : 1] = calibrate(planned, model, side);
        }

        std::set<std::string> used_words;
        std::size_t word_cursor = 0;
        std::vector<std::string> word_pool;
        if (cognitive) {
            const auto& list = words_.category(*cognitive);
            word_pool.assign(list.begin(), list.end());
            Rng rng = stream(model.id + "/words");
            std::shuffle(word_pool.begin(), word_pool.end(), rng);
        }

        for (Side side : {Side::Right, Side::Left}) {
            Rng rng = stream(model.id + std::string("/sets/") + side_name(side));
            DifficultyState state;
            state.f_diff = f_start[side == Side::Right ? 0 : 1];
            state.delta = plan_.delta;

            for (int set = 0; set < planned.sets_per_side; ++set) {
                run_set(planned, model, side, set, state, brackets, cognitive, word_pool,
                        word_cursor, used_words, rng);
            }
        }
    }

    double calibrate(const PlannedExercise& planned, const ExerciseModel& model, Side side) {
        Rng rng = stream(model.id + std::string("/calibration/") + side_name(side));
        CalibrationResult cal =
            run_calibration(model, user_.body, side, user_, plan_.calibration, rng);
        for (const auto& s : cal.samples) {
            clock_ = quantize(clock_ + s.time_to_touch_s);
            emit(clock_, "calibration_sample",
                 {{"exercise", planned.exercise_id},
                  {"side", side_name(side)},
                  {"fraction", s.fraction},
                  {"touched", s.touched}});
        }
        emit(clock_, "calibration_done",
             {{"exercise", planned.exercise_id},
              {"side", side_name(side)},
              {"max_reached_fraction", cal.max_reached_fraction},
              {"f_diff_start", cal.f_diff_start}});
        return cal.f_diff_start;
    }

    void run_set(const PlannedExercise& planned, const ExerciseModel& model, Side side,
                 int set, DifficultyState& state, const PerformanceBrackets& brackets,
                 const std::optional<std::string>& cognitive,
                 const std::vector<std::string>& word_pool, std::size_t& word_cursor,
                 std::set<std::string>& used_words, Rng& rng) {
        const double duration = planned.set_duration_s;
        const double set_start_time = clock_;
        emit(clock_, "set_start",
             {{"exercise", planned.exercise_id},
              {"side", side_name(side)},
              {"set", set},
              {"f_diff", state.f_diff}});

        // The user produces a rep schedule; the reps the session counts are
        // the ones the contact detector recovers from the synthetic trace.
        int planned_reps = set_rep_count(user_, model.id, side, state.f_diff, duration, rng);
        std::vector<std::pair<double, double>> bumps;
        if (planned_reps > 0) {
            double spacing = duration / planned_reps;
            for (int i = 0; i < planned_reps; ++i) {
                double onset = i * spacing + 0.25 * std::min(spacing, 1.0);
                if (onset + 0.35 < duration) bumps.emplace_back(onset, kRepAmplitudePa);
            }
        }
        PressureTrace trace = synth_trace(bumps, duration, 101325.0, kTraceRateHz);
        auto contacts = detect_contacts(trace, plan_.detector);

        for (const auto& contact : contacts) {
            double t = set_start_time + contact.onset_time_s;
            emit(t, "rep",
                 {{"exercise", planned.exercise_id},
                  {"side", side_name(side)},
                  {"peak_delta_pa", contact.peak_pressure_delta_pa}});
            if (contact.too_hard) emit(t, "too_hard", {{"exercise", planned.exercise_id}});
            if (cognitive && !word_pool.empty()) {
                const std::string& word = word_pool[word_cursor % word_pool.size()];
                ++word_cursor;
                WordVerdict verdict =
                    validate_cognitive_word(word, *cognitive, used_words, words_);
                if (verdict == WordVerdict::Valid) used_words.insert(normalize_word(word));
                const char* verdict_str = verdict == WordVerdict::Valid ? "valid"
                                          : verdict == WordVerdict::Duplicate ? "duplicate"
                                                                              : "out_of_category";
                emit(t, "cognitive_word",
                     {{"exercise", planned.exercise_id},
                      {"category", *cognitive},
                      {"word", word},
                      {"verdict", verdict_str}});
            }
        }

        int reps = static_cast<int>(contacts.size());
        double rpm = reps * 60.0 / duration;
        ScoreBracket bracket = bracket_score(reps, duration, brackets);
        clock_ = quantize(set_start_time + duration);
        emit(clock_, "set_complete",
             {{"exercise", planned.exercise_id},
              {"side", side_name(side)},
              {"set", set},
              {"reps", reps},
              {"rpm", rpm},
              {"bracket", bracket_name(bracket)}});

        double f_before = state.f_diff;
        state = update_difficulty(state, bracket);
        emit(clock_, "difficulty_changed",
             {{"exercise", planned.exercise_id},
              {"side", side_name(side)},
              {"old_f_diff", f_before},
              {"new_f_diff", state.f_diff}});

        result_.summaries.push_back({planned.exercise_id, side, set, reps, rpm, bracket,
                                     f_before, state.f_diff});
    }

    const SessionPlan& plan_;
    const SimulatedUser& user_;
    std::uint64_t stream_base_;
    WordLists words_;
    double clock_ = 0.0;
    SessionResult result_;
};

}  // namespace

void SessionPlan::validate() const {
    for (const auto& planned : exercises) {
        if (!has_exercise(planned.exercise_id)) {
            throw ValidationError("unknown exercise id '" + planned.exercise_id + "'");
        }
        if (planned.sets_per_side < 1) throw ValidationError("sets_per_side must be >= 1");
        if (!(planned.set_duration_s > 0.0)) {
            throw ValidationError("set_duration_s must be positive");
        }
        if (planned.bracket_override) planned.bracket_override->validate();

        const ExerciseModel& model = find_exercise(planned.exercise_id);
        auto category = planned.cognitive_category.has_value() ? planned.cognitive_category
                                                               : model.cognitive_category;
        if (category && *category != "us_states" && !word_list_files.count(*category)) {
            throw ConfigError("no word list configured for category '" + *category + "'");
        }
    }
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
    calibration.validate();
    detector.validate();
    if (!(tug_distance_m > 0.0)) throw ValidationError("tug_distance_m must be positive");
}

SessionResult run_session(const SessionPlan& plan, const SimulatedUser& user) {
    plan.validate();
    user.validate();
    return SessionRun(plan, user).run();
}

double timed_up_and_go(const SimulatedUser& user, double distance_m) {
    if (!(distance_m >= 0.0)) throw ValidationError("distance must be non-negative");
    return user.stand_up_latency_s + distance_m / user.walk_speed + user.touch_latency_s;
}

std::string serialize_log(const std::vector<SessionEvent>& events) {
    std::string out;
    for (const auto& e : events) {
        nlohmann::ordered_json line;
        line["time_s"] = e.time_s;
        line["kind"] = e.kind;
        line["payload"] = e.payload;
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::vector<SessionEvent> parse_log(const std::string& jsonl) {
    std::vector<SessionEvent> events;
    std::istringstream in(jsonl);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto doc = nlohmann::ordered_json::parse(line);
        events.push_back({doc.at("time_s").get<double>(),
                          doc.at("kind").get<std::string>(), doc.at("payload")});
    }
    return events;
}

std::string summaries_to_csv(const std::vector<SetSummary>& summaries) {
    std::ostringstream out;
    out << "exercise,side,set,reps,rpm,bracket,f_diff_before,f_diff_after\n";
    for (const auto& s : summaries) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%.4f,%s,%.4f,%.4f\n",
                      s.exercise_id.c_str(), side_name(s.side), s.set_index, s.reps, s.rpm,
                      bracket_name(s.bracket), s.f_diff_before, s.f_diff_after);
        out << buf;
    }
    return out.str();
}

SessionPlan plan_from_json(const std::string& json_text, const std::string& base_dir) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("session config parse error: ") + e.what());
    }

    SessionPlan plan;
    if (doc.contains("exercises")) {
        for (const auto& entry : doc["exercises"]) {
            PlannedExercise pe;
            pe.exercise_id = entry.at("id").get<std::string>();
            if (entry.contains("sets_per_side")) pe.sets_per_side = entry["sets_per_side"];
            if (entry.contains("set_duration_s")) pe.set_duration_s = entry["set_duration_s"];
            if (entry.contains("cognitive") && !entry["cognitive"].is_null()) {
                pe.cognitive_category = entry["cognitive"].get<std::string>();
            }
            if (entry.contains("brackets")) {
                PerformanceBrackets b;
                b.excellent_min_rpm = entry["brackets"].at("excellent_min_rpm");
                b.good_min_rpm = entry["brackets"].at("good_min_rpm");
                pe.bracket_override = b;
            }
            plan.exercises.push_back(std::move(pe));
        }
    }
    if (doc.contains("seed")) plan.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("delta")) plan.delta = doc["delta"].get<double>();
    if (doc.contains("tug_distance_m")) plan.tug_distance_m = doc["tug_distance_m"];
    if (doc.contains("calibration")) {
        const auto& c = doc["calibration"];
        if (c.contains("step")) plan.calibration.step = c["step"];
        if (c.contains("dwell_timeout_s")) plan.calibration.dwell_timeout_s = c["dwell_timeout_s"];
        if (c.contains("safety_margin")) plan.calibration.safety_margin = c["safety_margin"];
    }
    if (doc.contains("detector")) {
        const auto& d = doc["detector"];
        if (d.contains("rise_threshold_pa")) plan.detector.rise_threshold_pa = d["rise_threshold_pa"];
        if (d.contains("release_threshold_pa"))
            plan.detector.release_threshold_pa = d["release_threshold_pa"];
        if (d.contains("debounce_s")) plan.detector.debounce_s = d["debounce_s"];
        if (d.contains("too_hard_threshold_pa"))
            plan.detector.too_hard_threshold_pa = d["too_hard_threshold_pa"];
    }
    if (doc.contains("word_lists")) {
        for (const auto& [category, path] : doc["word_lists"].items()) {
            std::filesystem::path p = path.get<std::string>();
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            plan.word_list_files[category] = p.string();
        }
    }
    plan.validate();
    return plan;
}

}  // namespace sws
