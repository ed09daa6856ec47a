#include "sws/body.hpp"

#include <nlohmann/json.hpp>
#include <array>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

namespace {

struct FieldRef {
    const char* key;
    double BodyDimensions::*member;
};

constexpr std::array<FieldRef, 9> kFields{{
    {"upper_leg_length", &BodyDimensions::upper_leg_length},
    {"lower_leg_length", &BodyDimensions::lower_leg_length},
    {"hip_width", &BodyDimensions::hip_width},
    {"upper_arm_length", &BodyDimensions::upper_arm_length},
    {"forearm_length", &BodyDimensions::forearm_length},
    {"shoulder_width", &BodyDimensions::shoulder_width},
    {"seated_shoulder_height", &BodyDimensions::seated_shoulder_height},
    {"standing_shoulder_height", &BodyDimensions::standing_shoulder_height},
    {"standing_hip_height", &BodyDimensions::standing_hip_height},
}};

}  // namespace

void BodyDimensions::validate() const {
    for (const auto& f : kFields) {
        double v = this->*f.member;
        if (!(v >= 0.05 && v <= 2.0)) {
            std::ostringstream msg;
            msg << "body dimension '" << f.key << "' = " << v
                << " m outside the valid range [0.05, 2.0]";
            throw ValidationError(msg.str());
        }
    }
    if (!(hip_width < shoulder_width + 0.5)) {
        throw ValidationError("hip_width must be less than shoulder_width + 0.5 m "
                              "(fields likely swapped)");
    }
}

BodyDimensions body_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("body JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("body JSON must be an object");

    BodyDimensions body;
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const auto& f : kFields) {
            if (key == f.key) {
                if (!value.is_number()) {
                    throw ValidationError("body field '" + key + "' must be a number (meters)");
                }
                body.*f.member = value.get<double>();
                known = true;
                break;
            }
        }
        if (!known) throw ValidationError("unknown body field '" + key + "'");
    }
    body.validate();
    return body;
}

std::string body_to_json(const BodyDimensions& b) {
    nlohmann::ordered_json doc;
    for (const auto& f : kFields) doc[f.key] = b.*f.member;
    return doc.dump(2);
}

}  // namespace sws
