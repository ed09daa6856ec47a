#include "sws/words.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

namespace {

const char* kUsStates[] = {
    "alabama", "alaska", "arizona", "arkansas", "california", "colorado",
    "connecticut", "delaware", "florida", "georgia", "hawaii", "idaho",
    "illinois", "indiana", "iowa", "kansas", "kentucky", "louisiana",
    "maine", "maryland", "massachusetts", "michigan", "minnesota",
    "mississippi", "missouri", "montana", "nebraska", "nevada",
    "new hampshire", "new jersey", "new mexico", "new york",
    "north carolina", "north dakota", "ohio", "oklahoma", "oregon",
    "pennsylvania", "rhode island", "south carolina", "south dakota",
    "tennessee", "texas", "utah", "vermont", "virginia", "washington",
    "west virginia", "wisconsin", "wyoming",
};

}  // namespace

std::string normalize_word(const std::string& word) {
    std::string out;
    bool in_space = true;  // leading whitespace dropped
    for (char c : word) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

WordLists::WordLists() {
    std::set<std::string> states;
    for (const char* s : kUsStates) states.insert(s);
    lists_["us_states"] = std::move(states);
}

void WordLists::register_category(const std::string& category,
                                  const std::set<std::string>& words) {
    std::set<std::string> normalized;
    for (const auto& w : words) {
        auto n = normalize_word(w);
        if (!n.empty()) normalized.insert(n);
    }
    lists_[category] = std::move(normalized);
}

void WordLists::register_category_file(const std::string& category, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open word list file '" + path + "'");
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto n = normalize_word(line);
        if (!n.empty()) words.insert(n);
    }
    if (words.empty()) throw ConfigError("word list file '" + path + "' is empty");
    lists_[category] = std::move(words);
}

bool WordLists::has_category(const std::string& category) const {
    return lists_.count(category) > 0;
}

const std::set<std::string>& WordLists::category(const std::string& category_id) const {
    auto it = lists_.find(category_id);
    if (it == lists_.end()) {
        throw ConfigError("unregistered word category '" + category_id + "'");
    }
    return it->second;
}

WordVerdict validate_cognitive_word(const std::string& word, const std::string& category,
                                    const std::set<std::string>& used, const WordLists& lists) {
    const auto& list = lists.category(category);
    std::string n = normalize_word(word);
    if (!list.count(n)) return WordVerdict::OutOfCategory;
    if (used.count(n)) return WordVerdict::Duplicate;
    return WordVerdict::Valid;
}

}  // namespace sws
