#pragma once

#include <map>
#include <set>
#include <string>

namespace sws {

enum class WordVerdict { Valid, Duplicate, OutOfCategory };

/// Category word lists for the naming exercises. "us_states" is built in;
/// other categories are registered from plain-text files, one entry per line.
class WordLists {
  public:
    WordLists();  // registers us_states

    void register_category(const std::string& category, const std::set<std::string>& words);
    void register_category_file(const std::string& category, const std::string& path);
    bool has_category(const std::string& category) const;
    const std::set<std::string>& category(const std::string& category_id) const;

  private:
    std::map<std::string, std::set<std::string>> lists_;
};

/// trim, lowercase, collapse internal whitespace
std::string normalize_word(const std::string& word);

/// Membership + uniqueness check against the normalized `used` set. Throws
/// ConfigError for an unregistered category. Does not mutate `used`.
WordVerdict validate_cognitive_word(const std::string& word, const std::string& category,
                                    const std::set<std::string>& used, const WordLists& lists);

}  // namespace sws
