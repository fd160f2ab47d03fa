#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace stylo {

enum class SubLexicon { Full, Act, Scene };

/// Ordered function-word list, most common first. Taking a prefix of the
/// list is the canonical way to shrink a network; words may additionally be
/// flagged as members of the act- and scene-level sub-lexicons.
class FunctionWordLexicon {
 public:
  struct Entry {
    std::string word;
    bool act = false;
    bool scene = false;
  };

  FunctionWordLexicon() = default;
  explicit FunctionWordLexicon(std::vector<Entry> entries);

  static FunctionWordLexicon from_words(const std::vector<std::string>& words);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string& word(std::size_t k) const { return entries_[k].word; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<std::size_t> index_of(const std::string& word) const;

  /// The first n words, order and flags preserved.
  FunctionWordLexicon prefix(std::size_t n) const;

  /// The words carrying the requested flag, order preserved.
  /// SubLexicon::Full returns a copy of the whole list.
  FunctionWordLexicon sub_lexicon(SubLexicon which) const;

  std::size_t act_count() const;
  std::size_t scene_count() const;

  std::vector<std::string> words() const;

  bool operator==(const FunctionWordLexicon& other) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Reads a lexicon file: one lowercase word per line, optionally followed by
/// whitespace and the flags `a`, `s`, or `as`. Lines starting with `#` and
/// blank lines are ignored. Order in the file is the lexicon order.
FunctionWordLexicon load_lexicon(const std::filesystem::path& path);

/// Same format, from an in-memory string (used by tests and tooling).
FunctionWordLexicon parse_lexicon(const std::string& text);

}  // namespace stylo
