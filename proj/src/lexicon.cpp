#include "stylo/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

FunctionWordLexicon::FunctionWordLexicon(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto [it, inserted] = index_.emplace(entries_[i].word, i);
    if (!inserted) {
      throw DuplicateLexiconEntry("duplicate lexicon word: " + entries_[i].word);
    }
    if (entries_[i].word.empty()) {
      throw InvalidParameter("lexicon words must be non-empty");
    }
  }
}

FunctionWordLexicon FunctionWordLexicon::from_words(
    const std::vector<std::string>& words) {
  std::vector<Entry> entries;
  entries.reserve(words.size());
  for (const auto& w : words) entries.push_back({w, false, false});
  return FunctionWordLexicon(std::move(entries));
}

std::optional<std::size_t> FunctionWordLexicon::index_of(
    const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FunctionWordLexicon FunctionWordLexicon::prefix(std::size_t n) const {
  if (n == 0) throw InvalidParameter("lexicon prefix size must be positive");
  if (n > entries_.size()) {
    throw InvalidParameter("lexicon prefix size exceeds lexicon size");
  }
  return FunctionWordLexicon(
      std::vector<Entry>(entries_.begin(), entries_.begin() + n));
}

FunctionWordLexicon FunctionWordLexicon::sub_lexicon(SubLexicon which) const {
  if (which == SubLexicon::Full) return *this;
  std::vector<Entry> out;
  for (const auto& e : entries_) {
    if ((which == SubLexicon::Act && e.act) ||
        (which == SubLexicon::Scene && e.scene)) {
      out.push_back(e);
    }
  }
  return FunctionWordLexicon(std::move(out));
}

std::size_t FunctionWordLexicon::act_count() const {
  return std::count_if(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.act; });
}

std::size_t FunctionWordLexicon::scene_count() const {
  return std::count_if(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.scene; });
}

std::vector<std::string> FunctionWordLexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.word);
  return out;
}

bool FunctionWordLexicon::operator==(const FunctionWordLexicon& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].word != other.entries_[i].word ||
        entries_[i].act != other.entries_[i].act ||
        entries_[i].scene != other.entries_[i].scene) {
      return false;
    }
  }
  return true;
}

FunctionWordLexicon parse_lexicon(const std::string& text) {
  std::vector<FunctionWordLexicon::Entry> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string word, flags, extra;
    if (!(fields >> word)) continue;  // blank line
    FunctionWordLexicon::Entry entry;
    entry.word = to_lower(word);
    if (fields >> flags) {
      for (char c : to_lower(flags)) {
        if (c == 'a') {
          entry.act = true;
        } else if (c == 's') {
          entry.scene = true;
        } else {
          throw InvalidParameter("lexicon line " + std::to_string(line_no) +
                                 ": unknown flag '" + flags + "'");
        }
      }
    }
    if (fields >> extra) {
      throw InvalidParameter("lexicon line " + std::to_string(line_no) +
                             ": trailing content '" + extra + "'");
    }
    entries.push_back(std::move(entry));
  }
  return FunctionWordLexicon(std::move(entries));
}

FunctionWordLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

}  // namespace stylo
