#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

/// One speech: the speaker label (never part of the analyzed text) and the
/// tokens of what is spoken.
struct Speech {
  std::string speaker;
  std::vector<std::string> tokens;
};

struct Scene {
  int number = 0;
  std::vector<Speech> speeches;
};

struct Act {
  int number = 0;
  std::vector<Scene> scenes;
};

struct PlayDocument {
  std::string title;
  std::optional<std::string> author_label;
  std::vector<Act> acts;

  std::size_t token_count() const;
  std::size_t speech_count() const;
};

/// A text unit handed to the network builder: one speech's tokens.
using TokenUnit = std::span<const std::string>;

/// Units of a whole play, a single act, or a single scene. The returned
/// spans point into the document, which must outlive them.
std::vector<TokenUnit> speech_units(const PlayDocument& play);
std::vector<TokenUnit> speech_units(const Act& act);
std::vector<TokenUnit> speech_units(const Scene& scene);

enum class ParseMode { Structured, Flat };

/// Parses play markup. Structured mode understands the directives
/// `<TITLE t>`, `<AUTHOR a>`, `<ACT n>`, `<SCENE n>`, `<SPEAKER name>`;
/// every other non-empty line is speech text appended to the current
/// speech. Flat mode puts each non-empty line into its own speech inside
/// one implicit act and scene. Throws MalformedMarkup with the offending
/// line number.
PlayDocument parse_play(std::string_view text, ParseMode mode,
                        std::string default_title = {});

PlayDocument load_play(const std::filesystem::path& path,
                       ParseMode mode = ParseMode::Structured);

/// Writes a document back to markup. Parsing the result yields an
/// identical document.
std::string serialize_play(const PlayDocument& play);

}  // namespace stylo
