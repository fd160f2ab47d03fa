#include "stylo/play.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "stylo/errors.hpp"
#include "stylo/tokenize.hpp"

namespace stylo {

std::size_t PlayDocument::token_count() const {
  std::size_t n = 0;
  for (const auto& act : acts)
    for (const auto& scene : act.scenes)
      for (const auto& speech : scene.speeches) n += speech.tokens.size();
  return n;
}

std::size_t PlayDocument::speech_count() const {
  std::size_t n = 0;
  for (const auto& act : acts)
    for (const auto& scene : act.scenes) n += scene.speeches.size();
  return n;
}

std::vector<TokenUnit> speech_units(const Scene& scene) {
  std::vector<TokenUnit> units;
  units.reserve(scene.speeches.size());
  for (const auto& speech : scene.speeches) units.emplace_back(speech.tokens);
  return units;
}

std::vector<TokenUnit> speech_units(const Act& act) {
  std::vector<TokenUnit> units;
  for (const auto& scene : act.scenes)
    for (const auto& speech : scene.speeches) units.emplace_back(speech.tokens);
  return units;
}

std::vector<TokenUnit> speech_units(const PlayDocument& play) {
  std::vector<TokenUnit> units;
  for (const auto& act : play.acts)
    for (const auto& scene : act.scenes)
      for (const auto& speech : scene.speeches)
        units.emplace_back(speech.tokens);
  return units;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

struct Directive {
  std::string name;     // uppercased
  std::string payload;  // inside the brackets, after the name
  std::string trailing; // text after the closing '>'
};

// A directive line looks like "<NAME payload> trailing". Returns nullopt for
// plain text lines.
std::optional<Directive> parse_directive(std::string_view line, int line_no) {
  std::string_view t = trim(line);
  if (t.empty() || t.front() != '<') return std::nullopt;
  auto close = t.find('>');
  if (close == std::string_view::npos) {
    throw MalformedMarkup("unterminated directive", line_no);
  }
  std::string_view inside = trim(t.substr(1, close - 1));
  Directive d;
  std::size_t i = 0;
  while (i < inside.size() &&
         !std::isspace(static_cast<unsigned char>(inside[i]))) {
    d.name.push_back(static_cast<char>(
        std::toupper(static_cast<unsigned char>(inside[i]))));
    ++i;
  }
  d.payload = std::string(trim(inside.substr(i)));
  d.trailing = std::string(trim(t.substr(close + 1)));
  return d;
}

int parse_number(const std::string& payload, const std::string& what,
                 int line_no) {
  if (payload.empty()) throw MalformedMarkup(what + " needs a number", line_no);
  int value = 0;
  for (char c : payload) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw MalformedMarkup(what + " number is not a positive integer: '" +
                                payload + "'",
                            line_no);
    }
    value = value * 10 + (c - '0');
    if (value > 100000) throw MalformedMarkup(what + " number out of range", line_no);
  }
  if (value == 0) throw MalformedMarkup(what + " number must be positive", line_no);
  return value;
}

struct Builder {
  PlayDocument doc;
  bool in_speech = false;

  Act* current_act() {
    return doc.acts.empty() ? nullptr : &doc.acts.back();
  }
  Scene* current_scene() {
    Act* act = current_act();
    if (!act || act->scenes.empty()) return nullptr;
    return &act->scenes.back();
  }

  void open_act(int number, int line_no) {
    for (const auto& act : doc.acts) {
      if (act.number == number)
        throw MalformedMarkup("duplicate act number " + std::to_string(number),
                              line_no);
    }
    if (!doc.acts.empty() && doc.acts.back().number > number) {
      throw MalformedMarkup("act numbers must ascend", line_no);
    }
    doc.acts.push_back(Act{number, {}});
    in_speech = false;
  }

  void open_scene(int number, int line_no) {
    Act* act = current_act();
    if (!act) throw MalformedMarkup("scene outside any act", line_no);
    for (const auto& scene : act->scenes) {
      if (scene.number == number)
        throw MalformedMarkup(
            "duplicate scene number " + std::to_string(number), line_no);
    }
    if (!act->scenes.empty() && act->scenes.back().number > number) {
      throw MalformedMarkup("scene numbers must ascend", line_no);
    }
    act->scenes.push_back(Scene{number, {}});
    in_speech = false;
  }

  void open_speech(std::string speaker, int line_no) {
    Scene* scene = current_scene();
    if (!scene) throw MalformedMarkup("speech outside any scene", line_no);
    scene->speeches.push_back(Speech{std::move(speaker), {}});
    in_speech = true;
  }

  void add_text(std::string_view text, int line_no) {
    if (!in_speech) open_speech("", line_no);
    Scene* scene = current_scene();
    auto tokens = tokenize(text);
    auto& dest = scene->speeches.back().tokens;
    dest.insert(dest.end(), std::make_move_iterator(tokens.begin()),
                std::make_move_iterator(tokens.end()));
  }
};

}  // namespace

PlayDocument parse_play(std::string_view text, ParseMode mode,
                        std::string default_title) {
  Builder b;
  b.doc.title = std::move(default_title);

  if (mode == ParseMode::Flat) {
    b.doc.acts.push_back(Act{1, {Scene{1, {}}}});
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto tokens = tokenize(line);
      if (tokens.empty() && trim(line).empty()) continue;
      b.doc.acts[0].scenes[0].speeches.push_back(Speech{"", std::move(tokens)});
    }
    return std::move(b.doc);
  }

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto directive = parse_directive(line, line_no);
    if (!directive) {
      b.add_text(line, line_no);
      continue;
    }
    const auto& d = *directive;
    if (d.name == "TITLE") {
      b.doc.title = d.payload;
    } else if (d.name == "AUTHOR") {
      b.doc.author_label = d.payload;
    } else if (d.name == "ACT") {
      b.open_act(parse_number(d.payload, "act", line_no), line_no);
    } else if (d.name == "SCENE") {
      b.open_scene(parse_number(d.payload, "scene", line_no), line_no);
    } else if (d.name == "SPEAKER") {
      b.open_speech(d.payload, line_no);
      if (!d.trailing.empty()) b.add_text(d.trailing, line_no);
      continue;
    } else {
      throw MalformedMarkup("unknown directive <" + d.name + ">", line_no);
    }
    if (!d.trailing.empty()) {
      throw MalformedMarkup("text after <" + d.name + "> directive", line_no);
    }
  }
  return std::move(b.doc);
}

PlayDocument load_play(const std::filesystem::path& path, ParseMode mode) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open play file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string fallback = path.stem().string();
  return parse_play(buf.str(), mode, fallback);
}

std::string serialize_play(const PlayDocument& play) {
  std::ostringstream out;
  if (!play.title.empty()) out << "<TITLE " << play.title << ">\n";
  if (play.author_label) out << "<AUTHOR " << *play.author_label << ">\n";
  for (const auto& act : play.acts) {
    out << "<ACT " << act.number << ">\n";
    for (const auto& scene : act.scenes) {
      out << "<SCENE " << scene.number << ">\n";
      for (const auto& speech : scene.speeches) {
        out << "<SPEAKER " << speech.speaker << ">\n";
        for (std::size_t i = 0; i < speech.tokens.size(); ++i) {
          out << speech.tokens[i]
              << (i + 1 == speech.tokens.size() ? "\n" : " ");
        }
      }
    }
  }
  return out.str();
}

}  // namespace stylo
