#include "stylo/manifest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

struct LineParser {
  std::string_view line;
  std::size_t pos = 0;
  int line_no;

  LineParser(std::string_view l, int no) : line(l), line_no(no) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw MalformedMarkup("manifest: " + message, line_no);
  }

  void skip_ws() {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= line.size() || line[pos] == '#';
  }

  char peek() {
    skip_ws();
    if (pos >= line.size()) fail("unexpected end of line");
    return line[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string quoted_string() {
    expect('"');
    std::string out;
    while (pos < line.size() && line[pos] != '"') out.push_back(line[pos++]);
    if (pos >= line.size()) fail("unterminated string");
    ++pos;
    return out;
  }

  std::string key() {
    if (peek() == '"') return quoted_string();
    std::string out;
    while (pos < line.size() && line[pos] != '=' && line[pos] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[pos]))) {
      out.push_back(line[pos++]);
    }
    if (out.empty()) fail("expected a key");
    return out;
  }

  std::vector<std::string> string_array() {
    expect('[');
    std::vector<std::string> out;
    if (peek() == ']') {
      ++pos;
      return out;
    }
    while (true) {
      out.push_back(quoted_string());
      char c = peek();
      if (c == ',') {
        ++pos;
        continue;
      }
      if (c == ']') {
        ++pos;
        return out;
      }
      fail("expected ',' or ']' in array");
    }
  }
};

void check_unique_files(const CorpusManifest::Canon& canon, int line_no) {
  for (std::size_t i = 0; i < canon.files.size(); ++i) {
    for (std::size_t j = i + 1; j < canon.files.size(); ++j) {
      if (canon.files[i] == canon.files[j]) {
        throw MalformedMarkup("manifest: file listed twice in canon '" +
                                  canon.name + "': " + canon.files[i],
                              line_no);
      }
    }
  }
}

}  // namespace

CorpusManifest CorpusManifest::parse(const std::string& text) {
  CorpusManifest manifest;
  enum class Section { None, Authors, Joint, Disputed };
  Section section = Section::None;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    LineParser p(raw, line_no);
    if (p.at_end()) continue;

    if (p.peek() == '[') {
      // Could be a section header only; arrays never start a line.
      ++p.pos;
      std::string name;
      while (p.pos < raw.size() && raw[p.pos] != ']') name.push_back(raw[p.pos++]);
      if (p.pos >= raw.size()) p.fail("unterminated section header");
      ++p.pos;
      if (!p.at_end()) p.fail("trailing content after section header");
      if (name == "authors") {
        section = Section::Authors;
      } else if (name == "joint") {
        section = Section::Joint;
      } else if (name == "disputed") {
        section = Section::Disputed;
      } else {
        p.fail("unknown section [" + name + "]");
      }
      continue;
    }

    std::string key = p.key();
    p.expect('=');
    std::vector<std::string> values = p.string_array();
    if (!p.at_end()) p.fail("trailing content after entry");

    switch (section) {
      case Section::None:
        p.fail("entry before any [section]");
      case Section::Authors:
      case Section::Joint: {
        auto& list =
            section == Section::Authors ? manifest.authors : manifest.joint_canons;
        for (const auto& canon : list) {
          if (canon.name == key) p.fail("duplicate canon '" + key + "'");
        }
        Canon canon{key, values};
        check_unique_files(canon, line_no);
        list.push_back(std::move(canon));
        break;
      }
      case Section::Disputed:
        manifest.disputed.push_back(Disputed{key, values});
        break;
    }
  }
  return manifest;
}

CorpusManifest CorpusManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace stylo
