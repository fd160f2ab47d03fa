#include "stylo/wan_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string wan_to_string(const Wan& wan) {
  std::ostringstream out;
  out << "WAN1\n";
  out << "alpha " << format_double(wan.params.alpha) << "\n";
  out << "window " << wan.params.window << "\n";
  out << "words " << wan.params.n_words << "\n";
  out << "tokens " << wan.token_count << "\n";
  for (std::size_t k = 0; k < wan.params.n_words; ++k) {
    out << wan.params.lexicon.word(k) << "\n";
  }
  const auto n = static_cast<Eigen::Index>(wan.params.n_words);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out << format_double(wan.q(i, j)) << (j + 1 == n ? "\n" : " ");
    }
  }
  return out.str();
}

Wan wan_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  if (!(in >> magic) || magic != "WAN1") {
    throw IoError("not a WAN1 file");
  }
  std::string key;
  double alpha = 0.0;
  int window = 0;
  std::size_t words = 0;
  std::int64_t tokens = 0;
  for (int field = 0; field < 4; ++field) {
    if (!(in >> key)) throw IoError("truncated WAN header");
    if (key == "alpha") {
      if (!(in >> alpha)) throw IoError("bad alpha in WAN header");
    } else if (key == "window") {
      if (!(in >> window)) throw IoError("bad window in WAN header");
    } else if (key == "words") {
      if (!(in >> words)) throw IoError("bad word count in WAN header");
    } else if (key == "tokens") {
      if (!(in >> tokens)) throw IoError("bad token count in WAN header");
    } else {
      throw IoError("unknown WAN header field: " + key);
    }
  }
  if (words == 0) throw IoError("WAN file with zero words");

  std::vector<std::string> word_list(words);
  for (auto& word : word_list) {
    if (!(in >> word)) throw IoError("truncated WAN word list");
  }

  Wan wan;
  wan.params.alpha = alpha;
  wan.params.window = window;
  wan.params.lexicon = FunctionWordLexicon::from_words(word_list);
  wan.params.n_words = words;
  wan.params.validate();
  wan.token_count = tokens;
  const auto n = static_cast<Eigen::Index>(words);
  wan.q.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(in >> wan.q(i, j))) throw IoError("truncated WAN matrix");
    }
  }
  double extra;
  if (in >> extra) throw IoError("trailing data after WAN matrix");
  return wan;
}

void save_wan(const Wan& wan, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write WAN file: " + path.string());
  out << wan_to_string(wan);
  if (!out) throw IoError("failed writing WAN file: " + path.string());
}

Wan load_wan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open WAN file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return wan_from_string(buf.str());
}

}  // namespace stylo
