#include "stylo/tokenize.hpp"

#include <cctype>

namespace stylo {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Bytes outside ASCII count as word characters.
bool is_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

void append_token(std::vector<std::string>& out, std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (end > begin && is_punct(raw[end - 1])) --end;
  while (begin < end && is_punct(raw[begin]) && raw[begin] != '\'') ++begin;
  if (begin >= end) return;
  std::string token;
  token.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    token.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(raw[i]))));
  }
  out.push_back(std::move(token));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw_text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < raw_text.size()) {
    while (i < raw_text.size() && is_space(raw_text[i])) ++i;
    std::size_t start = i;
    while (i < raw_text.size() && !is_space(raw_text[i])) ++i;
    if (i > start) append_token(out, raw_text.substr(start, i - start));
  }
  return out;
}

}  // namespace stylo
