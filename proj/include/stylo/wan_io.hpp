#pragma once

#include <filesystem>
#include <string>

#include "stylo/wan.hpp"

namespace stylo {

/// Versioned flat text format for networks and profiles: a WAN1 header with
/// alpha, window, word count, token count and the word list, then the
/// matrix row-major in decimal text at 17 significant digits, so values
/// round-trip bit-exactly. Loaded networks carry a lexicon made of the
/// listed words (flags are not stored; they play no role once a network is
/// built).
std::string wan_to_string(const Wan& wan);
Wan wan_from_string(const std::string& text);

void save_wan(const Wan& wan, const std::filesystem::path& path);
Wan load_wan(const std::filesystem::path& path);

}  // namespace stylo
