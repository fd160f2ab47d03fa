#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylo {

/// Splits raw text into lowercase tokens. Tokens are whitespace-delimited
/// runs with leading and trailing punctuation stripped, except that a
/// leading apostrophe is kept so elisions ("'tis") stay distinct from the
/// words they resemble. Apostrophes and hyphens inside a token are kept.
/// Tokens that are empty after stripping are dropped.
std::vector<std::string> tokenize(std::string_view raw_text);

}  // namespace stylo
