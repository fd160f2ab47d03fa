#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace stylo {

/// Corpus description: which play files make up each author canon, which
/// belong to joint (collaboration) canons, and which plays are disputed and
/// against whom. A TOML-style text file; see docs/formats.md.
struct CorpusManifest {
  struct Canon {
    std::string name;
    std::vector<std::string> files;
  };
  struct Disputed {
    std::string file;
    std::vector<std::string> candidates;  // empty = all canons
  };

  std::vector<Canon> authors;
  std::vector<Canon> joint_canons;
  std::vector<Disputed> disputed;

  static CorpusManifest parse(const std::string& text);
  static CorpusManifest load(const std::filesystem::path& path);
};

}  // namespace stylo
