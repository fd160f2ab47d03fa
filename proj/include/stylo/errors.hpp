#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// Corpus markup violations; carries the 1-based line number.
struct MalformedMarkup : Error {
  MalformedMarkup(const std::string& message, int line)
      : Error(message + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

struct DuplicateLexiconEntry : Error {
  using Error::Error;
};

struct MismatchedParams : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct MissingCandidates : Error {
  using Error::Error;
};

struct InsufficientTraining : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct EmptyAuthorCanon : Error {
  using Error::Error;
};

struct InvalidExperiment : Error {
  using Error::Error;
};

struct MissingStructure : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace stylo
