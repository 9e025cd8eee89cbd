#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schwa {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decoding a native-script string hit a codepoint the script map does not
// cover, or a combining mark with nothing to combine with.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string message, std::size_t position, char32_t codepoint)
      : std::runtime_error(std::move(message)),
        position_(position),
        codepoint_(codepoint) {}

  std::size_t position() const { return position_; }  // codepoint index
  char32_t codepoint() const { return codepoint_; }

 private:
  std::size_t position_;
  char32_t codepoint_;
};

class UnknownToken : public std::runtime_error {
 public:
  UnknownToken(std::string token, std::size_t position)
      : std::runtime_error("unknown token '" + token + "' at position " +
                           std::to_string(position)),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class VersionMismatch : public std::runtime_error {
 public:
  VersionMismatch(std::uint32_t found, std::uint32_t supported)
      : std::runtime_error("model file version " + std::to_string(found) +
                           " is not supported (this build reads version " +
                           std::to_string(supported) + ")"),
        found_(found),
        supported_(supported) {}

  std::uint32_t found() const { return found_; }
  std::uint32_t supported() const { return supported_; }

 private:
  std::uint32_t found_;
  std::uint32_t supported_;
};

struct ChecksumMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace schwa
