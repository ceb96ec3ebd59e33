#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modjamo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `offset` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A jamo token or syllable block that violates the inventory rules.
class TokenError : public Error {
 public:
  using Error::Error;
};

/// A jamo stream that cannot be split into syllable blocks.
class ComposeError : public Error {
 public:
  ComposeError(const std::string& what, std::size_t position)
      : Error(what + " at stream position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Rule-file problem; `line` is 1-based (0 when not tied to a line).
class RuleError : public Error {
 public:
  RuleError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NoRuleMatched : public Error {
 public:
  explicit NoRuleMatched(std::size_t offset)
      : Error("no rule matched at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class GlyphError : public Error {
 public:
  using Error::Error;
};

class LayoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace modjamo
