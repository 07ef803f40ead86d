#pragma once

#include <stdexcept>
#include <string>

namespace treeminor {

// Malformed vertex/edge data handed to a Tree or RootedTree constructor.
class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Text format or witness JSON that cannot be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the brute-force routines and the atlas when the input exceeds
// the configured size guard.
class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(const std::string& what, int size, int cap)
      : std::runtime_error(what + ": size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HostPatternMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAChild : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace treeminor
