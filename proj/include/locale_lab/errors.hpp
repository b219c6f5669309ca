#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locale_lab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Enumeration stopped after `reached` items because the configured cap was hit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t reached, std::size_t cap)
      : Error("assembly cap exceeded: reached " + std::to_string(reached) + " sublocales (cap " +
              std::to_string(cap) + ")"),
        reached_(reached),
        cap_(cap) {}
  std::size_t reached() const { return reached_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t reached_;
  std::size_t cap_;
};

class MixedFrames : public Error {
 public:
  MixedFrames() : Error("sublocales belong to different frames") {}
};

class NotASublocale : public Error {
 public:
  using Error::Error;
};

class NotANucleus : public Error {
 public:
  using Error::Error;
};

class NotDSublocale : public Error {
 public:
  using Error::Error;
};

class NotLiftable : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class MalformedDescription : public Error {
 public:
  using Error::Error;
};

class NotATopology : public Error {
 public:
  using Error::Error;
};

class InvalidAdjointPair : public Error {
 public:
  using Error::Error;
};

class InvalidPrimeSubset : public Error {
 public:
  using Error::Error;
};

}  // namespace locale_lab
