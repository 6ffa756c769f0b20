#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphcode {

// Base class for all data/domain errors raised by the library. The CLI maps
// these to exit code 2; usage problems are handled separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedUtf8 : public Error {
 public:
  using Error::Error;
};

class MalformedCode : public Error {
 public:
  using Error::Error;
};

// File-format error that knows which line it came from (1-based).
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateRule : public MalformedLine {
 public:
  using MalformedLine::MalformedLine;
};

class UnknownTenseToken : public MalformedLine {
 public:
  using MalformedLine::MalformedLine;
};

class MalformedGoldLine : public MalformedLine {
 public:
  using MalformedLine::MalformedLine;
};

class DuplicateEntry : public MalformedLine {
 public:
  using MalformedLine::MalformedLine;
};

class NoRuleForFeatures : public Error {
 public:
  using Error::Error;
};

class NotAVerb : public Error {
 public:
  using Error::Error;
};

class NoMapping : public Error {
 public:
  using Error::Error;
};

class MultipleVerbs : public Error {
 public:
  using Error::Error;
};

class MalformedClause : public Error {
 public:
  using Error::Error;
};

class DuplicateDocId : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace morphcode
