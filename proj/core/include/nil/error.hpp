#pragma once

#include <stdexcept>
#include <string>

namespace nil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid family spec or graph construction (loops, bad endpoints, arity).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or computation guard was exceeded.
class SizeError : public Error {
 public:
  SizeError(std::string guard, long long limit, long long requested)
      : Error("guard '" + guard + "' exceeded: requested " +
              std::to_string(requested) + ", limit " + std::to_string(limit)),
        guard_(std::move(guard)),
        limit_(limit) {}

  const std::string& guard() const { return guard_; }
  long long limit() const { return limit_; }

 private:
  std::string guard_;
  long long limit_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined for its input (unit ideal, non-squarefree product).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input graph lacks the required structure (e.g. not a tree).
class StructureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace nil
