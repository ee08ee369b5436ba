#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evc {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction input (self-loop, duplicate edge, bad endpoint).
class GraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

/// An exhaustive routine was asked to work above its configured vertex limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by the oracle when a caller-supplied deadline passes.
class TimeoutExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class DefenseError : public Error {
 public:
  enum class Kind {
    NotAnEdge,
    NotVertexCover,
    DomainMismatch,
    NotInjective,
    IllegalMove,
    EdgeNotProtected,
  };

  DefenseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Syntax error in an SP expression. `offset` is the 1-based byte position at
/// which the parser stopped (input length + 1 for unexpected end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class MultiEdgeError : public Error {
 public:
  using Error::Error;
};

class CaseMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigurationNotInClass : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class EvenLengthPath : public Error {
 public:
  using Error::Error;
};

class TwoUnitPaths : public Error {
 public:
  TwoUnitPaths() : Error("at most one path may have length 1") {}
};

}  // namespace evc
