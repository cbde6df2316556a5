#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace translatif {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical, arity and literal errors. line/column are 1-based; column counts bytes.
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column),
        message(msg) {}
  std::size_t line;
  std::size_t column;
  std::string message;
};

// An Ackermann index would need more bits than the configured cap.
struct IndexOverflow : Error {
  using Error::Error;
};

// A hard cap on containers, powersets or ranks was hit.
struct CapExceeded : Error {
  using Error::Error;
};

// A resource limit (expansion size, work budget) was hit.
struct ResourceLimit : Error {
  ResourceLimit(std::string limit_id, const std::string& msg) : Error(msg), limit(std::move(limit_id)) {}
  std::string limit;
};

// The énoncé does not belong to the language an operation requires.
struct LanguageError : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

struct NotDecidable : Error {
  using Error::Error;
};

}  // namespace translatif
