#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two structures that must share a carrier were built over different posets.
class PosetMismatch : public Error {
public:
  using Error::Error;
};

class UnknownElement : public Error {
public:
  using Error::Error;
};

/// A materialization (powerset, state space, ...) grew past its configured cap.
class CapacityExceeded : public Error {
public:
  using Error::Error;
};

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(const std::string &name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

/// Lowering a Kleisli connection failed: no (or no unique) abstraction for
/// the concrete element named by witness().
class LoweringError : public Error {
public:
  LoweringError(const std::string &what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string &witness() const { return witness_; }

private:
  std::string witness_;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace cgc
