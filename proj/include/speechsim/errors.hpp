#pragma once

#include <stdexcept>
#include <string>

namespace speechsim {

// Base of every speechsim exception. The three direct children define the
// CLI exit-code categories: ConfigError -> 2, DataError -> 3,
// TransportError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

// --- domain ---

class StyleError : public DataError {
 public:
  explicit StyleError(std::string token)
      : DataError("unknown speaking style: \"" + token + "\""),
        token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// --- codec ---

class CodecError : public TransportError {
 public:
  using TransportError::TransportError;
};

class SynthesisError : public TransportError {
 public:
  using TransportError::TransportError;
};

// --- backend ---

class BackendError : public TransportError {
 public:
  using TransportError::TransportError;
};

class BackendExhausted : public TransportError {
 public:
  using TransportError::TransportError;
};

class PromptTooLong : public TransportError {
 public:
  using TransportError::TransportError;
};

// --- bank ---

class RangeError : public DataError {
 public:
  using DataError::DataError;
};

// --- templating / agent output ---

class TemplateError : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::string raw)
      : DataError(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

class TurnError : public DataError {
 public:
  using DataError::DataError;
};

// --- benchmark pipeline ---

class SceneParseError : public DataError {
 public:
  SceneParseError(const std::string& what, std::string raw)
      : DataError(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

class RolePoolError : public DataError {
 public:
  using DataError::DataError;
};

class ScriptCraftError : public DataError {
 public:
  using DataError::DataError;
};

// --- trajectory ---

class BudgetError : public DataError {
 public:
  BudgetError(const std::string& what, int turn)
      : DataError(what), turn_(turn) {}
  int turn() const { return turn_; }

 private:
  int turn_;
};

class RenderError : public DataError {
 public:
  using DataError::DataError;
};

class MixError : public DataError {
 public:
  MixError(const std::string& what, size_t line)
      : DataError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// --- eval ---

class JudgeError : public DataError {
 public:
  JudgeError(const std::string& what, std::string raw_reply)
      : DataError(what), raw_reply_(std::move(raw_reply)) {}
  const std::string& raw_reply() const { return raw_reply_; }

 private:
  std::string raw_reply_;
};

}  // namespace speechsim
