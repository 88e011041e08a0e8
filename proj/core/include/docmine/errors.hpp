#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace docmine {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "io", "empty_corpus".
  virtual const char* kind() const noexcept { return "error"; }
};

class IoError : public Error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);
  const std::filesystem::path& path() const noexcept { return path_; }
  const char* kind() const noexcept override { return "io"; }

 private:
  std::filesystem::path path_;
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// A caller broke a documented precondition (bad language tag, arity mismatch...).
class ContractError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract"; }
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("corpus has no non-empty documents") {}
  const char* kind() const noexcept override { return "empty_corpus"; }
};

class AuthError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "auth"; }
};

class ProviderError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "provider"; }
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

}  // namespace docmine
