#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsburgers {

/// Coarse error category; the CLI maps each one (and each ConfigErrc) to an exit code.
enum class ErrorKind { Config, Domain, Instability, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ConfigErrc {
  Usage,          // bad command-line syntax
  MalformedFile,  // config file unreadable or not valid JSON
  UnknownKey,     // config file key we do not recognise
  Invalid,        // a value violates an invariant
};

class ConfigError : public Error {
 public:
  ConfigError(ConfigErrc code, const std::string& key, const std::string& what)
      : Error(ErrorKind::Config, key.empty() ? what : key + ": " + what), code_(code), key_(key) {}
  ConfigErrc code() const noexcept { return code_; }
  const std::string& key() const noexcept { return key_; }

 private:
  ConfigErrc code_;
  std::string key_;
};

enum class DomainErrc {
  HorizonSingularity,  // 1 - lambda r^2 == 0 (or <= 0 where the fluid must be inside)
  AngularDegeneracy,   // r == 0 or sin(theta) == 0
  StencilDegeneracy,   // finite-difference stencil touches a degeneracy
  Superluminal,        // |v| >= c
  NegativeRadicand,    // static solution undefined
  NegativeDensity,
  PreShockOnly,        // characteristics have already crossed
  NotFound,            // no level crossing in a profile
  Inapplicable,        // no oracle for the requested setup
};

class DomainError : public Error {
 public:
  DomainError(DomainErrc code, const std::string& what) : Error(ErrorKind::Domain, what), code_(code) {}
  DomainErrc code() const noexcept { return code_; }

 private:
  DomainErrc code_;
};

class InstabilityError : public Error {
 public:
  static constexpr long kUnknownIter = -1;

  InstabilityError(std::size_t cell, long iter, const std::string& what)
      : Error(ErrorKind::Instability, format(cell, iter, what)), cell_(cell), iter_(iter), detail_(what) {}

  std::size_t cell() const noexcept { return cell_; }
  long iter() const noexcept { return iter_; }

  /// Same failure, tagged with the iteration that produced it.
  InstabilityError at_iter(long iter) const { return InstabilityError(cell_, iter, detail_); }

 private:
  static std::string format(std::size_t cell, long iter, const std::string& what) {
    std::string msg = "non-finite value in cell " + std::to_string(cell);
    if (iter != kUnknownIter) msg += " at iteration " + std::to_string(iter);
    if (!what.empty()) msg += " (" + what + ")";
    return msg;
  }

  std::size_t cell_;
  long iter_;
  std::string detail_;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what) : Error(ErrorKind::Io, path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace dsburgers
