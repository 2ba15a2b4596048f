#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asdim {

  // The numeric values are the CLI exit codes.
  enum class ErrorKind {
    validation = 1,
    resolution = 2,
    infeasible = 3,
    internal   = 4,
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept { return _kind; }

   private:
    ErrorKind _kind;
  };

  // Bad input data or a violated precondition.
  class ValidationError : public Error {
   public:
    explicit ValidationError(std::string const& what)
        : Error(ErrorKind::validation, what) {}
  };

  // A reference (id, point label, element name) that does not resolve.
  class ResolutionError : public Error {
   public:
    explicit ResolutionError(std::string const& what)
        : Error(ErrorKind::resolution, what) {}
  };

  class InfeasibleError : public Error {
   public:
    explicit InfeasibleError(std::string const& what)
        : Error(ErrorKind::infeasible, what) {}
  };

  // A postcondition that holds unconditionally in theory failed at runtime.
  // Always a bug in this library.
  class InternalAssertion : public Error {
   public:
    explicit InternalAssertion(std::string const& what)
        : Error(ErrorKind::internal, what) {}
  };

  struct Violation {
    std::string              kind;
    std::vector<std::size_t> witness;
    std::string              detail;
  };

  class ValidationReport {
   public:
    void add(std::string kind,
             std::vector<std::size_t> witness,
             std::string detail = {}) {
      _entries.push_back(
          Violation{std::move(kind), std::move(witness), std::move(detail)});
    }

    void append(ValidationReport const& other) {
      _entries.insert(_entries.end(), other._entries.begin(),
                      other._entries.end());
    }

    bool ok() const noexcept { return _entries.empty(); }

    std::vector<Violation> const& entries() const noexcept { return _entries; }

    bool contains(std::string const& kind) const {
      for (auto const& v : _entries) {
        if (v.kind == kind) {
          return true;
        }
      }
      return false;
    }

    // One line per violation, at most `limit` lines.
    std::string summary(std::size_t limit = 8) const;

    // Throws ValidationError carrying the summary unless ok().
    void throw_if_failed(std::string const& context) const;

   private:
    std::vector<Violation> _entries;
  };

}  // namespace asdim
