#ifndef STEPHEN_ERROR_HPP_
#define STEPHEN_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace stephen {

  // Base class for everything the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation or word text. Line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + message),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Well-formed input that violates a presentation invariant.
  class InvalidPresentation : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its domain, e.g. a non-deterministic
  // graph passed to accepts() or a multi-relation presentation passed to
  // overlap analysis.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace stephen

#endif  // STEPHEN_ERROR_HPP_
