#ifndef PCG_ERRORS_HPP_
#define PCG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcg {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or inconsistent input text (graph, word or map files).
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    // 1-based line number, 0 when the input has no line structure.
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // Invalid argument to an operation (unknown vertex, out-of-range size, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // An enumeration exceeded its configured resource cap.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  class NotTrivialError : public Error {
   public:
    using Error::Error;
  };

  class NotHomomorphismError : public Error {
   public:
    using Error::Error;
  };

}  // namespace pcg

#endif  // PCG_ERRORS_HPP_
