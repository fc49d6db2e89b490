#ifndef SSG_ERRORS_HPP
#define SSG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator: " + name) {}
};

struct UnknownLetter : Error {
  explicit UnknownLetter(const std::string& sym)
      : Error("unknown letter: " + sym) {}
};

// Raised by the .ssg reader; line/column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ValidationError : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what, std::size_t reached)
      : Error("budget exceeded (" + what + ") after " +
              std::to_string(reached) + " items"),
        reached(reached) {}
  std::size_t reached;
};

struct UnsupportedFormat : Error {
  explicit UnsupportedFormat(const std::string& fmt)
      : Error("unsupported format: " + fmt) {}
};

}  // namespace ssg

#endif
