#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HDM_DEFINE_ERROR(Name)           \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// gf
HDM_DEFINE_ERROR(NotOddPrimePower);
HDM_DEFINE_ERROR(DivisionByZero);
HDM_DEFINE_ERROR(CharacterOfZero);
HDM_DEFINE_ERROR(InvalidElement);

// projline
HDM_DEFINE_ERROR(BadDeterminant);

// ncube
HDM_DEFINE_ERROR(ShapeMismatch);
HDM_DEFINE_ERROR(IndexOutOfRange);
HDM_DEFINE_ERROR(EmptyFix);
HDM_DEFINE_ERROR(FullFix);
HDM_DEFINE_ERROR(DimensionTooSmall);

// constructions / symmetry
HDM_DEFINE_ERROR(NotHadamardInput);
HDM_DEFINE_ERROR(DimensionMismatch);
HDM_DEFINE_ERROR(OrderMismatch);
HDM_DEFINE_ERROR(InfinityNotAllowed);

#undef HDM_DEFINE_ERROR

/// Malformed HDM text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hdm
