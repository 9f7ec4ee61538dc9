#pragma once

#include <stdexcept>
#include <string>

namespace nary {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class RepeatedIndexNonzero : public Error { using Error::Error; };
class ArityMismatch : public Error { using Error::Error; };
class NotSkew : public Error { using Error::Error; };
class NotNilpotent : public Error { using Error::Error; };
class DependentVectors : public Error { using Error::Error; };
class NotProportional : public Error { using Error::Error; };
class DegreeOverflow : public Error { using Error::Error; };
class InvalidPermutation : public Error { using Error::Error; };
class TooLarge : public Error { using Error::Error; };
class InternalInconsistency : public Error { using Error::Error; };
class UnknownCatalogEntry : public Error { using Error::Error; };
class BadParams : public Error { using Error::Error; };

/// Malformed algebra file. Line and column are 1-based; column 0 means
/// the whole line.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace nary
