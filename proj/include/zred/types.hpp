#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace zred {

// Cell / row / column index. Internally 0-based; every textual format is 1-based.
using Index = std::uint32_t;
using Dim = std::int32_t;
using Column = std::vector<Index>;

inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvariantError : public std::runtime_error {
 public:
  // `column` is 0-based; the message reports it 1-based.
  InvariantError(Index column, const std::string& what)
      : std::runtime_error("column " + std::to_string(column + 1) + ": " + what), column_(column) {}
  Index column() const noexcept { return column_; }

 private:
  Index column_;
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zred
