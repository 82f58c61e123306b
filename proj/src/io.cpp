#include "zred/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace zred {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits `line` on whitespace and parses each token as a non-negative integer.
std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end || value < 0)
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    std::string(line.substr(pos, end - pos)) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

}  // namespace

BoundaryMatrix load_boundary_matrix(std::istream& in) {
  std::vector<Dim> dims;
  std::vector<Column> cols;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim_left(line);
    if (view.empty() || view.front() == '#') continue;
    auto numbers = parse_numbers(view, line_no);
    if (numbers.front() > 1'000'000) throw ParseError(line_no, "dimension out of range");
    const auto column = static_cast<Index>(cols.size());
    Column rows;
    rows.reserve(numbers.size() - 1);
    for (std::size_t k = 1; k < numbers.size(); ++k) {
      if (numbers[k] == 0) throw ParseError(line_no, "row indices are 1-based");
      if (numbers[k] > static_cast<long long>(column))
        throw InvariantError(column, "row index " + std::to_string(numbers[k]) +
                                         " not above the diagonal");
      rows.push_back(static_cast<Index>(numbers[k] - 1));
    }
    dims.push_back(static_cast<Dim>(numbers.front()));
    cols.push_back(std::move(rows));
  }
  return BoundaryMatrix(std::move(dims), std::move(cols));
}

BoundaryMatrix load_boundary_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_boundary_matrix(in);
}

void save_boundary_matrix(const BoundaryMatrix& m, std::ostream& out) {
  std::string line;
  for (Index j = 0; j < m.size(); ++j) {
    line = std::to_string(m.dim(j));
    for (Index r : m.column(j)) {
      line += ' ';
      line += std::to_string(r + 1);
    }
    line += '\n';
    out << line;
  }
}

void save_boundary_matrix(const BoundaryMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save_boundary_matrix(m, out);
}

void write_pairing(const PersistencePairing& p, std::ostream& out) {
  for (const auto& [b, d] : p.pairs) out << b + 1 << ' ' << d + 1 << '\n';
  for (Index e : p.essential) out << "essential " << e + 1 << '\n';
}

PersistencePairing read_pairing(std::istream& in) {
  PersistencePairing p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim_left(line);
    if (view.empty() || view.front() == '#') continue;
    constexpr std::string_view kEssential = "essential";
    if (view.starts_with(kEssential)) {
      auto nums = parse_numbers(view.substr(kEssential.size()), line_no);
      if (nums.size() != 1 || nums[0] == 0) throw ParseError(line_no, "malformed essential line");
      p.essential.push_back(static_cast<Index>(nums[0] - 1));
      continue;
    }
    auto nums = parse_numbers(view, line_no);
    if (nums.size() != 2 || nums[0] == 0 || nums[1] == 0)
      throw ParseError(line_no, "malformed pair line");
    p.pairs.push_back({static_cast<Index>(nums[0] - 1), static_cast<Index>(nums[1] - 1)});
  }
  p.canonicalize();
  return p;
}

}  // namespace zred
