#include "optrig/report/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "optrig/errors.hpp"

namespace optrig::report {

namespace {

struct Token {
  std::string text;
  std::size_t line;   // 1-based
  std::size_t index;  // 1-based position within the line
};

[[noreturn]] void format_fail(const std::string& name, std::size_t line, std::size_t index,
                              const std::string& what) {
  std::ostringstream msg;
  msg << name << ":" << line << ":" << index << ": " << what;
  throw Error(Errc::format_error, msg.str());
}

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string word;
    std::size_t index = 0;
    while (row >> word) tokens.push_back(Token{word, line_no, ++index});
  }
  return tokens;
}

double parse_real(const Token& t, const std::string& name) {
  double v = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    format_fail(name, t.line, t.index, "expected a real number, got '" + t.text + "'");
  if (!std::isfinite(v)) format_fail(name, t.line, t.index, "entry is not finite");
  return v;
}

}  // namespace

DenseMatrix<double> read_matrix(std::istream& in, const std::string& name) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.empty()) format_fail(name, 1, 1, "empty matrix file: expected a dimension header");

  const Token& header = tokens.front();
  long long n = 0;
  const char* end = header.text.data() + header.text.size();
  const auto [ptr, ec] = std::from_chars(header.text.data(), end, n);
  if (ec != std::errc{} || ptr != end || n < 1)
    format_fail(name, header.line, header.index,
                "header must be a positive dimension, got '" + header.text + "'");

  const std::size_t need = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() < need) {
    const Token& last = tokens.back();
    format_fail(name, last.line, last.index + 1,
                "expected " + std::to_string(need - 1) + " entries for a " + std::to_string(n) +
                    "x" + std::to_string(n) + " matrix, got " + std::to_string(tokens.size() - 1));
  }
  if (tokens.size() > need) {
    const Token& extra = tokens[need];
    format_fail(name, extra.line, extra.index, "trailing data after the matrix");
  }

  DenseMatrix<double> m(n, n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      m(i, j) = parse_real(tokens[1 + static_cast<std::size_t>(i * n + j)], name);
  return m;
}

DenseMatrix<double> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
  return read_matrix(in, path);
}

SpdMatrix<double> parse_matrix_file(const std::string& path, const SpdOptions& opts) {
  return validate_spd(read_matrix_file(path), opts);
}

}  // namespace optrig::report
