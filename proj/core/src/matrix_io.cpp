#include "reflen/matrix_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "reflen/error.hpp"

namespace reflen {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

bool is_integer(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(const std::string& s) { return mpz_class(s[0] == '+' ? s.substr(1) : s, 10); }

Scalar parse_entry(Field field, const std::string& tok, std::size_t line) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) {
    if (!is_integer(tok)) fail(line, "bad entry '" + tok + "'");
    return Scalar::fraction(field, to_mpz(tok), 1);
  }
  if (!field.is_rationals()) fail(line, "fractions are only allowed over Q, got '" + tok + "'");
  const std::string num = tok.substr(0, slash);
  const std::string den = tok.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) fail(line, "bad fraction '" + tok + "'");
  const mpz_class d = to_mpz(den);
  if (d == 0) fail(line, "zero denominator in '" + tok + "'");
  return Scalar::fraction(field, to_mpz(num), d);
}

std::size_t parse_dim(const std::string& tok, std::size_t line) {
  if (!is_integer(tok) || tok[0] == '-' || tok[0] == '+' || tok.size() > 6) fail(line, "bad dimension '" + tok + "'");
  const std::size_t v = std::stoul(tok);
  if (v == 0) fail(line, "dimensions must be positive");
  return v;
}

Field parse_header(const Line& line) {
  if (line.tokens.size() != 2 || line.tokens[0] != "field") {
    fail(line.number, "expected 'field F<p>' or 'field Q'");
  }
  const std::string& f = line.tokens[1];
  if (f == "Q") return Field::rationals();
  if (f.size() < 2 || f[0] != 'F' || !is_integer(f.substr(1)) || f[1] == '-' || f[1] == '+' || f.size() > 7) {
    fail(line.number, "unknown field '" + f + "'");
  }
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(f.substr(1))));
  } catch (const Error& e) {
    fail(line.number, e.what());
  }
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in) {
  const std::vector<Line> lines = significant_lines(in);
  if (lines.empty()) throw Error(Errc::Parse, "line 1: empty input, expected a field header");
  MatrixFile out{parse_header(lines[0]), {}};

  std::size_t k = 1;
  while (k < lines.size()) {
    const Line& dims = lines[k];
    if (dims.tokens.size() != 2) fail(dims.number, "expected 'rows cols'");
    const std::size_t r = parse_dim(dims.tokens[0], dims.number);
    const std::size_t c = parse_dim(dims.tokens[1], dims.number);
    ++k;
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (std::size_t i = 0; i < r; ++i, ++k) {
      if (k >= lines.size()) fail(dims.number, "matrix block ends after " + std::to_string(i) + " of " + std::to_string(r) + " rows");
      const Line& row = lines[k];
      if (row.tokens.size() != c) {
        fail(row.number, "expected " + std::to_string(c) + " entries, found " + std::to_string(row.tokens.size()));
      }
      for (const auto& tok : row.tokens) entries.push_back(parse_entry(out.field, tok, row.number));
    }
    out.matrices.emplace_back(out.field, r, c, std::move(entries));
  }
  if (out.matrices.empty()) fail(lines[0].number, "no matrix follows the field header");
  return out;
}

MatrixFile parse_matrix_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_file(in);
}

Matrix parse_matrix(std::string_view text) {
  MatrixFile f = parse_matrix_file(text);
  if (f.matrices.size() != 1) {
    throw Error(Errc::Parse, "expected exactly one matrix, found " + std::to_string(f.matrices.size()));
  }
  return std::move(f.matrices.front());
}

void write_matrix_file(std::ostream& out, Field field, std::span<const Matrix> matrices) {
  out << "field " << field.name() << '\n';
  for (const auto& m : matrices) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
      out << '\n';
    }
  }
}

std::string format_matrix_file(Field field, std::span<const Matrix> matrices) {
  std::ostringstream out;
  write_matrix_file(out, field, matrices);
  return out.str();
}

}  // namespace reflen
