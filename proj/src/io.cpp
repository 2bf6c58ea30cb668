#include "blockpoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "blockpoly/errors.hpp"

namespace blockpoly {

namespace {

bool is_integer_token(const std::string& t) {
  std::size_t i = (t.size() > 0 && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

// Accepts doubles that are exactly integral and small enough to be exact.
bool integral_double(double v, long long& out) {
  if (!std::isfinite(v)) return false;
  if (std::floor(v) != v) return false;
  if (std::fabs(v) > 9.007199254740992e15) return false;  // 2^53
  out = static_cast<long long>(v);
  return true;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double_or_throw(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw FormatError("trailing characters in number '" + tok + "'", line);
    return v;
  } catch (const FormatError&) {
    throw;
  } catch (...) {
    throw FormatError("malformed number '" + tok + "'", line);
  }
}

struct EntryValue {
  Complex value;
  bool is_int = false;
  BigInt int_value;
};

EntryValue parse_entry(const std::string& raw, int line) {
  EntryValue e;
  const std::string tok = trim(raw);
  if (tok.empty()) throw FormatError("empty matrix entry", line);
  if (is_integer_token(tok)) {
    e.int_value = BigInt::from_string(tok);
    e.is_int = true;
    e.value = {e.int_value.to_double(), 0.0};
    return e;
  }
  Complex z;
  try {
    z = parse_complex(tok);
  } catch (const FormatError& err) {
    throw FormatError(std::string(err.what()), line);
  }
  e.value = z;
  long long iv = 0;
  if (z.imag() == 0.0 && integral_double(z.real(), iv)) {
    e.is_int = true;
    e.int_value = BigInt(iv);
  }
  return e;
}

void push_entry(ParsedMatrix& m, std::size_t i, std::size_t j, const EntryValue& e) {
  m.values[i * m.cols + j] = e.value;
  if (e.is_int)
    m.int_values[i * m.cols + j] = e.int_value;
  else
    m.all_integer = false;
}

}  // namespace

Matrix<Complex> ParsedMatrix::complex_matrix() const { return Matrix<Complex>(rows, cols, values); }

Matrix<BigInt> ParsedMatrix::integer_matrix() const {
  if (!all_integer)
    throw ConfigError("exact-integer mode rejected: input contains non-integer entries");
  return Matrix<BigInt>(rows, cols, int_values);
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_complex(const Complex& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = z.real() == 0.0 ? std::string() : format_double(z.real());
  if (z.imag() >= 0.0 && !s.empty()) s += "+";
  if (z.imag() == -1.0)
    s += "-";
  else if (z.imag() != 1.0)
    s += format_double(z.imag());
  s += "i";
  return s;
}

Complex parse_complex(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw FormatError("empty complex literal");
  if (t.back() != 'i' && t.back() != 'I') {
    return {parse_double_or_throw(t, 0), 0.0};
  }
  std::string body = t.substr(0, t.size() - 1);
  // split at the top-level sign separating the real and imaginary parts
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char ch = body[i];
    if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_signed_part = [](const std::string& part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double_or_throw(part, 0);
  };
  if (split == std::string::npos) return {0.0, parse_signed_part(body)};
  const std::string re = body.substr(0, split);
  std::string im = body.substr(split);  // keeps the sign
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_double_or_throw(re, 0), parse_signed_part(im)};
}

ParsedMatrix read_matrix_market(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw FormatError("empty Matrix Market file", 1);
  ++lineno;
  std::istringstream banner(line);
  std::string magic, object, fmt, field, symmetry;
  banner >> magic >> object >> fmt >> field >> symmetry;
  if (magic != "%%MatrixMarket") throw FormatError("missing %%MatrixMarket banner", 1);
  if (object != "matrix" || fmt != "coordinate")
    throw FormatError("only 'matrix coordinate' Matrix Market files are supported", 1);
  const bool complex_field = field == "complex";
  if (field != "real" && field != "integer" && !complex_field)
    throw FormatError("unsupported Matrix Market field '" + field + "'", 1);
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general")
    throw FormatError("unsupported Matrix Market symmetry '" + symmetry + "'", 1);

  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  ParsedMatrix m;
  std::vector<char> seen;
  std::size_t read_entries = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '%') continue;
    std::istringstream ls(t);
    if (!have_size) {
      long long r = 0, c = 0, z = 0;
      if (!(ls >> r >> c >> z) || r < 0 || c < 0 || z < 0)
        throw FormatError("malformed size line", lineno);
      rows = static_cast<std::size_t>(r);
      cols = static_cast<std::size_t>(c);
      nnz = static_cast<std::size_t>(z);
      m.rows = rows;
      m.cols = cols;
      m.values.assign(rows * cols, Complex{0.0, 0.0});
      m.int_values.assign(rows * cols, BigInt(0));
      seen.assign(rows * cols, 0);
      have_size = true;
      continue;
    }
    long long i = 0, j = 0;
    if (!(ls >> i >> j)) throw FormatError("malformed entry line", lineno);
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows || static_cast<std::size_t>(j) > cols)
      throw FormatError("entry index out of range", lineno);
    EntryValue e;
    if (complex_field) {
      std::string re, im;
      if (!(ls >> re >> im)) throw FormatError("complex entry needs two values", lineno);
      const double rv = parse_double_or_throw(re, lineno);
      const double iv = parse_double_or_throw(im, lineno);
      e.value = {rv, iv};
      long long as_int = 0;
      if (iv == 0.0 && integral_double(rv, as_int)) {
        e.is_int = true;
        e.int_value = BigInt(as_int);
      }
    } else {
      std::string val;
      if (!(ls >> val)) throw FormatError("entry misses its value", lineno);
      e = parse_entry(val, lineno);
    }
    std::string extra;
    if (ls >> extra) throw FormatError("trailing tokens on entry line", lineno);
    const std::size_t ii = static_cast<std::size_t>(i) - 1;
    const std::size_t jj = static_cast<std::size_t>(j) - 1;
    if (seen[ii * cols + jj]) throw FormatError("duplicate entry", lineno);
    seen[ii * cols + jj] = 1;
    push_entry(m, ii, jj, e);
    if (symmetric && ii != jj) {
      if (seen[jj * cols + ii]) throw FormatError("duplicate symmetric entry", lineno);
      seen[jj * cols + ii] = 1;
      push_entry(m, jj, ii, e);
    }
    ++read_entries;
  }
  if (!have_size) throw FormatError("missing size line", lineno);
  if (read_entries != nnz)
    throw FormatError("entry count mismatch: header says " + std::to_string(nnz) + ", read " +
                          std::to_string(read_entries),
                      lineno);
  return m;
}

ParsedMatrix read_csv(std::istream& in) {
  std::vector<std::vector<EntryValue>> grid;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.back() == ',') throw FormatError("trailing comma", lineno);
    std::vector<EntryValue> row;
    std::string cell;
    std::istringstream ls(t);
    while (std::getline(ls, cell, ',')) row.push_back(parse_entry(cell, lineno));
    if (!grid.empty() && row.size() != grid.front().size())
      throw FormatError("ragged CSV row: expected " + std::to_string(grid.front().size()) +
                            " cells, got " + std::to_string(row.size()),
                        lineno);
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw FormatError("empty CSV input", std::max(lineno, 1));
  ParsedMatrix m;
  m.rows = grid.size();
  m.cols = grid.front().size();
  m.values.assign(m.rows * m.cols, Complex{0.0, 0.0});
  m.int_values.assign(m.rows * m.cols, BigInt(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) push_entry(m, i, j, grid[i][j]);
  return m;
}

ParsedMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open input file '" + path + "'");
  if (format == MatrixFormat::Auto) {
    if (path.size() >= 4 && (path.ends_with(".csv"))) {
      format = MatrixFormat::Csv;
    } else if (path.ends_with(".mm") || path.ends_with(".mtx")) {
      format = MatrixFormat::MatrixMarket;
    } else {
      const int first = in.peek();
      format = first == '%' ? MatrixFormat::MatrixMarket : MatrixFormat::Csv;
    }
  }
  return format == MatrixFormat::MatrixMarket ? read_matrix_market(in) : read_csv(in);
}

namespace detail {
std::string dot_palette_color(std::size_t index) {
  static const char* palette[] = {"blue",   "darkgreen", "purple", "orange3",
                                  "brown",  "cadetblue", "crimson", "darkcyan",
                                  "gold3",  "magenta3"};
  return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}
}  // namespace detail

}  // namespace blockpoly
