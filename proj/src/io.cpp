#include "renyi/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace renyi {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty matrix entry");
  if (s.back() != 'j' && s.back() != 'i') return {parse_real(s, s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_part, s);
  }
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, s);
  return {re, im};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    out += format_double(im);
  } else {
    out += "+" + format_double(im);
  }
  out += "j";
  return out;
}

Matrix read_matrix(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<Complex> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_complex(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "matrix has no rows");
  const auto n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[i].size()) != n) {
      throw Error(ErrorCode::ParseError, "matrix is not square");
    }
    for (Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_complex(m(i, j));
    }
    out << '\n';
  }
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  write_matrix(out, m);
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_real(trim(text.substr(0, comma)), text));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

Matrix parse_matrix_spec(const std::string& spec) {
  constexpr std::string_view prefix = "diag:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto values = parse_double_list(std::string_view(spec).substr(prefix.size()));
    Matrix m = Matrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      m(static_cast<Index>(i), static_cast<Index>(i)) = values[i];
    }
    return m;
  }
  return read_matrix_file(spec);
}

}  // namespace renyi
