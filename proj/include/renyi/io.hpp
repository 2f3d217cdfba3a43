#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/operator.hpp"

namespace renyi {

// Plain-text operator format: one row per line, comma separated entries.
// Entries are written as "re+imj"; readers also accept pure reals ("0.5"),
// pure imaginaries ("2j", "-j") and surrounding whitespace.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

// "diag:a,b,..." or a path to a matrix file.
Matrix parse_matrix_spec(const std::string& spec);

std::vector<double> parse_double_list(std::string_view text);

// Shortest round-trip representation, locale independent.
std::string format_double(double x);

}  // namespace renyi
