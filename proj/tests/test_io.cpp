#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "renyi/io.hpp"

namespace renyi {
namespace {

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex(" 1.5+2j "), Complex(1.5, 2.0));
  EXPECT_EQ(parse_complex("1e-3-2.5e2j"), Complex(1e-3, -250.0));
  EXPECT_EQ(parse_complex("-j"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_THROW(parse_complex("abc"), Error);
  EXPECT_THROW(parse_complex(""), Error);
}

TEST(FormatDouble, RoundTripsAndSpecials) {
  for (const double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(MatrixText, RoundTrip) {
  Matrix m(2, 2);
  m << 0.4, Complex(0.2, -0.1), Complex(0.2, 0.1), 0.6;
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream in("# comment\n\n" + out.str());
  EXPECT_EQ(read_matrix(in), m);
}

TEST(MatrixText, RealEntriesAndErrors) {
  std::istringstream ok("1, 0\n0, 2\n");
  EXPECT_EQ(read_matrix(ok)(1, 1), Complex(2.0, 0.0));
  std::istringstream ragged("1, 0\n0\n");
  EXPECT_THROW(read_matrix(ragged), Error);
}

TEST(MatrixSpec, Diagonal) {
  const Matrix m = parse_matrix_spec("diag:0,1.5,3");
  EXPECT_EQ(m.rows(), 3);
  EXPECT_EQ(m(2, 2), Complex(3.0, 0.0));
  EXPECT_EQ(m(0, 1), Complex(0.0, 0.0));
  EXPECT_EQ(parse_double_list("0.1, 0.2,0.3").size(), 3u);
}

}  // namespace
}  // namespace renyi
