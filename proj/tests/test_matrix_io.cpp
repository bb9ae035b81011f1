#include <filesystem>

#include <gtest/gtest.h>

#include "sdiep/constructor.hpp"
#include "sdiep/error.hpp"
#include "sdiep/matrix_io.hpp"
#include "sdiep/rng.hpp"

using namespace sdiep;

namespace {

DenseMatrix random_matrix_of(Rng& rng, std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0) * std::ldexp(1.0, static_cast<int>(rng.below(40)) - 20);
  return m;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sdiep_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(-2.5), "-2.5");
}

TEST(ClampDust, OnlyTinyNegativesBecomeZero) {
  DenseMatrix m(2, {-5e-13, -2e-12, 0.3, 1e-20});
  const DenseMatrix c = clamp_entry_dust(m);
  EXPECT_EQ(c(0, 0), 0.0);
  EXPECT_EQ(c(0, 1), -2e-12);
  EXPECT_EQ(c(1, 0), 0.3);
  EXPECT_EQ(c(1, 1), 1e-20);
}

TEST(MatrixJson, RoundTripIsExact) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseMatrix m = random_matrix_of(rng, 1 + rng.below(12));
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  }
}

TEST(MatrixJson, ExtraMembersAreWrittenAndIgnoredOnRead) {
  const DenseMatrix m = DenseMatrix::identity(2);
  const std::string text = matrix_to_json(m, {{"note", "\"hi\""}, {"values", "[1, 2]"}});
  EXPECT_NE(text.find("\"note\": \"hi\""), std::string::npos);
  EXPECT_EQ(matrix_from_json(text), m);
}

TEST(MatrixJson, Errors) {
  EXPECT_THROW(matrix_from_json("{"), ParseError);
  EXPECT_THROW(matrix_from_json("[1, 2]"), ParseError);
  EXPECT_THROW(matrix_from_json(R"({"n": 2, "entries": [1, 2, 3]})"), ParseError);
  EXPECT_THROW(matrix_from_json(R"({"entries": [1]})"), ParseError);
  EXPECT_THROW(matrix_from_json(R"({"n": 1, "entries": ["x"]})"), ParseError);
}

TEST(MatrixCsv, RoundTripIsExact) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseMatrix m = random_matrix_of(rng, 1 + rng.below(12));
    EXPECT_EQ(matrix_from_csv(matrix_to_csv(m)), m);
  }
}

TEST(MatrixCsv, Layout) {
  EXPECT_EQ(matrix_to_csv(DenseMatrix(2, {0.5, 0.25, 0.25, 0.5})), "0.5,0.25\n0.25,0.5\n");
}

TEST(MatrixCsv, Errors) {
  EXPECT_THROW(matrix_from_csv("1,2\n3\n"), ParseError);
  EXPECT_THROW(matrix_from_csv("1,2\n3,4\n5,6\n"), ParseError);
  EXPECT_THROW(matrix_from_csv("1,abc\n3,4\n"), ParseError);
  EXPECT_THROW(matrix_from_csv(""), ParseError);
}

TEST(MatrixFiles, DispatchOnContent) {
  const DenseMatrix m = construct(parse_spectrum("1,-0.1,-0.2,-0.2"));
  const auto json_path = scratch("m.json");
  const auto csv_path = scratch("m.txt");
  write_text_file(json_path, matrix_to_json(m));
  write_text_file(csv_path, matrix_to_csv(m));
  EXPECT_EQ(read_matrix_file(json_path), m);
  EXPECT_EQ(read_matrix_file(csv_path), m);
  EXPECT_THROW(read_matrix_file(scratch("missing.json")), std::runtime_error);
}
