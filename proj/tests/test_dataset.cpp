#include "hfl/dataset.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using hfl::Index;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("load_csv basic shapes") {
  TempFile f("hfl_basic.csv", "1,2,3\n4,5,6\n7,8,9\n");
  auto data = hfl::load_csv(f.path.string(), false, 0);
  CHECK(data.features.rows() == 3);
  CHECK(data.features.cols() == 2);
  CHECK(data.response[0] == 1.0);
  CHECK(data.response[2] == 7.0);
  CHECK(data.features(1, 0) == 5.0);
  CHECK(data.feature_names.empty());
}

TEST_CASE("load_csv header handling") {
  TempFile f("hfl_header.csv", "label,geneA,geneB\n1,0.5,2.5\n0,1.5,-2.5\n");
  auto data = hfl::load_csv(f.path.string(), true, 0);
  CHECK(data.features.rows() == 2);
  CHECK(data.features.cols() == 2);
  REQUIRE(data.feature_names.size() == 2);
  CHECK(data.feature_names[0] == "geneA");
  CHECK(data.feature_names[1] == "geneB");
  CHECK(data.response[1] == 0.0);
}

TEST_CASE("load_csv error reporting names the cell") {
  TempFile nan_file("hfl_nan.csv", "1,2\n3,NaN\n");
  CHECK_THROWS_WITH_AS(hfl::load_csv(nan_file.path.string(), false, 0),
                       doctest::Contains("row 2, column 2"), std::runtime_error);

  TempFile junk("hfl_junk.csv", "1,2\nx,4\n");
  CHECK_THROWS_WITH_AS(hfl::load_csv(junk.path.string(), false, 0),
                       doctest::Contains("row 2, column 1"), std::runtime_error);

  TempFile ragged("hfl_ragged.csv", "1,2\n3,4,5\n");
  CHECK_THROWS_WITH_AS(hfl::load_csv(ragged.path.string(), false, 0),
                       doctest::Contains("ragged row 2"), std::runtime_error);

  CHECK_THROWS_AS(hfl::load_csv("/nonexistent/file.csv", false, 0), std::runtime_error);

  TempFile ok("hfl_ok.csv", "1,2\n3,4\n");
  CHECK_THROWS_AS(hfl::load_csv(ok.path.string(), false, 5), std::invalid_argument);
}

TEST_CASE("response column selection and transpose path") {
  TempFile f("hfl_resp.csv", "1,2,9\n4,5,8\n");
  auto data = hfl::load_csv(f.path.string(), false, 2);
  CHECK(data.response[0] == 9.0);
  CHECK(data.response[1] == 8.0);
  CHECK(data.features(0, 0) == 1.0);
  CHECK(data.features(0, 1) == 2.0);

  auto raw = hfl::parse_csv(f.path.string(), false);
  raw.values = raw.values.transpose().eval();
  auto t = hfl::make_dataset(raw, 0);
  CHECK(t.features.rows() == 3);
  CHECK(t.features.cols() == 1);
  CHECK(t.response[2] == 9.0);
}

TEST_CASE("round trip preserves numeric content") {
  TempFile f("hfl_rt.csv",
             "0.12345678901234567,-3.5e-9,42\n1e300,-7,0.1\n2.5,3.25,-0.333333333333333\n");
  auto data = hfl::load_csv(f.path.string(), false, 0);
  auto out_path = std::filesystem::temp_directory_path() / "hfl_rt_out.csv";
  hfl::save_csv(data, out_path.string());
  auto again = hfl::load_csv(out_path.string(), false, 0);
  CHECK((data.features - again.features).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK((data.response - again.response).lpNorm<Eigen::Infinity>() == 0.0);
  std::filesystem::remove(out_path);
}

TEST_CASE("standardize") {
  TempFile f("hfl_std.csv", "0,1,5\n0,2,5\n0,3,5\n0,4,5\n");
  auto data = hfl::load_csv(f.path.string(), false, 0);
  auto std_data = hfl::standardize(data);
  CHECK(std_data.standardized);

  // First feature column: centered and unit sample sd.
  CHECK(std::abs(std_data.features.col(0).mean()) <= 1e-12);
  const double sd = std::sqrt(std_data.features.col(0).squaredNorm() / 3.0);
  CHECK(sd == doctest::Approx(1.0).epsilon(1e-12));

  // Constant column: centered to zero and flagged.
  CHECK(std_data.features.col(1).lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE(std_data.constant_columns.size() == 1);
  CHECK(std_data.constant_columns[0] == 1);

  // Response untouched.
  CHECK((std_data.response - data.response).norm() == 0.0);

  // Idempotence up to rounding.
  auto twice = hfl::standardize(std_data);
  CHECK((twice.features.col(0) - std_data.features.col(0)).lpNorm<Eigen::Infinity>() <= 1e-12);
}
