#include <gtest/gtest.h>

#include <cstdlib>

#include "cli_harness.hpp"
#include "jcone/matrix_file.hpp"
#include "test_util.hpp"

namespace jcone {
namespace {

using nlohmann::json;
using testing::fixture_path;
using testing::matrices_near;
using testing::read_text;
using testing::run;
using testing::temp_path;

const std::string kA = fixture_path("diag_a.json");
const std::string kB = fixture_path("diag_b.json");

TEST(Cli, MeanDiagonal) {
  const std::string out = temp_path("mean.json");
  const auto r = run({"mean", "--signature", "1,1", "--a", kA, "--b", kB, "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto m = std::get<MatrixR>(read_matrix_file(out));
  EXPECT_TRUE(matrices_near(m, MatrixR::diagonal({4.0, -9.0}), 1e-14));
  const json info = json::parse(r.out);
  EXPECT_LE(info["riccati_residual"].get<double>(), 1e-12);
  EXPECT_EQ(info["t"].get<double>(), 0.5);
  std::filesystem::remove(out);
}

TEST(Cli, MeanEmitDiff) {
  const auto r = run({"mean", "--signature", "1,1", "--a", fixture_path("nc_a.json"), "--b", fixture_path("nc_b.json"),
                      "--out", temp_path("nc_mean.json"), "--emit-diff"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto diff = std::get<MatrixR>(decode_matrix(json::parse(r.out)["diff"]));
  const MatrixR reference{{0.263207, 0.768429}, {-0.857469, -2.50336}};
  EXPECT_LE(max_abs(MatrixR(diff - reference)), 5e-4);
}

TEST(Cli, MeanWeightAndStdout) {
  const auto r = run({"mean", "--signature", "1,1", "--a", kA, "--b", kB, "-t", "0.25"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"riccati_residual\": null"), std::string::npos);
  EXPECT_EQ(run({"mean", "--signature", "1,1", "--a", kA, "--b", kB, "-t", "1.5"}).code, kExitInputError);
}

TEST(Cli, Geodesic) {
  const auto r = run({"geodesic", "--signature", "1,1", "--a", kA, "--b", kB, "--samples", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json arr = json::parse(r.out);
  ASSERT_EQ(arr.size(), 3u);
  EXPECT_TRUE(matrices_near(std::get<MatrixR>(decode_matrix(arr[1])), MatrixR::diagonal({4.0, -9.0}),
                            1e-13));
  EXPECT_TRUE(matrices_near(std::get<MatrixR>(decode_matrix(arr[2])), MatrixR::diagonal({8.0, -27.0}),
                            1e-13));
  EXPECT_EQ(run({"geodesic", "--signature", "1,1", "--a", kA, "--b", kB, "--samples", "1"}).code, kExitInputError);
}

TEST(Cli, Pow) {
  const auto r = run({"pow", "--signature", "1,1", "--x", kB, "-t", "0.3333333333333333"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(matrices_near(std::get<MatrixR>(parse_matrix(r.out)), MatrixR::diagonal({2.0, -3.0}),
                            1e-14));
}

TEST(Cli, Order) {
  const auto holds = run({"order", "--signature", "1,1", "--x", kA, "--y", fixture_path("diag_y.json")});
  ASSERT_EQ(holds.code, kExitOk) << holds.err;
  const json j = json::parse(holds.out);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_NEAR(j["margin"].get<double>(), 1.0, 1e-14);
  const auto fails = run({"order", "--signature", "1,1", "--x", fixture_path("diag_y.json"), "--y", kA});
  EXPECT_EQ(fails.code, kExitViolation);
  EXPECT_FALSE(json::parse(fails.out)["holds"].get<bool>());
}

TEST(Cli, Riccati) {
  const auto r = run({"riccati", "--signature", "1,1", "--a", kA, "--b", kB});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(j["residual"].get<double>(), 1e-9);
  EXPECT_TRUE(matrices_near(std::get<MatrixR>(decode_matrix(j["solution"])),
                            MatrixR::diagonal({4.0, -9.0}), 1e-14));
}

TEST(Cli, Rand) {
  for (const char* f : {"R", "C", "H"}) {
    const auto r = run({"rand", "--dim", "3", "--field", f, "--signature", "2,1", "--seed", "5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const AnyMatrix m = parse_matrix(r.out);
    EXPECT_EQ(dimension_of(m), 3u);
    EXPECT_EQ(r.out, run({"rand", "--dim", "3", "--field", f, "--signature", "2,1", "--seed", "5"}).out);
  }
  EXPECT_EQ(run({"rand", "--dim", "3", "--field", "X"}).code, kExitInputError);
}

TEST(Cli, Check) {
  const auto r = run({"check", "--suite", "means", "--trials", "20", "--seed", "42"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(json::parse(line)["failures"].get<int>(), 0) << line;
    ++count;
  }
  EXPECT_GT(count, 0);
  EXPECT_EQ(run({"check", "--suite", "bogus"}).code, kExitInputError);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--signature", "1,1", "--a", kA}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--signature", "1,1", "--a", fixture_path("not_square.json"), "--b", kB}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--signature", "1,1", "--a", fixture_path("not_jpositive.json"), "--b", kB}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--signature", "1,1", "--a", "/nonexistent.json", "--b", kB}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--signature", "2,0", "--a", kA, "--b", kB}).code, kExitInputError);
  EXPECT_EQ(run({"mean", "--a", kA, "--b", kB}).code, kExitInputError);
  EXPECT_EQ(run({"pow", "--signature", "1,1", "--x", kA, "-t", "nan"}).code, kExitInputError);
  const auto bad = run({"riccati", "--signature", "1,1", "--a", fixture_path("not_jpositive.json"), "--b", kB});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, MixedFieldsPromote) {
  const auto r = run({"mean", "--signature", "1,1", "--a", fixture_path("complex_a.json"), "--b", kB});
  ASSERT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, ByteStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"mean", "--signature", "1,1", "--a", kA, "--b", kB},
        {"riccati", "--signature", "1,1", "--a", kA, "--b", kB},
        {"geodesic", "--signature", "1,1", "--a", kA, "--b", kB, "--samples", "5"},
        {"check", "--suite", "order", "--trials", "10", "--seed", "3"}}) {
    const auto first = run(args), second = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.code, second.code);
  }
}

TEST(Cli, Binary) {
  const std::string out = temp_path("binary_mean.json");
  const std::string cmd = std::string("\"") + JCONE_BINARY + "\" mean --signature 1,1 --a \"" + kA + "\" --b \"" + kB +
                          "\" --out \"" + out + "\" > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(matrices_near(std::get<MatrixR>(read_matrix_file(out)), MatrixR::diagonal({4.0, -9.0}),
                            1e-14));
  const std::string bad = std::string("\"") + JCONE_BINARY + "\" order --signature 1,1 --x \"" +
                          fixture_path("diag_y.json") + "\" --y \"" + kA + "\" > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), kExitViolation);
  std::filesystem::remove(out);
}

}  // namespace
}  // namespace jcone
