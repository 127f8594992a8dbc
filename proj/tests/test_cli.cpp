#include "liebranch/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace liebranch;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "liebranch");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("liebranch_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, Dim) {
  EXPECT_EQ(run({"dim", "C28", "2,0^27"}).out, "1596\n");
  EXPECT_EQ(run({"dim", "E7", "0^7"}).out, "1\n");
  EXPECT_EQ(run({"dim", "E7", "0^3,1,0^3"}).out, "365750\n");
}

TEST(Cli, DimErrorsNameTheToken) {
  Result r = run({"dim", "C28", "2,q,0^26"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("'q'"), std::string::npos);
  r = run({"dim", "C28", "2,0^26"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("28"), std::string::npos);
  r = run({"dim", "E7", "-1,0^6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("-1,0^6"), std::string::npos);
  EXPECT_EQ(run({"dim", "Q7", "0^7"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, BranchDefiningModule) {
  const Result r = run({"branch", "1,0^27"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[0^6,1]"), std::string::npos);
  EXPECT_NE(r.out.find("total 56"), std::string::npos);
}

TEST(Cli, BranchJsonRoundTrip) {
  const Result r = run({"--json", "branch", "--paper", "2,0^27"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  EXPECT_EQ(j["highest_weight"], "2,0^27");
  EXPECT_EQ(j["dimension"], 1596);
  ASSERT_EQ(j["constituents"].size(), 2u);
  EXPECT_EQ(j["constituents"][0]["hw"], "0^6,2");
  EXPECT_EQ(j["constituents"][0]["dim"], 1463);
  EXPECT_EQ(j["constituents"][0]["mult"], 1);
  EXPECT_EQ(run({"branch", "--json", "--hw", "2,0^27", "--paper"}).out, r.out);
}

TEST(Cli, BranchErrors) {
  EXPECT_EQ(run({"branch"}).code, 1);
  EXPECT_EQ(run({"branch", "1,0^7"}).code, 1);
}

TEST(Cli, ProjectMatrixProvenance) {
  Result r = run({"project-matrix"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("provenance: derived"), std::string::npos);
  r = run({"project-matrix", "--paper"});
  EXPECT_NE(r.out.find("provenance: paper-fixture"), std::string::npos);
  EXPECT_NE(r.out.find("1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 2 1 1 2 1 1 2 1 2 3 2"), std::string::npos);
}

TEST(Cli, Partitions) {
  EXPECT_EQ(run({"partitions", "--target", "1596", "--parts", "56,133,912,1463,1539"}).out, "3\n");
  EXPECT_EQ(run({"partitions", "--target", "1596", "--parts", "1,56,133,912,1463,1539"}).out, "240\n");
  EXPECT_EQ(run({"partitions", "--target", "10", "--parts", "2,x"}).code, 1);
  EXPECT_EQ(run({"partitions", "--target", "10", "--parts", "2,2"}).code, 1);
}

TEST(Cli, Tensor) {
  const Result r = run({"--json", "tensor", "--factors", "1,0^27", "x", "1,0^27"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dimension"], 3136);
  EXPECT_EQ(j["constituents"].size(), 3u);
  EXPECT_EQ(run({"tensor", "--algebra", "A2", "--factors", "1,0 x 0,1"}).code, 0);
  EXPECT_EQ(run({"tensor", "--factors", "1,0^27", "x"}).code, 1);
}

TEST(Cli, VerifyEmbedding) {
  const fs::path dir = scratch_dir("dump");
  const Result r = run({"verify-embedding", "--dump", (dir / "rep.txt").string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_TRUE(fs::file_size(dir / "rep.txt") > 0);
}

TEST(Cli, ReproduceTablesPassesWithBothMatrices) {
  Result r = run({"reproduce-paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  r = run({"reproduce-paper", "--paper", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["ok"], true);
}

TEST(Cli, MissingDataDirIsAUsageError) {
  EXPECT_EQ(run({"--data-dir", "/nonexistent/liebranch", "reproduce-paper"}).code, 1);
  EXPECT_EQ(run({"--data-dir", "/nonexistent/liebranch", "project-matrix", "--paper"}).code, 1);
}

TEST(Cli, TamperedFixtureIsAMismatch) {
  const fs::path dir = scratch_dir("tampered");
  for (const char* f : {"projection_e7_c28.txt", "branching_c28_e7.txt", "tensor_c28.txt"})
    fs::copy_file(fs::path(default_data_dir()) / f, dir / f);
  {
    std::ifstream in(dir / "tensor_c28.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    const auto pos = s.find("3*1,0^27=56");
    ASSERT_NE(pos, std::string::npos);
    s.replace(pos, 1, "2");
    std::ofstream(dir / "tensor_c28.txt") << s;
  }
  const Result r = run({"--data-dir", dir.string(), "reproduce-paper"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}
