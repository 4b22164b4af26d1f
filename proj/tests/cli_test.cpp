#include "hdm/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hdm/constructions.hpp"
#include "hdm/ncube.hpp"

using namespace hdm;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hdm_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write(const std::string& p, const std::string& text) const { std::ofstream(p, std::ios::binary) << text; }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructPaley3ByOrder) {
  const Result r = run({"construct", "--kind", "paley3", "--v", "14", "--out", path("m.hdm")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "paley3 n=3 v=14\n");
  const SignCube h = parse(slurp(path("m.hdm")));
  EXPECT_EQ(h.dimension(), 3u);
  EXPECT_EQ(h.order(), 14u);
  EXPECT_EQ(h, paley3(Field(13)));
}

TEST_F(CliTest, OrderTwentyTwoIsNotCovered) {
  const Result r = run({"construct", "--kind", "paley3", "--v", "22"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("order not covered: q=21 is not an odd prime power"), std::string::npos) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(run({"construct", "--kind", "paley2", "--q", "15"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "paley2", "--v", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "paley2", "--q", "3", "--v", "4"}).code, 2);
}

TEST_F(CliTest, ConstructPaley2ToStdout) {
  const Result r = run({"construct", "--kind", "paley2", "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "HDM 2 4\n-+++\n+++-\n+-++\n++-+\n");
  EXPECT_EQ(r.err, "paley2 n=2 v=4\n");
}

TEST_F(CliTest, ProductAndLift) {
  ASSERT_EQ(run({"construct", "--kind", "paley2", "--q", "7", "--out", path("p.hdm")}).code, 0);
  Result r = run({"construct", "--kind", "product", "--input", path("p.hdm"), "--dim", "3", "--out", path("y.hdm")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "product n=3 v=8\n");
  r = run({"construct", "--kind", "lift", "--input", path("y.hdm"), "--out", path("l.hdm")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lift n=4 v=8\n");
  EXPECT_EQ(run({"verify", path("l.hdm")}).code, 0);
  EXPECT_EQ(run({"verify", "--proper", path("y.hdm")}).code, 0);

  // hypothesis violations
  ASSERT_EQ(run({"construct", "--kind", "paley2", "--q", "5", "--out", path("bad.hdm")}).code, 0);
  r = run({"construct", "--kind", "product", "--input", path("bad.hdm"), "--dim", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"construct", "--kind", "lift", "--input", path("bad.hdm")}).code, 3);
  EXPECT_EQ(run({"construct", "--kind", "lift", "--input", path("missing.hdm")}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "product", "--input", path("p.hdm")}).code, 2);
}

TEST_F(CliTest, VerifyReports) {
  ASSERT_EQ(run({"construct", "--kind", "paley3", "--q", "9", "--out", path("p9.hdm")}).code, 0);
  Result r = run({"verify", path("p9.hdm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hadamard: PASS\n");

  ASSERT_EQ(run({"construct", "--kind", "paley3", "--q", "7", "--out", path("p7.hdm")}).code, 0);
  r = run({"verify", "--proper", "--cyclic", "--psl", "--q", "7", path("p7.hdm")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "hadamard: PASS\nproper: PASS\ncyclic: PASS\npsl: PASS\n");

  r = run({"verify", "--proper", path("p9.hdm")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("proper: FAIL"), std::string::npos);

  ASSERT_EQ(run({"construct", "--kind", "almost-cube", "--q", "5", "--out", path("a.hdm")}).code, 0);
  r = run({"verify", path("a.hdm")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "hadamard: FAIL axis=1 a=0 b=1 dev=6\n");
  r = run({"--threads", "4", "verify", "--psl", "--q", "5", path("a.hdm")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "hadamard: FAIL axis=1 a=0 b=1 dev=6\npsl: FAIL\n");
}

TEST_F(CliTest, VerifyUsageErrors) {
  write(path("broken.hdm"), "HDM 2 2\n++\n+?\n");
  Result r = run({"verify", path("broken.hdm")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  ASSERT_EQ(run({"construct", "--kind", "paley3", "--q", "5", "--out", path("p5.hdm")}).code, 0);
  EXPECT_EQ(run({"verify", "--psl", path("p5.hdm")}).code, 2);
  EXPECT_EQ(run({"verify", "--psl", "--q", "7", path("p5.hdm")}).code, 2);
  EXPECT_EQ(run({"verify", path("nope.hdm")}).code, 2);
  write(path("one.hdm"), "HDM 1 2\n+-\n");
  EXPECT_EQ(run({"verify", path("one.hdm")}).code, 2);
  EXPECT_EQ(run({"verify", "--cyclic", path("one.hdm")}).code, 2);
}

TEST_F(CliTest, InfoLayerChiTable) {
  ASSERT_EQ(run({"construct", "--kind", "paley3", "--q", "13", "--out", path("p.hdm")}).code, 0);
  Result r = run({"info", path("p.hdm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=3 v=14 entries=2744\n");

  r = run({"layer", path("p.hdm"), "--fix", "3=0", "--out", path("l.hdm")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(slurp(path("l.hdm"))), paley2(Field(13)));
  r = run({"layer", path("p.hdm"), "--fix", "1=2", "--fix", "2=5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "HDM 1 14\n");
  EXPECT_EQ(run({"layer", path("p.hdm"), "--fix", "4=0"}).code, 2);
  EXPECT_EQ(run({"layer", path("p.hdm"), "--fix", "3"}).code, 2);
  EXPECT_EQ(run({"layer", path("p.hdm"), "--fix", "1=0", "--fix", "2=0", "--fix", "3=0"}).code, 2);

  r = run({"chi-table", "--q", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1 +1\n2 2 +1\n3 3 -1\n4 4 +1\n5 5 -1\n6 6 -1\n");
  r = run({"chi-table", "--q", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 t "), std::string::npos);
  EXPECT_EQ(run({"chi-table", "--q", "21"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "williamson", "--q", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "paley3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const Result a = run({"construct", "--kind", "paley3", "--q", "27"});
  const Result b = run({"construct", "--kind", "paley3", "--q", "27"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = HDM_CLI_PATH;
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " construct --kind paley3 --v 22 2>/dev/null").c_str())), 2);
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " construct --kind paley3 --v 10 --out " + path("x.hdm") +
                                     " >/dev/null && " + bin + " verify --cyclic --psl --q 9 " + path("x.hdm") +
                                     " >/dev/null")
                                        .c_str())),
            0);
}
