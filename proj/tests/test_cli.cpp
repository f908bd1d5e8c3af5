#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "knot4/cli.hpp"

namespace fs = std::filesystem;
using knot4::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("knot4_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "corpus");
    write("sphere.json", R"J({"kind":"case2","x1":"-cos(u)","x3":"sin(u)","lambda":0,"u_domain":[0.1,3.0]})J");
    write("case1.json", R"J({"kind":"case1","phi":"0.4*sin(u)","unit_speed_complete":true,"u_domain":[0,1]})J");
    write("corpus/a_case1.json", R"J({"kind":"case1","phi":"0.3*u","unit_speed_complete":true,"u_domain":[0,2]})J");
    write("corpus/b_case2.json",
          R"J({"kind":"case2","x3":"1+0.2*sin(u)","lambda":0.5,"unit_speed_complete":true,"u_domain":[0,2]})J");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(knot4::cli::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(knot4::cli::format_number(1.0), "1");
  EXPECT_EQ(knot4::cli::format_number(0.0), "0");
  EXPECT_EQ(knot4::cli::format_number(-0.0), "0");
  EXPECT_EQ(knot4::cli::format_number(std::nan("")), "nan");
  EXPECT_EQ(knot4::cli::format_number(1e-20), "9.9999999999999995e-21");
}

TEST_F(CliTest, EvalSphere) {
  const auto r = call({"eval", "--spec", path("sphere.json"), "--u", "0.7853981633974483", "--v", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["E"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["F"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["G"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["K"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, GridIsDeterministic) {
  const std::vector<std::string> base{"grid", "--spec", path("case1.json"), "--grid", "0:1:10,0:6.283:10"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  ASSERT_EQ(call(with({"--out", path("a.csv")})).code, 0);
  ASSERT_EQ(call(with({"--out", path("b.csv")})).code, 0);
  ASSERT_EQ(call(with({"--out", path("c.csv"), "--threads", "4"})).code, 0);
  const std::string a = slurp(dir_ / "a.csv");
  EXPECT_EQ(a, slurp(dir_ / "b.csv"));
  EXPECT_EQ(a, slurp(dir_ / "c.csv"));
  const auto rows = lines(a);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0],
            "u,v,X1,X2,X3,X4,E,F,G,W2,K_ext,K_int,H1,H2,H3,H4,H_norm2,defect,gamma112,gamma212,h_inv,k_inv");
  EXPECT_EQ(rows[1].substr(0, 4), "0,0,");
  // u outer, v inner
  EXPECT_EQ(rows[2].substr(0, 2), "0,");
  EXPECT_EQ(rows[11].substr(0, 19), "0.1111111111111111,");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(std::count(rows[i].begin(), rows[i].end(), ','), 21);
}

TEST_F(CliTest, GridMarksSkippedPoints) {
  write("pinch.json", R"J({"kind":"general","x1":"u","x2":"0","x3":"u","x4":"0","u_domain":[0,1]})J");
  const auto r = call({"grid", "--spec", path("pinch.json"), "--grid", "0:1:3,0:1:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_NE(rows[1].find(",nan,"), std::string::npos);  // u = 0 lies on the axis
  EXPECT_EQ(rows[3].find("nan"), std::string::npos);
}

TEST_F(CliTest, CheckSpecDir) {
  const auto r = call({"check", "--spec-dir", path("corpus"), "--claims", "PROP1,PROP4,PROP9", "--nu", "12", "--nv",
                       "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  ASSERT_EQ(j["claims"].size(), 3u);
  for (const auto& c : j["claims"]) EXPECT_EQ(c["status"], "pass") << c.dump();
  EXPECT_EQ(j["claims"][0]["instances"][0]["name"], "a_case1");
}

TEST_F(CliTest, CheckFailureExitCode) {
  const auto r = call({"check", "--spec", path("case1.json"), "--claims", "COR8", "--tol", "0", "--nu", "5", "--nv",
                       "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["ok"].get<bool>());
}

TEST_F(CliTest, CheckBuiltinWithSeed) {
  const std::vector<std::string> args{"check", "--claims", "PROP1", "--seed", "0x1234", "--nu", "6", "--nv", "6"};
  const auto a = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, call(args).out);
  EXPECT_NE(a.out, call({"check", "--claims", "PROP1", "--nu", "6", "--nv", "6"}).out);
  EXPECT_NE(a.out.find("0x1234"), std::string::npos);
}

TEST_F(CliTest, LaplaceMinusOnSphere) {
  const auto r = call({"laplace", "--spec", path("sphere.json"), "--grid", "1.0471975511965976:1.0471975511965976:2,0:1:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "u,v,Y1,Y2,Y3,Y4");
  std::istringstream row(rows[1]);
  std::string cell;
  std::vector<double> v;
  while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
  EXPECT_NEAR(v[2], -2.0, 1e-12);
  EXPECT_NEAR(v[4], 0.0, 1e-12);

  const auto plus = call({"laplace", "--spec", path("sphere.json"), "--direction", "plus1", "--grid", "1:2:2,0:1:2"});
  ASSERT_EQ(plus.code, 0);
  EXPECT_NE(lines(plus.out)[1].find("nan"), std::string::npos);
  EXPECT_EQ(call({"laplace", "--spec", path("sphere.json"), "--direction", "sideways"}).code, 1);
}

TEST_F(CliTest, MeshCounts) {
  const auto r = call({"mesh", "--spec", path("sphere.json"), "--grid", "0.1:3:6,0:6.283185307179586:5", "--out",
                       path("m.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto obj = lines(slurp(dir_ / "m.obj"));
  const auto v = std::count_if(obj.begin(), obj.end(), [](const std::string& l) { return l.rfind("v ", 0) == 0; });
  const auto f = std::count_if(obj.begin(), obj.end(), [](const std::string& l) { return l.rfind("f ", 0) == 0; });
  EXPECT_EQ(v, 30);
  EXPECT_EQ(f, 2 * 5 * 4);
  for (const auto& l : obj) EXPECT_EQ(l.find("nan"), std::string::npos);
  const auto side = nlohmann::json::parse(slurp(dir_ / "m.obj.skipped.json"));
  EXPECT_EQ(side["skipped"].size(), 0u);
}

TEST_F(CliTest, MeshCollapsesSkippedVertices) {
  write("pinch.json", R"J({"kind":"general","x1":"u","x2":"0","x3":"u","x4":"0","u_domain":[0,1]})J");
  const auto r = call({"mesh", "--spec", path("pinch.json"), "--grid", "0:1:4,0:6:4", "--project", "ortho:0,0,0,1",
                       "--out", path("p.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto obj = slurp(dir_ / "p.obj");
  EXPECT_EQ(obj.find("nan"), std::string::npos);
  const auto side = nlohmann::json::parse(slurp(dir_ / "p.obj.skipped.json"));
  EXPECT_EQ(side["skipped"].size(), 4u);
  EXPECT_EQ(side["vertices"], 16);
  EXPECT_EQ(side["faces"], 18);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"bogus"}).code, 1);
  EXPECT_EQ(call({"eval", "--spec", path("missing.json"), "--u", "1", "--v", "0"}).code, 1);
  EXPECT_EQ(call({"eval", "--spec", path("sphere.json"), "--u", "9", "--v", "0"}).code, 1);
  EXPECT_EQ(call({"grid", "--spec", path("sphere.json"), "--grid", "0:1"}).code, 1);
  EXPECT_EQ(call({"grid", "--spec", path("sphere.json"), "--grid", "0:5:4,0:1:3"}).code, 1);
  EXPECT_EQ(call({"check", "--claims", "NOPE"}).code, 1);
  EXPECT_EQ(call({"check", "--seed", "xyz", "--claims", "PROP1"}).code, 1);
  EXPECT_EQ(call({"mesh", "--spec", path("sphere.json"), "--out", path("x.obj"), "--project", "drop-x9"}).code, 1);
  EXPECT_EQ(call({"mesh", "--spec", path("sphere.json"), "--out", path("x.obj"), "--project", "ortho:1,1,0,0"}).code,
            1);
  write("bad.json", "{not json");
  EXPECT_EQ(call({"eval", "--spec", path("bad.json"), "--u", "1", "--v", "0"}).code, 1);
  const auto r = call({"eval", "--spec", path("missing.json"), "--u", "1", "--v", "0"});
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string exe = KNOT4_CLI_PATH;
  EXPECT_EQ(std::system((exe + " eval --spec " + path("sphere.json") + " --u 1 --v 0 > /dev/null").c_str()), 0);
  const int bad = std::system((exe + " eval --spec " + path("nope.json") + " --u 1 --v 0 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(bad), 1);
}

}  // namespace
