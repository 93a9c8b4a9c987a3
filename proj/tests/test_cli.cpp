#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using fiberbound::cli::run;

namespace {

const std::string kData = FIBERBOUND_TEST_DATA;
const std::string kScenarios = FIBERBOUND_SCENARIOS;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Restores FIBERBOUND_ORDER when a test is done with it.
class OrderEnv {
 public:
  explicit OrderEnv(const char* value) {
    if (const char* old = std::getenv("FIBERBOUND_ORDER")) old_ = old;
    setenv("FIBERBOUND_ORDER", value, 1);
  }
  ~OrderEnv() {
    if (old_.empty())
      unsetenv("FIBERBOUND_ORDER");
    else
      setenv("FIBERBOUND_ORDER", old_.c_str(), 1);
  }

 private:
  std::string old_;
};

}  // namespace

TEST(Cli, InvariantsText) {
  auto r = call({"invariants", kData + "/origin.scheme"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("degree"), std::string::npos);
}

TEST(Cli, InvariantsJson) {
  auto r = call({"invariants", kData + "/double_point_on_axis.scheme", "--json", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["command"]["name"], "invariants");
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_EQ(j["result"]["degree"], 2);
  EXPECT_EQ(j["result"]["omega_degree"], 1);
}

TEST(Cli, TimingPresentByDefault) {
  auto r = call({"--json", "invariants", kData + "/origin.scheme"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("timing"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"bound", "tb", "--coranks", "2,1", "--n", "14", "--c", "1"}).code, 0);
  EXPECT_EQ(call({"bound", "subscheme", kScenarios + "/cube_of_maximal_ideal.scheme", "--n", "35", "--c", "1"}).code,
            1);
  EXPECT_EQ(call({"bound", "subscheme", kScenarios + "/cube_of_maximal_ideal.scheme", "--n", "36", "--c", "1"}).code,
            0);
  EXPECT_EQ(call({"invariants", kData + "/bad_variable.scheme"}).code, 2);
  EXPECT_EQ(call({"invariants", kData + "/missing.scheme"}).code, 2);
  EXPECT_EQ(call({"no-such-command"}).code, 2);
  EXPECT_EQ(call({"bound", "sideways", "--n", "1", "--c", "1"}).code, 2);
  EXPECT_EQ(call({"bound", "tb", "--coranks", "1", "--n", "0", "--c", "1"}).code, 2);
  EXPECT_EQ(call({"invariants", kData + "/curve.scheme"}).code, 4);
  EXPECT_EQ(call({"--version"}).code, 0);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, ParseErrorNamesFileLineAndColumn) {
  auto r = call({"invariants", kData + "/bad_variable.scheme"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad_variable.scheme:4:9: unknown variable 'q'"), std::string::npos) << r.err;
}

TEST(Cli, QInvariant) {
  auto r = call({"qinv", "--x", kData + "/parabola.scheme", "--y", kData + "/origin.scheme", "--json", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["q"], "1/1");
}

TEST(Cli, DeformClosure) {
  auto r = call({"deform", kScenarios + "/quartic_quintic.scheme", "--fix-omega", "--closure", "--json", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["fixed_omega_dim"], 17);
  EXPECT_EQ(j["result"]["closure_dim"], 18);
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::string> args{"verify-paper", "--json", "--no-timing"};
  auto a = call(args), b = call(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto c = call({"bound", "family", kScenarios + "/fermat_cone_truncation.scheme", "--n", "69", "--c", "1", "--m", "1",
                 "--json", "--no-timing"});
  auto d = call({"bound", "family", kScenarios + "/fermat_cone_truncation.scheme", "--n", "69", "--c", "1", "--m", "1",
                 "--json", "--no-timing"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, d.out);
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"]["reports"][0]["margin"], "0/1");
}

TEST(Cli, TamperedScenarioFails) {
  fs::path tmp = fs::temp_directory_path() / "fiberbound_tampered";
  fs::remove_all(tmp);
  fs::copy(kScenarios, tmp, fs::copy_options::recursive);
  {
    std::ofstream f(tmp / "cube_of_maximal_ideal.scheme", std::ios::trunc);
    f << "field: QQ\nvars: x y z\nideal:\n  x^2\n  x*y\n  x*z\n  y^2\n  y*z\n  z^2\n";
  }
  auto r = call({"verify-paper", "--scenarios", tmp.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL  cube_of_maximal_ideal: degree"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS  quartic_quintic: degree"), std::string::npos);
  fs::remove_all(tmp);
}

TEST(Cli, OrderFromEnvironment) {
  {
    OrderEnv env("lex");
    auto r = call({"invariants", kScenarios + "/quartic_quintic.scheme", "--json", "--no-timing"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["scheme"]["order"], "lex");
    EXPECT_EQ(j["result"]["degree"], 20);
  }
  {
    OrderEnv env("sideways");
    EXPECT_EQ(call({"invariants", kScenarios + "/quartic_quintic.scheme"}).code, 2);
  }
}
