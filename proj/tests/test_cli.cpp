#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "cache.hpp"
#include "cli.hpp"

using namespace jk;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("jk_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kGolden = std::string(JK_SOURCE_DIR) + "/tests/golden/tables.txt";

}  // namespace

TEST_CASE("kerov rows in text form") {
  auto r = run({"kerov", "--mu", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "a^2*R3 + a*b*R2\n");
  r = run({"kerov", "--mu", "4"});
  CHECK(r.out == "a^4*R5 + a^3*b*(6*R4 + R2^2) + 5*a^3*R3 + 11*a^2*b^2*R3 + 7*a^2*b*R2 + 6*a*b^3*R2\n");
  r = run({"table", "--rmax", "3"});
  CHECK(r.out == "K2 = a^2*R3 + a*b*R2\nK3 = a^3*R4 + 3*a^2*b*R3 + a^2*R2 + 2*a*b^2*R2\n");
  r = run({"kerov", "--mu", "2,2", "--alpha", "1"});
  CHECK(r.out == "R3^2 - 4*R4 - 2*R2^2 - 2*R2\n");
  r = run({"kerov-tilde", "--mu", "2,2"});
  CHECK(r.out == "a^3*(4*R4 + 2*R2^2) + 10*a^2*b*R3 + 2*a^2*R2 + 6*a*b^2*R2\n");
}

TEST_CASE("numeric specializations") {
  CHECK(run({"kerov", "--mu", "4", "--alpha", "1"}).out == "R5 + 5*R3\n");
  CHECK(run({"kerov", "--mu", "2", "--alpha", "2", "--independent-beta"}).out == "2*b*R2 + 4*R3\n");
  // (zeta, eta) and (eta, zeta) share alpha and beta.
  const auto p = run({"kerov", "--mu", "3,2", "--mode", "zeta-eta", "--zeta", "-2", "--eta", "1/3", "--format", "csv"});
  const auto q = run({"kerov", "--mu", "3,2", "--mode", "zeta-eta", "--zeta", "1/3", "--eta", "-2", "--format", "csv"});
  CHECK(p.code == 0);
  CHECK(p.out == q.out);
  CHECK(p.out.rfind("mu,rho,coef\n", 0) == 0);
}

TEST_CASE("json output re-parses to the same polynomial") {
  for (const char* mu : {"2", "5", "2,2", "3,2,2"}) {
    const auto r = run({"kerov", "--mu", mu, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    KerovSolver s;
    CHECK(cli::rpoly_from_json(j) == s.K(Partition::parse(mu)));
    CHECK(j["mode"] == "alpha");
  }
  CHECK_THROWS_AS(cli::rpoly_from_json(nlohmann::ordered_json::parse(R"({"terms": [{"rho": 2}]})")),
                  std::invalid_argument);
}

TEST_CASE("theta table as json") {
  const auto r = run({"theta", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][0]["lambda"] == nlohmann::ordered_json::array({2}));
  CHECK(j["entries"][0]["rho"] == nlohmann::ordered_json::array({2}));
  CHECK(j["entries"][0]["value"] == "a");
  const auto num = run({"theta", "--n", "3", "--alpha", "2", "--format", "csv"});
  CHECK(num.out.rfind("lambda,rho,value\n3,3,8\n", 0) == 0);
}

TEST_CASE("cumulant dump") {
  const auto r = run({"cumulants", "--lambda", "1", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[2]["kind"] == "R");
  CHECK(j[2]["values"][0] == "0");
  const auto z = run({"cumulants", "--lambda", "2", "--n", "2", "--mode", "zeta-eta", "--zeta", "-1", "--eta", "1"});
  CHECK(z.out == "M1 = 0\nM2 = 2\nB1 = 0\nB2 = 2\nR1 = 0\nR2 = 2\n");
}

TEST_CASE("grade, qc, fit and content-fit") {
  auto r = run({"grade", "--mu", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,1) weight 4: 6*R4 + R2^2\n") != std::string::npos);
  r = run({"qc", "--mu", "4"});
  CHECK(r.out.find("(1,1) Q: 2*Q4\n") != std::string::npos);
  r = run({"fit", "--ij", "2,2", "--rmax", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("f22 = 1/8*m2 + 1/6*m11 + 1/12*m1\n", 0) == 0);
  CHECK(r.out.find("prediction for r = 9: ok") != std::string::npos);
  r = run({"fit", "--ij", "3,3", "--rmax", "9"});
  CHECK(r.code == 2);
  CHECK(r.out.find("rank deficient") != std::string::npos);
  r = run({"content-fit", "--mu", "2"});
  CHECK(r.out == "(2*a)*p1\n");
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--claims", "top_weight,weight_r", "--rmax", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--rmax", "6", "--claims", "top_weight", "--golden", kGolden, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out).size() == 12);

  // A falsified golden file must fail with exit code 2.
  const auto dir = scratch("golden");
  std::string text = slurp(kGolden);
  const auto pos = text.find("11*a^2*b^2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 2, "12");
  std::ofstream(dir / "bad.txt") << text;
  r = run({"verify", "--rmax", "5", "--claims", "top_weight", "--golden", (dir / "bad.txt").string()});
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL golden K[4]") != std::string::npos);
  std::ofstream(dir / "broken.txt") << "K[4] = a^\n";
  CHECK(run({"verify", "--rmax", "5", "--claims", "top_weight", "--golden", (dir / "broken.txt").string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"kerov", "--mu", "2", "--bogus"}).code == 64);
  CHECK(run({"kerov", "--mu", "2", "--format", "xml"}).code == 64);
  CHECK(run({"kerov", "--mu", "x"}).code == 64);
  CHECK(run({"kerov", "--mu", "2", "--alpha", "1/0"}).code == 64);
  CHECK(run({"kerov", "--mu", "2", "--zeta", "1", "--eta", "2"}).code == 64);
  CHECK(run({"verify", "--claims", "no_such_claim"}).code == 64);
  const auto e = run({"kerov", "--mu", "2,1"});
  CHECK(e.code == 1);
  CHECK(e.err.find("part 1") != std::string::npos);
  CHECK(run({"kerov", "--help"}).code == 0);
  CHECK(run({"claims"}).out.find("top_weight: ") == 0);
}

TEST_CASE("output file and repeatability") {
  const auto dir = scratch("out");
  const auto path = (dir / "k5.txt").string();
  CHECK(run({"kerov", "--mu", "5", "--out", path}).code == 0);
  const auto a = slurp(path);
  CHECK(run({"kerov", "--mu", "5", "--out", path}).code == 0);
  CHECK(slurp(path) == a);
  CHECK(run({"kerov", "--mu", "5"}).out == a);
  CHECK(run({"table", "--rmax", "5", "--format", "json"}).out == run({"table", "--rmax", "5", "--format", "json"}).out);
  fs::remove_all(dir);
}

TEST_CASE("cache entries") {
  const auto dir = scratch("cache");
  cli::ResultCache cache(dir, "v1");
  const auto payload = nlohmann::ordered_json::parse(R"({"x": [1, 2, 3], "y": "z"})");
  cache.put("k", payload);
  const auto bytes = slurp(cache.path_for("k"));
  REQUIRE(cache.get("k").has_value());
  CHECK(cache.get("k")->dump() == payload.dump());
  cache.put("k", payload);
  CHECK(slurp(cache.path_for("k")) == bytes);
  CHECK_FALSE(cache.get("other").has_value());

  // A version bump never serves old entries.
  cli::ResultCache next(dir, "v2");
  CHECK_FALSE(next.get("k").has_value());

  // Corruption is a miss with a warning.
  std::ostringstream warn;
  cli::ResultCache watched(dir, "v1", &warn);
  std::string text = bytes;
  text.replace(text.find("\"z\""), 3, "\"w\"");
  std::ofstream(cache.path_for("k"), std::ios::trunc) << text;
  CHECK_FALSE(watched.get("k").has_value());
  CHECK(warn.str().find("checksum") != std::string::npos);
  std::ofstream(cache.path_for("k"), std::ios::trunc) << "{not json";
  CHECK_FALSE(watched.get("k").has_value());

  // Concurrent identical puts leave one valid entry and no temporaries.
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) threads.emplace_back([&] { cache.put("shared", payload); });
  for (auto& t : threads) t.join();
  CHECK(cache.get("shared").has_value());
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().extension() == ".json");
    ++files;
  }
  CHECK(files == 2);
  fs::remove_all(dir);
}

TEST_CASE("the CLI serves and refreshes cached results") {
  const auto dir = scratch("kcache");
  const auto first = run({"kerov", "--mu", "3", "--cache-dir", dir.string()});
  CHECK(first.code == 0);
  const auto second = run({"kerov", "--mu", "3", "--cache-dir", dir.string()});
  CHECK(second.out == first.out);

  // Plant a valid entry with a different value to see that it is served.
  cli::ResultCache cache(dir, cli::kEngineVersion);
  const std::string key = "K [3] interpolation";
  REQUIRE(cache.get(key).has_value());
  cache.put(key, cli::rpoly_json(Partition{3}, "alpha", parse_kpoly("7*R2")));
  CHECK(run({"kerov", "--mu", "3", "--cache-dir", dir.string()}).out == "7*R2\n");

  // A corrupt entry is recomputed and rewritten.
  std::ofstream(cache.path_for(key), std::ios::trunc) << "garbage";
  const auto again = run({"kerov", "--mu", "3", "--cache-dir", dir.string()});
  CHECK(again.out == first.out);
  CHECK(again.err.find("warning") != std::string::npos);
  CHECK(cache.get(key).has_value());

  setenv("KEROV_CACHE", dir.string().c_str(), 1);
  CHECK(run({"kerov", "--mu", "3"}).out == first.out);
  unsetenv("KEROV_CACHE");
  fs::remove_all(dir);
}
