#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vertexid/cli.hpp"
#include "vertexid/latticepf.hpp"
#include "vertexid/verify.hpp"

using namespace vertexid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class SeedEnv {
 public:
  explicit SeedEnv(const char* value) { ::setenv("VERTEX_IDENTITIES_SEED", value, 1); }
  ~SeedEnv() { ::unsetenv("VERTEX_IDENTITIES_SEED"); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    auto v = call({"verify", "--id", "thm2", "--n", "2", "--degree", "6", "--seed", "7"});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("PASS  thm2", 0) == 0);
    CHECK(v.err.empty());

    auto e = call({"enumerate", "--domain", "asm", "--n", "3", "--count-only"});
    CHECK(e.code == 0);
    CHECK(e.out == "7\n");

    auto t = call({"table", "--series", "macmahon", "--order", "3"});
    CHECK(t.code == 0);
    CHECK(t.out == "1, 1, 3, 6\n");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "--id", "thm1", "--bogus"}).code == 2);
    CHECK(call({"verify", "--id", "nope"}).code == 2);
    CHECK(call({"verify", "--id", "thm1", "--t", "0.5"}).code == 2);
    CHECK(call({"verify", "--id", "thm1", "--format", "xml"}).code == 2);
    CHECK(call({"verify", "--id", "thm2", "--n", "9"}).code == 2);
    CHECK(call({"verify", "--id", "thm1", "--seed", "-3"}).code == 2);
    CHECK(call({"enumerate", "--domain", "hexagon", "--n", "2"}).code == 2);
    CHECK(call({"enumerate", "--domain", "asm", "--n", "2", "--x", "1/2"}).code == 2);
    CHECK(call({"table", "--series", "vuletic-gs", "--order", "2"}).code == 2);
    CHECK(call({"selftest", "--criterion", "11"}).code == 2);
    auto bad = call({"verify", "--id", "nope"});
    CHECK(bad.err.find("unknown identity") != std::string::npos);
  }

  TEST_CASE("help exits with 0") {
    auto h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify") != std::string::npos);
  }

  TEST_CASE("verify all aggregates") {
    auto r = call({"verify", "--id", "all", "--jobs", "4"});
    CHECK(r.code == 0);
    const auto n = list_identities().size();
    CHECK(r.out.find(std::to_string(n) + "/" + std::to_string(n) + " passed") != std::string::npos);
    auto sequential = call({"verify", "--id", "all"});
    CHECK(sequential.out == r.out);
  }

  TEST_CASE("JSON output is byte-identical for identical configs") {
    const std::vector<std::string> args{"verify", "--id", "thm1,conj1", "--seed", "11", "--format", "json"};
    auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schemaVersion"] == 1);
    CHECK(doc["config"]["seed"] == 11);
    CHECK(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["id"] == "thm1");
    CHECK(doc["reports"][1]["id"] == "conj1");
    CHECK(doc["failed"] == 0);
  }

  TEST_CASE("seed from the environment") {
    auto explicit_seed = call({"verify", "--id", "thm3", "--seed", "42", "--format", "json"});
    {
      SeedEnv env("42");
      auto from_env = call({"verify", "--id", "thm3", "--format", "json"});
      CHECK(from_env.out == explicit_seed.out);
    }
    {
      SeedEnv env("forty-two");
      CHECK(call({"verify", "--id", "thm3"}).code == 2);
    }
    auto default_seed = call({"verify", "--id", "thm3", "--format", "json"});
    CHECK(nlohmann::json::parse(default_seed.out)["config"]["seed"] == 1);
  }

  TEST_CASE("CSV and file output") {
    auto csv = call({"verify", "--id", "cauchy-det,stembridge-pf", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == Report::csv_header());
    std::getline(lines, row);
    CHECK(row.rfind("cauchy-det,", 0) == 0);

    const auto path = std::filesystem::temp_directory_path() / "vertexid_cli_test.json";
    auto written = call({"verify", "--id", "cauchy-det", "--format", "json", "--out", path.string()});
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(nlohmann::json::parse(content.str())["reports"][0]["status"] == "pass");
    std::filesystem::remove(path);
  }

  TEST_CASE("rationals print exactly") {
    auto r = call({"verify", "--id", "hl-cauchy", "--t", "-6/4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("t=-3/2") != std::string::npos);
  }

  TEST_CASE("enumerate lattices") {
    auto osasm = call({"enumerate", "--domain", "osasm", "--n", "2", "--x", "1/2,1/3", "--t", "1/5"});
    CHECK(osasm.code == 0);
    const std::vector<Rational> x{make_rational(1, 2), make_rational(1, 3)};
    CHECK(osasm.out.find("weight_sum " + to_string(z_osasm_closed(x, make_rational(1, 5)))) != std::string::npos);

    auto full = call({"enumerate", "--domain", "asm", "--n", "2"});
    CHECK(full.code == 0);
    CHECK(full.out.find("1 0\n0 1\n") != std::string::npos);
    CHECK(full.out.find("0 1\n1 0\n") != std::string::npos);
    CHECK(full.out.find("count 2\n") != std::string::npos);

    auto json = call({"enumerate", "--domain", "uasm", "--n", "2", "--format", "json"});
    CHECK(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["count"] == doc["configurations"].size());

    CHECK(call({"enumerate", "--domain", "asm", "--n", "4", "--count-only"}).out == "42\n");
    CHECK(call({"enumerate", "--domain", "asm", "--m", "1", "--n", "2", "--count-only"}).code == 0);
  }

  TEST_CASE("enumerate plane partitions") {
    CHECK(call({"enumerate", "--domain", "pp", "--n", "1", "--degree", "5", "--count-only"}).out == "6\n");
    CHECK(call({"enumerate", "--domain", "sympp", "--n", "1", "--degree", "1", "--count-only"}).out == "3\n");
    CHECK(call({"enumerate", "--domain", "spp", "--n", "2", "--degree", "0", "--count-only"}).out == "1\n");
    auto pp = call({"enumerate", "--domain", "pp", "--n", "1", "--degree", "2", "--t", "1/2"});
    CHECK(pp.code == 0);
    // Heights 0, 1, 2 in one cell: weights 1, 1/2, 1/2.
    CHECK(pp.out.find("weight_sum 2\n") != std::string::npos);
  }

  TEST_CASE("tables") {
    auto v = call({"table", "--series", "vuletic-gs", "--order", "2", "--t", "1/3"});
    CHECK(v.code == 0);
    CHECK(v.out == "1, 2/3, 2\n");
    auto s = call({"table", "--series", "symp-pp-vol", "--order", "2", "--m", "1", "--n", "1"});
    CHECK(s.code == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), ',') == 4);
    auto j = call({"table", "--series", "vol-pp", "--order", "3", "--m", "1", "--n", "1", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["coefficients"] == nlohmann::json::array({"1", "1", "1", "1"}));
  }

  TEST_CASE("list and selftest") {
    auto l = call({"list"});
    CHECK(l.code == 0);
    CHECK(l.out.find("thm1") != std::string::npos);
    CHECK(static_cast<std::size_t>(std::count(l.out.begin(), l.out.end(), '\n')) == list_identities().size());
    auto lj = call({"list", "--format", "json"});
    CHECK(nlohmann::json::parse(lj.out)["identities"].size() == list_identities().size());

    auto st = call({"selftest", "--criterion", "1"});
    CHECK(st.code == 0);
    CHECK(st.out.find("PASS   1") != std::string::npos);
  }
}
