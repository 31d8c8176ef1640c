#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>

#include "vertexid/latticepf.hpp"
#include "vertexid/macdiff.hpp"
#include "vertexid/sampling.hpp"
#include "vertexid/verify.hpp"

using namespace vertexid;

namespace {

Report run(const std::string& id, std::optional<int> n, std::optional<int> degree, std::uint64_t seed = 1,
           std::optional<Rational> t = std::nullopt) {
  VerifyParams p;
  p.n = n;
  p.degree = degree;
  p.seed = seed;
  p.t = std::move(t);
  return verify_identity(id, p);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("registry") {
    const auto& ids = list_identities();
    CHECK(ids.size() >= 24);
    CHECK(identity_info("thm1").equation == "s-cauchy-refine");
    CHECK(identity_info("conj2prime").equation == "osasm-conj-pdwpf");
    CHECK(identity_info("conj1").provenance == Provenance::Conjecture);
    CHECK(identity_info("thm4").provenance == Provenance::Theorem);
    CHECK(identity_info("macmahon").mode == Mode::QSeries);
    std::set<std::string> distinct;
    for (const auto& i : ids) distinct.insert(i.id);
    CHECK(distinct.size() == ids.size());
    CHECK_THROWS_AS(identity_info("thm9"), InvalidInput);
  }

  TEST_CASE("every identity passes at its defaults") {
    for (const auto& info : list_identities()) {
      INFO(info.id);
      const Report r = run(info.id, std::nullopt, std::nullopt);
      CHECK(r.status == Status::Pass);
      CHECK_FALSE(r.first_mismatch.has_value());
      CHECK(r.lhs_digest == r.rhs_digest);
    }
  }

  TEST_CASE("documented scenarios") {
    CHECK(run("thm1", 2, 6).passed());
    CHECK(run("cauchy-det", 3, std::nullopt).passed());
    CHECK(run("thm2", 2, 6, 7).passed());
  }

  TEST_CASE("refined identities at t = 0") {
    for (const char* id : {"thm1", "thm2", "thm3", "thm4", "conj1", "conj2"}) {
      INFO(id);
      CHECK(run(id, std::nullopt, 4, 1, Rational(0)).passed());
    }
  }

  TEST_CASE("three representations of the domain wall partition function agree") {
    Sampler s(99);
    for (int n = 1; n <= 3; ++n) {
      const Rational t = s.next();
      auto x = s.distinct(n);
      auto y = s.distinct(n);
      Evaluator kernel = [&](std::span<const Rational> p) -> Rational {
        Rational r = 1;
        for (const auto& a : p)
          for (const auto& b : y) r *= (1 - t * a * b) / (1 - a * b);
        return r;
      };
      const Rational closed = z_asm_closed(x, y, t);
      CHECK(apply_Dn(kernel, -t, 0, t, x) == closed);
      CHECK(enumerate_lattice(DomainKind::Square, x, y, t).weight_sum == closed);
    }
    CHECK(run("thm2", 3, 6).passed());
  }

  TEST_CASE("reports are reproducible") {
    const Report a = run("conj2", 4, 6, 5), b = run("conj2", 4, 6, 5), c = run("conj2", 4, 6, 6);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv_row() == b.to_csv_row());
    CHECK(a.lhs_digest == b.lhs_digest);
    CHECK(a.sample_seeds == b.sample_seeds);
    CHECK(a.sample_seeds != c.sample_seeds);
    CHECK(a.lhs_digest != c.lhs_digest);
  }

  TEST_CASE("report serialization") {
    Report r = run("cauchy-det", 2, std::nullopt, 3);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["id"] == "cauchy-det");
    CHECK(j["status"] == "pass");
    CHECK(j["seed"] == 3);
    CHECK(j["params"]["n"] == 2);
    CHECK_FALSE(j.contains("elapsedMs"));
    CHECK_FALSE(j.contains("firstMismatch"));
    CHECK(nlohmann::json::parse(r.to_json(true)).contains("elapsedMs"));

    r.status = Status::Fail;
    r.first_mismatch = "coefficient of X1, \"quoted\"";
    const auto f = nlohmann::json::parse(r.to_json());
    CHECK(f["status"] == "fail");
    CHECK(f["firstMismatch"] == "coefficient of X1, \"quoted\"");
    CHECK(r.to_csv_row().find("\"coefficient of X1, \"\"quoted\"\"\"") != std::string::npos);
    CHECK_FALSE(r.passed());

    auto columns = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
    Report plain = run("cauchy-det", 2, std::nullopt, 3);
    CHECK(columns(Report::csv_header()) == columns(plain.to_csv_row()));
    CHECK(columns(Report::csv_header(true)) == columns(plain.to_csv_row(true)));
  }

  TEST_CASE("fixed t is echoed") {
    const Report r = run("hl-cauchy", 2, 4, 1, make_rational(1, 3));
    CHECK(r.passed());
    REQUIRE(r.t.has_value());
    CHECK(*r.t == make_rational(1, 3));
    CHECK(nlohmann::json::parse(r.to_json())["params"]["t"] == "1/3");
  }

  TEST_CASE("guards") {
    CHECK_THROWS_AS(run("thm2", 9, 6), InvalidInput);
    CHECK_THROWS_AS(run("thm2", 2, 11), InvalidInput);
    CHECK_THROWS_AS(run("stembridge-pf", 3, std::nullopt), InvalidInput);
    VerifyParams p;
    p.samples = 0;
    CHECK_THROWS_AS(verify_identity("thm1", p), InvalidInput);
  }

  TEST_CASE("Pfaffian Cauchy-Binet analogue") {
    CHECK(verify_pfaffian_cauchy_binet(2, 2, 1).passed());
    CHECK(verify_pfaffian_cauchy_binet(2, 4, 7).passed());
    CHECK(verify_pfaffian_cauchy_binet(4, 6, 7).passed());
    CHECK_THROWS_AS(verify_pfaffian_cauchy_binet(3, 4, 1), InvalidInput);
    CHECK_THROWS_AS(verify_pfaffian_cauchy_binet(4, 2, 1), InvalidInput);
    CHECK_THROWS_AS(verify_pfaffian_cauchy_binet(2, 9, 1), InvalidInput);
  }

  TEST_CASE("digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  }
}
