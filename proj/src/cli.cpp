#include "vertexid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "vertexid/acceptance.hpp"
#include "vertexid/latticepf.hpp"
#include "vertexid/planepart.hpp"
#include "vertexid/rational.hpp"
#include "vertexid/verify.hpp"

namespace vertexid::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSeedVariable = "VERTEX_IDENTITIES_SEED";

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidInput("seed must be a nonnegative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw InvalidInput("seed out of range: '" + text + "'");
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedVariable);
  if (env == nullptr || *env == '\0') return 1;
  return parse_seed(env);
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + to_string(values[i]);
  return s;
}

Json rational_list(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(to_string(v));
  return j;
}

// Sends output either to the given stream or to --out.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidInput("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::vector<std::string> ids;
  int n = 0, m = 0, degree = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* degree_opt = nullptr;
  std::string seed;
  int samples = 3;
  std::string t;
  std::string format = "text";
  std::string out;
  bool timing = false;
  int jobs = 1;
};

std::vector<std::string> expand_ids(const std::vector<std::string>& requested) {
  std::vector<std::string> ids;
  for (const auto& id : requested) {
    if (id == "all") {
      for (const auto& info : list_identities()) ids.push_back(info.id);
    } else {
      identity_info(id);
      ids.push_back(id);
    }
  }
  return ids;
}

std::vector<Report> run_reports(const std::vector<std::string>& ids, const VerifyParams& params, int jobs) {
  std::vector<Report> reports(ids.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = verify_identity(ids[i], params);
    return reports;
  }
  for (std::size_t begin = 0; begin < ids.size(); begin += static_cast<std::size_t>(jobs)) {
    const std::size_t end = std::min(ids.size(), begin + static_cast<std::size_t>(jobs));
    std::vector<std::future<Report>> batch;
    for (std::size_t i = begin; i < end; ++i)
      batch.push_back(std::async(std::launch::async, [&, i] { return verify_identity(ids[i], params); }));
    for (std::size_t i = begin; i < end; ++i) reports[i] = batch[i - begin].get();
  }
  return reports;
}

std::string text_line(const Report& r, bool timing) {
  std::ostringstream line;
  line << (r.passed() ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP") << "  " << r.id << "  n=" << r.n
       << " m=" << r.m << " degree=" << r.degree << " samples=" << r.samples
       << " t=" << (r.t ? to_string(*r.t) : "sampled") << " seed=" << r.seed << "  lhs=" << r.lhs_digest
       << " rhs=" << r.rhs_digest;
  if (timing) line << "  " << static_cast<long long>(r.elapsed_ms) << " ms";
  if (r.first_mismatch) line << "  first mismatch: " << *r.first_mismatch;
  return line.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  VerifyParams params;
  if (o.n_opt->count()) params.n = o.n;
  if (o.m_opt->count()) params.m = o.m;
  if (o.degree_opt->count()) params.degree = o.degree;
  params.seed = o.seed.empty() ? default_seed() : parse_seed(o.seed);
  params.samples = o.samples;
  if (!o.t.empty()) params.t = parse_rational(o.t);
  if (o.jobs < 1) throw InvalidInput("--jobs must be positive");

  const auto ids = expand_ids(o.ids);
  const auto reports = run_reports(ids, params, o.jobs);

  Sink sink(out, o.out);
  std::ostream& os = sink.get();
  int passed = 0;
  for (const auto& r : reports) passed += r.passed() ? 1 : 0;

  if (o.format == "json") {
    Json config;
    config["command"] = "verify";
    config["ids"] = ids;
    config["n"] = params.n ? Json(*params.n) : Json(nullptr);
    config["m"] = params.m ? Json(*params.m) : Json(nullptr);
    config["degree"] = params.degree ? Json(*params.degree) : Json(nullptr);
    config["seed"] = params.seed;
    config["samples"] = params.samples;
    config["t"] = params.t ? Json(to_string(*params.t)) : Json(nullptr);
    Json doc;
    doc["schemaVersion"] = 1;
    doc["config"] = config;
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(Json::parse(r.to_json(o.timing)));
    doc["passed"] = passed;
    doc["failed"] = static_cast<int>(reports.size()) - passed;
    os << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << Report::csv_header(o.timing) << '\n';
    for (const auto& r : reports) os << r.to_csv_row(o.timing) << '\n';
  } else {
    for (const auto& r : reports) os << text_line(r, o.timing) << '\n';
    os << passed << '/' << reports.size() << " passed\n";
  }

  for (const auto& r : reports) {
    if (r.passed()) continue;
    err << r.id << ": " << to_string(r.status);
    if (r.first_mismatch) err << ": " << *r.first_mismatch;
    err << '\n';
  }
  return passed == static_cast<int>(reports.size()) ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  std::string domain;
  int n = 0, m = 0, degree = 6;
  CLI::Option* m_opt = nullptr;
  bool count_only = false;
  std::string t, x, y;
  std::string format = "text";
  std::string out;
};

std::vector<Rational> default_x(int count) {
  std::vector<Rational> v;
  for (int i = 0; i < count; ++i) v.push_back(make_rational(1, 2 * i + 2));
  return v;
}

std::vector<Rational> default_y(int count) {
  std::vector<Rational> v;
  for (int j = 0; j < count; ++j) v.push_back(make_rational(1, 2 * j + 3));
  return v;
}

std::string matrix_text(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += '\n';
  }
  return s;
}

int enumerate_lattice_domain(const EnumerateOptions& o, std::ostream& os) {
  if (o.n < 1) throw InvalidInput("--n must be positive");
  const int m = o.m_opt->count() ? o.m : o.n;
  if (m < 0 || m > o.n) throw InvalidInput("--m must lie between 0 and --n");
  DomainKind kind;
  if (o.domain == "asm") {
    kind = m == o.n ? DomainKind::Square : DomainKind::PartialSquare;
  } else if (o.domain == "uasm") {
    kind = m == o.n ? DomainKind::UTurn : DomainKind::PartialUTurn;
  } else {
    if (o.m_opt->count()) throw InvalidInput("--m does not apply to osasm");
    kind = o.n % 2 == 0 ? DomainKind::OffDiagonal : DomainKind::OffDiagonalOdd;
  }
  const bool uses_y = o.domain != "osasm";
  const int x_count = o.domain == "osasm" ? o.n : m;
  auto x = o.x.empty() ? default_x(x_count) : parse_list(o.x);
  auto y = !uses_y ? std::vector<Rational>{} : o.y.empty() ? default_y(o.n) : parse_list(o.y);
  const Rational t = o.t.empty() ? make_rational(1, 3) : parse_rational(o.t);
  if (static_cast<int>(x.size()) != x_count) throw InvalidInput("--x needs " + std::to_string(x_count) + " values");
  if (uses_y && static_cast<int>(y.size()) != o.n) throw InvalidInput("--y needs " + std::to_string(o.n) + " values");

  std::vector<std::pair<std::vector<std::vector<int>>, Rational>> configs;
  auto visit = [&](const LatticeConfig& c) {
    if (!o.count_only) configs.emplace_back(asm_matrix(c), c.weight);
  };
  const LatticeSum sum = enumerate_lattice(kind, x, y, t, visit);

  if (o.count_only) {
    os << sum.count << '\n';
    return kOk;
  }
  if (o.format == "json") {
    Json doc;
    doc["schemaVersion"] = 1;
    doc["domain"] = to_string(kind);
    doc["x"] = rational_list(x);
    if (uses_y) doc["y"] = rational_list(y);
    doc["t"] = to_string(t);
    doc["count"] = sum.count;
    doc["weightSum"] = to_string(sum.weight_sum);
    doc["configurations"] = Json::array();
    for (const auto& [rows, w] : configs) doc["configurations"].push_back(Json{{"matrix", rows}, {"weight", to_string(w)}});
    os << doc.dump(2) << '\n';
    return kOk;
  }
  os << "domain " << to_string(kind) << '\n' << "x " << join(x) << '\n';
  if (uses_y) os << "y " << join(y) << '\n';
  os << "t " << to_string(t) << '\n';
  for (const auto& [rows, w] : configs) os << '\n' << matrix_text(rows) << "weight " << to_string(w) << '\n';
  os << '\n' << "count " << sum.count << '\n' << "weight_sum " << to_string(sum.weight_sum) << '\n';
  return kOk;
}

int enumerate_partitions_domain(const EnumerateOptions& o, std::ostream& os) {
  if (o.n < 0 || o.degree < 0) throw InvalidInput("sizes must be nonnegative");
  if (!o.x.empty() || !o.y.empty()) throw InvalidInput("--x and --y apply to lattice domains only");
  const int m = o.m_opt->count() ? o.m : o.n;
  const std::optional<Rational> t = o.t.empty() ? std::nullopt : std::optional<Rational>(parse_rational(o.t));

  std::vector<std::string> objects;
  std::vector<Json> json_objects;
  Rational weight_sum = 0;
  std::size_t count = 0;
  auto add_pp = [&](const PlanePartition& pi) {
    ++count;
    if (t) weight_sum += path_weight(path_stats(pi).by_depth, *t);
    if (o.count_only) return;
    objects.push_back(pi.to_text());
    json_objects.push_back(Json::parse(pi.to_json()));
  };

  if (o.domain == "pp") {
    for (const auto& pi : enumerate_pp(m, o.n, o.degree)) add_pp(pi);
  } else if (o.domain == "spp") {
    if (o.m_opt->count()) throw InvalidInput("--m does not apply to spp");
    for (const auto& pi : enumerate_symmetric_pp(o.n, o.degree, CentralCondition::None)) add_pp(pi);
  } else {
    if (t) throw InvalidInput("--t does not apply to sympp");
    if (m > o.n) throw InvalidInput("sympp needs m <= n");
    for (const auto& chain : enumerate_symplectic_pp(m, o.n, o.degree)) {
      ++count;
      if (o.count_only) continue;
      std::string line;
      Json j = Json::array();
      for (const auto& p : chain.chain()) {
        line += (line.empty() ? "" : " ") + p.to_string();
        j.push_back(p.parts());
      }
      objects.push_back(line + '\n');
      json_objects.push_back(j);
    }
  }

  if (o.count_only) {
    os << count << '\n';
    return kOk;
  }
  if (o.format == "json") {
    Json doc;
    doc["schemaVersion"] = 1;
    doc["domain"] = o.domain;
    doc["m"] = m;
    doc["n"] = o.n;
    doc["degree"] = o.degree;
    doc["count"] = count;
    if (t) {
      doc["t"] = to_string(*t);
      doc["weightSum"] = to_string(weight_sum);
    }
    doc["objects"] = json_objects;
    os << doc.dump(2) << '\n';
    return kOk;
  }
  for (const auto& obj : objects) os << obj << '\n';
  os << "count " << count << '\n';
  if (t) os << "t " << to_string(*t) << '\n' << "weight_sum " << to_string(weight_sum) << '\n';
  return kOk;
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  Sink sink(out, o.out);
  if (o.domain == "asm" || o.domain == "uasm" || o.domain == "osasm") return enumerate_lattice_domain(o, sink.get());
  return enumerate_partitions_domain(o, sink.get());
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
  std::string series;
  int order = 6;
  int m = 2, n = 2;
  std::string t;
  std::string format = "text";
  std::string out;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  if (o.order < 0) throw InvalidInput("--order must be nonnegative");
  if (o.order > 12) throw InvalidInput("--order exceeds the limit 12");
  GsParams p;
  p.m = o.m;
  p.n = o.n;
  p.cutoff = o.order;
  const bool half = o.series == "symp-pp-vol";
  if (half) {
    p.cutoff = 2 * o.order;
    if (o.m > o.n) throw InvalidInput("symp-pp-vol needs m <= n");
  }
  if (o.series == "vuletic-gs") {
    if (o.t.empty()) throw InvalidInput("vuletic-gs needs --t");
    p.t = parse_rational(o.t);
  } else if (!o.t.empty()) {
    throw InvalidInput("--t applies to vuletic-gs only");
  }
  const TruncSeries s = gs_lhs(o.series, p);
  std::vector<Rational> coeffs;
  for (int k = 0; k <= p.cutoff; ++k) {
    Monomial q;
    q.set(0, k);
    coeffs.push_back(s.coefficient(q));
  }

  Sink sink(out, o.out);
  std::ostream& os = sink.get();
  if (o.format == "json") {
    Json doc;
    doc["schemaVersion"] = 1;
    doc["series"] = o.series;
    doc["variable"] = half ? "q^(1/2)" : "q";
    doc["order"] = o.order;
    if (o.series == "vol-pp" || half) {
      doc["m"] = o.m;
      doc["n"] = o.n;
    }
    if (!o.t.empty()) doc["t"] = to_string(p.t);
    doc["coefficients"] = rational_list(coeffs);
    os << doc.dump(2) << '\n';
  } else {
    os << join(coeffs) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// selftest and list

int cmd_selftest(const std::string& seed_text, int criterion, std::ostream& out) {
  const std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text);
  std::vector<CriterionResult> results;
  if (criterion != 0) {
    results.push_back(run_criterion(criterion, seed));
    out << results.back().to_line() << '\n';
  } else {
    results = run_acceptance(seed, [&](const CriterionResult& r) { out << r.to_line() << '\n' << std::flush; });
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  out << passed << '/' << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kOk : kFailure;
}

int cmd_list(const std::string& format, std::ostream& out) {
  const auto& infos = list_identities();
  if (format == "json") {
    Json doc;
    doc["schemaVersion"] = 1;
    doc["identities"] = Json::array();
    for (const auto& i : infos) {
      doc["identities"].push_back(Json{{"id", i.id},
                                       {"equation", i.equation},
                                       {"mode", to_string(i.mode)},
                                       {"provenance", to_string(i.provenance)},
                                       {"n", i.default_n},
                                       {"m", i.default_m},
                                       {"degree", i.default_degree},
                                       {"summary", i.summary}});
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  std::size_t id_width = 0, eq_width = 0, mode_width = 0;
  for (const auto& i : infos) {
    id_width = std::max(id_width, i.id.size());
    eq_width = std::max(eq_width, i.equation.size());
    mode_width = std::max(mode_width, to_string(i.mode).size());
  }
  auto pad = [](const std::string& s, std::size_t width) { return s + std::string(width + 2 - s.size(), ' '); };
  for (const auto& i : infos) {
    out << pad(i.id, id_width) << pad(i.equation, eq_width) << pad(to_string(i.mode), mode_width)
        << pad(to_string(i.provenance), 10) << "n=" << i.default_n << " m=" << i.default_m
        << " degree=" << i.default_degree << "  " << i.summary << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of six-vertex and symmetric function identities", "vertex-identities"};
  app.require_subcommand(1, 1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "verify registered identities");
  verify->add_option("--id", vo.ids, "identity ids, or 'all'")->required()->delimiter(',');
  vo.n_opt = verify->add_option("--n", vo.n, "first size (default: registry value)");
  vo.m_opt = verify->add_option("--m", vo.m, "second size (default: registry value)");
  vo.degree_opt = verify->add_option("--degree", vo.degree, "truncation degree (default: registry value)");
  verify->add_option("--seed", vo.seed, std::string("seed (default: $") + kSeedVariable + " or 1)");
  verify->add_option("--samples", vo.samples, "number of random samples")->capture_default_str();
  verify->add_option("--t", vo.t, "fixed rational t instead of a sampled one");
  verify->add_option("--format", vo.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--out", vo.out, "write the reports to this file");
  verify->add_flag("--timing", vo.timing, "include wall times in the reports");
  verify->add_option("--jobs", vo.jobs, "identities verified concurrently")->capture_default_str();

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate lattice configurations or plane partitions");
  enumerate->add_option("--domain", eo.domain, "asm, uasm, osasm, pp, spp or sympp")
      ->required()
      ->check(CLI::IsMember({"asm", "uasm", "osasm", "pp", "spp", "sympp"}));
  enumerate->add_option("--n", eo.n, "size (lines, or base columns)")->required();
  eo.m_opt = enumerate->add_option("--m", eo.m, "partial lattices: rows carrying x; pp, sympp: base rows");
  enumerate->add_option("--degree", eo.degree, "pp, spp: maximal volume; sympp: maximal central weight")
      ->capture_default_str();
  enumerate->add_flag("--count-only", eo.count_only, "print the number of objects only");
  enumerate->add_option("--t", eo.t, "rational t (lattices default to 1/3)");
  enumerate->add_option("--x", eo.x, "comma-separated rational x values");
  enumerate->add_option("--y", eo.y, "comma-separated rational y values");
  enumerate->add_option("--format", eo.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  enumerate->add_option("--out", eo.out, "write the output to this file");

  TableOptions to;
  auto* table = app.add_subcommand("table", "coefficient tables of the volume series");
  table->add_option("--series", to.series, "macmahon, vuletic-gs, vol-pp or symp-pp-vol")
      ->required()
      ->check(CLI::IsMember({"macmahon", "vuletic-gs", "vol-pp", "symp-pp-vol"}));
  table->add_option("--order", to.order, "highest power of q")->capture_default_str();
  table->add_option("--m", to.m, "vol-pp, symp-pp-vol: first size")->capture_default_str();
  table->add_option("--n", to.n, "vol-pp, symp-pp-vol: second size")->capture_default_str();
  table->add_option("--t", to.t, "vuletic-gs: rational t");
  table->add_option("--format", to.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  table->add_option("--out", to.out, "write the table to this file");

  std::string self_seed;
  int criterion = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", self_seed, std::string("seed (default: $") + kSeedVariable + " or 1)");
  selftest->add_option("--criterion", criterion, "run a single criterion 1..10")->check(CLI::Range(1, 10));

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "print the identity registry");
  list->add_option("--format", list_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(vo, out, err);
    if (*enumerate) return cmd_enumerate(eo, out);
    if (*table) return cmd_table(to, out);
    if (*selftest) return cmd_selftest(self_seed, criterion, out);
    return cmd_list(list_format, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateSample& e) {
    err << "error: degenerate parameters: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace vertexid::cli
