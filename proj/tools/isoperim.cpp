#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoperim/report.hpp"

namespace {

namespace rp = isoperim::report;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  int d = 3;
  double u = 0.5;
  double tol = 1e-12;
  std::vector<int> degrees;
  std::vector<double> fractions;
  std::string id = "vertex-expansion";
  std::string compare;
  std::string format = "csv";
  std::string out;
  std::string suite = "all";
  int n = 12;
  std::uint64_t samples = 100;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::runtime_error("cannot open output file " + path);
    stream = file.get();
  }
  std::ostream& operator*() const { return *stream; }
};

void emit_rows(const Options& o, const std::vector<rp::ReportRow>& rows) {
  Output out(o.out);
  if (o.format == "json")
    rp::write_json(*out, rows);
  else
    rp::write_csv(*out, rows);
}

int compare_rows(const Options& o, std::vector<rp::ReportRow>& rows) {
  if (o.compare.empty()) return kExitOk;
  const auto refs = rp::read_reference_table(o.compare);
  const auto bad = rp::attach_reference(rows, refs);
  for (const auto& r : bad)
    std::cerr << "deviation: d=" << r.d << " u=" << rp::format_number(r.u) << " bound=" << rp::format_number(r.bound)
              << " reference=" << rp::format_number(*r.reference) << '\n';
  return bad.empty() ? kExitOk : kExitFailed;
}

void check_bound_args(const Options& o) {
  if (o.d < 3) throw isoperim::DomainError("--d must be at least 3");
  if (!(o.u > 0 && o.u <= 0.5)) throw isoperim::DomainError("--u must lie in (0, 1/2]");
  if (!(o.tol > 0)) throw isoperim::DomainError("--tol must be positive");
}

int run_vertex(const Options& o) {
  check_bound_args(o);
  auto rows = rp::vertex_report(o.d, o.u, o.tol);
  const int rc = compare_rows(o, rows);
  emit_rows(o, rows);
  return rc;
}

int run_edge(const Options& o) {
  check_bound_args(o);
  auto rows = rp::edge_report(o.d, o.u, o.tol);
  const int rc = compare_rows(o, rows);
  emit_rows(o, rows);
  return rc;
}

int run_table(const Options& o) {
  const auto id = rp::parse_table_id(o.id);
  if (!id) throw isoperim::DomainError("unknown table id " + o.id);
  rp::TableSpec spec = rp::TableSpec::standard(*id);
  if (!o.degrees.empty()) spec.degrees = o.degrees;
  if (!o.fractions.empty()) spec.fractions = o.fractions;
  spec.tolerance = o.tol;
  spec.validate();
  auto rows = rp::compute_table(spec, o.workers ? o.workers : isoperim::worker_count());
  const int rc = compare_rows(o, rows);
  emit_rows(o, rows);
  return rc;
}

int run_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = rp::suite_names();
  else
    suites = {o.suite};
  for (const auto& s : suites)
    if (std::find(rp::suite_names().begin(), rp::suite_names().end(), s) == rp::suite_names().end())
      throw isoperim::DomainError("unknown suite " + s);

  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  Output out(o.out);
  for (const auto& s : suites) {
    const auto rep = rp::run_suite(s);
    ok = ok && rep.passed();
    if (o.format == "json") {
      all.push_back(rep.to_json());
    } else {
      for (const auto& c : rep.checks)
        *out << (c.passed ? "PASS" : "FAIL") << ' ' << rep.suite << ": " << c.name
             << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
  }
  if (o.format == "json") *out << all.dump(2) << '\n';
  return ok ? kExitOk : kExitFailed;
}

int run_simulate(const Options& o) {
  if (o.d < 1) throw isoperim::DomainError("--d must be positive");
  if (!(o.u > 0 && o.u <= 0.5)) throw isoperim::DomainError("--u must lie in (0, 1/2]");
  const auto rep = rp::simulate(o.n, o.d, o.u, o.samples, o.seed, o.workers ? o.workers : isoperim::worker_count());
  Output out(o.out);
  if (o.format == "json")
    *out << rp::simulation_json(rep).dump(2) << '\n';
  else
    rp::write_simulation_csv(*out, rep);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isoperimetric bounds for random regular graphs"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* vertex = app.add_subcommand("vertex", "vertex expansion lower bound");
  auto* edge = app.add_subcommand("edge", "edge expansion lower bound");
  for (auto* sub : {vertex, edge}) {
    sub->add_option("--d", o.d, "degree")->required();
    sub->add_option("--u", o.u, "subset fraction, at most 1/2")->required();
    sub->add_option("--tol", o.tol, "root tolerance");
    sub->add_option("--compare", o.compare, "reference CSV with columns d,u,value");
    add_format(sub);
  }

  auto* table = app.add_subcommand("table", "regenerate a table of bounds");
  table->add_option("--id", o.id, "vertex-expansion, vertex-half or edge")
      ->check(CLI::IsMember({"vertex-expansion", "vertex-half", "edge"}));
  table->add_option("--d", o.degrees, "degrees (default: the standard grid)");
  table->add_option("--u", o.fractions, "fractions (default: the standard grid)");
  table->add_option("--tol", o.tol, "root tolerance");
  table->add_option("--compare", o.compare, "reference CSV with columns d,u,value");
  table->add_option("--workers", o.workers, "worker threads (default ISOPERIM_WORKERS or hardware)");
  add_format(table);

  auto* verify = app.add_subcommand("verify", "run internal consistency checks");
  verify->add_option("suite", o.suite, "identities, scans, expectation, coefficients, asymptotics or all");
  add_format(verify);

  auto* simulate = app.add_subcommand("simulate", "sample random regular graphs and compute exact isoperimetric numbers");
  simulate->add_option("--n", o.n, "vertices (at most 24)");
  simulate->add_option("--d", o.d, "degree");
  simulate->add_option("--u", o.u, "largest subset fraction");
  simulate->add_option("--samples", o.samples, "graphs to sample");
  simulate->add_option("--seed", o.seed, "master seed");
  simulate->add_option("--workers", o.workers, "worker threads (default ISOPERIM_WORKERS or hardware)");
  add_format(simulate);

  bool table_d_given = false;
  try {
    app.parse(argc, argv);
    table_d_given = table->count("--d") > 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table && table_d_given && o.degrees.empty()) throw isoperim::DomainError("--d list is empty");
    if (*vertex) return run_vertex(o);
    if (*edge) return run_edge(o);
    if (*table) return run_table(o);
    if (*verify) return run_verify(o);
    if (*simulate) return run_simulate(o);
  } catch (const isoperim::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const isoperim::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
