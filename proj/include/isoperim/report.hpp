#pragma once

// Table generation, reference comparison, verification suites and simulation
// reports behind the isoperim command-line tool.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoperim/bound_core.hpp"
#include "isoperim/exact_combinatorics.hpp"
#include "isoperim/pairing_sim.hpp"
#include "isoperim/parallel.hpp"

namespace isoperim::report {

enum class TableId { VertexExpansion, VertexHalf, Edge };

inline std::optional<TableId> parse_table_id(const std::string& s) {
  if (s == "vertex-expansion") return TableId::VertexExpansion;
  if (s == "vertex-half") return TableId::VertexHalf;
  if (s == "edge") return TableId::Edge;
  return std::nullopt;
}

inline std::string to_string(TableId id) {
  switch (id) {
    case TableId::VertexExpansion: return "vertex-expansion";
    case TableId::VertexHalf: return "vertex-half";
    case TableId::Edge: return "edge";
  }
  return "?";
}

inline const std::vector<int>& standard_degrees() {
  static const std::vector<int> ds{3, 4, 5, 10, 25, 50, 100};
  return ds;
}

inline const std::vector<double>& standard_fractions() {
  static const std::vector<double> us{0.01, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50};
  return us;
}

inline const std::vector<int>& half_table_degrees() {
  static const std::vector<int> ds = [] {
    std::vector<int> v;
    for (int d = 3; d <= 35; ++d) v.push_back(d);
    for (int d = 40; d <= 100; d += 10) v.push_back(d);
    return v;
  }();
  return ds;
}

struct TableSpec {
  TableId id = TableId::VertexExpansion;
  std::vector<int> degrees;
  std::vector<double> fractions;
  double tolerance = 1e-12;

  static TableSpec standard(TableId id) {
    TableSpec s;
    s.id = id;
    if (id == TableId::VertexHalf) {
      s.degrees = half_table_degrees();
      s.fractions = {0.5};
    } else {
      s.degrees = standard_degrees();
      s.fractions = standard_fractions();
    }
    return s;
  }

  void validate() const {
    if (degrees.empty()) throw DomainError("table: degree list is empty");
    if (fractions.empty()) throw DomainError("table: fraction list is empty");
    for (const int d : degrees)
      if (d < 3) throw DomainError("table: every degree must be at least 3");
    for (const double u : fractions)
      if (!(u > 0 && u <= 0.5)) throw DomainError("table: every fraction must lie in (0, 1/2]");
    if (id == TableId::VertexHalf && (fractions.size() != 1 || fractions.front() != 0.5))
      throw DomainError("table: the vertex-half table is defined at u = 1/2 only");
    if (!(tolerance > 0)) throw DomainError("table: tolerance must be positive");
  }
};

struct ReportRow {
  int d = 0;
  double u = 0;
  double bound = 0;
  std::string method;
  double residual = 0;
  int iterations = 0;
  std::optional<double> reference;
  std::optional<double> delta;
  bool converged = true;
};

inline ReportRow make_row(int d, double u, const BoundResult& r, std::string method, double tol) {
  ReportRow row;
  row.d = d;
  row.u = u;
  row.bound = r.value;
  row.method = std::move(method);
  row.residual = r.root.residual;
  row.iterations = r.root.iterations;
  row.converged = r.root.converged && r.root.residual_within(tol);
  return row;
}

inline ReportRow vertex_row(int d, double u, double tol) {
  return make_row(d, u, vertex_bound_detailed(BoundQuery{d, u, tol}), "profile-zero", tol);
}

inline ReportRow vertex_half_row(int d, double tol) {
  return make_row(d, 0.5, vertex_bound_half_detailed(d, tol), "half-closed-form", tol);
}

inline ReportRow edge_row(int d, double u, double tol) {
  return make_row(d, u, edge_bound_detailed(BoundQuery{d, u, tol}), "edge-zero", tol);
}

/// Rows for a single vertex bound; at u = 1/2 a second row carries the closed-form
/// value with the profile-zero value as its reference.
inline std::vector<ReportRow> vertex_report(int d, double u, double tol) {
  std::vector<ReportRow> rows{vertex_row(d, u, tol)};
  if (u == 0.5) {
    ReportRow half = vertex_half_row(d, tol);
    half.reference = rows.front().bound;
    half.delta = half.bound - rows.front().bound;
    rows.push_back(half);
  }
  return rows;
}

inline std::vector<ReportRow> edge_report(int d, double u, double tol) { return {edge_row(d, u, tol)}; }

/// One row per (d, u) cell, sorted by (d, u) whatever the evaluation order.
inline std::vector<ReportRow> compute_table(const TableSpec& spec, unsigned workers = worker_count()) {
  spec.validate();
  std::vector<std::pair<int, double>> cells;
  for (const int d : spec.degrees)
    for (const double u : spec.fractions) cells.emplace_back(d, u);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return parallel_map<ReportRow>(
      cells.size(),
      [&](std::size_t i) {
        const auto [d, u] = cells[i];
        switch (spec.id) {
          case TableId::VertexExpansion: return vertex_row(d, u, spec.tolerance);
          case TableId::VertexHalf: return vertex_half_row(d, spec.tolerance);
          case TableId::Edge: return edge_row(d, u, spec.tolerance);
        }
        throw std::logic_error("unknown table id");
      },
      workers);
}

// ---------------------------------------------------------------------------
// Reference tables

struct ReferenceCell {
  int d = 0;
  double u = 0;
  double value = 0;
};

/// Reads a `d,u,value` CSV with a header line; blank lines and '#' comments are skipped.
inline std::vector<ReferenceCell> read_reference_table(std::istream& in) {
  std::vector<ReferenceCell> cells;
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line.rfind("d,", 0) == 0) continue;
    }
    std::istringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
      throw std::runtime_error("reference table: malformed line " + std::to_string(line_no));
    cells.push_back({std::stoi(a), std::stod(b), std::stod(c)});
  }
  return cells;
}

inline std::vector<ReferenceCell> read_reference_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference table " + path);
  return read_reference_table(in);
}

/// Relative-to-max(1, |ref|) threshold used when comparing against reference tables.
inline constexpr double kReferenceTolerance = 1e-4;

inline bool deviates(double value, double reference, double rel_tol = kReferenceTolerance) {
  return std::abs(value - reference) > rel_tol * std::max(1.0, std::abs(reference));
}

/// Fills reference and delta for rows found in the table; returns the rows that deviate.
inline std::vector<ReportRow> attach_reference(std::vector<ReportRow>& rows, const std::vector<ReferenceCell>& refs,
                                               double rel_tol = kReferenceTolerance) {
  std::vector<ReportRow> bad;
  for (auto& row : rows) {
    const auto it = std::find_if(refs.begin(), refs.end(),
                                 [&](const ReferenceCell& c) { return c.d == row.d && std::abs(c.u - row.u) < 1e-9; });
    if (it == refs.end()) continue;
    row.reference = it->value;
    row.delta = row.bound - it->value;
    if (deviates(row.bound, it->value, rel_tol)) bad.push_back(row);
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Output

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string method_label(const ReportRow& r) { return r.converged ? r.method : r.method + ":not-converged"; }

inline void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "d,u,bound,method,residual,iterations,reference,delta\n";
  for (const auto& r : rows) {
    out << r.d << ',' << format_number(r.u) << ',' << format_number(r.bound) << ',' << method_label(r) << ','
        << format_number(r.residual) << ',' << r.iterations << ',' << (r.reference ? format_number(*r.reference) : "")
        << ',' << (r.delta ? format_number(*r.delta) : "") << '\n';
  }
}

inline nlohmann::json to_json(const ReportRow& r) {
  nlohmann::json j{{"d", r.d},
                   {"u", r.u},
                   {"bound", r.bound},
                   {"method", r.method},
                   {"residual", r.residual},
                   {"iterations", r.iterations},
                   {"converged", r.converged}};
  j["reference"] = r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr);
  j["delta"] = r.delta ? nlohmann::json(*r.delta) : nlohmann::json(nullptr);
  return j;
}

inline void write_json(std::ostream& out, const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Verification suites

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }

  nlohmann::json to_json() const {
    nlohmann::json j{{"suite", suite}, {"passed", passed()}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return j;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "scans", "expectation", "coefficients", "asymptotics"};
  return names;
}

namespace detail {

inline std::string fmt(double v) { return format_number(v); }

inline VerifyReport verify_identities() {
  VerifyReport rep{"identities", {}};
  double worst_x = 0, worst_s = 0, worst_f = 0;
  for (int d = 3; d <= 12; ++d) {
    for (int k = 1; k <= 10; ++k) {
      const double u = 0.05 * k;
      const BoundQuery q{d, u};
      const double mode = q.mode();
      worst_x = std::max(worst_x, std::abs(balancing_x(q, mode) - u / (1 - u)));
      worst_s = std::max(worst_s, std::abs(profile_boundary(q, mode) - (1 - u) * (1 - std::pow(1 - u, d))));
      worst_f = std::max(worst_f, std::abs(profile_exponent(q, mode) - binary_entropy(u)));
    }
  }
  rep.add("mode: balancing x", worst_x <= 1e-12, "max error " + fmt(worst_x));
  rep.add("mode: profile boundary", worst_s <= 1e-12, "max error " + fmt(worst_s));
  rep.add("mode: profile exponent equals entropy", worst_f <= 1e-12, "max error " + fmt(worst_f));

  double worst_half = 0;
  for (int d = 3; d <= 20; ++d) worst_half = std::max(worst_half, std::abs(vertex_bound(BoundQuery{d, 0.5}) - vertex_bound_half(d)));
  rep.add("u = 1/2: profile zero vs closed form", worst_half <= 1e-9, "max delta " + fmt(worst_half));

  double worst_edge = 0;
  for (const int d : standard_degrees())
    for (const double u : standard_fractions())
      worst_edge = std::max(worst_edge, std::abs(edge_bound(BoundQuery{d, u}) - edge_bound_product_form(d, u)));
  rep.add("edge bound: exponent zero vs product form", worst_edge <= 1e-9, "max delta " + fmt(worst_edge));

  // unimodality of the profile exponent on a 1000-point grid: at most one turn, maximum at the mode
  bool unimodal = true;
  for (const auto& [d, u] : std::vector<std::pair<int, double>>{{3, 0.5}, {4, 0.25}, {10, 0.1}, {25, 0.45}}) {
    const BoundQuery q{d, u};
    const int n = 1000;
    const double h = profile_domain_end(q) / (n + 1);
    int changes = 0, prev_sign = 0, arg_max = 1;
    double prev = profile_exponent(q, h), best = prev;
    for (int i = 2; i <= n; ++i) {
      const double cur = profile_exponent(q, h * i);
      const int sign = cur > prev ? 1 : -1;
      if (prev_sign != 0 && sign != prev_sign) ++changes;
      if (cur > best) {
        best = cur;
        arg_max = i;
      }
      prev_sign = sign;
      prev = cur;
    }
    if (changes > 1 || std::abs(h * arg_max - q.mode()) > 2 * h) unimodal = false;
  }
  rep.add("profile exponent unimodal with mode d u (1 - u)", unimodal);

  bool ranges = true;
  for (const int d : standard_degrees())
    for (const double u : standard_fractions()) {
      const double a = vertex_bound(BoundQuery{d, u}), e = edge_bound(BoundQuery{d, u});
      ranges = ranges && a > 0 && a <= d - 2 && e > 0 && e <= d * (1 - u);
    }
  for (int d = 3; d <= 100; ++d) ranges = ranges && vertex_bound_half(d) < double(d - 2) / double(d - 1);
  rep.add("bound ranges", ranges);
  return rep;
}

inline VerifyReport verify_scans() {
  VerifyReport rep{"scans", {}};
  for (const int d : {3, 4, 5, 10}) {
    const auto v = scan_vertex_negativity(d, 128);
    rep.add("vertex region d=" + std::to_string(d), v.passed,
            "max " + fmt(v.max_value) + " at u=" + fmt(v.first) + " r=" + fmt(v.second));
    for (const double u : {0.1, 0.25, 0.5}) {
      const auto e = scan_edge_negativity(d, u, 128);
      rep.add("edge region d=" + std::to_string(d) + " u=" + fmt(u), e.passed,
              "max " + fmt(e.max_value) + " at r=" + fmt(e.first) + " w=" + fmt(e.second));
    }
  }
  return rep;
}

inline VerifyReport verify_expectation(std::uint64_t mc_samples = 100000, std::uint64_t seed = 20240601) {
  VerifyReport rep{"expectation", {}};
  for (const int n : {2, 4}) {
    const int d = 3;
    std::vector<SignatureHistogram> totals;
    for (int un = 1; un <= n; ++un) totals.emplace_back(n, d, un);
    const std::uint64_t pairings = for_each_pairing(n, d, [&](const Pairing& p) {
      const Multigraph g = project(p);
      for (int un = 1; un <= n; ++un) {
        const auto h = signature_histogram(g, d, un);
        for (int sn = 0; sn <= n; ++sn)
          for (int yn = 0; yn <= n * d; ++yn)
            totals[std::size_t(un - 1)].add(sn, yn, h.count(sn, yn));
      }
    });
    bool vertex_ok = true, edge_ok = true;
    int checked = 0;
    for (int un = 1; un <= n; ++un) {
      const auto& t = totals[std::size_t(un - 1)];
      for (int yn = 0; yn <= n * d; ++yn) {
        if (edge_signature_admissible(n, d, un, yn)) {
          const BigRational mean(BigInt(t.edge_count(yn)), BigInt(pairings));
          edge_ok = edge_ok && mean == expected_edge_count(n, d, un, yn).value();
        } else {
          edge_ok = edge_ok && t.edge_count(yn) == 0;
        }
        for (int sn = 0; sn <= n - un; ++sn) {
          if (!vertex_signature_admissible(n, d, un, sn, yn)) {
            vertex_ok = vertex_ok && t.count(sn, yn) == 0;
            continue;
          }
          const BigRational mean(BigInt(t.count(sn, yn)), BigInt(pairings));
          vertex_ok = vertex_ok && mean == expected_vertex_count(n, d, un, sn, yn).value();
          ++checked;
        }
      }
    }
    rep.add("enumeration n=" + std::to_string(n) + " d=3: vertex signatures", vertex_ok,
            std::to_string(checked) + " signatures over " + std::to_string(pairings) + " pairings");
    rep.add("enumeration n=" + std::to_string(n) + " d=3: edge signatures", edge_ok);
  }

  const std::vector<Signature> sigs{{6, 3, 4}, {6, 4, 6}, {5, 4, 7}, {6, std::nullopt, 6}};
  const auto est = monte_carlo_expectations(12, 3, sigs, mc_samples, seed);
  for (std::size_t k = 0; k < sigs.size(); ++k) {
    const auto& s = sigs[k];
    const double exact = s.sn ? expected_vertex_count(12, 3, s.un, *s.sn, s.yn).to_double()
                              : expected_edge_count(12, 3, s.un, s.yn).to_double();
    const bool ok = std::abs(est[k].mean - exact) <= 4 * est[k].std_error;
    rep.add("monte carlo n=12 d=3 un=" + std::to_string(s.un) + (s.sn ? " sn=" + std::to_string(*s.sn) : std::string(" edge")) +
                " yn=" + std::to_string(s.yn),
            ok, "mean " + fmt(est[k].mean) + " +- " + fmt(est[k].std_error) + " exact " + fmt(exact));
  }
  return rep;
}

inline VerifyReport verify_coefficients() {
  VerifyReport rep{"coefficients", {}};
  bool sums = true, log_concave = true;
  for (int d = 1; d <= 6; ++d) {
    for (int sn = 0; sn <= 30; ++sn) {
      const auto row = boundary_coefficients(d, sn, std::int64_t(d) * sn);
      BigInt total = 0;
      for (const auto& c : row) total += c;
      sums = sums && total == boost::multiprecision::pow(BigInt((1 << d) - 1), unsigned(sn));
      for (std::size_t y = std::size_t(sn) + 1; y + 1 <= std::size_t(d) * std::size_t(sn); ++y)
        log_concave = log_concave && row[y] * row[y] >= row[y - 1] * row[y + 1];
    }
  }
  rep.add("row sums equal (2^d - 1)^sn", sums);
  rep.add("coefficients log-concave in yn", log_concave);

  bool bound_holds = true;
  for (const double x : {0.05, 0.3, 1.0, 2.5, 10.0})
    for (int sn = 1; sn <= 8; ++sn)
      for (int yn = sn; yn <= 3 * sn; ++yn) bound_holds = bound_holds && coefficient_upper_bound_check({3, sn, yn}, x).holds;
  rep.add("generating-function upper bound", bound_holds);

  const auto r = coefficient_asymptotics_check(3, {1, 10}, {1, 5}, {10, 50, 100, 200});
  const bool increasing = std::is_sorted(r.begin(), r.end()) && std::adjacent_find(r.begin(), r.end()) == r.end();
  const bool below_one = std::all_of(r.begin(), r.end(), [](double v) { return v <= 1.0; });
  rep.add("coefficient ratio increasing in n", increasing);
  rep.add("coefficient ratio at most 1", below_one);
  rep.add("coefficient ratio at n=200 at least 0.9", r.back() >= 0.9, "r(200) = " + fmt(r.back()));
  return rep;
}

inline VerifyReport verify_asymptotics() {
  VerifyReport rep{"asymptotics", {}};
  std::vector<double> scaled;
  bool window = true;
  for (const int d : {25, 50, 100}) {
    const double v = double(d) * (1 - vertex_bound_half(d));
    scaled.push_back(v);
    window = window && v >= 2 && v <= 2 + 10 * std::log(double(d)) / d;
  }
  rep.add("d (1 - A_d) within [2, 2 + 10 ln d / d]", window);
  rep.add("d (1 - A_d) decreasing over d = 25, 50, 100", scaled[0] > scaled[1] && scaled[1] > scaled[2],
          fmt(scaled[0]) + ", " + fmt(scaled[1]) + ", " + fmt(scaled[2]));
  const double gap = std::abs(edge_bound(BoundQuery{100, 0.5}) - asymptotic_edge(100, 0.5));
  rep.add("edge bound at d=100 vs d/2 - sqrt(d ln 2)", gap <= 0.1, "gap " + fmt(gap));
  bool spectral = true;
  for (const int d : {5, 10, 25, 50, 100}) spectral = spectral && vertex_bound_half(d) > spectral_vertex_bound(d, 0.5);
  rep.add("vertex bound exceeds spectral bound", spectral);
  return rep;
}

}  // namespace detail

inline VerifyReport run_suite(const std::string& name) {
  if (name == "identities") return detail::verify_identities();
  if (name == "scans") return detail::verify_scans();
  if (name == "expectation") return detail::verify_expectation();
  if (name == "coefficients") return detail::verify_coefficients();
  if (name == "asymptotics") return detail::verify_asymptotics();
  throw DomainError("unknown verification suite: " + name);
}

// ---------------------------------------------------------------------------
// Simulation

struct SimulationSample {
  std::uint64_t index = 0;
  std::uint64_t rejections = 0;
  bool connected = false;
  Ratio vertex;
  Ratio edge;
  std::optional<double> diameter_bound;
};

struct SimulationReport {
  int n = 0, d = 0;
  double u = 0;
  std::uint64_t seed = 0;
  std::vector<SimulationSample> samples;
  std::uint64_t rejections = 0;
  double simple_rate = 0;
  std::optional<double> vertex_bound_value;
  std::optional<double> edge_bound_value;
};

/// Samples simple d-regular graphs by rejection and computes exact isoperimetric
/// numbers for each. Sample i is driven by derive_seed(seed, i).
inline SimulationReport simulate(int n, int d, double u, std::uint64_t samples, std::uint64_t seed,
                                 unsigned workers = worker_count(), int cap_n = kDefaultExhaustiveCap) {
  if (n > cap_n) throw CapExceeded("simulate: vertices", std::uint64_t(n), std::uint64_t(cap_n));
  if (d < 1 || n < 1 || (std::int64_t(n) * d) % 2) throw DomainError("simulate: need n, d >= 1 with d n even");
  if (!(u > 0 && u <= 0.5)) throw DomainError("simulate: u must lie in (0, 1/2]");
  if (d >= n) throw DomainError("simulate: simple d-regular graphs need d < n");
  SimulationReport rep{n, d, u, seed, {}, 0, 0, std::nullopt, std::nullopt};
  rep.samples = parallel_map<SimulationSample>(
      samples,
      [&](std::size_t i) {
        std::mt19937_64 eng(derive_seed(seed, i));
        auto s = sample_simple_graph(n, d, eng);
        SimulationSample out;
        out.index = i;
        out.rejections = s.rejections;
        out.connected = is_connected(s.graph);
        const auto iso = min_isoperimetric_exhaustive(s.graph, u, cap_n);
        out.vertex = iso.vertex;
        out.edge = iso.edge;
        if (iso.vertex.num > 0) out.diameter_bound = diameter_upper_bound(n, iso.vertex.value());
        return out;
      },
      workers);
  for (const auto& s : rep.samples) rep.rejections += s.rejections;
  rep.simple_rate = samples == 0 ? 0.0 : double(samples) / double(samples + rep.rejections);
  if (d >= 3) {
    rep.vertex_bound_value = vertex_bound(BoundQuery{d, u});
    rep.edge_bound_value = edge_bound(BoundQuery{d, u});
  }
  return rep;
}

inline std::string ratio_string(const Ratio& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

inline void write_simulation_csv(std::ostream& out, const SimulationReport& rep) {
  out << "# n=" << rep.n << " d=" << rep.d << " u=" << format_number(rep.u) << " seed=" << rep.seed
      << " samples=" << rep.samples.size() << " rejections=" << rep.rejections
      << " simple_rate=" << format_number(rep.simple_rate);
  if (rep.vertex_bound_value) out << " vertex_bound=" << format_number(*rep.vertex_bound_value);
  if (rep.edge_bound_value) out << " edge_bound=" << format_number(*rep.edge_bound_value);
  out << '\n';
  out << "sample,rejections,connected,i_v,i_e,i_v_value,i_e_value,diameter_bound\n";
  for (const auto& s : rep.samples) {
    out << s.index << ',' << s.rejections << ',' << (s.connected ? 1 : 0) << ',' << ratio_string(s.vertex) << ','
        << ratio_string(s.edge) << ',' << format_number(s.vertex.value()) << ',' << format_number(s.edge.value()) << ','
        << (s.diameter_bound ? format_number(*s.diameter_bound) : "") << '\n';
  }
}

inline nlohmann::json simulation_json(const SimulationReport& rep) {
  nlohmann::json j;
  j["summary"] = {{"n", rep.n},           {"d", rep.d},
                  {"u", rep.u},           {"seed", rep.seed},
                  {"samples", rep.samples.size()},
                  {"rejections", rep.rejections},
                  {"simple_rate", rep.simple_rate}};
  j["summary"]["vertex_bound"] = rep.vertex_bound_value ? nlohmann::json(*rep.vertex_bound_value) : nlohmann::json(nullptr);
  j["summary"]["edge_bound"] = rep.edge_bound_value ? nlohmann::json(*rep.edge_bound_value) : nlohmann::json(nullptr);
  j["samples"] = nlohmann::json::array();
  for (const auto& s : rep.samples) {
    j["samples"].push_back({{"sample", s.index},
                            {"rejections", s.rejections},
                            {"connected", s.connected},
                            {"i_v", ratio_string(s.vertex)},
                            {"i_e", ratio_string(s.edge)},
                            {"i_v_value", s.vertex.value()},
                            {"i_e_value", s.edge.value()},
                            {"diameter_bound", s.diameter_bound ? nlohmann::json(*s.diameter_bound) : nlohmann::json(nullptr)}});
  }
  return j;
}

}  // namespace isoperim::report
