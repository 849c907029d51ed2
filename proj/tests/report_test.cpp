#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "isoperim/report.hpp"

using namespace isoperim;
using namespace isoperim::report;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(TableSpec, StandardGrids) {
  EXPECT_EQ(TableSpec::standard(TableId::VertexHalf).degrees.size(), 40u);
  const auto t1 = TableSpec::standard(TableId::VertexExpansion);
  EXPECT_EQ(t1.degrees.size() * t1.fractions.size(), 77u);
}

TEST(TableSpec, Validation) {
  TableSpec s = TableSpec::standard(TableId::Edge);
  s.degrees.clear();
  EXPECT_THROW(s.validate(), DomainError);
  s.degrees = {2};
  EXPECT_THROW(s.validate(), DomainError);
  s.degrees = {3};
  s.fractions = {0.7};
  EXPECT_THROW(s.validate(), DomainError);
  EXPECT_EQ(parse_table_id("edge"), TableId::Edge);
  EXPECT_FALSE(parse_table_id("nope"));
}

TEST(Rows, VertexAtHalfCarriesClosedForm) {
  const auto rows = vertex_report(3, 0.5, 1e-12);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].bound, 0.14420, 1e-4);
  EXPECT_EQ(rows[1].method, "half-closed-form");
  ASSERT_TRUE(rows[1].delta);
  EXPECT_LE(std::abs(*rows[1].delta), 1e-9);
  EXPECT_EQ(vertex_report(50, 0.05, 1e-12).size(), 1u);
}

TEST(Rows, ResidualOrNotConverged) {
  for (const auto& row : {vertex_row(10, 0.2, 1e-12), edge_row(4, 0.25, 1e-12), vertex_half_row(25, 1e-12)}) {
    EXPECT_TRUE(row.converged);
    EXPECT_GT(row.iterations, 0);
  }
  // a tolerance looser than the bracket forces very few iterations but still a valid row
  const auto loose = edge_row(4, 0.25, 1e-3);
  EXPECT_NEAR(loose.bound, 0.69435, 2e-3);
}

TEST(Table, SortedRegardlessOfInputOrder) {
  TableSpec s;
  s.id = TableId::Edge;
  s.degrees = {10, 3};
  s.fractions = {0.5, 0.1};
  const auto rows = compute_table(s, 3);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].d, 3);
  EXPECT_EQ(rows[0].u, 0.1);
  EXPECT_EQ(rows[3].d, 10);
  EXPECT_EQ(rows[3].u, 0.5);
}

TEST(Table, WorkerCountDoesNotChangeOutput) {
  auto s = TableSpec::standard(TableId::VertexHalf);
  std::ostringstream a, b;
  write_csv(a, compute_table(s, 1));
  write_csv(b, compute_table(s, 4));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, HeaderAndFormatting) {
  std::vector<ReportRow> rows{{3, 0.5, 0.144208556, "profile-zero", 1e-17, 42, std::nullopt, std::nullopt, true},
                              {4, 0.25, 0.69435, "edge-zero", 0.0, 7, 0.69436, -1e-5, false}};
  std::ostringstream out;
  write_csv(out, rows);
  const auto l = lines_of(out.str());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "d,u,bound,method,residual,iterations,reference,delta");
  EXPECT_EQ(l[1], "3,0.5,0.144208556,profile-zero,1e-17,42,,");
  EXPECT_EQ(l[2], "4,0.25,0.69435,edge-zero:not-converged,0,7,0.69436,-1e-05");
}

TEST(Json, MirrorsFields) {
  std::ostringstream out;
  write_json(out, {vertex_row(3, 0.25, 1e-12)});
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["d"], 3);
  EXPECT_EQ(j[0]["method"], "profile-zero");
  EXPECT_TRUE(j[0]["reference"].is_null());
  EXPECT_TRUE(j[0]["converged"].get<bool>());
}

TEST(Reference, ParsesAndCompares) {
  std::istringstream in("d,u,value\n# comment\n3,0.5,0.14420\n4,0.5,0.30000\n");
  const auto refs = read_reference_table(in);
  ASSERT_EQ(refs.size(), 2u);
  std::vector<ReportRow> rows{vertex_half_row(3, 1e-12), vertex_half_row(4, 1e-12), vertex_half_row(5, 1e-12)};
  const auto bad = attach_reference(rows, refs);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].d, 4);
  EXPECT_TRUE(rows[0].delta);
  EXPECT_FALSE(rows[2].reference);
}

TEST(Reference, RelativeThreshold) {
  EXPECT_FALSE(deviates(52.2193, 52.21931));
  EXPECT_TRUE(deviates(52.2, 52.21931));
  EXPECT_FALSE(deviates(0.14425, 0.14420));
  EXPECT_TRUE(deviates(0.1445, 0.14420));
}

TEST(Reference, MissingFileRaises) { EXPECT_THROW(read_reference_table(std::string("/nonexistent/table.csv")), std::runtime_error); }

TEST(Verify, FastSuitesPass) {
  for (const char* name : {"identities", "coefficients", "asymptotics"}) {
    const auto rep = run_suite(name);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
    EXPECT_FALSE(rep.checks.empty());
  }
  EXPECT_THROW(run_suite("bogus"), DomainError);
}

TEST(Simulate, DeterministicAndConsistent) {
  const auto a = simulate(12, 3, 0.5, 20, 7, 1);
  const auto b = simulate(12, 3, 0.5, 20, 7, 3);
  std::ostringstream ca, cb;
  write_simulation_csv(ca, a);
  write_simulation_csv(cb, b);
  EXPECT_EQ(ca.str(), cb.str());
  for (const auto& s : a.samples) {
    EXPECT_LE(s.vertex, s.edge);
    EXPECT_LE(s.edge, Ratio::make(3 * s.vertex.num, s.vertex.den));
  }
  EXPECT_GT(a.simple_rate, 0.0);
  EXPECT_LE(a.simple_rate, 1.0);
  ASSERT_TRUE(a.vertex_bound_value);
}

TEST(Simulate, RefusesLargeGraphs) {
  EXPECT_THROW(simulate(30, 3, 0.5, 1, 1), CapExceeded);
  EXPECT_THROW(simulate(12, 3, 0.7, 1, 1), DomainError);
}
