#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fraclab_cli/cli.hpp"
#include "fraclab_cli/report.hpp"

using namespace fraclab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  }
  return lines;
}

}  // namespace

TEST_CASE("order ranges") {
  const auto v = parse_orders("0.5:0.25:1.0");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == 1.0);
  CHECK(parse_orders("0.9,0.95,0.99").size() == 3);
  CHECK(parse_orders("0.1:0.1:1").back() == 1.0);
  CHECK(parse_orders("0.1:0.1:1").size() == 10);
}

TEST_CASE("constants subcommand") {
  const auto r = run({"constants", "--dim", "2", "--order", "0.5"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  const auto& row = j["rows"][0];
  CHECK(row["c_Ns"].get<double>() == doctest::Approx(0.1591549).epsilon(1e-6));
  CHECK(row["c_N"].get<double>() == doctest::Approx(0.3183099).epsilon(1e-6));
  CHECK(row["rho_N"].get<double>() == doctest::Approx(0.2318631).epsilon(1e-6));
  CHECK(row["tau"].get<double>() == doctest::Approx(0.1013212).epsilon(1e-6));
  CHECK(row["d"].get<double>() == doctest::Approx(0.6366198).epsilon(1e-6));
}

TEST_CASE("eval reads points from stdin") {
  const auto r = run({"eval", "--op", "homega", "--domain", "ball:1", "--points", "-"}, "0,0\n");
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x1,x2,value,error_estimate,converged");
  const double v = std::stod(lines[1].substr(4));
  CHECK(std::fabs(v) < 1e-12);
  const auto empty = run({"eval", "--op", "homega", "--domain", "ball:1", "--points", "-"}, "");
  CHECK(empty.code == 0);
  CHECK(data_lines(empty.out).size() == 1);
}

TEST_CASE("bounds subcommand") {
  const auto r = run({"bounds", "--dim", "2", "--orders", "0.5:0.25:1.0", "--domain", "ball:1"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "s,norm_numeric,bound_integral,bound_new,bound_old,m_s,p_s_numeric,p_s_lower,q_Ns,chain");
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].substr(lines[i].size() - 4) == "true");
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).code == kUsageOrDomain);
  CHECK(run({"constants", "--bogus"}).code == kUsageOrDomain);
  CHECK(run({"constants", "--dim", "7"}).code == kUsageOrDomain);
  CHECK(run({"constants", "--order", "1.5"}).code == kUsageOrDomain);
  CHECK(run({"eval", "--op", "homega", "--domain", "ball:1", "--points", "-"}, "2,0\n").code ==
        kUsageOrDomain);
  CHECK(run({"torsion", "--orders", "1", "--out", "/nonexistent-dir/x.csv"}).code == kUsageOrDomain);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  const std::vector<std::string> args{"torsion", "--orders", "0.5:0.25:1", "--at", "0.3,0.1",
                                      "--emit", "json"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Report r = parse_json(a.out);
  CHECK(r.rows.size() == 3);
  CHECK(emit_string(r, Format::kJson) == a.out);
  Report q;
  q.columns = {"a", "b"};
  q.add_row({1.0 / 3.0, "x,y"});
  CHECK(parse_json(emit_string(q, Format::kJson)) == q);
  CHECK(data_lines(emit_string(q, Format::kCsv))[1] == "0.3333333333,\"x,y\"");
}
