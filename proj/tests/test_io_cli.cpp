#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "test_util.hpp"
#include "wzgain/cli.hpp"
#include "wzgain/entropy.hpp"
#include "wzgain/errors.hpp"
#include "wzgain/io.hpp"

using namespace wzgain;
using testutil::abs_err;
using testutil::rel_err;

namespace {

// Scratch file that deletes itself when the test block ends.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const char* tag = "data") {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("wzgain_test_" + std::string(tag) + "_" +
              std::to_string(counter++) + ".json"))
                .string();
    if (!contents.empty()) {
      std::ofstream out(path_);
      out << contents;
    }
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Expects `fn()` to throw E and returns the exception message.
template <typename E, typename Fn>
std::string message_of(Fn&& fn) {
  try {
    fn();
  } catch (const E& e) {
    return e.what();
  } catch (...) {
    FAIL("threw something other than the expected exception type");
  }
  FAIL("expected an exception but none was thrown");
  return {};
}

int call_cli(const std::vector<std::string>& args) {
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "wzgain");
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("JSON loaders round-trip a joint pmf and a distortion matrix") {
  const TempFile joint(
      R"({"alphabet_sizes": [2, 3],
          "values": [0.1, 0.2, 0.3, 0.05, 0.15, 0.2]})");
  const JointPmf pxy = load_joint_pmf(joint.path());
  REQUIRE(pxy.rows() == 2);
  REQUIRE(pxy.cols() == 3);
  CHECK(pxy.at(0, 1) == 0.2);
  CHECK(pxy.at(1, 2) == 0.2);

  const TempFile dist(
      R"({"alphabet_sizes": [2, 3],
          "values": [0, 1, "inf", "inf", 1, 0]})");
  const DistortionMatrix d = load_distortion_matrix(dist.path());
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 3);
  CHECK(d.at(0, 1) == 1.0);
  CHECK(std::isinf(d.at(0, 2)));
  CHECK(std::isinf(d.at(1, 0)));
}

TEST_CASE("structural file problems raise IoError naming the issue") {
  const std::string missing = message_of<IoError>(
      [] { load_joint_pmf("/nonexistent/wzgain/input.json"); });
  CHECK(contains(missing, "cannot open file"));

  const TempFile garbage("{not json at all");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(garbage.path()); }),
                 "invalid JSON"));

  const TempFile array_top("[1, 2, 3]");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(array_top.path()); }),
                 "object"));

  const TempFile no_sizes(R"({"values": [1.0]})");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(no_sizes.path()); }),
                 "alphabet_sizes"));

  const TempFile one_size(R"({"alphabet_sizes": [2], "values": [1.0]})");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(one_size.path()); }),
                 "alphabet_sizes"));

  const TempFile zero_size(
      R"({"alphabet_sizes": [2, 0], "values": []})");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(zero_size.path()); }),
                 "positive"));

  const TempFile short_values(
      R"({"alphabet_sizes": [2, 2], "values": [0.5, 0.5]})");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(short_values.path()); }),
                 "values"));

  const TempFile bool_value(
      R"({"alphabet_sizes": [2, 2], "values": [0.5, 0.25, true, 0.25]})");
  CHECK(contains(message_of<IoError>(
                     [&] { load_joint_pmf(bool_value.path()); }),
                 "values"));

  // "inf" is a distortion-only token; pmfs must be plain numbers.
  const TempFile inf_pmf(
      R"({"alphabet_sizes": [2, 2], "values": [0.5, 0.25, "inf", 0.25]})");
  CHECK_THROWS_AS(load_joint_pmf(inf_pmf.path()), IoError);
}

TEST_CASE("value-level violations propagate the type's own exception") {
  // Parses fine but does not sum to 1: invalid_argument, not IoError.
  const TempFile bad_sum(
      R"({"alphabet_sizes": [2, 2], "values": [0.5, 0.2, 0.1, 0.1]})");
  CHECK_THROWS_AS(load_joint_pmf(bad_sum.path()), std::invalid_argument);

  // A distortion row with no finite entry is unusable.
  const TempFile all_inf_row(
      R"({"alphabet_sizes": [2, 2], "values": ["inf", "inf", 0, 1]})");
  CHECK_THROWS_AS(load_distortion_matrix(all_inf_row.path()),
                  std::invalid_argument);
}

TEST_CASE("dispatch runs the exact reduction solver") {
  CommandRequest req;
  req.subcommand = "rho1";
  req.params = {{"dsbs-p", "0.25"}, {"distortion", "0.5"}};
  const RunReport report = dispatch(req);
  CHECK(report.command == "rho1");
  // rho1 = (1 + D) h(p) and rsum1 = (1 - D) h(p) at D = 0.5.
  CHECK(abs_err(report.results.at("rho1"), 1.5 * refvals::h_quarter) < 1e-9);
  CHECK(abs_err(report.results.at("rsum1"), 0.5 * refvals::h_quarter) <
        1e-9);
  CHECK(report.params.at("dsbs-p") == "0.25");
  CHECK(report.params.at("distortion") == "0.5");
  CHECK(report.runtime_s >= 0.0);
}

TEST_CASE("dispatch evaluates the midpoint certificate") {
  CommandRequest req;
  req.subcommand = "gain-detect";
  req.params = {{"p", "1e-6"}, {"q", "0.1"}, {"alpha0e", "0.5"}};
  const RunReport report = dispatch(req);
  CHECK(report.verdicts.at("valid"));
  CHECK(rel_err(report.results.at("gap_lower"),
                refvals::cert_1e6_gap_lower) < 1e-12);
  CHECK(rel_err(report.results.at("lhs"), refvals::cert_1e6_lhs) < 1e-13);
  CHECK(report.results.count("rhs_lower") == 1);
  CHECK(report.results.count("rhs_exact") == 1);
  CHECK(report.results.count("gap_exact") == 1);
  CHECK(report.results.count("distortion") == 1);
}

TEST_CASE("dispatch runs the full headline reproduction quickly") {
  CommandRequest req;
  req.subcommand = "reproduce-paper";
  const RunReport report = dispatch(req);
  REQUIRE(report.verdicts.size() == 4);
  for (const auto& [name, ok] : report.verdicts) {
    INFO("verdict ", name);
    CHECK(ok);
  }
  CHECK(std::fabs(report.results.at("sum_ratio") - 8.16) < 0.02);
  CHECK(report.runtime_s < 10.0);
}

TEST_CASE("JSON reports are byte-deterministic apart from the wall time") {
  CommandRequest req;
  req.subcommand = "rho1";
  req.params = {{"dsbs-p", "0.25"}, {"distortion", "0.5"}};
  std::string a = format_report_json(dispatch(req));
  std::string b = format_report_json(dispatch(req));
  const auto mask = [](std::string& s) {
    const auto pos = s.find("\"runtime_s\":");
    REQUIRE(pos != std::string::npos);
    s.resize(pos);
  };
  mask(a);
  mask(b);
  CHECK(a == b);
  // Keys appear sorted, params echo resolved values, numbers carry 17
  // significant digits.
  CHECK(contains(a,
                 "{\"command\":\"rho1\",\"params\":{\"distortion\":\"0.5\","
                 "\"dsbs-p\":\"0.25\"},\"results\":{\"rho1\":"));
  CHECK(a.find("\"rho1\":") < a.find("\"rsum1\":"));
}

TEST_CASE("infinities serialize as quoted tokens in JSON") {
  RunReport report;
  report.command = "demo";
  report.results["plus"] = std::numeric_limits<double>::infinity();
  report.results["minus"] = -std::numeric_limits<double>::infinity();
  const std::string json = format_report_json(report);
  CHECK(contains(json, "\"plus\":\"inf\""));
  CHECK(contains(json, "\"minus\":\"-inf\""));
}

TEST_CASE("single-run CSV lists params, results, and verdicts as columns") {
  CommandRequest req;
  req.subcommand = "rho1";
  req.params = {{"dsbs-p", "0.25"}, {"distortion", "0.5"}};
  const std::string csv = format_report_csv(dispatch(req));
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "distortion,dsbs-p,rho1,rsum1");
  const auto row = split_csv_row(lines[1]);
  REQUIRE(row.size() == 4);
  CHECK(row[0] == "0.5");
  CHECK(row[1] == "0.25");
  CHECK(rel_err(std::stod(row[2]), 1.5 * refvals::h_quarter) < 1e-12);

  CommandRequest verify;
  verify.subcommand = "two-msg";
  verify.params = {{"p", "0.01"}, {"q", "0.2"}, {"alpha", "0.3"},
                   {"verify", "true"}};
  const std::string vcsv = format_report_csv(dispatch(verify));
  const auto vlines = split_lines(vcsv);
  REQUIRE(vlines.size() == 2);
  CHECK(contains(vlines[0], "closed_form_matches_direct"));
  CHECK(contains(vlines[1], "true"));
}

TEST_CASE("text reports group the sections") {
  CommandRequest req;
  req.subcommand = "rho1";
  req.params = {{"dsbs-p", "0.25"}, {"distortion", "0.5"}};
  const std::string text = format_report_text(dispatch(req));
  CHECK(contains(text, "command: rho1"));
  CHECK(contains(text, "params:"));
  CHECK(contains(text, "results:"));
  CHECK(contains(text, "rho1 = "));
  CHECK(contains(text, "runtime_s"));
}

TEST_CASE("run_cli exit code 0 with a written report") {
  const TempFile out("", "out");
  CHECK(call_cli({"rho1", "--dsbs-p", "0.25", "--distortion", "0.5",
                  "--format", "json", "--out", out.path()}) == 0);
  const std::string written = slurp(out.path());
  CHECK(contains(written,
                 "{\"command\":\"rho1\",\"params\":{\"distortion\":\"0.5\","
                 "\"dsbs-p\":\"0.25\"},\"results\":{\"rho1\":"));
}

TEST_CASE("run_cli maps failure kinds to distinct exit codes") {
  const TempFile out("", "out");
  // 2: malformed or invalid arguments.
  CHECK(call_cli({"rho1", "--dsbs-p", "abc", "--distortion", "0.5"}) == 2);
  CHECK(call_cli({"rho1", "--dsbs-p", "1.5", "--distortion", "0.5"}) == 2);
  CHECK(call_cli({"rho1", "--dsbs-p", "0.25"}) == 2);  // missing target
  CHECK(call_cli({"frobnicate"}) == 2);
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=lin:0:1:5", "--format", "json"}) ==
        2);
  // 1: unreadable input files.
  CHECK(call_cli({"wz-rate", "--joint", "/nonexistent/a.json", "--dist",
                  "/nonexistent/b.json", "--distortion", "0.5"}) == 1);
  // 3: a search that provably ran out of decades.
  CHECK(call_cli({"gain-search", "--q", "0.499", "--alpha0e", "0.99",
                  "--margin", "0.1", "--out", out.path()}) == 3);
  // 0: asking for help is not an error.
  CHECK(call_cli({"--help"}) == 0);
}

TEST_CASE("run_cli solves a file-supplied instance end to end") {
  const TempFile joint(
      R"({"alphabet_sizes": [2, 2],
          "values": [0.375, 0.125, 0.125, 0.375]})");
  const TempFile dist(
      R"({"alphabet_sizes": [2, 3],
          "values": [0, 1, "inf", "inf", 1, 0]})");
  const TempFile out("", "out");
  CHECK(call_cli({"wz-rate", "--joint", joint.path(), "--dist", dist.path(),
                  "--distortion", "0.5", "--grid-res", "32", "--refine", "2",
                  "--format", "csv", "--out", out.path()}) == 0);
  const auto lines = split_lines(slurp(out.path()));
  REQUIRE(lines.size() == 2);
  const auto header = split_csv_row(lines[0]);
  const auto row = split_csv_row(lines[1]);
  REQUIRE(header.size() == row.size());
  // Find the rate column and compare with the known optimum (1-D) h(1/4).
  bool found = false;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "rate") {
      CHECK(abs_err(std::stod(row[i]), 0.5 * refvals::h_quarter) < 2e-3);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("sweep produces one CSV row per grid point") {
  const TempFile out("", "out");
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=lin:0:1:11", "--out",
                  out.path()}) == 0);
  const auto lines = split_lines(slurp(out.path()));
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "distortion,rho1,rsum1");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_csv_row(lines[i]);
    REQUIRE(row.size() == 3);
    const double D = std::stod(row[0]);
    CHECK(abs_err(D, 0.1 * static_cast<double>(i - 1)) < 1e-12);
    CHECK(abs_err(std::stod(row[1]), (1.0 + D) * refvals::h_quarter) <
          1e-9);
  }
}

TEST_CASE("sweep iterates a geometric range with verdict columns") {
  const TempFile out("", "out");
  CHECK(call_cli({"sweep", "--command", "gain-detect", "--q", "0.1",
                  "--alpha0e", "0.5", "--range", "p=geom:1e-3:1e-12:10",
                  "--out", out.path()}) == 0);
  const auto lines = split_lines(slurp(out.path()));
  REQUIRE(lines.size() == 11);
  const auto header = split_csv_row(lines[0]);
  REQUIRE(header.front() == "p");
  REQUIRE(header.back() == "valid");
  std::size_t gap_col = 0;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == "gap_lower") gap_col = i;
  REQUIRE(gap_col > 0);

  double prev_rel = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_csv_row(lines[i]);
    const double p = std::stod(row[0]);
    CHECK(rel_err(p, std::pow(10.0, -2.0 - static_cast<double>(i))) <
          1e-12);
    const double rel_gap = std::stod(row[gap_col]) / binary_entropy(p);
    CHECK(rel_gap > 0.0);
    CHECK(rel_gap > prev_rel);  // the violation strengthens as p shrinks
    prev_rel = rel_gap;
    CHECK(row.back() == "true");
  }
}

TEST_CASE("sweep over two ranges nests the second inside the first") {
  const TempFile out("", "out");
  CHECK(call_cli({"sweep", "--command", "rho1", "--range",
                  "distortion=lin:0.2:0.8:3", "--range",
                  "dsbs-p=lin:0.2:0.3:2", "--out", out.path()}) == 0);
  const auto lines = split_lines(slurp(out.path()));
  REQUIRE(lines.size() == 7);
  CHECK(split_csv_row(lines[0])[0] == "distortion");
  CHECK(split_csv_row(lines[0])[1] == "dsbs-p");
  const double outer[6] = {0.2, 0.2, 0.5, 0.5, 0.8, 0.8};
  const double inner[6] = {0.2, 0.3, 0.2, 0.3, 0.2, 0.3};
  for (int i = 0; i < 6; ++i) {
    const auto row = split_csv_row(lines[static_cast<std::size_t>(i) + 1]);
    CHECK(abs_err(std::stod(row[0]), outer[i]) < 1e-12);
    CHECK(abs_err(std::stod(row[1]), inner[i]) < 1e-12);
  }
}

TEST_CASE("sweep edge cases: empty grids, oversized grids, self-reference") {
  const TempFile out("", "out");
  // Zero points: header only.
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=lin:0:1:0", "--out", out.path()}) ==
        0);
  const auto lines = split_lines(slurp(out.path()));
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "distortion");
  // More than 1e6 points is refused.
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=lin:0:1:2000000"}) == 2);
  // A sweep cannot sweep itself, and needs at least one range.
  CHECK(call_cli({"sweep", "--command", "sweep", "--range",
                  "distortion=lin:0:1:3"}) == 2);
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25"}) == 2);
  // Malformed range expressions are argument errors.
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=log:0:1:3"}) == 2);
  CHECK(call_cli({"sweep", "--command", "rho1", "--dsbs-p", "0.25",
                  "--range", "distortion=geom:0:1:3"}) == 2);
}
