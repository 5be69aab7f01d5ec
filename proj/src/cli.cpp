#include "wzgain/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wzgain/binary_erasure.hpp"
#include "wzgain/entropy.hpp"
#include "wzgain/errors.hpp"
#include "wzgain/interaction_gain.hpp"
#include "wzgain/io.hpp"
#include "wzgain/two_message.hpp"
#include "wzgain/wyner_ziv.hpp"

namespace wzgain {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 17 significant digits: lossless double round-trips, deterministic output.
std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_quote(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// Numeric JSON value; infinities become quoted tokens so the document stays
// standard JSON.
std::string json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(v)) return "\"nan\"";
  return format_double(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

double parse_number(const std::string& name, const std::string& raw) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter --" + name + ": '" + raw + "' is not a number");
  }
}

int parse_integer(const std::string& name, const std::string& raw) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter --" + name + ": '" + raw + "' is not an integer");
  }
}

// Pulls parameters out of the raw string map and echoes every resolved value
// (defaults included) into the report's parameter map.
class Args {
 public:
  Args(const std::map<std::string, std::string>& params, std::map<std::string, std::string>& echo)
      : params_(params), echo_(echo) {}

  bool has(const std::string& name) const { return params_.count(name) != 0; }

  double require_number(const std::string& name) {
    const auto it = params_.find(name);
    if (it == params_.end()) {
      throw std::invalid_argument("missing required parameter --" + name);
    }
    const double v = parse_number(name, it->second);
    echo_[name] = format_double(v);
    return v;
  }

  double number_or(const std::string& name, double fallback) {
    if (!has(name)) {
      echo_[name] = format_double(fallback);
      return fallback;
    }
    return require_number(name);
  }

  std::optional<double> maybe_number(const std::string& name) {
    if (!has(name)) return std::nullopt;
    return require_number(name);
  }

  int integer_or(const std::string& name, int fallback) {
    const auto it = params_.find(name);
    int v = fallback;
    if (it != params_.end()) v = parse_integer(name, it->second);
    echo_[name] = std::to_string(v);
    return v;
  }

  std::string require_text(const std::string& name) {
    const auto it = params_.find(name);
    if (it == params_.end()) {
      throw std::invalid_argument("missing required parameter --" + name);
    }
    echo_[name] = it->second;
    return it->second;
  }

  bool flag(const std::string& name) {
    if (!has(name)) return false;
    echo_[name] = "true";
    return true;
  }

 private:
  const std::map<std::string, std::string>& params_;
  std::map<std::string, std::string>& echo_;
};

double reduction_reference(const JointPmf& joint) {
  return conditional_entropy(joint) + conditional_entropy(joint.transposed());
}

// --- subcommand runners -----------------------------------------------------

void run_rho1(Args& args, RunReport& report) {
  const double distortion = args.require_number("distortion");
  const bool from_dsbs = args.has("dsbs-p");
  const bool from_file = args.has("joint");
  if (from_dsbs == from_file) {
    throw std::invalid_argument("provide exactly one of --dsbs-p or --joint");
  }

  if (from_file && args.has("dist")) {
    // General alphabets: grid-search oracle.
    const JointPmf joint = load_joint_pmf(args.require_text("joint"));
    const DistortionMatrix d = load_distortion_matrix(args.require_text("dist"));
    const GridSpec grid(args.integer_or("grid-res", 64), args.integer_or("refine", 3));
    const double rho = rho1_oracle(joint, d, distortion, grid);
    report.results["rho1"] = rho;
    report.results["rsum1"] = reduction_reference(joint) - rho;
    return;
  }

  // Binary source with erasure distortion: exact solver.
  BinaryJoint joint = from_dsbs ? dsbs_joint(args.require_number("dsbs-p")) : [&] {
    const JointPmf loaded = load_joint_pmf(args.require_text("joint"));
    if (loaded.rows() != 2 || loaded.cols() != 2) {
      throw std::invalid_argument(
          "--joint without --dist uses the exact binary-erasure solver and needs a 2x2 source; "
          "supply --dist to run the grid oracle instead");
    }
    return BinaryJoint(loaded.at(0, 0), loaded.at(0, 1), loaded.at(1, 0), loaded.at(1, 1));
  }();
  const double rho = rho1_exact(joint, distortion);
  report.results["rho1"] = rho;
  report.results["rsum1"] = reduction_reference(joint.to_joint_pmf()) - rho;
}

void run_wz_rate(Args& args, RunReport& report) {
  const double distortion = args.require_number("distortion");
  const bool from_dsbs = args.has("dsbs-p");
  const bool from_file = args.has("joint");
  if (from_dsbs == from_file) {
    throw std::invalid_argument("provide exactly one of --dsbs-p or --joint");
  }
  if (from_file && !args.has("dist")) {
    throw std::invalid_argument("--joint requires --dist (the erasure default applies only to --dsbs-p)");
  }
  const JointPmf joint = from_dsbs ? dsbs_joint(args.require_number("dsbs-p")).to_joint_pmf()
                                   : load_joint_pmf(args.require_text("joint"));
  const DistortionMatrix d = args.has("dist") ? load_distortion_matrix(args.require_text("dist"))
                                              : binary_erasure_distortion();
  const GridSpec grid(args.integer_or("grid-res", 64), args.integer_or("refine", 3));
  const WzSolution solution = wz_rate_oracle(joint, d, distortion, grid);
  report.results["rate"] = solution.rate;
  report.results["distortion"] = solution.distortion;
}

void fill_certificate(const GainCertificate& cert, RunReport& report) {
  report.results["distortion"] = cert.distortion;
  report.results["lhs"] = cert.lhs;
  report.results["rhs_lower"] = cert.rhs_lower;
  report.results["rhs_exact"] = cert.rhs_exact;
  report.results["gap_lower"] = cert.gap_lower;
  report.results["gap_exact"] = cert.gap_exact;
}

void run_gain_detect(Args& args, RunReport& report) {
  const double p = args.require_number("p");
  const double q = args.require_number("q");
  const double alpha0e = args.require_number("alpha0e");
  const double margin = args.number_or("margin", 1e-9);
  const GainCertificate cert = midpoint_violation(p, q, alpha0e);
  fill_certificate(cert, report);
  report.verdicts["valid"] = certificate_is_valid(cert, margin);
}

void run_gain_search(Args& args, RunReport& report) {
  const double q = args.require_number("q");
  const double alpha0e = args.require_number("alpha0e");
  const double margin = args.number_or("margin", 1e-9);
  const GainCertificate cert = find_gain_witness(q, alpha0e, margin);
  report.results["p"] = cert.p;
  fill_certificate(cert, report);
  report.verdicts["valid"] = certificate_is_valid(cert, margin);
}

void run_two_msg(Args& args, RunReport& report) {
  const double p = args.require_number("p");
  const double q = args.require_number("q");
  const double alpha = args.require_number("alpha");
  const ErasureSchemeParams params(p, q, alpha);
  const TwoMessagePoint point = two_round_erasure_point(params);
  report.results["r1"] = point.r1;
  report.results["r2"] = point.r2;
  report.results["distortion"] = point.distortion;
  report.results["rsum1"] = rsum1_dsbs(p, point.distortion);
  report.results["sum_ratio"] = point.sum_ratio.value_or(kInf);
  report.results["split_ratio"] = point.split_ratio;
  if (args.flag("verify")) {
    report.verdicts["closed_form_matches_direct"] = erasure_point_matches_direct(params);
  }
}

void run_ratio_search(Args& args, RunReport& report) {
  const double L = args.require_number("L");
  const std::optional<double> q = args.maybe_number("q");
  const double alpha = args.number_or("alpha", 0.5);
  const RatioWitness witness = find_ratio_witness(L, q, alpha);
  report.results["p"] = witness.params.p;
  report.results["q"] = witness.params.q;
  report.results["alpha"] = witness.params.alpha;
  report.results["r1"] = witness.point.r1;
  report.results["r2"] = witness.point.r2;
  report.results["distortion"] = witness.point.distortion;
  report.results["sum_ratio"] = witness.point.sum_ratio.value_or(kInf);
  report.results["split_ratio"] = witness.point.split_ratio;
}

void run_entropy_ratio(Args& args, RunReport& report) {
  const double slope = args.require_number("slope");
  const double p = args.require_number("p");
  report.results["ratio"] = entropy_ratio_check(slope, p);
}

void run_reproduce_paper(RunReport& report) {
  // The canonical extreme operating point: q = 1/10, alpha0e = 1/2,
  // crossover 1e-200, plus the closed-form limits the computed values are
  // checked against.
  const double p = 1e-200;
  const double q = 0.1;
  const double alpha = 0.5;
  report.params["p"] = format_double(p);
  report.params["q"] = format_double(q);
  report.params["alpha0e"] = format_double(alpha);

  const GainCertificate cert = midpoint_violation(p, q, alpha);
  const TwoMessagePoint point = two_round_erasure_point(ErasureSchemeParams(p, q, alpha));
  const double sum_ratio = point.sum_ratio.value_or(kInf);

  report.results["r1"] = point.r1;
  report.results["r2"] = point.r2;
  report.results["distortion"] = point.distortion;
  report.results["rsum1"] = rsum1_dsbs(p, point.distortion);
  report.results["sum_ratio"] = sum_ratio;
  report.results["sum_ratio_reference"] = 8.16;
  report.results["gap_lower"] = cert.gap_lower;
  report.results["gap_rel"] = cert.gap_lower / binary_entropy(p);
  report.results["gap_rel_limit"] = limit_gap(q, alpha);

  const DsbsParams limit_params(1e-100, q, alpha);
  const double c_over_h = c_functional(limit_params, 1.0) / binary_entropy(1e-100);
  const double one_plus_eta = 1.0 + eta_functional(limit_params, 1.0);
  report.results["c_over_h_at_1e100"] = c_over_h;
  report.results["c_over_h_limit"] = 2.0 - q * (1.0 - alpha);
  report.results["one_plus_eta_at_1e100"] = one_plus_eta;
  report.results["one_plus_eta_limit"] = 2.0 - (1.0 - q) * (1.0 - alpha);

  report.verdicts["sum_ratio_matches"] = std::abs(sum_ratio - 8.16) < 0.02;
  report.verdicts["c_over_h_matches"] = std::abs(c_over_h - (2.0 - q * (1.0 - alpha))) < 0.05;
  report.verdicts["one_plus_eta_matches"] =
      std::abs(one_plus_eta - (2.0 - (1.0 - q) * (1.0 - alpha))) < 1e-3;
  report.verdicts["certificate_valid"] = certificate_is_valid(cert);
}

// --- sweep ------------------------------------------------------------------

struct RangeSpec {
  std::string name;
  std::vector<double> values;
};

RangeSpec parse_range(const std::string& expr) {
  const auto eq = expr.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("range '" + expr + "' must look like name=lin:start:stop:count");
  }
  RangeSpec spec;
  spec.name = expr.substr(0, eq);
  std::vector<std::string> parts;
  std::string rest = expr.substr(eq + 1);
  std::size_t start = 0;
  while (true) {
    const auto colon = rest.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(rest.substr(start));
      break;
    }
    parts.push_back(rest.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() != 4 || (parts[0] != "lin" && parts[0] != "geom")) {
    throw std::invalid_argument("range '" + expr + "' must look like name=lin|geom:start:stop:count");
  }
  const double lo = parse_number("range", parts[1]);
  const double hi = parse_number("range", parts[2]);
  const int count = parse_integer("range", parts[3]);
  if (count < 0) throw std::invalid_argument("range '" + expr + "': count must be nonnegative");
  const bool geometric = parts[0] == "geom";
  if (geometric && (lo <= 0.0 || hi <= 0.0)) {
    throw std::invalid_argument("range '" + expr + "': geometric grids need positive endpoints");
  }
  spec.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (count == 1) {
      spec.values.push_back(lo);
    } else if (geometric) {
      const double t = static_cast<double>(i) / (count - 1);
      spec.values.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    } else {
      const double t = static_cast<double>(i) / (count - 1);
      spec.values.push_back(lo + t * (hi - lo));
    }
  }
  return spec;
}

}  // namespace

RunReport dispatch(const CommandRequest& request) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = request.subcommand;
  Args args(request.params, report.params);

  if (request.subcommand == "rho1") {
    run_rho1(args, report);
  } else if (request.subcommand == "wz-rate") {
    run_wz_rate(args, report);
  } else if (request.subcommand == "gain-detect") {
    run_gain_detect(args, report);
  } else if (request.subcommand == "gain-search") {
    run_gain_search(args, report);
  } else if (request.subcommand == "two-msg") {
    run_two_msg(args, report);
  } else if (request.subcommand == "ratio-search") {
    run_ratio_search(args, report);
  } else if (request.subcommand == "entropy-ratio") {
    run_entropy_ratio(args, report);
  } else if (request.subcommand == "reproduce-paper") {
    run_reproduce_paper(report);
  } else if (request.subcommand == "sweep") {
    throw std::invalid_argument("sweep requests are handled by run_sweep, not dispatch");
  } else {
    throw std::invalid_argument("unknown subcommand: " + request.subcommand);
  }

  report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string run_sweep(const CommandRequest& request) {
  const auto command_it = request.params.find("command");
  if (command_it == request.params.end()) {
    throw std::invalid_argument("missing required parameter --command");
  }
  const std::string inner_command = command_it->second;
  if (inner_command == "sweep") throw std::invalid_argument("sweep cannot sweep itself");

  if (request.ranges.empty()) {
    throw std::invalid_argument("sweep needs at least one --range");
  }
  if (request.ranges.size() > 2) {
    throw std::invalid_argument("sweep supports at most two --range parameters");
  }
  std::vector<RangeSpec> ranges;
  for (const std::string& expr : request.ranges) ranges.push_back(parse_range(expr));

  std::uint64_t total = 1;
  for (const RangeSpec& r : ranges) total *= static_cast<std::uint64_t>(r.values.size());
  if (total > 1000000) {
    throw std::invalid_argument("sweep grid exceeds 1e6 points; shrink the ranges");
  }

  std::map<std::string, std::string> fixed = request.params;
  fixed.erase("command");

  std::ostringstream csv;
  if (total == 0) {
    // Nothing will be evaluated, so only the ranged parameter names are
    // known; emit them as the header of an otherwise empty document.
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      csv << (i ? "," : "") << csv_escape(ranges[i].name);
    }
    csv << "\n";
    return csv.str();
  }

  const RangeSpec& outer = ranges[0];
  const std::vector<double> inner_fallback{0.0};
  const bool two_dim = ranges.size() == 2;
  bool header_written = false;
  std::vector<std::string> result_keys;
  std::vector<std::string> verdict_keys;

  for (double outer_value : outer.values) {
    const std::vector<double>& inner_values = two_dim ? ranges[1].values : inner_fallback;
    for (double inner_value : inner_values) {
      CommandRequest leaf;
      leaf.subcommand = inner_command;
      leaf.params = fixed;
      leaf.params[outer.name] = format_double(outer_value);
      if (two_dim) leaf.params[ranges[1].name] = format_double(inner_value);
      const RunReport row = dispatch(leaf);

      if (!header_written) {
        for (const auto& [key, value] : row.results) result_keys.push_back(key);
        for (const auto& [key, value] : row.verdicts) verdict_keys.push_back(key);
        csv << csv_escape(outer.name);
        if (two_dim) csv << "," << csv_escape(ranges[1].name);
        for (const std::string& key : result_keys) csv << "," << csv_escape(key);
        for (const std::string& key : verdict_keys) csv << "," << csv_escape(key);
        csv << "\n";
        header_written = true;
      }
      csv << format_double(outer_value);
      if (two_dim) csv << "," << format_double(inner_value);
      for (const std::string& key : result_keys) {
        const auto it = row.results.find(key);
        csv << "," << (it == row.results.end() ? "" : format_double(it->second));
      }
      for (const std::string& key : verdict_keys) {
        const auto it = row.verdicts.find(key);
        csv << "," << (it == row.verdicts.end() ? "" : (it->second ? "true" : "false"));
      }
      csv << "\n";
    }
  }
  return csv.str();
}

std::string format_report_json(const RunReport& report) {
  std::ostringstream os;
  os << "{\"command\":" << json_quote(report.command) << ",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : report.params) {
    os << (first ? "" : ",") << json_quote(key) << ":" << json_quote(value);
    first = false;
  }
  os << "},\"results\":{";
  first = true;
  for (const auto& [key, value] : report.results) {
    os << (first ? "" : ",") << json_quote(key) << ":" << json_number(value);
    first = false;
  }
  os << "},\"verdicts\":{";
  first = true;
  for (const auto& [key, value] : report.verdicts) {
    os << (first ? "" : ",") << json_quote(key) << ":" << (value ? "true" : "false");
    first = false;
  }
  os << "},\"runtime_s\":" << format_double(report.runtime_s) << "}\n";
  return os.str();
}

std::string format_report_text(const RunReport& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  if (!report.params.empty()) {
    os << "params:\n";
    for (const auto& [key, value] : report.params) os << "  " << key << " = " << value << "\n";
  }
  if (!report.results.empty()) {
    os << "results:\n";
    for (const auto& [key, value] : report.results) {
      os << "  " << key << " = " << format_double(value) << "\n";
    }
  }
  if (!report.verdicts.empty()) {
    os << "verdicts:\n";
    for (const auto& [key, value] : report.verdicts) {
      os << "  " << key << " = " << (value ? "true" : "false") << "\n";
    }
  }
  os << "runtime_s: " << format_double(report.runtime_s) << "\n";
  return os.str();
}

std::string format_report_csv(const RunReport& report) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : report.params) {
    os << (first ? "" : ",") << csv_escape(key);
    first = false;
  }
  for (const auto& [key, value] : report.results) {
    os << (first ? "" : ",") << csv_escape(key);
    first = false;
  }
  for (const auto& [key, value] : report.verdicts) {
    os << (first ? "" : ",") << csv_escape(key);
    first = false;
  }
  os << "\n";
  first = true;
  for (const auto& [key, value] : report.params) {
    os << (first ? "" : ",") << csv_escape(value);
    first = false;
  }
  for (const auto& [key, value] : report.results) {
    os << (first ? "" : ",") << format_double(value);
    first = false;
  }
  for (const auto& [key, value] : report.verdicts) {
    os << (first ? "" : ",") << (value ? "true" : "false");
    first = false;
  }
  os << "\n";
  return os.str();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Rate-distortion quantities for lossy source coding with decoder side information:"
               " exact one-message solvers, a grid-search oracle, two-message schemes, and"
               " certificates that a second message strictly helps."};
  app.require_subcommand(1);

  CommandRequest request;
  auto add_param = [&request](CLI::App* cmd, const std::string& name, const std::string& desc) {
    cmd->add_option_function<std::string>(
        "--" + name, [&request, name](const std::string& value) { request.params[name] = value; },
        desc);
  };
  auto add_common = [&request](CLI::App* cmd) {
    cmd->add_option_function<std::string>(
           "--format", [&request](const std::string& value) { request.format = value; },
           "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option_function<std::string>(
        "--out", [&request](const std::string& value) { request.out_path = value; },
        "write output to this file instead of stdout");
  };
  auto add_grid = [&](CLI::App* cmd) {
    add_param(cmd, "grid-res", "search grid resolution (default 64)");
    add_param(cmd, "refine", "local refinement rounds (default 3)");
  };
  auto add_source = [&](CLI::App* cmd) {
    add_param(cmd, "dsbs-p", "symmetric binary source with this crossover probability");
    add_param(cmd, "joint", "JSON file holding the source joint pmf");
    add_param(cmd, "dist", "JSON file holding the distortion matrix");
  };

  CLI::App* wz_rate = app.add_subcommand(
      "wz-rate", "one-message rate at a distortion target via the grid-search oracle");
  add_source(wz_rate);
  add_param(wz_rate, "distortion", "distortion target");
  add_grid(wz_rate);
  add_common(wz_rate);

  CLI::App* rho1 = app.add_subcommand(
      "rho1", "one-message sum-rate reduction (exact for binary-erasure, oracle otherwise)");
  add_source(rho1);
  add_param(rho1, "distortion", "distortion target");
  add_grid(rho1);
  add_common(rho1);

  CLI::App* gain_detect = app.add_subcommand(
      "gain-detect", "evaluate the two-message gain certificate at (p, q, alpha0e)");
  add_param(gain_detect, "p", "source crossover probability");
  add_param(gain_detect, "q", "comparison-joint bias, in (0, 1/2)");
  add_param(gain_detect, "alpha0e", "erasure probability for source letter 0");
  add_param(gain_detect, "margin", "absolute validity margin (default 1e-9)");
  add_common(gain_detect);

  CLI::App* gain_search = app.add_subcommand(
      "gain-search", "find the largest crossover decade with a valid gain certificate");
  add_param(gain_search, "q", "comparison-joint bias, in (0, 1/2)");
  add_param(gain_search, "alpha0e", "erasure probability for source letter 0");
  add_param(gain_search, "margin", "absolute validity margin (default 1e-9)");
  add_common(gain_search);

  CLI::App* two_msg = app.add_subcommand(
      "two-msg", "closed-form rates and distortion of the two-message erasure scheme");
  add_param(two_msg, "p", "source crossover probability");
  add_param(two_msg, "q", "first-message channel crossover");
  add_param(two_msg, "alpha", "erase probability when the first message agrees with the source");
  two_msg->add_flag_callback(
      "--verify", [&request] { request.params["verify"] = "true"; },
      "cross-check the closed forms against direct evaluation");
  add_common(two_msg);

  CLI::App* ratio_search = app.add_subcommand(
      "ratio-search", "find scheme parameters whose one/two-message sum-rate ratio exceeds L");
  add_param(ratio_search, "L", "required ratio (split ratio must drop below 1/L)");
  add_param(ratio_search, "q", "first-message crossover (default 1/(L+3))");
  add_param(ratio_search, "alpha", "erase probability on agreement (default 0.5)");
  add_common(ratio_search);

  CLI::App* entropy_ratio =
      app.add_subcommand("entropy-ratio", "h(slope*p)/h(p), the small-p entropy-ratio check");
  add_param(entropy_ratio, "slope", "slope through the origin");
  add_param(entropy_ratio, "p", "evaluation point in (0, 1/2)");
  add_common(entropy_ratio);

  CLI::App* sweep =
      app.add_subcommand("sweep", "run another subcommand over a 1-D or 2-D parameter grid (CSV)");
  add_param(sweep, "command", "subcommand to evaluate at each grid point");
  sweep->add_option("--range", request.ranges,
                    "name=lin:start:stop:count or name=geom:start:stop:count (at most two)");
  add_param(sweep, "p", "fixed value passed through");
  add_param(sweep, "q", "fixed value passed through");
  add_param(sweep, "alpha0e", "fixed value passed through");
  add_param(sweep, "alpha", "fixed value passed through");
  add_param(sweep, "distortion", "fixed value passed through");
  add_param(sweep, "dsbs-p", "fixed value passed through");
  add_param(sweep, "joint", "fixed value passed through");
  add_param(sweep, "dist", "fixed value passed through");
  add_param(sweep, "grid-res", "fixed value passed through");
  add_param(sweep, "refine", "fixed value passed through");
  add_param(sweep, "margin", "fixed value passed through");
  add_param(sweep, "L", "fixed value passed through");
  add_param(sweep, "slope", "fixed value passed through");
  add_common(sweep);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce-paper",
      "run the canonical extreme-point demonstration and check it against analytic limits");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* cmd : {wz_rate, rho1, gain_detect, gain_search, two_msg, ratio_search,
                        entropy_ratio, sweep, reproduce}) {
    if (cmd->parsed()) request.subcommand = cmd->get_name();
  }

  try {
    std::string output;
    if (request.subcommand == "sweep") {
      if (!request.format.empty() && request.format != "csv") {
        throw std::invalid_argument("sweep emits CSV only; drop --format or set it to csv");
      }
      output = run_sweep(request);
    } else {
      const RunReport report = dispatch(request);
      const std::string format = request.format.empty() ? "text" : request.format;
      if (format == "json") {
        output = format_report_json(report);
      } else if (format == "csv") {
        output = format_report_csv(report);
      } else {
        output = format_report_text(report);
      }
    }
    if (request.out_path.has_value()) {
      std::ofstream out(*request.out_path);
      if (!out) throw IoError(*request.out_path + ": cannot open for writing");
      out << output;
      out.flush();
      if (!out.good()) throw IoError(*request.out_path + ": write failed");
    } else {
      std::cout << output;
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SearchExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wzgain
