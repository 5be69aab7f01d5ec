#include "wzgain/io.hpp"

#include <fstream>
#include <limits>
#include <vector>

#include <json.hpp>

#include "wzgain/errors.hpp"

namespace wzgain {
namespace {

struct ParsedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
};

ParsedMatrix parse_matrix_file(const std::string& path, bool allow_inf) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open file");

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw IoError(path + ": top level must be a JSON object");

  if (!doc.contains("alphabet_sizes")) throw IoError(path + ": missing field \"alphabet_sizes\"");
  const auto& sizes = doc["alphabet_sizes"];
  if (!sizes.is_array() || sizes.size() != 2) {
    throw IoError(path + ": \"alphabet_sizes\" must be an array of exactly two integers");
  }
  ParsedMatrix out;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!sizes[i].is_number_unsigned() || sizes[i].get<std::uint64_t>() == 0) {
      throw IoError(path + ": \"alphabet_sizes\" entries must be positive integers");
    }
  }
  out.rows = sizes[0].get<std::size_t>();
  out.cols = sizes[1].get<std::size_t>();

  if (!doc.contains("values")) throw IoError(path + ": missing field \"values\"");
  const auto& values = doc["values"];
  if (!values.is_array()) throw IoError(path + ": \"values\" must be an array");
  if (values.size() != out.rows * out.cols) {
    throw IoError(path + ": \"values\" must hold rows*cols = " +
                  std::to_string(out.rows * out.cols) + " entries, got " +
                  std::to_string(values.size()));
  }
  out.values.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& v = values[i];
    if (v.is_number()) {
      out.values.push_back(v.get<double>());
    } else if (allow_inf && v.is_string() && v.get<std::string>() == "inf") {
      out.values.push_back(std::numeric_limits<double>::infinity());
    } else {
      throw IoError(path + ": \"values\"[" + std::to_string(i) +
                    (allow_inf ? "] must be a number or the string \"inf\""
                               : "] must be a number"));
    }
  }
  return out;
}

}  // namespace

JointPmf load_joint_pmf(const std::string& path) {
  ParsedMatrix m = parse_matrix_file(path, /*allow_inf=*/false);
  return JointPmf(m.rows, m.cols, std::move(m.values));
}

DistortionMatrix load_distortion_matrix(const std::string& path) {
  ParsedMatrix m = parse_matrix_file(path, /*allow_inf=*/true);
  return DistortionMatrix(m.rows, m.cols, std::move(m.values));
}

}  // namespace wzgain
