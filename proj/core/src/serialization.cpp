#include "snl/serialization.hpp"

#include <fstream>
#include <sstream>

#include "snl/errors.hpp"

namespace snl {

Json to_json(const TracialAlgebra& algebra) {
  Json blocks = Json::array();
  for (const auto& b : algebra.blocks()) {
    Json jb;
    jb["dim"] = b.dim;
    jb["weight"] = b.weight;
    blocks.push_back(std::move(jb));
  }
  return blocks;
}

Json to_json(const Operator& x) {
  Json j;
  j["blocks"] = to_json(x.algebra());
  Json matrices = Json::array();
  for (const auto& m : x.blocks()) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    matrices.push_back(std::move(entries));
  }
  j["matrices"] = std::move(matrices);
  return j;
}

TracialAlgebra algebra_from_json(const Json& j) {
  try {
    if (!j.is_array()) throw FormatError("\"blocks\" must be an array");
    std::vector<Block> blocks;
    for (const auto& jb : j) blocks.push_back(Block{jb.at("dim").get<int>(), jb.at("weight").get<double>()});
    return TracialAlgebra(std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed block list: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid algebra: ") + e.what());
  }
}

Operator operator_from_json(const Json& j) {
  try {
    TracialAlgebra algebra = algebra_from_json(j.at("blocks"));
    const Json& matrices = j.at("matrices");
    if (!matrices.is_array() || matrices.size() != algebra.block_count()) {
      throw AlgebraMismatch("\"matrices\" must hold one entry list per block");
    }
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < algebra.block_count(); ++k) {
      const int n = algebra.block(k).dim;
      const Json& entries = matrices[k];
      if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n) {
        std::ostringstream os;
        os << "block " << k << " needs " << n * n << " entries";
        throw AlgebraMismatch(os.str());
      }
      Matrix m(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          const Json& e = entries[static_cast<std::size_t>(r * n + c)];
          if (!e.is_array() || e.size() != 2) throw FormatError("matrix entries are [re, im] pairs");
          m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
      }
      blocks.push_back(std::move(m));
    }
    return Operator(std::move(algebra), std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed operator: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid operator: ") + e.what());
  }
}

Json to_json(const StepFunction& f) {
  Json j;
  j["breakpoints"] = f.breakpoints();
  j["values"] = f.values();
  return j;
}

StepFunction step_function_from_json(const Json& j) {
  try {
    return StepFunction(j.at("breakpoints").get<std::vector<double>>(), j.at("values").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed step function: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid step function: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

Operator load_operator(const std::filesystem::path& path) { return operator_from_json(read_json_file(path)); }

void save_operator(const std::filesystem::path& path, const Operator& x) { write_json_file(path, to_json(x)); }

}  // namespace snl
