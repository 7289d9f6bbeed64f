#pragma once

#include <filesystem>
#include <string>

#include "snl/algebra.hpp"
#include "snl/report.hpp"
#include "snl/step_function.hpp"

namespace snl {

// {"blocks": [{"dim": n, "weight": w}, ...],
//  "matrices": [[[re, im], ...], ...]}   entries row-major per block
//
// Doubles are written in shortest round-trip decimal form, so a value read
// back is bit-identical to the value written.
[[nodiscard]] Json to_json(const TracialAlgebra& algebra);
[[nodiscard]] Json to_json(const Operator& x);
[[nodiscard]] TracialAlgebra algebra_from_json(const Json& j);
[[nodiscard]] Operator operator_from_json(const Json& j);

// {"breakpoints": [...], "values": [...]}
[[nodiscard]] Json to_json(const StepFunction& f);
[[nodiscard]] StepFunction step_function_from_json(const Json& j);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

[[nodiscard]] Operator load_operator(const std::filesystem::path& path);
void save_operator(const std::filesystem::path& path, const Operator& x);

}  // namespace snl
