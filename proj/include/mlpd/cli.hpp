#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mlpd/validation.hpp"

namespace mlpd {

// One emitted evaluation row: request echo plus value and diagnostics.
// Round-trips losslessly through the CSV format at 17 significant digits.
struct OutputRecord {
  ParameterSet params{Ml2{1.0, 1.0}};
  std::optional<ParamTarget> target;
  cplx z{};
  cplx value{};
  double abs_err_est = 0.0;
  long terms_or_nodes = 0;
  Method method = Method::series;
  bool converged = false;
};

enum class OutputFormat { csv, json_lines };

std::string record_csv_header();
std::string record_to_csv(const OutputRecord& rec);
OutputRecord record_from_csv(const std::string& line);
std::string record_to_jsonl(const OutputRecord& rec);

// Exit codes: 0 success, 1 usage/domain error, 2 not converged,
// 3 audit or comparison failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace mlpd
