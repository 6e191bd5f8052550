#ifndef FACTORLAB_SRC_REPORT_HPP_
#define FACTORLAB_SRC_REPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "factorlab/budget.hpp"
#include "factorlab/presentation.hpp"

namespace factorlab::cli {

  enum class Format { table, json, csv };

  // Throws std::invalid_argument on an unknown name.
  [[nodiscard]] Format parse_format(std::string_view name);

  // Output of one command in all three formats. JSON always carries the
  // keys presentation, command, budget, results, exact_flags and summary.
  struct Report {
    std::string                           command;
    nlohmann::json                        presentation = nullptr;
    nlohmann::json                        budget       = nlohmann::json::object();
    nlohmann::json                        results      = nlohmann::json::array();
    std::vector<bool>                     exact_flags;
    nlohmann::json                        summary = nlohmann::json::object();
    std::vector<std::string>              table;
    std::vector<std::vector<std::string>> csv;  // first row is the header
  };

  void emit(Report const& report, Format format, std::ostream& out);

  [[nodiscard]] nlohmann::json presentation_json(Presentation const& p,
                                                 std::string const&  source);

  [[nodiscard]] nlohmann::json budget_json(BudgetPolicy const& policy);

  // "{3,4,5}", or "∅" when empty.
  [[nodiscard]] std::string set_string(std::vector<std::size_t> const& values);

  // "3;4;5" for CSV cells.
  [[nodiscard]] std::string list_string(std::vector<std::size_t> const& values,
                                        std::string_view sep = ";");

}  // namespace factorlab::cli

#endif  // FACTORLAB_SRC_REPORT_HPP_
