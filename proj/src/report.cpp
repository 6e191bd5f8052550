#include "report.hpp"

#include <ostream>
#include <stdexcept>

namespace factorlab::cli {

  Format parse_format(std::string_view name) {
    if (name == "table") {
      return Format::table;
    }
    if (name == "json") {
      return Format::json;
    }
    if (name == "csv") {
      return Format::csv;
    }
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
  }

  namespace {

    std::string csv_cell(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') {
          out += '"';
        }
        out += c;
      }
      return out + "\"";
    }

  }  // namespace

  void emit(Report const& report, Format format, std::ostream& out) {
    switch (format) {
      case Format::table:
        for (auto const& line : report.table) {
          out << line << '\n';
        }
        break;
      case Format::json: {
        nlohmann::json doc;
        doc["presentation"] = report.presentation;
        doc["command"]      = report.command;
        doc["budget"]       = report.budget;
        doc["results"]      = report.results;
        doc["exact_flags"]  = report.exact_flags;
        doc["summary"]      = report.summary;
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::csv:
        for (auto const& row : report.csv) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i == 0 ? "" : ",") << csv_cell(row[i]);
          }
          out << '\n';
        }
        break;
    }
  }

  nlohmann::json presentation_json(Presentation const& p,
                                   std::string const&  source) {
    nlohmann::json gens = nlohmann::json::array();
    for (auto const& g : p.generators()) {
      gens.push_back(g.name);
    }
    nlohmann::json rels = nlohmann::json::array();
    for (auto const& r : p.relations()) {
      rels.push_back({p.format(r.lhs), p.format(r.rhs)});
    }
    return {{"source", source}, {"generators", gens}, {"relations", rels}};
  }

  nlohmann::json budget_json(BudgetPolicy const& policy) {
    auto opt = [](std::optional<std::size_t> const& v) -> nlohmann::json {
      if (v) {
        return *v;
      }
      return nullptr;
    };
    return {{"preset", std::string(BudgetPolicy::preset_name(policy.preset))},
            {"max_word_len", opt(policy.max_word_len)},
            {"max_states", opt(policy.max_states)},
            {"max_transitions", opt(policy.max_transitions)}};
  }

  std::string set_string(std::vector<std::size_t> const& values) {
    if (values.empty()) {
      return "∅";
    }
    return "{" + list_string(values, ",") + "}";
  }

  std::string list_string(std::vector<std::size_t> const& values,
                          std::string_view                sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != 0) {
        out += sep;
      }
      out += std::to_string(values[i]);
    }
    return out;
  }

}  // namespace factorlab::cli
