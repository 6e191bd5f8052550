#include "factorlab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factorlab/corpus.hpp"
#include "factorlab/invariants.hpp"
#include "factorlab/kernels.hpp"
#include "factorlab/structure.hpp"
#include "report.hpp"

namespace factorlab {

  namespace {

    using nlohmann::json;
    using cli::Report;

    struct Options {
      std::string                path;
      std::vector<std::string>   words;
      std::string                k_range;
      std::optional<std::size_t> max_len;
      std::optional<std::size_t> max_states;
      std::optional<std::size_t> max_transitions;
      std::string                format = "table";
      bool                       require_exact = false;
      std::size_t                scale         = 4;
      std::string                entry;
      std::string                corpus_dir = default_corpus_dir();
    };

    // Raised for problems that map to a specific exit code.
    struct Failure {
      int         code;
      std::string message;
    };

    BudgetPolicy make_policy(Options const& o) {
      BudgetPolicy policy;
      if (char const* preset = std::getenv("FACTORLAB_BUDGET_PRESET");
          preset != nullptr && *preset != '\0') {
        try {
          policy.preset = BudgetPolicy::parse_preset(preset);
        } catch (std::invalid_argument const& e) {
          throw Failure{exit_parse_error,
                        std::string("FACTORLAB_BUDGET_PRESET: ") + e.what()};
        }
      }
      policy.max_word_len    = o.max_len;
      policy.max_states      = o.max_states;
      policy.max_transitions = o.max_transitions;
      return policy;
    }

    Presentation load(std::string const& path) {
      try {
        return load_presentation(path);
      } catch (ParseError const& e) {
        throw Failure{exit_parse_error, path + ":" + e.what()};
      } catch (std::invalid_argument const& e) {
        throw Failure{exit_parse_error, path + ": " + e.what()};
      }
    }

    std::string exactness(bool exact, std::optional<Truncation> t) {
      if (exact) {
        return "exact";
      }
      return t ? "inexact (" + std::string(to_string(*t)) + ")" : "inexact";
    }

    json elasticity_json(Elasticity const& e) {
      if (e.kind() == Elasticity::Kind::infinite) {
        return "unknown";
      }
      auto value = e.kind() == Elasticity::Kind::zero ? std::string("0")
                                                      : e.value().to_string();
      if (e.lower_bound_only()) {
        return {{"status", "lower_bound"}, {"value", value}};
      }
      return {{"status", "exact"}, {"value", value}};
    }

    ////////////////////////////////////////////////////////////////////
    // lengths
    ////////////////////////////////////////////////////////////////////

    Report cmd_lengths(Options const& o) {
      auto p      = load(o.path);
      auto policy = make_policy(o);
      if (o.words.empty()) {
        throw Failure{exit_parse_error, "lengths: at least one --word needed"};
      }
      std::vector<Word> seeds;
      for (auto const& text : o.words) {
        try {
          seeds.push_back(p.parse_word(text));
        } catch (WordError const& e) {
          throw Failure{exit_bad_word, e.what()};
        }
      }

      Report r;
      r.command      = "lengths";
      r.presentation = cli::presentation_json(p, o.path);
      r.budget       = cli::budget_json(policy);
      r.csv.push_back({"word", "lengths", "distances", "elasticity", "exact"});
      for (auto const& a : seeds) {
        auto budget = policy.for_seed(a.length());
        auto bfs    = detail::breadth_first(a.symbols(), p, budget);
        LengthSet ls;
        ls.exact = !bfs.truncation.has_value();
        for (std::uint32_t id = 0; id < bfs.table.size(); ++id) {
          ls.values.push_back(bfs.table.length(id));
        }
        std::sort(ls.values.begin(), ls.values.end());
        ls.values.erase(std::unique(ls.values.begin(), ls.values.end()),
                        ls.values.end());
        auto ds     = distance_set(ls);
        auto rho    = elasticity_of(ls);
        auto state  = exactness(ls.exact, bfs.truncation);

        std::string line = p.format(a) + "  " + cli::set_string(ls.values)
                           + " Δ=" + cli::set_string(ds.values)
                           + " ρ=" + rho.to_string() + " " + state;
        r.table.push_back(line);
        r.csv.push_back({p.format(a),
                         cli::list_string(ls.values),
                         cli::list_string(ds.values),
                         rho.to_string(),
                         ls.exact ? "true" : "false"});
        json row{{"word", p.format(a)},
                 {"lengths", ls.values},
                 {"distances", ds.values},
                 {"distances_advisory", ds.advisory},
                 {"elasticity", elasticity_json(rho)},
                 {"exact", ls.exact},
                 {"states", bfs.table.size()},
                 {"transitions", bfs.transitions},
                 {"bound",
                  {{"max_word_len", budget.max_word_len},
                   {"max_states", budget.max_states},
                   {"max_transitions", budget.max_transitions}}}};
        row["truncation"] = bfs.truncation
                                ? json(std::string(to_string(*bfs.truncation)))
                                : json(nullptr);
        r.results.push_back(row);
        r.exact_flags.push_back(ls.exact);
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // unions
    ////////////////////////////////////////////////////////////////////

    Report cmd_unions(Options const& o) {
      auto p      = load(o.path);
      auto policy = make_policy(o);
      KRange range;
      try {
        range = KRange::parse(o.k_range);
      } catch (std::invalid_argument const& e) {
        throw Failure{exit_parse_error, e.what()};
      }
      if (range.empty()) {
        throw Failure{exit_parse_error, "empty k-range " + o.k_range};
      }
      if (p.generator_count() == 0) {
        throw Failure{exit_parse_error, "unions need at least one generator"};
      }
      auto profile = unions_profile(p, range, policy);

      Report r;
      r.command      = "unions";
      r.presentation = cli::presentation_json(p, o.path);
      r.budget       = cli::budget_json(policy);
      r.csv.push_back({"k", "lambda", "rho", "exact", "values"});

      std::vector<MuGapRow> mu;
      if (profile.exact()) {
        mu = mu_gap_analysis(profile);
      }
      r.table.push_back("k\tλ_k\tρ_k\tμ_k\tρ_{k-2}+4\texact\tU_k");
      std::string rho_row;
      for (std::size_t i = 0; i < profile.rows.size(); ++i) {
        auto const& row = profile.rows[i];
        std::string mu_s = "-", bound_s = "-";
        json        mu_j = nullptr, bound_j = nullptr;
        if (!mu.empty()) {
          if (mu[i].mu) {
            mu_s = std::to_string(*mu[i].mu);
            mu_j = *mu[i].mu;
          }
          if (mu[i].bound) {
            bound_s = std::to_string(*mu[i].bound);
            bound_j = *mu[i].bound;
          }
        } else if (!row.exact) {
          mu_j    = "unknown";
          bound_j = "unknown";
        }
        auto rho_s = row.exact ? std::to_string(row.rho())
                               : std::to_string(row.rho()) + "+";
        rho_row += (i == 0 ? "" : ", ") + rho_s;
        r.table.push_back(std::to_string(row.k) + "\t"
                          + std::to_string(row.lambda()) + "\t" + rho_s + "\t"
                          + mu_s + "\t" + bound_s + "\t"
                          + (row.exact ? "yes" : "no") + "\t"
                          + cli::set_string(row.values));
        r.csv.push_back({std::to_string(row.k),
                         std::to_string(row.lambda()),
                         std::to_string(row.rho()),
                         row.exact ? "true" : "false",
                         cli::list_string(row.values)});
        json j{{"k", row.k},
               {"lambda", row.lambda()},
               {"values", row.values},
               {"exact", row.exact},
               {"seeds", row.seeds},
               {"mu", mu_j},
               {"mu_bound", bound_j}};
        j["rho"] = row.exact ? json(row.rho())
                             : json{{"status", "lower_bound"},
                                    {"value", row.rho()}};
        r.results.push_back(j);
        r.exact_flags.push_back(row.exact);
      }
      r.table.push_back("rho: " + rho_row);

      json structure;
      if (!profile.exact()) {
        structure = {{"status", "unknown"},
                     {"reason", "profile inexact; raise --max-len"}};
        r.table.push_back("structure: unknown (profile inexact)");
      } else {
        auto rep    = unions_structure_verifier(profile);
        json trend  = json::array();
        std::string trend_s;
        for (auto const& t : rep.trend) {
          json tj{{"k", t.k}, {"min_window_m", t.min_window_m}};
          tj["rho_gap"]   = t.rho_gap ? json(*t.rho_gap) : json(nullptr);
          tj["implied_m"] = t.implied_m ? json(*t.implied_m) : json(nullptr);
          trend.push_back(tj);
          if (t.implied_m) {
            trend_s += (trend_s.empty() ? "" : ", ") + std::string("k=")
                       + std::to_string(t.k) + " m ≥ "
                       + std::to_string(*t.implied_m);
          }
        }
        structure = {{"trend", trend},
                     {"failure_trend", rep.failure_trend},
                     {"caps",
                      {{"d_max", rep.caps.d_max},
                       {"kstar_max", *rep.caps.kstar_max},
                       {"m_max", rep.caps.m_max}}}};
        if (rep.candidate) {
          auto const& c = *rep.candidate;
          structure["status"]    = "found";
          structure["candidate"] = {{"d", c.d}, {"k_star", c.k_star}, {"m", c.m}};
          r.table.push_back("structure: d=" + std::to_string(c.d) + " k*="
                            + std::to_string(c.k_star)
                            + " m=" + std::to_string(c.m));
        } else {
          structure["status"]    = "none";
          structure["candidate"] = nullptr;
          r.table.push_back("structure: no (d,k*,m) within caps; trend: "
                            + (trend_s.empty() ? std::string("none")
                                               : trend_s));
        }
      }
      r.summary["structure"] = structure;
      r.summary["alphabet"]  = json::array();
      for (auto x : profile.alphabet) {
        r.summary["alphabet"].push_back(p.name(x));
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////

    std::string verdict_text(ProbeVerdict const& v, bool plural = false) {
      switch (v.verdict) {
        case ProbeVerdict::Verdict::holds:
          if (plural) {
            return v.definitive ? "hold" : "hold-at-bound";
          }
          return v.definitive ? "holds" : "holds-at-bound";
        case ProbeVerdict::Verdict::fails:
          return plural ? "fail" : "fails";
        case ProbeVerdict::Verdict::unknown_at_bound:
          return "unknown-at-bound";
      }
      return "unknown-at-bound";
    }

    json probe_json(std::string const&  name,
                    ProbeVerdict const& v,
                    Presentation const& p) {
      json j{{"check", name},
             {"verdict", std::string(to_string(v.verdict))},
             {"definitive", v.definitive},
             {"bound",
              {{"max_word_len", v.bound_used.max_word_len},
               {"max_states", v.bound_used.max_states},
               {"max_transitions", v.bound_used.max_transitions}}}};
      if (v.witness) {
        json words = json::array();
        for (auto const& w : v.witness->words) {
          words.push_back(p.format(w));
        }
        j["witness"] = {{"words", words},
                        {"description", v.witness->description},
                        {"certificate_steps", v.witness->certificate.size()}};
      } else {
        j["witness"] = nullptr;
      }
      return j;
    }

    std::vector<Word> check_samples(Presentation const& p) {
      std::vector<Letter> alphabet;
      for (auto const& g : p.generators()) {
        alphabet.push_back(g.id);
      }
      std::vector<Word> out;
      for (std::size_t n = 1; n <= 3; ++n) {
        auto words = words_of_length(alphabet, n);
        if (out.size() + words.size() > 120) {
          break;
        }
        out.insert(out.end(), words.begin(), words.end());
      }
      return out;
    }

    Report cmd_check(Options const& o) {
      auto p      = load(o.path);
      auto policy = make_policy(o);

      Report r;
      r.command      = "check";
      r.presentation = cli::presentation_json(p, o.path);
      r.budget       = cli::budget_json(policy);
      r.csv.push_back({"check", "verdict", "definitive", "witness"});
      auto add_row = [&](json row, bool definitive, std::string const& line) {
        r.csv.push_back({row["check"].get<std::string>(),
                         row["verdict"].is_string()
                             ? row["verdict"].get<std::string>()
                             : row["verdict"].dump(),
                         definitive ? "true" : "false",
                         row.contains("witness") && row["witness"].is_object()
                             ? row["witness"]["description"].get<std::string>()
                             : ""});
        r.results.push_back(std::move(row));
        r.exact_flags.push_back(definitive);
        r.table.push_back(line);
      };

      auto adyan = adyan_check(p);
      add_row({{"check", "adyan"},
               {"verdict", adyan.adyan ? "yes" : "no"},
               {"reason", adyan.reason}},
              true,
              "adyan: " + std::string(adyan.adyan ? "yes" : "no ("
                                                             + adyan.reason
                                                             + ")"));

      if (p.relations().size() == 1) {
        auto one  = one_relation_analysis(p);
        auto text = one.half_factorial() ? std::string("half-factorial")
                                         : "AP d=" + std::to_string(one.d);
        add_row({{"check", "one-relation"},
                 {"verdict", one.half_factorial() ? "half_factorial"
                                                  : "arithmetic_progressions"},
                 {"d", one.d}},
                true,
                "one-relation: " + text);
      }

      auto d = delta_subgroup(p).d;
      add_row({{"check", "delta-subgroup"}, {"verdict", "computed"}, {"d", d}},
              true,
              d == 0 ? std::string("N = {0}")
                     : "N = " + std::to_string(d) + "ℤ");

      auto samples = check_samples(p);
      auto with_witness = [&](ProbeVerdict const& v) {
        auto s = verdict_text(v);
        if (v.witness) {
          s += " (witness " + v.witness->description + ")";
        }
        return s;
      };

      auto reduced = reducedness_probe(p);
      add_row(probe_json("reduced", reduced, p),
              reduced.definitive,
              "reduced: " + with_witness(reduced));

      auto acyclic = acyclicity_probe(p, samples, policy);
      add_row(probe_json("acyclic", acyclic, p),
              acyclic.definitive,
              "acyclic: " + with_witness(acyclic));

      auto irredundant = irredundancy_probe(p, policy);
      add_row(probe_json("irredundant", irredundant, p),
              irredundant.definitive,
              "irredundant: " + with_witness(irredundant));

      auto normalizing = normalizing_probe(p, policy);
      add_row(probe_json("normalizing", normalizing.verdict, p),
              normalizing.verdict.definitive,
              "normalizing (x y =_M z x): "
                  + with_witness(normalizing.verdict));

      auto bound = delta_bound_check(p, samples, policy);
      add_row(probe_json("delta-bound", bound, p),
              bound.definitive,
              "delta bound: " + with_witness(bound));

      // Atoms are grouped by verdict for the table.
      std::vector<std::pair<std::string, std::vector<std::string>>> groups;
      for (auto const& g : p.generators()) {
        auto v    = atom_probe(p, g.id, policy);
        auto json_row = probe_json("atom " + g.name, v, p);
        r.results.push_back(json_row);
        r.exact_flags.push_back(v.definitive);
        r.csv.push_back({"atom " + g.name,
                         std::string(to_string(v.verdict)),
                         v.definitive ? "true" : "false",
                         v.witness ? v.witness->description : ""});
        auto key = v.verdict == ProbeVerdict::Verdict::fails
                       ? "fail (witness " + v.witness->description + ")"
                       : verdict_text(v, true);
        bool placed = false;
        for (auto& [k, names] : groups) {
          if (k == key && v.verdict != ProbeVerdict::Verdict::fails) {
            names.push_back(g.name);
            placed = true;
          }
        }
        if (!placed) {
          groups.push_back({key, {g.name}});
        }
      }
      for (auto const& [key, names] : groups) {
        std::string joined;
        for (auto const& n : names) {
          joined += (joined.empty() ? "" : ",") + n;
        }
        r.table.push_back("atoms: " + joined + " " + key);
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // corpus
    ////////////////////////////////////////////////////////////////////

    Report cmd_corpus(Options const& o, bool& failed) {
      SuiteOptions options;
      options.policy     = make_policy(o);
      options.corpus_dir = o.corpus_dir;
      std::vector<SuiteReport> reports;
      if (!o.entry.empty()) {
        auto const* e = find_entry(o.entry);
        if (e == nullptr) {
          throw Failure{exit_parse_error, "unknown corpus entry '" + o.entry + "'"};
        }
        if (o.scale == 0 || o.scale > e->max_scale) {
          throw Failure{exit_parse_error,
                        "scale for " + e->name + " must be in [1, "
                            + std::to_string(e->max_scale) + "]"};
        }
        reports.push_back(run_oracle_suite(*e, o.scale, options));
      } else {
        if (o.scale == 0) {
          throw Failure{exit_parse_error, "scale must be positive"};
        }
        reports = run_corpus(o.scale, options);
      }

      Report r;
      r.command      = "corpus";
      r.budget       = cli::budget_json(options.policy);
      r.csv.push_back({"entry", "scale", "check", "outcome", "detail"});
      std::size_t pass = 0, fail = 0, inconclusive = 0, compared = 0;
      for (auto const& rep : reports) {
        pass += rep.count(Outcome::pass);
        fail += rep.count(Outcome::fail);
        inconclusive += rep.count(Outcome::inconclusive);
        compared += rep.classes_compared;
        r.table.push_back(rep.entry + " (scale " + std::to_string(rep.scale)
                          + "): " + std::to_string(rep.count(Outcome::pass))
                          + " pass, " + std::to_string(rep.count(Outcome::fail))
                          + " fail, "
                          + std::to_string(rep.count(Outcome::inconclusive))
                          + " inconclusive, "
                          + std::to_string(rep.classes_compared)
                          + " classes checked against the naive explorer");
        json checks = json::array();
        for (auto const& c : rep.checks) {
          r.table.push_back("  " + std::string(to_string(c.outcome)) + "  "
                            + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
          r.csv.push_back({rep.entry,
                           std::to_string(rep.scale),
                           c.name,
                           std::string(to_string(c.outcome)),
                           c.detail});
          checks.push_back({{"name", c.name},
                            {"outcome", std::string(to_string(c.outcome))},
                            {"detail", c.detail}});
        }
        r.results.push_back({{"entry", rep.entry},
                             {"scale", rep.scale},
                             {"classes_compared", rep.classes_compared},
                             {"checks", checks}});
        r.exact_flags.push_back(rep.count(Outcome::inconclusive) == 0);
      }
      r.table.push_back("total: " + std::to_string(pass) + " pass, "
                        + std::to_string(fail) + " fail, "
                        + std::to_string(inconclusive) + " inconclusive");
      r.summary = {{"pass", pass},
                   {"fail", fail},
                   {"inconclusive", inconclusive},
                   {"classes_compared", compared}};
      failed = fail > 0;
      return r;
    }

  }  // namespace

  int run_cli(int                argc,
              char const* const* argv,
              std::ostream&      out,
              std::ostream&      err) {
    Options o;
    CLI::App app{"Factorization invariants of finitely presented monoids",
                 "factorlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    auto add_budget = [&](CLI::App* cmd) {
      cmd->add_option("--max-len", o.max_len, "Longest word kept while exploring")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--max-states", o.max_states, "Most words per class")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--max-transitions",
                      o.max_transitions,
                      "Most transitions tried per class")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--format", o.format, "table, json or csv")
          ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* lengths = app.add_subcommand(
        "lengths", "Length set, distances and elasticity of seed words");
    lengths->add_option("file", o.path, "Presentation file")->required();
    lengths->add_option("--word", o.words, "Seed word, e.g. \"x x y\" or \"1\"");
    lengths->add_flag("--require-exact", o.require_exact,
                      "Exit 4 if any class was truncated");
    add_budget(lengths);

    auto* unions = app.add_subcommand(
        "unions", "Unions of length sets U_k and the structure verifier");
    unions->add_option("file", o.path, "Presentation file")->required();
    unions->add_option("--k", o.k_range, "Range A..B of k")->required();
    unions->add_flag("--require-exact", o.require_exact,
                     "Exit 4 if any row was truncated");
    add_budget(unions);

    auto* check = app.add_subcommand(
        "check", "Adyan test, delta subgroup and bounded structural probes");
    check->add_option("file", o.path, "Presentation file")->required();
    add_budget(check);

    auto* corpus = app.add_subcommand(
        "corpus", "Run the built-in example corpus against its oracles");
    corpus->add_option("--scale", o.scale, "Size of the checks (default 4)");
    corpus->add_option("--entry", o.entry, "Run a single entry");
    corpus->add_option("--corpus-dir",
                       o.corpus_dir,
                       "Directory with the on-disk corpus files");
    add_budget(corpus);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_parse_error;
    }

    try {
      auto   format = cli::parse_format(o.format);
      Report report;
      int    code = exit_ok;
      if (lengths->parsed()) {
        report = cmd_lengths(o);
      } else if (unions->parsed()) {
        report = cmd_unions(o);
      } else if (check->parsed()) {
        report = cmd_check(o);
      } else {
        bool failed = false;
        report      = cmd_corpus(o, failed);
        if (failed) {
          code = exit_corpus_fails;
        }
      }
      cli::emit(report, format, out);
      if (o.require_exact) {
        for (bool exact : report.exact_flags) {
          if (!exact) {
            err << "factorlab: result inexact and --require-exact given\n";
            return exit_inexact;
          }
        }
      }
      return code;
    } catch (Failure const& f) {
      err << "factorlab: " << f.message << '\n';
      return f.code;
    } catch (ParseError const& e) {
      err << "factorlab: " << e.what() << '\n';
      return exit_parse_error;
    }
  }

}  // namespace factorlab
