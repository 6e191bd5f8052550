#ifndef FACTORLAB_CORPUS_HPP_
#define FACTORLAB_CORPUS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

// Example presentations with closed-form expectations, checked against the
// engine and against the naive explorer in brute_force.hpp.

namespace factorlab {

  enum class Outcome { pass, fail, inconclusive };

  [[nodiscard]] std::string_view to_string(Outcome o);

  struct CheckResult {
    std::string name;
    Outcome     outcome = Outcome::inconclusive;
    std::string detail;  // witness or reason; empty on a plain pass
  };

  // Handed to each oracle; collects results and counts the classes compared
  // against the naive explorer.
  class OracleContext {
   public:
    OracleContext(Presentation const& p, std::size_t scale, BudgetPolicy policy)
        : p_(p), scale_(scale), policy_(policy) {}

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return p_;
    }
    [[nodiscard]] std::size_t scale() const noexcept {
      return scale_;
    }
    [[nodiscard]] BudgetPolicy const& policy() const noexcept {
      return policy_;
    }

    void record(std::string name, Outcome o, std::string detail = {});
    // pass if ok, fail with `detail` otherwise.
    void expect(std::string name, bool ok, std::string detail = {});

    // Engine members versus naive members for the class of `seed`. Returns
    // nullopt (and records nothing) when either side is inexact.
    std::optional<bool> compare_with_brute_force(Word const& seed);

    [[nodiscard]] std::vector<CheckResult> const& results() const noexcept {
      return results_;
    }
    [[nodiscard]] std::size_t classes_compared() const noexcept {
      return compared_;
    }

   private:
    Presentation const&      p_;
    std::size_t              scale_;
    BudgetPolicy             policy_;
    std::vector<CheckResult> results_;
    std::size_t              compared_ = 0;
  };

  struct CorpusOracle {
    std::string                         name;
    std::function<void(OracleContext&)> run;
  };

  struct CorpusEntry {
    std::string               name;
    std::string               file;  // relative to the corpus directory
    std::string               text;  // identical to the file contents
    std::string               description;
    std::size_t               max_scale = 1;
    std::vector<CorpusOracle> oracles;

    [[nodiscard]] Presentation presentation() const;
  };

  [[nodiscard]] std::vector<CorpusEntry> const& corpus_entries();

  // nullptr if no entry has that name.
  [[nodiscard]] CorpusEntry const* find_entry(std::string_view name);

  // Directory holding the on-disk copies of the corpus files.
  [[nodiscard]] std::string default_corpus_dir();

  struct SuiteReport {
    std::string              entry;
    std::size_t              scale = 0;
    std::vector<CheckResult> checks;
    std::size_t              classes_compared = 0;

    [[nodiscard]] std::size_t count(Outcome o) const;
    [[nodiscard]] bool        passed() const {
      return count(Outcome::fail) == 0;
    }
  };

  struct SuiteOptions {
    BudgetPolicy policy;
    std::string  corpus_dir = default_corpus_dir();
  };

  // Runs the generic checks and every oracle of `entry` at `scale`. Throws
  // std::invalid_argument if scale is 0 or above entry.max_scale.
  [[nodiscard]] SuiteReport run_oracle_suite(CorpusEntry const&  entry,
                                             std::size_t         scale,
                                             SuiteOptions const& options = {});

  // Every entry at min(scale, max_scale).
  [[nodiscard]] std::vector<SuiteReport>
  run_corpus(std::size_t scale, SuiteOptions const& options = {});

}  // namespace factorlab

#endif  // FACTORLAB_CORPUS_HPP_
