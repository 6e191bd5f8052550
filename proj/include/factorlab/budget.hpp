#ifndef FACTORLAB_BUDGET_HPP_
#define FACTORLAB_BUDGET_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace factorlab {

  // Limits for a single class exploration. The word problem is undecidable,
  // so every exploration is bounded and reports whether a limit fired.
  struct ExplorationBudget {
    std::size_t max_word_len    = 8;
    std::size_t max_states      = 1'000'000;
    std::size_t max_transitions = 10'000'000;

    // 4 |seed| + 8 letters, 10^6 states, 10^7 transitions.
    [[nodiscard]] static ExplorationBudget for_seed(std::size_t seed_len);

    // Throws std::invalid_argument unless all limits are positive and the
    // word-length cap admits `seed_len`.
    void validate(std::size_t seed_len) const;

    friend bool operator==(ExplorationBudget const&,
                           ExplorationBudget const&) = default;
  };

  // How to pick a budget for each seed in a batch. Unset overrides fall back
  // to ExplorationBudget::for_seed, after the preset scaling.
  struct BudgetPolicy {
    enum class Preset { small, standard, large };

    Preset                     preset = Preset::standard;
    std::optional<std::size_t> max_word_len;
    std::optional<std::size_t> max_states;
    std::optional<std::size_t> max_transitions;

    [[nodiscard]] ExplorationBudget for_seed(std::size_t seed_len) const;

    // "small", "default" or "large"; throws std::invalid_argument otherwise.
    [[nodiscard]] static Preset parse_preset(std::string_view name);
    [[nodiscard]] static std::string_view preset_name(Preset p);
  };

  enum class Truncation { word_len, states, transitions };

  [[nodiscard]] std::string_view to_string(Truncation t);

}  // namespace factorlab

#endif  // FACTORLAB_BUDGET_HPP_
