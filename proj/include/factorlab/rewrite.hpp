#ifndef FACTORLAB_REWRITE_HPP_
#define FACTORLAB_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/detail/bfs.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

namespace factorlab {

  // One elementary transition from = d g h  ->  to = d g' h, where
  // (g, g') = closure()[relation_index] and |d| = position.
  struct TransitionStep {
    Word        from;
    Word        to;
    std::size_t relation_index;
    std::size_t position;

    friend bool operator==(TransitionStep const&,
                           TransitionStep const&) = default;
  };

  // All single transitions out of `w`, ordered by position and then by
  // closure index. Inert relations are skipped.
  [[nodiscard]] std::vector<TransitionStep> neighbors(Word const&         w,
                                                      Presentation const& p);

  // True if `step` is a valid elementary transition of `p`.
  [[nodiscard]] bool is_valid_step(TransitionStep const& step,
                                   Presentation const&   p);

  // The explored part of Z_M(seed). Members are listed in BFS discovery
  // order; every member carries a parent link so that a transition path from
  // the seed can be replayed.
  class FactorizationClass {
   public:
    [[nodiscard]] Word const& seed() const noexcept {
      return members_.front();
    }
    [[nodiscard]] std::vector<Word> const& members() const noexcept {
      return members_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return members_.size();
    }
    // True iff the frontier emptied with no limit firing; then members() is
    // all of Z_M(seed).
    [[nodiscard]] bool exact() const noexcept {
      return !bfs_.truncation.has_value();
    }
    [[nodiscard]] std::optional<Truncation> truncation() const noexcept {
      return bfs_.truncation;
    }
    [[nodiscard]] std::size_t transitions() const noexcept {
      return bfs_.transitions;
    }

    [[nodiscard]] bool contains(Word const& w) const;
    [[nodiscard]] std::optional<std::size_t> index_of(Word const& w) const;

    // Transition path seed -> members()[i].
    [[nodiscard]] std::vector<TransitionStep> path_to(std::size_t i) const;

    // Sorted distinct member lengths.
    [[nodiscard]] std::vector<std::size_t> lengths() const;

   private:
    friend FactorizationClass explore_class(Word const&,
                                            Presentation const&,
                                            ExplorationBudget const&);

    detail::BfsResult bfs_;
    std::vector<Word> members_;
  };

  // Breadth-first search over neighbors(), never keeping words longer than
  // budget.max_word_len. Running out of budget is not an error: it shows up
  // as exact() == false.
  [[nodiscard]] FactorizationClass explore_class(Word const&         seed,
                                                 Presentation const& p,
                                                 ExplorationBudget const& b);

  enum class Equality {
    yes,               // b was reached from a
    no_within_budget,  // not reached, but the class of a is inexact
    definitely_not     // the class of a is exact and omits b
  };

  [[nodiscard]] std::string_view to_string(Equality e);

  [[nodiscard]] Equality equal_in_M(Word const&              a,
                                    Word const&              b,
                                    Presentation const&      p,
                                    ExplorationBudget const& budget);

  // For each ordered pair (x, y) of generators, some z with x y =_M z x, with
  // the transition path proving it.
  class GeneratorSwapTable {
   public:
    struct Entry {
      Letter                      z;
      std::vector<TransitionStep> certificate;  // from x y to z x
    };

    GeneratorSwapTable() = default;
    explicit GeneratorSwapTable(std::size_t generator_count)
        : n_(generator_count), entries_(n_ * n_) {}

    [[nodiscard]] std::size_t generator_count() const noexcept {
      return n_;
    }
    [[nodiscard]] std::optional<Entry> const& at(Letter x, Letter y) const {
      return entries_.at(static_cast<std::size_t>(x) * n_ + y);
    }
    void set(Letter x, Letter y, Entry e) {
      entries_.at(static_cast<std::size_t>(x) * n_ + y) = std::move(e);
    }
    [[nodiscard]] bool complete() const;

   private:
    std::size_t                       n_ = 0;
    std::vector<std::optional<Entry>> entries_;
  };

  // The length-preserving normal form x_1^{m_1} ... x_n^{m_n} of `a` with
  // lexicographically least exponent vector, searched through swap moves
  // x y <-> z x only. Returns nullopt if no sorted word is reached before
  // budget.max_states words have been visited. Throws std::invalid_argument
  // when the table is incomplete.
  [[nodiscard]] std::optional<Word>
  nu_normal_form(Word const&               a,
                 Presentation const&       p,
                 GeneratorSwapTable const& swap_table,
                 ExplorationBudget const&  budget);

}  // namespace factorlab

#endif  // FACTORLAB_REWRITE_HPP_
