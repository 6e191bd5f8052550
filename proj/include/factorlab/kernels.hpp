#ifndef FACTORLAB_KERNELS_HPP_
#define FACTORLAB_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/length_set.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

// Batch kernels over many independent seed words. Each has an OpenMP
// implementation and a serial reference; both produce identical output in
// seed order.

namespace factorlab {

  enum class Execution { serial, parallel };

  // All words of length k over `alphabet`, in lexicographic order of the
  // alphabet positions. k = 0 yields the single empty word.
  [[nodiscard]] std::vector<Word> words_of_length(
      std::span<Letter const> alphabet,
      std::size_t             k);

  // Lengths of the explored class of a single seed, without materializing
  // the members.
  [[nodiscard]] LengthSet class_lengths(Word const&              seed,
                                        Presentation const&      p,
                                        ExplorationBudget const& budget);

  namespace kernels {

    [[nodiscard]] std::vector<LengthSet>
    length_sets_serial(std::span<Word const> seeds,
                       Presentation const&   p,
                       BudgetPolicy const&   policy);

    [[nodiscard]] std::vector<LengthSet>
    length_sets_parallel(std::span<Word const> seeds,
                         Presentation const&   p,
                         BudgetPolicy const&   policy);

    // Union of the length sets of all seeds; exact iff every class was.
    [[nodiscard]] LengthSet union_serial(std::span<Word const> seeds,
                                         Presentation const&   p,
                                         BudgetPolicy const&   policy);

    [[nodiscard]] LengthSet union_parallel(std::span<Word const> seeds,
                                           Presentation const&   p,
                                           BudgetPolicy const&   policy);

  }  // namespace kernels

  [[nodiscard]] std::vector<LengthSet> batch_length_sets(
      std::span<Word const> seeds,
      Presentation const&   p,
      BudgetPolicy const&   policy,
      Execution             exec = Execution::parallel);

  [[nodiscard]] LengthSet union_of_length_sets(
      std::span<Word const> seeds,
      Presentation const&   p,
      BudgetPolicy const&   policy,
      Execution             exec = Execution::parallel);

}  // namespace factorlab

#endif  // FACTORLAB_KERNELS_HPP_
