#include "factorlab/kernels.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include <omp.h>

#include "factorlab/detail/bfs.hpp"

namespace factorlab {

  std::vector<Word> words_of_length(std::span<Letter const> alphabet,
                                    std::size_t             k) {
    std::vector<Word> out;
    if (alphabet.empty()) {
      if (k == 0) {
        out.emplace_back();
      }
      return out;
    }
    std::vector<std::size_t> digits(k, 0);
    std::vector<Letter>      symbols(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        symbols[i] = alphabet[digits[i]];
      }
      out.emplace_back(symbols);
      std::size_t i = k;
      while (i > 0 && ++digits[i - 1] == alphabet.size()) {
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  LengthSet class_lengths(Word const&              seed,
                          Presentation const&      p,
                          ExplorationBudget const& budget) {
    auto      bfs = detail::breadth_first(seed.symbols(), p, budget);
    LengthSet out;
    out.exact = !bfs.truncation.has_value();
    std::vector<bool> seen(budget.max_word_len + 1, false);
    for (std::uint32_t id = 0; id < bfs.table.size(); ++id) {
      seen[bfs.table.length(id)] = true;
    }
    for (std::size_t n = 0; n < seen.size(); ++n) {
      if (seen[n]) {
        out.values.push_back(n);
      }
    }
    return out;
  }

  namespace {

    void merge_into(std::vector<std::size_t>&       acc,
                    std::vector<std::size_t> const& values) {
      std::vector<std::size_t> merged;
      merged.reserve(acc.size() + values.size());
      std::set_union(acc.begin(),
                     acc.end(),
                     values.begin(),
                     values.end(),
                     std::back_inserter(merged));
      acc = std::move(merged);
    }

  }  // namespace

  namespace kernels {

    std::vector<LengthSet> length_sets_serial(std::span<Word const> seeds,
                                              Presentation const&   p,
                                              BudgetPolicy const&   policy) {
      std::vector<LengthSet> out;
      out.reserve(seeds.size());
      for (auto const& seed : seeds) {
        out.push_back(class_lengths(seed, p, policy.for_seed(seed.length())));
      }
      return out;
    }

    std::vector<LengthSet> length_sets_parallel(std::span<Word const> seeds,
                                                Presentation const&   p,
                                                BudgetPolicy const&   policy) {
      std::vector<LengthSet> out(seeds.size());
      std::exception_ptr     error;
      std::mutex             error_mutex;
      auto const             n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
          auto const& seed = seeds[static_cast<std::size_t>(i)];
          out[static_cast<std::size_t>(i)]
              = class_lengths(seed, p, policy.for_seed(seed.length()));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      return out;
    }

    LengthSet union_serial(std::span<Word const> seeds,
                           Presentation const&   p,
                           BudgetPolicy const&   policy) {
      LengthSet acc;
      for (auto const& seed : seeds) {
        auto l = class_lengths(seed, p, policy.for_seed(seed.length()));
        acc.exact = acc.exact && l.exact;
        merge_into(acc.values, l.values);
      }
      return acc;
    }

    LengthSet union_parallel(std::span<Word const> seeds,
                             Presentation const&   p,
                             BudgetPolicy const&   policy) {
      LengthSet          acc;
      bool               exact = true;
      std::exception_ptr error;
      std::mutex         mutex;
      auto const         n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel
      {
        std::vector<std::size_t> local;
        bool                     local_exact = true;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
          try {
            auto const& seed = seeds[static_cast<std::size_t>(i)];
            auto l = class_lengths(seed, p, policy.for_seed(seed.length()));
            local_exact = local_exact && l.exact;
            merge_into(local, l.values);
          } catch (...) {
            std::lock_guard lock(mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
        std::lock_guard lock(mutex);
        exact = exact && local_exact;
        merge_into(acc.values, local);
      }
      if (error) {
        std::rethrow_exception(error);
      }
      acc.exact = exact;
      return acc;
    }

  }  // namespace kernels

  std::vector<LengthSet> batch_length_sets(std::span<Word const> seeds,
                                           Presentation const&   p,
                                           BudgetPolicy const&   policy,
                                           Execution             exec) {
    return exec == Execution::parallel
               ? kernels::length_sets_parallel(seeds, p, policy)
               : kernels::length_sets_serial(seeds, p, policy);
  }

  LengthSet union_of_length_sets(std::span<Word const> seeds,
                                 Presentation const&   p,
                                 BudgetPolicy const&   policy,
                                 Execution             exec) {
    return exec == Execution::parallel
               ? kernels::union_parallel(seeds, p, policy)
               : kernels::union_serial(seeds, p, policy);
  }

}  // namespace factorlab
