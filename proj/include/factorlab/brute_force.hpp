#ifndef FACTORLAB_BRUTE_FORCE_HPP_
#define FACTORLAB_BRUTE_FORCE_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

// A deliberately naive class explorer used to cross-check the BFS engine:
// repeated application of every relation in both directions to every word
// found so far, until nothing new appears. It shares no code with the
// engine beyond reading p.relations().

namespace factorlab {

  struct BruteForceClass {
    std::set<std::vector<Letter>> members;
    // False if some rewrite was dropped for exceeding max_len, or the state
    // cap stopped the saturation.
    bool exact = true;
  };

  [[nodiscard]] BruteForceClass brute_force_class(Word const&         seed,
                                                  Presentation const& p,
                                                  std::size_t         max_len,
                                                  std::size_t max_states
                                                  = 200'000);

}  // namespace factorlab

#endif  // FACTORLAB_BRUTE_FORCE_HPP_
