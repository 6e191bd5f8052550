#ifndef FACTORLAB_DETAIL_BFS_HPP_
#define FACTORLAB_DETAIL_BFS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/detail/word_table.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

namespace factorlab::detail {

  // How a member was first reached: members()[parent] rewritten with closure
  // relation `relation_index` at `position`.
  struct BfsLink {
    std::uint32_t parent;
    std::uint32_t relation_index;
    std::uint32_t position;
  };

  struct BfsResult {
    WordTable                 table;  // ids are BFS discovery order
    std::vector<BfsLink>      links;  // links[0] is unused (the seed)
    std::optional<Truncation> truncation;
    std::size_t               transitions = 0;
  };

  // The exploration behind explore_class, without materializing members.
  BfsResult breadth_first(std::span<Letter const>  seed,
                          Presentation const&      p,
                          ExplorationBudget const& b);

}  // namespace factorlab::detail

#endif  // FACTORLAB_DETAIL_BFS_HPP_
